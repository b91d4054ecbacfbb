# coding: utf-8
import unittest

from ellsigma.engine import classes
from ellsigma.engine.classes import ToyBundle
from ellsigma.engine.curve import weil_pairing
from ellsigma.engine.jets import Jet
from ellsigma.engine.lattices import SignedPermutation, spin, stabilizer_elements, weyl_apply
from ellsigma.engine.theta import sigma, sigma_d, sigma_d_theta
from ellsigma.engine.errors import (NotInLattice, ParameterError, IncompatibleLattices)

from ellsigma.engine.utils import toy_data

from . import utils


class ToyBundleTestCase(unittest.TestCase):

    def test_validation(self):
        with self.assertRaises(NotInLattice):
            utils.makeOneBundle({'m': (1, 0)})
        with self.assertRaises(ParameterError):
            ToyBundle.spin((1, 1), utils.makeOneRoots(1))
        with self.assertRaises(ParameterError):
            ToyBundle.spin((1, 1), [Jet.variable(0, 2, base=1.0), Jet.variable(1, 2)])

    def test_fixed_and_contributing_indices(self):
        V = utils.makeOneBundle({'m': (2, 1, 1)})
        self.assertEqual(V.fixed_indices(2), [0])
        self.assertEqual(V.contributing_indices(1), [0, 1, 2])
        self.assertEqual(utils.makeOneBundle({'m': (2, 0)}).zero_indices(), [1])
        with self.assertRaises(ParameterError):
            V.fixed_indices(0)

    def test_canonical_keys(self):
        V = utils.makeOneBundle({'m': (2, 1, 1)})
        self.assertEqual(V.canonical_key(1), 1)
        self.assertEqual(V.canonical_key(2), 2)
        self.assertEqual(V.canonical_key(4), 0)
        self.assertEqual(V.canonical_keys(), [0, 1, 2])
        self.assertEqual(utils.makeOneBundle({'m': (2, 0)}).canonical_key(2), 1)

    def test_trivial_rotation_is_whole_bundle(self):
        V = utils.makeOneBundle({'m': (0, 0)})
        self.assertEqual(V.canonical_key(0), 1)
        self.assertEqual(V.canonical_key(3), 1)
        self.assertEqual(V.canonical_keys(), [1])
        self.assertEqual(V.orientation(0), 1)
        with self.assertRaises(ParameterError):
            utils.makeOneBundle({'m': (0, 0), 'orientation_signs': {0: -1}})

    def test_random_orientations_skip_whole_bundle(self):
        V = utils.makeOneBundle({'m': (0, 0)})
        for seed in range(8):
            self.assertEqual(toy_data.random_orientations(utils.makeOneRng(seed), V), {})
        W = utils.makeOneBundle({'m': (2, 2)})
        self.assertNotIn(1, toy_data.random_orientations(utils.makeOneRng(0), W))
        self.assertEqual(W.canonical_key(2), 1)

    def test_orientation_lookup(self):
        V = utils.makeOneBundle({'m': (2, 1, 1), 'orientation_signs': {2: -1, 0: -1}})
        self.assertEqual(V.orientation(1), 1)
        self.assertEqual(V.orientation(2), -1)
        self.assertEqual(V.orientation(4), -1)
        self.assertEqual(V.orientation(0), -1)

    def test_invalid_orientations(self):
        with self.assertRaises(ParameterError):
            utils.makeOneBundle({'m': (2, 1, 1), 'orientation_signs': {1: -1}})
        with self.assertRaises(ParameterError):
            utils.makeOneBundle({'m': (2, 1, 1), 'orientation_signs': {0: 1, 6: -1}})
        with self.assertRaises(ParameterError):
            utils.makeOneBundle({'m': (2, 1, 1), 'orientation_signs': {2: 3}})

    def test_weyl_move_keeps_euler_classes(self):
        params = utils.makeOneParams()
        V = utils.makeOneBundle({'m': (2, 1, 1), 'orientation_signs': {2: -1}})
        w = SignedPermutation.sign_change(3, (0, 1))
        moved = V.weyl_move(w)
        self.assertEqual(moved.m, (-2, -1, 1))
        self.assertEqual(moved.orientation(2), 1)
        before = classes.fixed_euler_class(V, 2, 0.1 + 0.05j, params)
        after = classes.fixed_euler_class(moved, 2, 0.1 + 0.05j, params)
        self.assertLess(after.relative_residual(before), 1e-12)

    def test_direct_sum(self):
        V = utils.makeOneBundle({'m': (2, 0), 'orientation_signs': {0: -1}})
        W = utils.makeOneBundle({'m': (1, 1), 'orientation_signs': {0: -1}})
        total = V.direct_sum(W)
        self.assertEqual(total.m, (2, 0, 1, 1))
        self.assertEqual(total.lattice, spin(4))
        self.assertEqual(total.orientation(0), 1)
        self.assertEqual(total.num_vars, 2)

    def test_substitute(self):
        V = utils.makeOneBundle({'m': (1, 1)})
        x, y = utils.makeOneRoots(2)
        pulled = V.substitute([y, x])
        self.assertEqual(pulled.roots, (y, x))


class FEvalTestCase(unittest.TestCase):

    def setUp(self):
        self.params = utils.makeOneParams()
        self.theta = sigma_d_theta(2)
        self.roots = utils.makeOneRoots(2)

    def test_trivial_point(self):
        lift = utils.makeOneLift()
        z = 0.1 + 0.02j
        value = classes.F_eval(self.theta, (1, 1), lift, z, self.roots, self.params)
        expected = sigma_d(2, [root + z for root in self.roots], self.params)
        self.assertLess(value.relative_residual(expected), 1e-12)

    def test_independent_of_representative(self):
        lift = utils.makeOneLift('1/3', '2/3')
        z = 0.05 - 0.03j
        reference = classes.F_eval(self.theta, (1, 1), lift, z, self.roots, self.params)
        for delta in ((1, 1), (2, 0), (-1, 1)):
            mbar = tuple(m + 3 * d for m, d in zip((1, 1), delta))
            value = classes.F_eval(self.theta, mbar, lift, z, self.roots, self.params,
                                   rotation=(1, 1))
            self.assertLess(value.relative_residual(reference), 1e-9)

    def test_invariant_under_stabilizer(self):
        lift = utils.makeOneLift('1/2', '1/2')
        z = 0.07 + 0.01j
        mbar = (1, 1)
        reference = classes.F_eval(self.theta, mbar, lift, z, self.roots, self.params)
        for w in stabilizer_elements(spin(2), mbar, modulus=2):
            value = classes.F_eval(self.theta, mbar, lift, z, w.apply(self.roots), self.params,
                                   rotation=weyl_apply(w, mbar))
            self.assertLess(value.relative_residual(reference), 1e-9)

    def test_lift_transform(self):
        lift = utils.makeOneLift('1/2', '0')
        z = 0.05
        ratio, predicted = classes.F_lift_transform(self.theta, (1, 1), lift, lift, z,
                                                    self.roots, self.params)
        self.assertAlmostEqual(ratio, 1, places=12)
        self.assertAlmostEqual(predicted, 1, places=12)

        shifted = utils.makeOneLift('1/2', '0', shift_t=1)
        ratio, predicted = classes.F_lift_transform(self.theta, (1, 1), lift, shifted, z,
                                                    self.roots, self.params)
        self.assertAlmostEqual(predicted, -1, places=12)
        self.assertLess(abs(ratio - predicted), 1e-9)

        double = utils.makeOneLift('1/2', '0', shift_t=2)
        ratio, predicted = classes.F_lift_transform(self.theta, (1, 1), lift, double, z,
                                                    self.roots, self.params)
        weil = weil_pairing(lift.base, lift, self.params)
        self.assertAlmostEqual(predicted, weil ** 2, places=12)
        self.assertLess(abs(ratio - predicted), 1e-9)

    def test_lift_transform_with_integer_shift(self):
        lift = utils.makeOneLift('1/3', '1/3')
        other = utils.makeOneLift('1/3', '1/3', shift_s=-1, shift_t=1)
        ratio, predicted = classes.F_lift_transform(self.theta, (1, 1), lift, other, 0.04j,
                                                    self.roots, self.params)
        self.assertLess(abs(ratio - predicted), 1e-9)

    def test_lift_law_on_whole_jet(self):
        roots = utils.makeOneRoots(2, degree_cap=5)
        z = 0.03 + 0.01j
        for mbar, point, shifts in (((1, 1), ('1/2', '0'), (0, 1)),
                                    ((1, 1), ('1/3', '1/3'), (-1, 1)),
                                    ((2, 2), ('1/3', '0'), (1, 2))):
            lift = utils.makeOneLift(*point)
            other = utils.makeOneLift(*point, shift_s=shifts[0], shift_t=shifts[1])
            residual = classes.F_lift_residual(self.theta, mbar, lift, other, z, roots,
                                               self.params)
            self.assertLess(residual, 1e-9)

    def test_lift_law_detects_wrong_higher_terms(self):
        lift = utils.makeOneLift('1/2', '0')
        other = utils.makeOneLift('1/2', '0', shift_t=1)
        z = 0.05
        # mesmo termo constante, termos de grau 1 diferentes
        shifted_roots = [root * 1.5 for root in self.roots]
        before = classes.F_eval(self.theta, (1, 1), lift, z, self.roots, self.params)
        after = classes.F_eval(self.theta, (1, 1), other, z, shifted_roots, self.params)
        _, predicted = classes.F_lift_transform(self.theta, (1, 1), lift, other, z,
                                                self.roots, self.params)
        self.assertAlmostEqual(after.constant_term, predicted * before.constant_term, places=9)
        self.assertGreater(after.relative_residual(before * predicted), 1e-3)

    def test_wrong_number_of_roots(self):
        with self.assertRaises(ParameterError):
            classes.F_eval(self.theta, (1, 1), utils.makeOneLift(), 0.1, self.roots[:1],
                           self.params)


class EvaluatedClassTestCase(unittest.TestCase):

    def setUp(self):
        self.params = utils.makeOneParams()

    def test_zero_rotation_ignores_lift(self):
        V = utils.makeOneBundle({'m': (0, 0)})
        evaluated = classes.theta_of_bundle(sigma_d_theta(2), V, utils.makeOneLift('1/2', '1/2'),
                                            self.params)
        expected = sigma_d(2, list(V.roots), self.params)
        self.assertLess(evaluated(0.1).max_abs_diff(expected), 1e-12)

    def test_incompatible(self):
        V = utils.makeOneBundle({'m': (1, 1)})
        with self.assertRaises(IncompatibleLattices):
            classes.theta_of_bundle(sigma_d_theta(3), V, utils.makeOneLift(), self.params)

    def test_weyl_moved_bundle(self):
        V = utils.makeOneBundle({'m': (2, 0)})
        lift = utils.makeOneLift('0', '1/2')
        w = SignedPermutation.swap(2, 0, 1)
        first = classes.theta_of_bundle(sigma_d_theta(2), V, lift, self.params)
        second = classes.theta_of_bundle(sigma_d_theta(2), V.weyl_move(w), lift, self.params)
        self.assertLess(second(0.08j).relative_residual(first(0.08j)), 1e-9)

    def test_holomorphic(self):
        V = utils.makeOneBundle({'m': (1, 1)})
        evaluated = classes.theta_of_bundle(sigma_d_theta(2), V, utils.makeOneLift('1/3', '0'),
                                            self.params)
        self.assertLess(classes.holomorphy_check(evaluated, 0.1 + 0.1j), 1e-6)


class RUnitTestCase(unittest.TestCase):

    def setUp(self):
        self.params = utils.makeOneParams()

    def test_trivial_point_gives_one(self):
        V = utils.makeOneBundle({'m': (2, 0), 'orientation_signs': {0: -1}})
        R = classes.R_eval(V, utils.makeOneLift(), 0.07, self.params)
        self.assertLess(R.max_abs_diff(1.0), 1e-10)

    def test_unit_at_special_point(self):
        V = utils.makeOneBundle({'m': (2, 0)})
        R = classes.R_eval(V, utils.makeOneLift('0', '1/2'), 0.0, self.params)
        self.assertGreater(abs(R.constant_term), 1e-6)

    def test_unit_without_fixed_factors(self):
        V = utils.makeOneBundle({'m': (1, 1)})
        R = classes.R_eval(V, utils.makeOneLift('1/3', '0'), 0.0, self.params)
        self.assertGreater(abs(R.constant_term), 1e-6)

    def test_shifted_lift(self):
        z = 0.03 - 0.02j
        for m, point in (((2, 0), ('0', '1/2')), ((2, 1, 1), ('0', '1/2')), ((1, 1), ('1/3', '0'))):
            V = utils.makeOneBundle({'m': m})
            centered = utils.makeOneLift(*point)
            for shift_s, shift_t in ((0, 1), (0, 2), (-1, 3)):
                lift = utils.makeOneLift(*point, shift_s=shift_s, shift_t=shift_t)
                R = classes.R_eval(V, lift, z, self.params)
                self.assertGreater(abs(R.constant_term), 1e-6)
                self.assertLess(classes.euler_factorization_check(V, lift, z, self.params), 1e-9)
                # o fator previsto não depende das raízes
                generic = [root + 0.2 for root in V.roots]
                _, predicted = classes.F_lift_transform(sigma_d_theta(V.rank), V.m, centered,
                                                        lift, z, generic, self.params)
                expected = classes.R_eval(V, centered, z, self.params) / predicted
                self.assertLess(R.relative_residual(expected), 1e-9)

    def test_sigma_factor_ratio(self):
        lift = utils.makeOneLift('0', '1/2')
        y = Jet.variable(0, 1, 4, base=0.3 + 0.2j)
        ratio = classes.sigma_factor_ratio(y, 1, lift.ell, lift.k, self.params)
        direct = sigma(y, self.params) / sigma(y + 2 * lift.abar, self.params)
        self.assertLess(ratio.relative_residual(direct), 1e-10)

    def test_euler_factorization(self):
        rng = utils.makeOneRng(11)
        for m, point in (((2, 0), ('0', '1/2')), ((2, 2), ('1/2', '1/2')), ((3, 1), ('1/3', '0'))):
            V = utils.makeOneBundle({'m': m, 'orientation_signs': {0: -1}})
            lift = utils.makeOneLift(*point)
            z = complex(rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1))
            self.assertLess(classes.euler_factorization_check(V, lift, z, self.params), 1e-9)


if __name__ == '__main__':
    unittest.main()
