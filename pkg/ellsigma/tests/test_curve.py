# coding: utf-8
import cmath
import math
import unittest
from fractions import Fraction

from ellsigma.engine import curve
from ellsigma.engine.curve import CurveParams, CurvePoint, TWO_PI_I
from ellsigma.engine.errors import ParameterError

from . import utils


class CurveParamsTestCase(unittest.TestCase):

    def test_q_for_tau_i(self):
        params = CurveParams(1j)
        self.assertAlmostEqual(abs(params.q), math.exp(-2 * math.pi), places=15)
        self.assertAlmostEqual(abs(params.q), 1.867e-3, places=5)

    def test_degenerate_tau_raises(self):
        for tau in (1.0, -1j, 0.5 - 0.1j):
            with self.assertRaises(ParameterError):
                CurveParams(tau)

    def test_periods(self):
        params = CurveParams(0.3 + 0.8j)
        self.assertEqual(params.periods, (TWO_PI_I, TWO_PI_I * (0.3 + 0.8j)))

    def test_q_power_is_exponential(self):
        params = CurveParams(1j)
        self.assertAlmostEqual(params.q_power(Fraction(1, 2)), math.exp(-math.pi), places=15)
        self.assertAlmostEqual(params.q_power(2), params.q ** 2, places=15)


class CurvePointTestCase(unittest.TestCase):

    def test_normalized_to_unit_interval(self):
        a = CurvePoint(Fraction(3, 2), Fraction(-1, 3))
        self.assertEqual((a.s, a.t), (Fraction(1, 2), Fraction(2, 3)))
        self.assertEqual(str(a), '1/2,2/3')

    def test_order(self):
        self.assertEqual(curve.order(CurvePoint(0, 0)), 1)
        self.assertEqual(curve.order(CurvePoint(Fraction(1, 2), 0)), 2)
        self.assertEqual(curve.order(CurvePoint(Fraction(1, 2), Fraction(1, 3))), 6)

    def test_is_killed_by(self):
        a = CurvePoint(Fraction(1, 3), Fraction(2, 3))
        self.assertTrue(curve.is_killed_by(a, 6))
        self.assertFalse(curve.is_killed_by(a, 2))
        self.assertTrue(a.scale(3).is_zero)

    def test_torsion_points_counts(self):
        self.assertEqual(len(curve.points_of_order(2)), 3)
        self.assertEqual(len(curve.points_of_order(3)), 8)
        points = curve.torsion_points(2)
        self.assertEqual(len(points), 4)
        self.assertEqual(points[0], CurvePoint(0, 0))

    def test_group_law(self):
        a = CurvePoint(Fraction(1, 2), Fraction(1, 4))
        self.assertTrue((a + a + a + a).is_zero)
        self.assertTrue((a - a).is_zero)


class LiftTestCase(unittest.TestCase):

    def test_ell_and_k(self):
        lifted = utils.makeOneLift('1/3', '2/3')
        self.assertEqual((lifted.n, lifted.ell, lifted.k), (3, 1, 2))
        shifted = utils.makeOneLift('1/3', '2/3', shift_s=-1, shift_t=1)
        self.assertEqual((shifted.ell, shifted.k), (-2, 5))
        self.assertEqual(lifted.delta_to(shifted), 1)

    def test_n_abar_in_lattice(self):
        params = utils.makeOneParams(0.3 + 0.8j)
        lifted = utils.makeOneLift('2/5', '3/5', params=params)
        self.assertLess(curve.distance_to_lattice(lifted.n * lifted.abar, params), 1e-12)

    def test_delta_between_different_points_raises(self):
        with self.assertRaises(ParameterError):
            utils.makeOneLift('1/2', '0').delta_to(utils.makeOneLift('0', '1/2'))

    def test_alpha_power(self):
        lifted = utils.makeOneLift('1/4', '1/4')
        self.assertAlmostEqual(lifted.alpha_power(2), cmath.exp(2 * lifted.abar), places=12)


class WeilPairingTestCase(unittest.TestCase):

    def test_two_torsion_values(self):
        params = utils.makeOneParams()
        a = CurvePoint(Fraction(1, 2), 0)
        self.assertAlmostEqual(curve.weil_pairing(a, utils.makeOneLift('1/2', '0'), params),
                               -1, delta=1e-12)
        b = CurvePoint(0, Fraction(1, 2))
        self.assertAlmostEqual(curve.weil_pairing(b, utils.makeOneLift('0', '1/2'), params),
                               1, delta=1e-12)

    def test_root_of_unity_and_lift_independent(self):
        params = utils.makeOneParams(0.3 + 0.8j)
        for a in curve.torsion_points(12):
            n = curve.order(a)
            base = curve.weil_pairing(a, curve.lift(a, 0, 0, params), params)
            self.assertLess(abs(base ** n - 1), 1e-12)
            for shifts in ((1, 0), (0, 1), (-1, 2)):
                other = curve.weil_pairing(a, curve.lift(a, shifts[0], shifts[1], params), params)
                self.assertLess(abs(other - base), 1e-12)

    def test_wrong_lift_raises(self):
        params = utils.makeOneParams()
        with self.assertRaises(ParameterError):
            curve.weil_pairing(CurvePoint(Fraction(1, 2), 0), utils.makeOneLift('0', '1/2'), params)


class LatticeReductionTestCase(unittest.TestCase):

    def test_reduce_mod_lattice(self):
        params = utils.makeOneParams(0.3 + 0.8j)
        z = params.lattice_point(0.25, 0.5) + params.lattice_point(2, -1)
        s, t = curve.reduce_mod_lattice(z, params)
        self.assertAlmostEqual(s, 0.25, places=12)
        self.assertAlmostEqual(t, 0.5, places=12)

    def test_distance_to_lattice(self):
        params = utils.makeOneParams()
        self.assertLess(curve.distance_to_lattice(TWO_PI_I * 3, params), 1e-12)
        self.assertAlmostEqual(curve.distance_to_lattice(0.1, params), 0.1, places=12)

    def test_samplers(self):
        rng = utils.makeOneRng()
        params = utils.makeOneParams()
        for _ in range(50):
            z = curve.sample_z(rng, params)
            self.assertGreaterEqual(curve.distance_to_lattice(z, params),
                                    curve.LATTICE_REJECTION_RADIUS)
            w = curve.sample_annulus(rng, 0.05, 0.2)
            self.assertTrue(0.05 <= abs(w) <= 0.2 + 1e-15)


if __name__ == '__main__':
    unittest.main()
