# coding: utf-8
import unittest

from ellsigma.engine import lattices
from ellsigma.engine.lattices import SignedPermutation, spin
from ellsigma.engine.errors import NotInLattice, ParameterError

from . import utils


class SignedPermutationTestCase(unittest.TestCase):

    def test_apply(self):
        w = SignedPermutation((1, 0, 2), (1, -1, 1))
        self.assertEqual(w.apply((1, 2, 3)), [-2, 1, 3])

    def test_compose_and_inverse(self):
        rng = utils.makeOneRng()
        group = spin(4).weyl
        for _ in range(20):
            w = group.random_element(rng)
            v = group.random_element(rng)
            m = (1, -2, 3, 0)
            self.assertEqual(w.compose(v).apply(m), w.apply(v.apply(m)))
            self.assertEqual(w.inverse().apply(w.apply(m)), list(m))

    def test_invalid_raises(self):
        with self.assertRaises(ParameterError):
            SignedPermutation((0, 0), (1, 1))
        with self.assertRaises(ParameterError):
            SignedPermutation((0, 1), (1, 2))

    def test_random_even_sign_changes(self):
        rng = utils.makeOneRng(3)
        for _ in range(50):
            self.assertEqual(spin(3).weyl.random_element(rng).negative_count % 2, 0)


class LatticeWithFormTestCase(unittest.TestCase):

    def test_spin_membership(self):
        L = spin(2)
        self.assertTrue(L.is_member((1, 1)))
        self.assertFalse(L.is_member((1, 0)))
        self.assertFalse(L.is_member((1, 1, 0)))

    def test_weyl_orders(self):
        self.assertEqual(spin(2).weyl.order(), 4)
        self.assertEqual(spin(3).weyl.order(), 24)
        self.assertEqual(len(list(spin(3).weyl.elements())), 24)

    def test_non_invariant_form_raises(self):
        with self.assertRaises(ParameterError):
            lattices.torus([[2, 1], [1, 4]], 'permutations')

    def test_non_symmetric_gram_raises(self):
        with self.assertRaises(ParameterError):
            lattices.torus([[2, 1], [0, 2]])

    def test_presets(self):
        self.assertEqual(lattices.preset('spin(4)'), spin(2))
        self.assertEqual(lattices.preset('torus(2,1;1,2)').rank, 2)
        with self.assertRaises(ParameterError):
            lattices.preset('spin(3)')
        with self.assertRaises(ParameterError):
            lattices.preset('e8')

    def test_direct_sum_and_scaled(self):
        total = spin(2).direct_sum(spin(1))
        self.assertEqual(total.rank, 3)
        self.assertTrue(total.is_member((1, 1, 2)))
        self.assertFalse(total.is_member((1, 1, 1)))
        self.assertEqual(lattices.phi(spin(2).scaled(2), (1, 1)), 2)


class QuadraticFormTestCase(unittest.TestCase):

    def setUp(self):
        self.L = spin(2)

    def test_phi_and_ihat(self):
        self.assertEqual(lattices.phi(self.L, (1, 1)), 1)
        self.assertEqual(lattices.ihat(self.L, (1, 1)), (1, 1))
        self.assertEqual(lattices.phi(self.L, (0, 0)), 0)
        self.assertEqual(lattices.pairing(self.L, (0, 0), (1, 1)), 0)

    def test_phi_polarization(self):
        a, b = (1, 1), (1, -1)
        self.assertEqual(lattices.phi(self.L, (2, 0)), 2)
        self.assertEqual(lattices.phi(self.L, a) + lattices.pairing(self.L, a, b)
                         + lattices.phi(self.L, b), 2)

    def test_not_in_lattice(self):
        with self.assertRaises(NotInLattice):
            lattices.phi(self.L, (1, 0))

    def test_phi_mod(self):
        self.assertEqual(lattices.phi_mod(self.L, (1, 1), 2), 1)
        self.assertEqual(lattices.phi_mod(self.L, (0, 0), 5), 0)
        with self.assertRaises(ParameterError):
            lattices.phi_mod(self.L, (1, 1), 0)

    def test_phi_mod_independent_of_lift(self):
        rng = utils.makeOneRng(4)
        L = spin(3)
        for _ in range(200):
            m = L.random_member(rng, 4)
            delta = L.random_member(rng, 3)
            n = int(rng.integers(1, 7))
            lifted = tuple(a + n * b for a, b in zip(m, delta))
            self.assertEqual(lattices.phi_mod(L, lifted, n), lattices.phi_mod(L, m, n))

    def test_identities_on_random_samples(self):
        rng = utils.makeOneRng(5)
        for d in (1, 2, 3, 4):
            L = spin(d)
            for _ in range(250):
                a, b = L.random_member(rng, 5), L.random_member(rng, 5)
                w = L.weyl.random_element(rng)
                total = tuple(x + y for x, y in zip(a, b))
                self.assertEqual(lattices.phi(L, total),
                                 lattices.phi(L, a) + lattices.pairing(L, a, b) + lattices.phi(L, b))
                self.assertEqual(lattices.phi(L, lattices.weyl_apply(w, a)), lattices.phi(L, a))
                self.assertEqual(lattices.pairing(L, lattices.weyl_apply(w, a),
                                                  lattices.weyl_apply(w, b)),
                                 lattices.pairing(L, a, b))


class StabilizerTestCase(unittest.TestCase):

    def test_identity_fixes_everything(self):
        L = spin(2)
        self.assertTrue(lattices.fixes(L, SignedPermutation.identity(2), (3, 1)))
        self.assertEqual(lattices.weyl_apply(SignedPermutation.identity(2), (3, 1)), (3, 1))

    def test_swap_fixes_diagonal(self):
        self.assertTrue(lattices.fixes(spin(2), SignedPermutation.swap(2, 0, 1), (1, 1)))

    def test_stabilizer_by_enumeration(self):
        L = spin(3)
        stabilizer = lattices.stabilizer_elements(L, (2, 2, 0))
        self.assertEqual(len(stabilizer), 2)
        self.assertIn(SignedPermutation.swap(3, 0, 1), stabilizer)
        for w in stabilizer:
            self.assertEqual(w.negative_count % 2, 0)

    def test_stabilizer_modulo_n(self):
        L = spin(2)
        # −(1, 1) ≡ (1, 1) mod 2Ť
        flip = SignedPermutation.sign_change(2, (0, 1))
        self.assertTrue(lattices.fixes(L, flip, (1, 1), modulus=2))
        self.assertFalse(lattices.fixes(L, flip, (1, 1)))
        rng = utils.makeOneRng()
        for w in lattices.stabilizer_sample(L, (1, 1), rng, 10, modulus=2):
            self.assertTrue(lattices.fixes(L, w, (1, 1), modulus=2))


class BorelC2TestCase(unittest.TestCase):

    def test_display_example(self):
        roots = utils.makeOneRoots(2)
        c2 = lattices.borel_c2(spin(2), (1, 1), roots)
        self.assertEqual(c2.terms(), {
            (0, 0, 2): 1,
            (1, 0, 1): 1,
            (0, 1, 1): 1,
            (2, 0, 0): 0.5,
            (0, 2, 0): 0.5,
        })

    def test_zero(self):
        from ellsigma.engine.jets import Jet
        c2 = lattices.borel_c2(spin(2), (0, 0), [Jet.zero(2), Jet.zero(2)])
        self.assertEqual(c2.max_abs(), 0)

    def test_degree_follows_roots(self):
        roots = utils.makeOneRoots(2, degree_cap=6)
        c2 = lattices.borel_c2(spin(2), (1, 1), roots)
        self.assertEqual(c2.degree_cap, 6)
        self.assertEqual(c2.terms(), lattices.borel_c2(spin(2), (1, 1),
                                                       utils.makeOneRoots(2)).terms())
        self.assertEqual(lattices.borel_c2(spin(2), (1, 1), roots, degree_cap=2).degree_cap, 2)

    def test_weyl_invariance(self):
        rng = utils.makeOneRng(6)
        L = spin(3)
        roots = utils.makeOneRoots(3)
        for _ in range(20):
            m = L.random_member(rng, 3)
            w = L.weyl.random_element(rng)
            moved = lattices.borel_c2(L, lattices.weyl_apply(w, m), w.apply(roots))
            self.assertLess(moved.max_abs_diff(lattices.borel_c2(L, m, roots)), 1e-15)


if __name__ == '__main__':
    unittest.main()
