# coding: utf-8
import unittest
from fractions import Fraction

from ellsigma.engine import utils as eutils
from ellsigma.engine.curve import CurvePoint, order
from ellsigma.engine.errors import ParameterError
from ellsigma.engine.thom import check_pair, check_thm8, special_points
from ellsigma.engine.utils import toy_data

from . import utils


class ParseTestCase(unittest.TestCase):

    def test_parse_complex(self):
        """
        Teste da função utils.parse_complex() com as formas aceitas na
        linha de comandos.
        """
        self.assertEqual(eutils.parse_complex('i'), 1j)
        self.assertEqual(eutils.parse_complex('-i'), -1j)
        self.assertEqual(eutils.parse_complex('2i'), 2j)
        self.assertEqual(eutils.parse_complex('0.3,0.8'), complex(0.3, 0.8))
        self.assertEqual(eutils.parse_complex('0.5+1.2j'), complex(0.5, 1.2))
        self.assertEqual(eutils.parse_complex(1j), 1j)

    def test_parse_complex_invalid(self):
        for text in ('', 'abc', '1,2,3'):
            with self.assertRaises(ParameterError):
                eutils.parse_complex(text)

    def test_parse_point(self):
        point = eutils.parse_point('1/2,0')
        self.assertEqual(point, CurvePoint(Fraction(1, 2), Fraction(0)))
        self.assertEqual(order(point), 2)
        with self.assertRaises(ParameterError):
            eutils.parse_point('1/2')
        with self.assertRaises(ParameterError):
            eutils.parse_point('1/0,0')

    def test_parse_int_vector(self):
        self.assertEqual(eutils.parse_int_vector('1,1,0'), (1, 1, 0))
        self.assertEqual(eutils.parse_int_vector(''), ())
        with self.assertRaises(ParameterError):
            eutils.parse_int_vector('1,x')

    def test_parse_shifts(self):
        self.assertEqual(eutils.parse_shifts('1,-1'), (1, -1))
        with self.assertRaises(ParameterError):
            eutils.parse_shifts('1')

    def test_format_complex(self):
        self.assertEqual(eutils.format_complex(1j), '0+1i')
        self.assertEqual(eutils.format_complex(complex(-1, -0.5)), '-1-0.5i')


class ToyDataTestCase(unittest.TestCase):

    def test_random_spin_bundle(self):
        """
        Teste da função toy_data.random_spin_bundle(): rotações no reticulado
        (soma par) limitadas por ``bound`` e raízes nilpotentes.
        """
        rng = utils.makeOneRng(1)
        for _ in range(10):
            V = toy_data.random_spin_bundle(rng, 3, 3, 4, bound=2)
            self.assertEqual(V.rank, 3)
            self.assertEqual(sum(V.m) % 2, 0)
            self.assertTrue(all(abs(mj) <= 2 for mj in V.m))
            self.assertTrue(all(root.constant_term == 0 for root in V.roots))

    def test_matched_pairs(self):
        rng = utils.makeOneRng(2)
        for kind, d in (('weyl', 2), ('reflection', 3)):
            P = toy_data.random_matched_pair(rng, d, d, 4, 2, kind=kind)
            self.assertLess(check_pair(P), 1e-9)

    def test_padding(self):
        P = toy_data.random_matched_pair(utils.makeOneRng(3), 2, 2, 4, 2, padding=1)
        self.assertEqual(P.V0.rank, 3)
        self.assertEqual(P.V0.m[2:], P.V1.m[2:])

    def test_reflection_requires_rank_three(self):
        with self.assertRaises(ParameterError):
            toy_data.random_matched_pair(utils.makeOneRng(4), 2, kind='reflection')
        with self.assertRaises(ParameterError):
            toy_data.random_matched_pair(utils.makeOneRng(4), 2, kind='unknown')

    def test_reflect_preserves_form(self):
        rng = utils.makeOneRng(5)
        m = toy_data._reflectable_rotation(rng, 3, 2)
        reflected, _ = toy_data.reflect(m, utils.makeOneRoots(3))
        self.assertEqual(sum(v * v for v in m), sum(v * v for v in reflected))
        self.assertEqual(sum(reflected) % 2, 0)

    def test_thm8_instances(self):
        rng = utils.makeOneRng(6)
        for k in (1, 2):
            instance = toy_data.random_thm8_instance(rng, 2, 2, 4, 2, k=k)
            self.assertEqual(instance.V.rank, 2 * k)
            self.assertLess(check_thm8(instance.V, instance.Vprime, instance.theta_prime), 1e-9)

    def test_centered_lift(self):
        params = utils.makeOneParams()
        lift = toy_data.centered_lift(CurvePoint(Fraction(1, 2), Fraction(2, 3)), params)
        self.assertAlmostEqual(lift.abar, 2j * 3.141592653589793 * (-0.5 + 1j * (-1 / 3)))

    def test_random_point_and_special_lift(self):
        rng = utils.makeOneRng(7)
        params = utils.makeOneParams()
        self.assertEqual(order(toy_data.random_point(rng, 6, exact_order=5)), 5)
        V = utils.makeOneBundle({'m': (2, 0)})
        for _ in range(10):
            lift = toy_data.random_special_lift(rng, [V], 6, params)
            self.assertIn(lift.base, special_points(V, 6))

    def test_random_ordinary_point(self):
        rng = utils.makeOneRng(8)
        V = utils.makeOneBundle({'m': (2, 0)})
        point = toy_data.random_ordinary_point(rng, V, 3)
        self.assertEqual(order(point), 3)
        self.assertIsNone(toy_data.random_ordinary_point(rng, V, 2))


if __name__ == '__main__':
    unittest.main()
