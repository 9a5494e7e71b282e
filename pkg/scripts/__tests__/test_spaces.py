#!/usr/bin/env python3
"""
Tests for the Hilbert-Poincare Series of the Spaces
"""

import random
import sys
import unittest
from itertools import combinations_with_replacement
from pathlib import Path

# Add scripts directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "scripts"))

from certificates.decomposition import SphereProduct, moment_angle_type
from complexes.census import census
from complexes.simplicial import boundary_simplex, is_face, normalize, simplex
from series.growth import GrowthKind
from series.polynomial import IntPolynomial
from series.rational import RationalFunction, convolve, expand
from series.spaces import (
    face_ring_series,
    free_loop_cp_infty_power_series,
    free_loop_dj_upper_series,
    free_loop_zk_series,
    hochschild_growth_verdict,
    loop_dj_series,
    loop_partial_quotient_series,
    loop_zk_growth,
    loop_zk_series,
    rational_homotopy_series,
    zk_series,
)
from utils.errors import NotElliptic, ParameterOutOfRange

TWO_POINTS = normalize([[1], [2]], 2)
Q = normalize([[1, 2], [3]], 3)
SQUARE = normalize([[1, 2], [2, 3], [3, 4], [1, 4]], 4)
POINT = simplex(1)


def R(num, den=(1,)):
    return RationalFunction.from_coefficients(num, den)


def face_supported_monomials(K, q):
    """Degree-q monomials in x_1..x_m whose support is a face of K."""
    return sum(
        1
        for monomial in combinations_with_replacement(range(1, K.m + 1), q)
        if is_face(K, monomial)
    )


class TestZKSeries(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(zk_series(SphereProduct(0, (3,))), R([1, 0, 0, 1]))
        self.assertEqual(zk_series(SphereProduct(0, (3, 3))), R([1, 0, 0, 2, 0, 0, 1]))
        self.assertEqual(zk_series(SphereProduct(4, ())), R([1]))
        self.assertEqual(zk_series(SphereProduct(0, (3, 3))).factored(), "(1+t^3)^2")

    def test_census_properties(self):
        for m in range(1, 5):
            for K, verdict in census(m):
                if not verdict.is_elliptic:
                    continue
                sp = moment_angle_type(K)
                coefficients = expand(zk_series(sp), 2 * m)
                self.assertEqual(coefficients[0], 1)
                self.assertTrue(all(c >= 0 for c in coefficients))
                top = max(n for n, c in enumerate(coefficients) if c)
                self.assertEqual(top, sum(sp.sphere_dimensions))
                self.assertEqual(sum(coefficients), 2 ** len(sp.sphere_dimensions))


class TestLoopSeries(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(free_loop_zk_series(SphereProduct(0, (3,))), R([1, 0, 0, 1], [1, 0, -1]))
        self.assertEqual(loop_zk_series(SphereProduct(0, (3, 3))), R([1], [1, 0, -2, 0, 1]))
        self.assertEqual(free_loop_zk_series(SphereProduct(0, ())), R([1]))
        self.assertEqual(free_loop_zk_series(SphereProduct(0, (3,))).factored(), "(1+t^3)/(1-t^2)")

    def test_small_sphere_rejected(self):
        with self.assertRaises(ParameterOutOfRange):
            loop_zk_series(SphereProduct(0, (1,)))

    def test_square_free_loop_oracle(self):
        N = 20
        sphere = [1 if n in (0, 3) else 0 for n in range(N + 1)]
        loop = [1 if n % 2 == 0 else 0 for n in range(N + 1)]
        factor = convolve(sphere, loop, N)
        expected = convolve(factor, factor, N)
        self.assertEqual(expand(free_loop_zk_series(moment_angle_type(SQUARE)), N), expected)

    def test_free_loop_is_product(self):
        for m in range(1, 6):
            for K, verdict in census(m):
                if not verdict.is_elliptic:
                    continue
                sp = moment_angle_type(K)
                self.assertEqual(free_loop_zk_series(sp), zk_series(sp) * loop_zk_series(sp))

    def test_rational_homotopy(self):
        self.assertEqual(rational_homotopy_series(SphereProduct(0, (3, 3))), R([0, 0, 0, 2]))
        self.assertEqual(rational_homotopy_series(SphereProduct(0, (3, 5))), R([0, 0, 0, 1, 0, 1]))
        f = rational_homotopy_series(moment_angle_type(SQUARE))
        self.assertEqual(f.numerator(1), 2)

    def test_growth_of_loop_zk(self):
        self.assertIs(loop_zk_growth(TWO_POINTS).kind, GrowthKind.SUB_EXPONENTIAL)
        growth = loop_zk_growth(Q)
        self.assertIs(growth.kind, GrowthKind.EXPONENTIAL)
        self.assertIn("S^3 v S^3", growth.evidence)


class TestFaceRingSeries(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(face_ring_series(TWO_POINTS), R([1, 0, 1], [1, 0, -1]))
        self.assertEqual(face_ring_series(POINT), R([1], [1, 0, -1]))
        self.assertEqual(face_ring_series(SQUARE), R([1, 0, 2, 0, 1], [1, 0, -2, 0, 1]))

    def test_monomial_oracle(self):
        rng = random.Random(2024)
        complexes = [TWO_POINTS, Q, SQUARE]
        while len(complexes) < 13:
            m = rng.randint(1, 4)
            facets = [[v] for v in range(1, m + 1)]
            for _ in range(rng.randint(0, 3)):
                facets.append(rng.sample(range(1, m + 1), rng.randint(1, m)))
            complexes.append(normalize(facets, m))

        for K in complexes:
            coefficients = expand(face_ring_series(K), 24)
            for n, c in enumerate(coefficients):
                expected = face_supported_monomials(K, n // 2) if n % 2 == 0 else 0
                self.assertEqual(c, expected, (str(K), n))


class TestDJSeries(unittest.TestCase):
    def test_loop_dj(self):
        self.assertEqual(loop_dj_series(TWO_POINTS), R([1, 1], [1, -1]))
        self.assertEqual(loop_dj_series(simplex(3)), R([1, 3, 3, 1]))
        self.assertEqual(loop_dj_series(SQUARE), R([1, 2, 1], [1, -2, 1]))

    def test_loop_dj_hyperbolic(self):
        with self.assertRaises(NotElliptic):
            loop_dj_series(Q)
        with self.assertRaises(NotElliptic):
            free_loop_dj_upper_series(Q)

    def test_partial_quotients(self):
        sp = moment_angle_type(SQUARE)
        self.assertEqual(loop_partial_quotient_series(SQUARE, 0), loop_zk_series(sp))
        self.assertEqual(loop_partial_quotient_series(SQUARE, 4), loop_dj_series(SQUARE))
        with self.assertRaises(ParameterOutOfRange):
            loop_partial_quotient_series(SQUARE, 5)

    def test_free_loop_dj_bound(self):
        self.assertEqual(free_loop_dj_upper_series(TWO_POINTS), R([1, 0, 1], [1, 0, -1]) * R([1, 1], [1, -1]))
        self.assertEqual(free_loop_dj_upper_series(POINT), R([1, 1], [1, 0, -1]))
        self.assertEqual(
            free_loop_dj_upper_series(simplex(3)),
            RationalFunction([(IntPolynomial([1, 1]), 3)], [(IntPolynomial([1, 0, -1]), 3)]),
        )

    def test_cp_power(self):
        self.assertEqual(free_loop_cp_infty_power_series(0), R([1]))
        for m in range(1, 7):
            expected = RationalFunction(den_factors=[(IntPolynomial([1, -1]), m)])
            self.assertEqual(free_loop_cp_infty_power_series(m), expected)
        with self.assertRaises(ParameterOutOfRange):
            free_loop_cp_infty_power_series(-1)


class TestHochschildVerdict(unittest.TestCase):
    def test_two_points(self):
        verdict = hochschild_growth_verdict(TWO_POINTS)
        self.assertIs(verdict.kind, GrowthKind.SUB_EXPONENTIAL)
        self.assertEqual(verdict.certificate, free_loop_dj_upper_series(TWO_POINTS))

    def test_square(self):
        verdict = hochschild_growth_verdict(SQUARE)
        self.assertIs(verdict.kind, GrowthKind.SUB_EXPONENTIAL)
        self.assertIn("all poles on unit circle", verdict.evidence)
        self.assertIn("product of simplices", verdict.evidence)

    def test_full_simplex(self):
        verdict = hochschild_growth_verdict(simplex(2))
        self.assertIs(verdict.kind, GrowthKind.SUB_EXPONENTIAL)
        self.assertNotIn("product of simplices", verdict.evidence)

    def test_hyperbolic(self):
        verdict = hochschild_growth_verdict(Q)
        self.assertIs(verdict.kind, GrowthKind.UNDETERMINED)
        self.assertIsNone(verdict.certificate)
        self.assertIs(verdict.attached.kind, GrowthKind.EXPONENTIAL)

    def test_triangle_boundary(self):
        verdict = hochschild_growth_verdict(boundary_simplex(3))
        self.assertIn("Delta^2", verdict.evidence)


if __name__ == "__main__":
    unittest.main()
