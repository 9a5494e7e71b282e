#!/usr/bin/env python3
"""
Tests for Wedge Retract Witnesses and the Dimension Bound
"""

import sys
import unittest
from itertools import product
from pathlib import Path

# Add scripts directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "scripts"))

from certificates.witness import RETRACT_KIND, hilton_milnor_bound, wedge_retract_witness
from complexes.simplicial import cone, normalize
from utils.errors import NotHyperbolic, ParameterOutOfRange

Q = normalize([[1, 2], [3]], 3)
SQUARE = normalize([[1, 2], [2, 3], [3, 4], [1, 4]], 4)


class TestHiltonMilnorBound(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(tuple(hilton_milnor_bound(1, 1, 1)), (5, 19, True))
        self.assertEqual(tuple(hilton_milnor_bound(2, 1, 1)), (7, 27, True))
        self.assertEqual(tuple(hilton_milnor_bound(1, 1, 2)), (7, 23, True))

    def test_holds_up_to_fifty(self):
        for k, t, r in product(range(1, 51), repeat=3):
            self.assertTrue(hilton_milnor_bound(k, t, r).ok)

    def test_out_of_range(self):
        for triple in [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-2, 3, 3)]:
            with self.assertRaises(ParameterOutOfRange):
                hilton_milnor_bound(*triple)


class TestWedgeRetractWitness(unittest.TestCase):
    def test_edge_plus_point(self):
        w = wedge_retract_witness(Q)
        self.assertEqual((w.I, w.J), (frozenset({1, 3}), frozenset({2, 3})))
        self.assertEqual((w.k, w.t, w.r), (1, 1, 1))
        self.assertEqual(w.sphere_dims, (3, 3))
        self.assertEqual(w.ambient_subset, frozenset({1, 2, 3}))
        self.assertEqual(str(w), "S^3 v S^3")
        self.assertEqual(RETRACT_KIND, "rational")

    def test_cone_keeps_pair(self):
        w = wedge_retract_witness(cone(Q))
        self.assertEqual((w.I, w.J), (frozenset({1, 3}), frozenset({2, 3})))

    def test_larger_spheres(self):
        # MNFs {1,2,3} and {3,4}: (k, t, r) = (2, 1, 1)
        K = normalize([[1, 2, 4], [1, 3], [2, 3]], 4)
        w = wedge_retract_witness(K)
        self.assertEqual((w.k, w.t, w.r), (2, 1, 1))
        self.assertEqual(w.sphere_dims, (5, 3))
        self.assertEqual((w.bound.lhs, w.bound.rhs), (7, 27))

    def test_elliptic(self):
        with self.assertRaises(NotHyperbolic):
            wedge_retract_witness(SQUARE)


if __name__ == "__main__":
    unittest.main()
