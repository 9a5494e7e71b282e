#!/usr/bin/env python3
"""
Tests for the Canonical JSON Forms
"""

import json
import sys
import unittest
from pathlib import Path

# Add scripts directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "scripts"))

from certificates.decomposition import join_decompose, moment_angle_type
from certificates.witness import wedge_retract_witness
from complexes.census import census
from complexes.nonface import classify
from complexes.simplicial import normalize
from series.growth import growth_classify
from series.rational import RationalFunction
from utils.errors import GhostVertex, InputFormatError, NonUnitConstantTerm, VertexOutOfRange
from utils.serialization import (
    census_record,
    complex_to_dict,
    decomposition_to_dict,
    dumps,
    growth_to_dict,
    loads,
    parse_complex,
    parse_decomposition,
    parse_rational,
    rational_to_dict,
    sphere_product_to_dict,
    witness_to_dict,
)

Q = normalize([[1, 2], [3]], 3)
SQUARE = normalize([[1, 2], [2, 3], [3, 4], [1, 4]], 4)


class TestComplexJSON(unittest.TestCase):
    def test_to_dict(self):
        self.assertEqual(complex_to_dict(Q), {"m": 3, "facets": [[1, 2], [3]]})

    def test_parse(self):
        self.assertEqual(parse_complex({"m": 3, "facets": [[2, 1], [3], [1]]}), Q)

    def test_parse_errors(self):
        bad_inputs = [
            [],
            {"facets": []},
            {"m": "3", "facets": []},
            {"m": True, "facets": []},
            {"m": 3},
            {"m": 3, "facets": [1, 2]},
        ]
        for data in bad_inputs:
            with self.assertRaises(InputFormatError, msg=repr(data)):
                parse_complex(data)
        with self.assertRaises(VertexOutOfRange):
            parse_complex({"m": 2, "facets": [[1, 3]]})
        with self.assertRaises(GhostVertex):
            parse_complex({"m": 3, "facets": [[1, 2]]})

    def test_ghosts_allowed(self):
        K = parse_complex({"m": 3, "facets": [[1, 2]]}, allow_ghost_vertices=True)
        self.assertEqual(K.m, 3)

    def test_loads(self):
        self.assertEqual(loads('{"m": 1}'), {"m": 1})
        with self.assertRaises(InputFormatError):
            loads("{not json")


class TestCertificateJSON(unittest.TestCase):
    def test_decomposition(self):
        data = decomposition_to_dict(join_decompose(SQUARE))
        self.assertEqual(data, {"m": 4, "simplex": [], "boundaries": [[1, 3], [2, 4]]})

    def test_decomposition_round_trip(self):
        for m in range(1, 5):
            for K, verdict in census(m):
                if not verdict.is_elliptic:
                    continue
                text = dumps(decomposition_to_dict(join_decompose(K)))
                self.assertEqual(parse_decomposition(json.loads(text)).rebuild(), K)

    def test_decomposition_without_m(self):
        d = parse_decomposition({"simplex": [], "boundaries": [[2, 4], [1, 3]]})
        self.assertEqual(d.rebuild(), SQUARE)

    def test_witness(self):
        data = witness_to_dict(wedge_retract_witness(Q))
        self.assertEqual(data, {
            "I": [1, 3],
            "J": [2, 3],
            "k": 1,
            "t": 1,
            "r": 1,
            "spheres": [3, 3],
            "bound": {"lhs": 5, "rhs": 19},
            "retract": "rational",
        })

    def test_sphere_product(self):
        self.assertEqual(
            sphere_product_to_dict(moment_angle_type(SQUARE)),
            {"disk": 0, "spheres": [3, 3], "type": "(S^3)^2"},
        )

    def test_census_record(self):
        record = census_record(Q, classify(Q))
        self.assertEqual(dumps(record, compact=True), '{"complex":{"m":3,"facets":[[1,2],[3]]},"verdict":"hyperbolic"}')


class TestRationalJSON(unittest.TestCase):
    def test_to_dict(self):
        f = RationalFunction.from_coefficients([1, 0, 0, 1], [1, 0, -1])
        self.assertEqual(rational_to_dict(f), {"num": [1, -1, 1], "den": [1, -1]})
        self.assertEqual(rational_to_dict(RationalFunction.from_coefficients([0])), {"num": [0], "den": [1]})

    def test_parse(self):
        f = parse_rational({"num": [1], "den": [1, -1, -1]})
        self.assertEqual(f, RationalFunction.from_coefficients([1], [1, -1, -1]))

    def test_parse_errors(self):
        for data in [{"num": [1]}, {"num": [1.5], "den": [1]}, {"num": [1], "den": [0, 0]}, {"num": [1], "den": "1"}]:
            with self.assertRaises(InputFormatError, msg=repr(data)):
                parse_rational(data)
        with self.assertRaises(NonUnitConstantTerm):
            parse_rational({"num": [1], "den": [3, 1]})

    def test_growth(self):
        data = growth_to_dict(growth_classify(RationalFunction.from_coefficients([1], [1, -2])))
        self.assertEqual(data["kind"], "exponential")
        self.assertEqual(data["poles_inside"], 1)
        self.assertEqual(data["pole_bracket"], ["1/2", "1/2"])
        self.assertEqual(data["certificate"], {"num": [1], "den": [1, -2]})


if __name__ == "__main__":
    unittest.main()
