"""
Canonical JSON Forms

    complex         {"m": 3, "facets": [[1, 2], [3]]}
    decomposition   {"m": 4, "simplex": [...], "boundaries": [[...], ...]}
    witness         {"I": [...], "J": [...], "k": .., "t": .., "r": ..,
                     "spheres": [d1, d2], "bound": {"lhs": .., "rhs": ..}}
    rational        {"num": [c0, c1, ...], "den": [c0, c1, ...]}
    census record   {"complex": {...}, "verdict": "elliptic" | "hyperbolic"}

Keys are written in insertion order; reports are indented, census lines are
compact, so identical values always serialize to identical bytes.
"""

import json
from typing import Any

from certificates.decomposition import JoinDecomposition, SphereProduct
from certificates.witness import RETRACT_KIND, WedgeWitness
from complexes.nonface import Verdict
from complexes.simplicial import SimplicialComplex, normalize
from series.growth import GrowthClass
from series.polynomial import IntPolynomial
from series.rational import RationalFunction
from utils.deduplication import face_key
from utils.errors import InputFormatError


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from exc


def dumps(value: Any, compact: bool = False) -> str:
    if compact:
        return json.dumps(value, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(value, indent=2, ensure_ascii=False)


def _require(data: Any, key: str, kind: type, what: str):
    if not isinstance(data, dict):
        raise InputFormatError(f"{what} must be a JSON object")
    if key not in data:
        raise InputFormatError(f'{what} is missing "{key}"')
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InputFormatError(f'"{key}" of {what} must be {kind.__name__}')
    return value


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in value):
        raise InputFormatError(f"{what} must be a list of integers")
    return value


# Complexes

def complex_to_dict(K: SimplicialComplex) -> dict:
    return {"m": K.m, "facets": [list(f) for f in K.sorted_facets()]}


def parse_complex(data: Any, allow_ghost_vertices: bool = False) -> SimplicialComplex:
    """
    Raises:
        InputFormatError: not of the form {"m": int, "facets": [[int, ...], ...]}
        VertexOutOfRange, GhostVertex: as for normalize
    """
    m = _require(data, "m", int, "complex")
    facets = _require(data, "facets", list, "complex")
    for facet in facets:
        if not isinstance(facet, list):
            raise InputFormatError("every facet must be a list of vertices")
    return normalize(facets, m, allow_ghost_vertices=allow_ghost_vertices)


def census_record(K: SimplicialComplex, verdict: Verdict) -> dict:
    return {"complex": complex_to_dict(K), "verdict": verdict.kind.value}


# Certificates

def decomposition_to_dict(decomposition: JoinDecomposition) -> dict:
    return {
        "m": decomposition.m,
        "simplex": list(face_key(decomposition.simplex_vertices)),
        "boundaries": [list(face_key(f)) for f in decomposition.boundary_factors],
    }


def parse_decomposition(data: Any) -> JoinDecomposition:
    simplex = _int_list(_require(data, "simplex", list, "decomposition"), '"simplex"')
    boundaries = _require(data, "boundaries", list, "decomposition")
    factors = tuple(frozenset(_int_list(b, "a boundary factor")) for b in boundaries)
    if "m" in data:
        m = _require(data, "m", int, "decomposition")
    else:
        m = max([0, *simplex, *(v for f in factors for v in f)])
    return JoinDecomposition(
        m=m,
        simplex_vertices=frozenset(simplex),
        boundary_factors=tuple(sorted(factors, key=face_key)),
    )


def sphere_product_to_dict(sp: SphereProduct) -> dict:
    return {
        "disk": sp.disk_dimension,
        "spheres": list(sp.sphere_dimensions),
        "type": str(sp),
    }


def witness_to_dict(witness: WedgeWitness) -> dict:
    return {
        "I": list(face_key(witness.I)),
        "J": list(face_key(witness.J)),
        "k": witness.k,
        "t": witness.t,
        "r": witness.r,
        "spheres": list(witness.sphere_dims),
        "bound": {"lhs": witness.bound.lhs, "rhs": witness.bound.rhs},
        "retract": RETRACT_KIND,
    }


# Series

def rational_to_dict(f: RationalFunction) -> dict:
    return {"num": list(f.numerator.coefficients) or [0], "den": list(f.denominator.coefficients)}


def parse_rational(data: Any) -> RationalFunction:
    """
    Raises:
        InputFormatError: malformed object or zero denominator
        NonUnitConstantTerm: the reduced denominator does not start with 1
    """
    num = _int_list(_require(data, "num", list, "rational function"), '"num"')
    den = _int_list(_require(data, "den", list, "rational function"), '"den"')
    if not any(den):
        raise InputFormatError("denominator is zero")
    return RationalFunction.from_polynomials(IntPolynomial(num), IntPolynomial(den))



def growth_to_dict(growth: GrowthClass) -> dict:
    result = {"kind": growth.kind.value, "evidence": growth.evidence}
    if growth.poles_inside is not None:
        result["poles_inside"] = growth.poles_inside
    if growth.pole_bracket is not None:
        result["pole_bracket"] = [str(x) for x in growth.pole_bracket]
    if growth.certificate is not None:
        result["certificate"] = rational_to_dict(growth.certificate)
    if growth.attached is not None:
        result["attached"] = growth_to_dict(growth.attached)
    return result
