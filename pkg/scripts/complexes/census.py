"""
Census of Small Complexes

Enumerates every labeled simplicial complex on exactly m vertices (no ghost
vertices), each paired with its verdict. The order is deterministic: faces
of size >= 2 are decided in size-then-lexicographic order, "absent" before
"present".

Counts for m = 1..5 are 1, 2, 9, 114, 6894. Adding the complexes on every
smaller vertex subset (and the void family) recovers the Dedekind numbers
3, 6, 20, 168, 7581.
"""

from itertools import combinations
from typing import Iterator

from complexes.nonface import Verdict, classify
from complexes.simplicial import SimplicialComplex, normalize
from utils.config import MAX_CENSUS_M
from utils.errors import CensusTooLarge, ParameterOutOfRange
from utils.log import get_logger

logger = get_logger("census")


def _mask(face) -> int:
    bits = 0
    for v in face:
        bits |= 1 << (v - 1)
    return bits


def _members(mask: int) -> list[int]:
    return [bit + 1 for bit in range(mask.bit_length()) if mask >> bit & 1]


def _candidates(m: int) -> list[int]:
    ground = range(1, m + 1)
    return [
        _mask(combo)
        for size in range(2, m + 1)
        for combo in combinations(ground, size)
    ]


def _closed_families(candidates: list[int], index: int, chosen: set) -> Iterator[frozenset]:
    if index == len(candidates):
        yield frozenset(chosen)
        return

    mask = candidates[index]
    yield from _closed_families(candidates, index + 1, chosen)

    boundary_present = all(
        (mask & ~(1 << bit)) in chosen
        for bit in range(mask.bit_length())
        if mask >> bit & 1
    )
    if boundary_present:
        chosen.add(mask)
        yield from _closed_families(candidates, index + 1, chosen)
        chosen.remove(mask)


def census_complexes(m: int, max_m: int = MAX_CENSUS_M) -> Iterator[SimplicialComplex]:
    """
    Every labeled complex on exactly m vertices.

    Raises:
        ParameterOutOfRange: m < 1
        CensusTooLarge: m exceeds max_m (itself capped at MAX_CENSUS_M)
    """
    limit = min(max_m, MAX_CENSUS_M)
    if m < 1:
        raise ParameterOutOfRange(f"census needs m >= 1, got {m}")
    if m > limit:
        raise CensusTooLarge(f"census is limited to m <= {limit}, got {m}")

    singletons = {1 << (v - 1) for v in range(1, m + 1)}
    count = 0
    for family in _closed_families(_candidates(m), 0, set(singletons)):
        faces = [_members(mask) for mask in family]
        count += 1
        yield normalize(faces, m)

    logger.info("enumerated %d complexes on %d vertices", count, m)


def census(m: int, max_m: int = MAX_CENSUS_M) -> Iterator[tuple[SimplicialComplex, Verdict]]:
    for K in census_complexes(m, max_m):
        yield K, classify(K)
