"""
Simplicial Complexes

A complex is a ground set {1..m} plus its facets (maximal faces). Faces are
never stored: sigma is a face iff it lies inside some facet. Full face
enumeration is available on demand and is exponential in the facet sizes.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from utils.deduplication import deduplicate, face_key
from utils.errors import (
    BoundaryOfPoint,
    EmptyIndexSet,
    GhostVertex,
    InputFormatError,
    ParameterOutOfRange,
    VertexOutOfRange,
)

FaceSet = frozenset

EMPTY_FACE: FaceSet = frozenset()


@dataclass(frozen=True)
class SimplicialComplex:
    m: int
    facets: tuple  # of FaceSet, lexicographically sorted, pairwise incomparable

    @property
    def ground_set(self) -> FaceSet:
        return frozenset(range(1, self.m + 1))

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return [face_key(f) for f in self.facets if f]

    def __str__(self) -> str:
        body = " ".join("[" + ",".join(map(str, f)) + "]" for f in self.sorted_facets())
        return f"K(m={self.m}; {body or '{}'})"


@dataclass(frozen=True)
class FullSubcomplex:
    """K_I re-indexed to 1..|I|; labels[i - 1] is the original vertex of i."""
    complex: SimplicialComplex
    labels: tuple[int, ...]

    def relabel(self, face: Iterable[int]) -> FaceSet:
        """Map a face of the re-indexed complex back to original labels."""
        return frozenset(self.labels[v - 1] for v in face)


@dataclass(frozen=True)
class FVector:
    counts: tuple[int, ...]  # f_{-1}, f_0, ..., f_{n-1}

    @property
    def dimension(self) -> int:
        return len(self.counts) - 2

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, dim: int) -> int:
        """f_dim, with dim = -1 for the empty face."""
        index = dim + 1
        if 0 <= index < len(self.counts):
            return self.counts[index]
        return 0

    def as_polynomial(self) -> list[int]:
        """Coefficients of sum_i f_{i-1} t^i."""
        return list(self.counts)


def _build(m: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Assemble a complex from trusted faces; ghost vertices are not checked."""
    facets = deduplicate(faces)
    if not any(facets):
        facets = (EMPTY_FACE,)
    return SimplicialComplex(m=m, facets=facets)


def normalize(
    raw_facets: Iterable[Iterable[int]],
    m: int,
    allow_ghost_vertices: bool = False,
) -> SimplicialComplex:
    """
    Build a complex from raw facet lists.

    Duplicates and dominated faces are dropped. Every vertex must lie in
    1..m, and unless allow_ghost_vertices is set every vertex must be covered
    by some facet.

    Raises:
        InputFormatError: m is not a non-negative integer
        VertexOutOfRange: a facet mentions a vertex outside 1..m
        GhostVertex: a vertex of 1..m lies in no facet
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise InputFormatError(f"vertex count must be a non-negative integer, got {m!r}")

    cleaned = []
    for raw in raw_facets:
        face = []
        for v in raw:
            if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= m:
                raise VertexOutOfRange(v, m)
            face.append(v)
        cleaned.append(face)

    complex_ = _build(m, cleaned)

    if not allow_ghost_vertices:
        ghosts = ghost_vertices(complex_)
        if ghosts:
            raise GhostVertex(ghosts[0])

    return complex_


def is_face(K: SimplicialComplex, sigma: Iterable[int]) -> bool:
    sigma = frozenset(sigma)
    return any(sigma <= facet for facet in K.facets)


def ghost_vertices(K: SimplicialComplex) -> list[int]:
    """Ground-set vertices that are not faces (size-1 minimal non-faces)."""
    covered = frozenset().union(*K.facets)
    return [v for v in range(1, K.m + 1) if v not in covered]


def faces(K: SimplicialComplex) -> list[FaceSet]:
    """Every face, empty face included, ordered by size then lexicographically."""
    found = {EMPTY_FACE}
    for facet in K.facets:
        ordered = sorted(facet)
        for size in range(1, len(ordered) + 1):
            found.update(frozenset(c) for c in combinations(ordered, size))
    return sorted(found, key=lambda f: (len(f), face_key(f)))


def full_subcomplex(K: SimplicialComplex, I: Iterable[int]) -> FullSubcomplex:
    """
    The full subcomplex K_I: all faces of K contained in I.

    The result is re-indexed to 1..|I| in increasing label order.
    """
    index_set = frozenset(I)
    if not index_set:
        raise EmptyIndexSet("full subcomplex needs a nonempty vertex set")
    for v in index_set:
        if not 1 <= v <= K.m:
            raise VertexOutOfRange(v, K.m)

    labels = tuple(sorted(index_set))
    position = {v: i + 1 for i, v in enumerate(labels)}
    restricted = [[position[v] for v in facet & index_set] for facet in K.facets]
    return FullSubcomplex(complex=_build(len(labels), restricted), labels=labels)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """K * L on m_K + m_L vertices; vertices of L are shifted by m_K."""
    shift = K.m
    joined = [
        set(F) | {v + shift for v in G}
        for F in K.facets
        for G in L.facets
    ]
    return _build(K.m + L.m, joined)


def simplex(a: int) -> SimplicialComplex:
    """The full simplex on a vertices (dimension a - 1)."""
    if a < 1:
        raise ParameterOutOfRange(f"simplex needs at least one vertex, got {a}")
    return SimplicialComplex(m=a, facets=(frozenset(range(1, a + 1)),))


def boundary_simplex(a: int) -> SimplicialComplex:
    """All (a-1)-subsets of {1..a}: the boundary of the (a-1)-simplex."""
    if a == 1:
        raise BoundaryOfPoint("the boundary of a point has a ghost vertex")
    if a < 1:
        raise ParameterOutOfRange(f"boundary_simplex needs at least two vertices, got {a}")
    ground = range(1, a + 1)
    return _build(a, (frozenset(c) for c in combinations(ground, a - 1)))


def empty_complex() -> SimplicialComplex:
    """The complex on zero vertices; its only face is the empty face."""
    return SimplicialComplex(m=0, facets=(EMPTY_FACE,))


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Join with a point; the apex is vertex m + 1."""
    return join(K, simplex(1))


def relabel(K: SimplicialComplex, labels: Iterable[int], m: int) -> SimplicialComplex:
    """Send vertex i of K to labels[i - 1] inside a ground set of size m."""
    labels = tuple(labels)
    if len(labels) != K.m:
        raise ValueError(f"need {K.m} labels, got {len(labels)}")
    return _build(m, ([labels[v - 1] for v in facet] for facet in K.facets))


def f_vector(K: SimplicialComplex) -> FVector:
    top = max(len(f) for f in K.facets)
    counts = [0] * (top + 1)
    for face in faces(K):
        counts[len(face)] += 1
    return FVector(counts=tuple(counts))
