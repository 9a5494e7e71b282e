"""
Minimal Non-Faces and the Elliptic/Hyperbolic Verdict

Z_K is rationally elliptic exactly when the minimal non-faces of K are
pairwise disjoint; otherwise an intersecting pair (I, J) makes the wedge
S^{2|I|-1} v S^{2|J|-1} a rational retract and Z_K is hyperbolic.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

from complexes.simplicial import FaceSet, SimplicialComplex, ghost_vertices, is_face
from utils.deduplication import face_key
from utils.errors import NotHyperbolic, NotSimplyConnectedAssumptionViolated
from utils.log import get_logger

logger = get_logger("nonface")


class VerdictKind(Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class NonfaceProfile:
    mnfs: tuple  # of FaceSet, sorted lexicographically
    pairwise_disjoint: bool
    intersecting_pair: Optional[tuple[int, int]] = None

    def pair(self) -> Optional[tuple[FaceSet, FaceSet]]:
        if self.intersecting_pair is None:
            return None
        i, j = self.intersecting_pair
        return self.mnfs[i], self.mnfs[j]


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    profile: NonfaceProfile = field(repr=False)
    reason: str = ""

    @property
    def is_elliptic(self) -> bool:
        return self.kind is VerdictKind.ELLIPTIC


def _is_minimal_non_face(K: SimplicialComplex, sigma: FaceSet) -> bool:
    # Codimension-1 subsets suffice: faces are closed under taking subsets.
    if is_face(K, sigma):
        return False
    return all(is_face(K, sigma - {v}) for v in sigma)


def minimal_non_faces(K: SimplicialComplex) -> NonfaceProfile:
    """
    Inclusion-minimal non-faces, found size by size.

    Supersets of minimal non-faces already found are skipped. A minimal
    non-face has all codimension-1 subsets as faces, so no size beyond the
    largest facet plus one can occur.
    """
    largest = max(len(f) for f in K.facets)
    ground = list(range(1, K.m + 1))

    found: list[FaceSet] = []
    for size in range(1, min(K.m, largest + 1) + 1):
        for combo in combinations(ground, size):
            sigma = frozenset(combo)
            if any(mnf <= sigma for mnf in found):
                continue
            if _is_minimal_non_face(K, sigma):
                found.append(sigma)

    mnfs = tuple(sorted(found, key=face_key))

    intersecting = None
    for i, j in combinations(range(len(mnfs)), 2):
        if mnfs[i] & mnfs[j]:
            intersecting = (i, j)
            break

    return NonfaceProfile(
        mnfs=mnfs,
        pairwise_disjoint=intersecting is None,
        intersecting_pair=intersecting,
    )


def _require_simply_connected(K: SimplicialComplex):
    ghosts = ghost_vertices(K)
    if ghosts:
        raise NotSimplyConnectedAssumptionViolated(ghosts)


def classify(K: SimplicialComplex) -> Verdict:
    """
    Elliptic iff the minimal non-faces are pairwise disjoint.

    Raises:
        NotSimplyConnectedAssumptionViolated: K has ghost vertices
    """
    _require_simply_connected(K)
    profile = minimal_non_faces(K)

    if profile.pairwise_disjoint:
        reason = f"{len(profile.mnfs)} pairwise disjoint minimal non-faces"
        return Verdict(kind=VerdictKind.ELLIPTIC, profile=profile, reason=reason)

    I, J = profile.pair()
    reason = f"minimal non-faces {list(face_key(I))} and {list(face_key(J))} meet in {list(face_key(I & J))}"
    logger.debug("%s is hyperbolic: %s", K, reason)
    return Verdict(kind=VerdictKind.HYPERBOLIC, profile=profile, reason=reason)


def witness_pairs(profile: NonfaceProfile) -> list[tuple[FaceSet, FaceSet]]:
    """Every intersecting pair (I, J) of minimal non-faces, I before J, in lexicographic order."""
    mnfs = profile.mnfs
    return [
        (mnfs[i], mnfs[j])
        for i, j in combinations(range(len(mnfs)), 2)
        if mnfs[i] & mnfs[j]
    ]


def _minimal_unions(profile: NonfaceProfile) -> list[FaceSet]:
    # The minimal non-faces of K_S are those of K inside S, so K_S has an
    # intersecting pair iff S contains some union I | J.
    unions = {I | J for I, J in witness_pairs(profile)}
    minimal = [u for u in unions if not any(other < u for other in unions)]
    return sorted(minimal, key=face_key)


def is_in_A_m(K: SimplicialComplex) -> bool:
    """
    True iff K has an intersecting pair of minimal non-faces and no proper
    full subcomplex has one, i.e. every intersecting pair spans all m vertices.
    """
    profile = minimal_non_faces(K)
    pairs = witness_pairs(profile)
    if not pairs:
        return False
    ground = frozenset(range(1, K.m + 1))
    return all((I | J) == ground for I, J in pairs)


def minimal_witness_subset(K: SimplicialComplex) -> FaceSet:
    """
    Lexicographically smallest inclusion-minimal vertex set S whose full
    subcomplex keeps an intersecting pair; K_S lies in A_|S|.

    Raises:
        NotHyperbolic: the minimal non-faces are pairwise disjoint
    """
    verdict = classify(K)
    if verdict.is_elliptic:
        raise NotHyperbolic(f"{K} is elliptic; there is no witness subset")
    return _minimal_unions(verdict.profile)[0]


def descent_chain(K: SimplicialComplex) -> list[FaceSet]:
    """
    Remove one vertex at a time (largest removable label first) while an
    intersecting pair survives. The chain starts at {1..m} and ends at a
    vertex set whose full subcomplex lies in A_|S|.
    """
    verdict = classify(K)
    if verdict.is_elliptic:
        raise NotHyperbolic(f"{K} is elliptic; there is nothing to descend")

    unions = _minimal_unions(verdict.profile)
    current = frozenset(range(1, K.m + 1))
    chain = [current]
    while True:
        for v in sorted(current, reverse=True):
            smaller = current - {v}
            if any(u <= smaller for u in unions):
                current = smaller
                chain.append(current)
                break
        else:
            return chain
