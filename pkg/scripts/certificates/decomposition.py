"""
Join Decompositions

An elliptic K (pairwise disjoint minimal non-faces) is the join of the
simplex on the vertices outside every minimal non-face with the boundary of
the simplex on each minimal non-face. Correspondingly Z_K is the product of
a disk D^{2a} with one odd sphere S^{2|sigma|-1} per minimal non-face sigma.
"""

from collections import Counter
from dataclasses import dataclass

from complexes.nonface import classify
from complexes.simplicial import (
    FaceSet,
    SimplicialComplex,
    boundary_simplex,
    empty_complex,
    join,
    relabel,
    simplex,
)
from utils.deduplication import face_key
from utils.errors import AssertionRequired, NotElliptic, ReconstructionMismatch
from utils.log import get_logger

logger = get_logger("decomposition")


@dataclass(frozen=True)
class JoinDecomposition:
    m: int
    simplex_vertices: FaceSet
    boundary_factors: tuple  # of FaceSet, each of size >= 2, lexicographic

    def join_order(self) -> tuple[int, ...]:
        """Original labels in the order the factors are joined."""
        order = list(face_key(self.simplex_vertices))
        for factor in self.boundary_factors:
            order.extend(face_key(factor))
        return tuple(order)

    def rebuild(self) -> SimplicialComplex:
        """Replay the joins and map the result back to the original labels."""
        a = len(self.simplex_vertices)
        result = simplex(a) if a else empty_complex()
        for factor in self.boundary_factors:
            result = join(result, boundary_simplex(len(factor)))
        return relabel(result, self.join_order(), self.m)


@dataclass(frozen=True)
class SphereProduct:
    disk_dimension: int
    sphere_dimensions: tuple[int, ...]  # odd, >= 3, ascending

    @property
    def dimension(self) -> int:
        """Dimension of the product D^{2a} x prod S^d."""
        return self.disk_dimension + sum(self.sphere_dimensions)

    @property
    def vertex_count(self) -> int:
        """m, recovered from 2a + sum(d + 1) = 2m."""
        return (self.disk_dimension + sum(d + 1 for d in self.sphere_dimensions)) // 2

    def __str__(self) -> str:
        parts = []
        if self.disk_dimension:
            parts.append(f"D^{self.disk_dimension}")
        for dim, count in sorted(Counter(self.sphere_dimensions).items()):
            parts.append(f"(S^{dim})^{count}" if count > 1 else f"S^{dim}")
        return " x ".join(parts) if parts else "pt"

    def homotopy_type(self) -> str:
        """Rational homotopy type; the disk is contractible."""
        spheres = SphereProduct(0, self.sphere_dimensions)
        return str(spheres)


def join_decompose(K: SimplicialComplex) -> JoinDecomposition:
    """
    Split an elliptic K into its simplex part and boundary factors.

    The reconstruction is rebuilt and compared facet by facet before the
    decomposition is returned.

    Raises:
        NotElliptic: K has an intersecting pair of minimal non-faces
        ReconstructionMismatch: the rebuilt join differs from K
    """
    verdict = classify(K)
    if not verdict.is_elliptic:
        raise NotElliptic(f"{K} is hyperbolic: {verdict.reason}")

    factors = verdict.profile.mnfs
    covered = frozenset().union(*factors)
    decomposition = JoinDecomposition(
        m=K.m,
        simplex_vertices=K.ground_set - covered,
        boundary_factors=factors,
    )

    rebuilt = decomposition.rebuild()
    if rebuilt != K:
        raise ReconstructionMismatch(f"join replay gave {rebuilt}, expected {K}")

    logger.debug("%s = simplex %s * %d boundaries", K, face_key(decomposition.simplex_vertices), len(factors))
    return decomposition


def moment_angle_type(K: SimplicialComplex) -> SphereProduct:
    """Z_K = D^{2a} x prod S^{2|sigma|-1}; raises NotElliptic for hyperbolic K."""
    decomposition = join_decompose(K)
    return SphereProduct(
        disk_dimension=2 * len(decomposition.simplex_vertices),
        sphere_dimensions=tuple(sorted(2 * len(f) - 1 for f in decomposition.boundary_factors)),
    )


def dual_simplex_dimensions(decomposition: JoinDecomposition) -> list[int]:
    """Dimensions of the simplices whose product is the dual simple polytope."""
    return [len(factor) - 1 for factor in decomposition.boundary_factors]


def is_product_of_simplices_polytope(K: SimplicialComplex, user_asserts_polytopal_sphere: bool) -> bool:
    """
    For a polytopal sphere K, whether the dual simple polytope is a product
    of simplices, i.e. whether K is a join of simplex boundaries only.

    Sphereness is taken on the caller's word, never checked.

    Raises:
        AssertionRequired: the caller did not assert that K is a polytopal sphere
    """
    if not user_asserts_polytopal_sphere:
        raise AssertionRequired("K must be asserted to be a polytopal sphere")

    if not classify(K).is_elliptic:
        return False
    return not join_decompose(K).simplex_vertices
