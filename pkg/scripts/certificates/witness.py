"""
Wedge Retract Witnesses

For a hyperbolic K take the first intersecting pair of minimal non-faces

    I = {v_1..v_k, w_1..w_t},  J = {u_1..u_r, w_1..w_t}.

The full subcomplexes K_I and K_J are simplex boundaries, so
Z_{K_I} = S^{2(k+t)-1} and Z_{K_J} = S^{2(r+t)-1} retract off Z_K, and
rationally their wedge does too: any attaching map would have to be stably
trivial, which only happens from degree 4(2k+3t+r-1)-1 on, beyond the top
cell 2(k+r+t)-1 of Z_{K_{I u J}}.

The certificate is a rational retract; nothing is claimed integrally.
"""

from dataclasses import dataclass
from typing import NamedTuple

from complexes.nonface import classify
from complexes.simplicial import FaceSet, SimplicialComplex, boundary_simplex, full_subcomplex
from utils.errors import NotHyperbolic, ParameterOutOfRange, ReconstructionMismatch
from utils.log import get_logger

logger = get_logger("witness")

RETRACT_KIND = "rational"


class HiltonMilnorBound(NamedTuple):
    lhs: int
    rhs: int
    ok: bool


@dataclass(frozen=True)
class WedgeWitness:
    I: FaceSet
    J: FaceSet
    k: int
    t: int
    r: int
    sphere_dims: tuple[int, int]
    ambient_subset: FaceSet
    bound: HiltonMilnorBound

    def __str__(self) -> str:
        a, b = self.sphere_dims
        return f"S^{a} v S^{b}"


def hilton_milnor_bound(k: int, t: int, r: int) -> HiltonMilnorBound:
    """
    lhs = 2(k+r+t)-1, the top cell of Z_K on the vertex set I u J;
    rhs = 4(2k+3t+r-1)-1, the least degree of a stably trivial rational class.

    Raises:
        ParameterOutOfRange: any of k, t, r is below 1
    """
    if min(k, t, r) < 1:
        raise ParameterOutOfRange(f"k, t, r must all be >= 1, got ({k}, {t}, {r})")
    lhs = 2 * (k + r + t) - 1
    rhs = 4 * (2 * k + 3 * t + r - 1) - 1
    return HiltonMilnorBound(lhs=lhs, rhs=rhs, ok=lhs < rhs)


def _is_boundary_of_simplex(K: SimplicialComplex, sigma: FaceSet) -> bool:
    return full_subcomplex(K, sigma).complex == boundary_simplex(len(sigma))


def wedge_retract_witness(K: SimplicialComplex) -> WedgeWitness:
    """
    Certificate for the first intersecting pair (I, J) in lexicographic order.

    Raises:
        NotHyperbolic: the minimal non-faces are pairwise disjoint
    """
    verdict = classify(K)
    if verdict.is_elliptic:
        raise NotHyperbolic(f"{K} is elliptic; there is no wedge retract")

    I, J = verdict.profile.pair()
    k, t, r = len(I - J), len(I & J), len(J - I)

    bound = hilton_milnor_bound(k, t, r)
    witness = WedgeWitness(
        I=I,
        J=J,
        k=k,
        t=t,
        r=r,
        sphere_dims=(2 * (k + t) - 1, 2 * (r + t) - 1),
        ambient_subset=I | J,
        bound=bound,
    )

    for sigma in (I, J):
        if not _is_boundary_of_simplex(K, sigma):
            raise ReconstructionMismatch(f"K restricted to {sorted(sigma)} is not a simplex boundary")
    if not bound.ok:
        raise ReconstructionMismatch(f"dimension bound fails for (k, t, r) = ({k}, {t}, {r})")

    logger.debug("%s retracts %s", K, witness)
    return witness
