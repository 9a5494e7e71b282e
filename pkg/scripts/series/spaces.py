"""
Hilbert-Poincare Series of the Spaces

Closed forms for Z_K, its loop spaces, the Davis-Januszkiewicz space DJ(K)
and their loop spaces, all over Q with t marking homological degree:

    Z_K      prod (1 + t^d)                 d over the sphere dimensions
    Omega    prod 1 / (1 - t^(d-1))          Omega S^d has one class in degree d-1
    L        prod (1 + t^d) / (1 - t^(d-1))  L S^d = S^d x Omega S^d rationally
    DJ(K)    sum_sigma t^(2|sigma|) / (1 - t^2)^|sigma|
    Omega DJ (1 + t)^m * Omega Z_K           Omega DJ(K) = Omega Z_K x T^m

The free loop series of DJ(K) is only an upper bound: it is the E_2 page of
the Serre spectral sequence and differentials are not computed.
"""

from collections import Counter

from certificates.decomposition import (
    SphereProduct,
    dual_simplex_dimensions,
    is_product_of_simplices_polytope,
    join_decompose,
    moment_angle_type,
)
from certificates.witness import RETRACT_KIND, wedge_retract_witness
from complexes.nonface import classify
from complexes.simplicial import SimplicialComplex, f_vector
from series.growth import GrowthClass, GrowthKind, growth_classify
from series.polynomial import IntPolynomial
from series.rational import RationalFunction
from utils.errors import ParameterOutOfRange
from utils.log import get_logger

logger = get_logger("series")

ONE_PLUS_T = IntPolynomial.one_plus_t_pow(1)
ONE_MINUS_T_SQUARED = IntPolynomial.one_minus_t_pow(2)


def _grouped(dimensions) -> list[tuple[int, int]]:
    return sorted(Counter(dimensions).items())


def _check_loopable(sp: SphereProduct):
    for d in sp.sphere_dimensions:
        if d < 3:
            raise ParameterOutOfRange(f"sphere dimension {d} < 3 has no polynomial loop homology")


def zk_series(sp: SphereProduct) -> RationalFunction:
    return RationalFunction(
        [(IntPolynomial.one_plus_t_pow(d), n) for d, n in _grouped(sp.sphere_dimensions)]
    )


def loop_zk_series(sp: SphereProduct) -> RationalFunction:
    """
    prod 1/(1 - t^(d-1)), the based loop space Omega Z_K.

    Raises:
        ParameterOutOfRange: a sphere of dimension below 3
    """
    _check_loopable(sp)
    return RationalFunction(
        den_factors=[(IntPolynomial.one_minus_t_pow(d - 1), n) for d, n in _grouped(sp.sphere_dimensions)]
    )


def free_loop_zk_series(sp: SphereProduct) -> RationalFunction:
    """prod (1 + t^d)/(1 - t^(d-1)), the free loop space L Z_K."""
    _check_loopable(sp)
    grouped = _grouped(sp.sphere_dimensions)
    return RationalFunction(
        [(IntPolynomial.one_plus_t_pow(d), n) for d, n in grouped],
        [(IntPolynomial.one_minus_t_pow(d - 1), n) for d, n in grouped],
    )


def rational_homotopy_series(sp: SphereProduct) -> RationalFunction:
    """sum t^d: one rational homotopy class per odd sphere, nothing else."""
    total = IntPolynomial()
    for d in sp.sphere_dimensions:
        total = total + IntPolynomial.monomial(d)
    return RationalFunction.from_polynomials(total)


def face_ring_series(K: SimplicialComplex) -> RationalFunction:
    """
    Hilbert series of the Stanley-Reisner ring with generators in degree 2,
    i.e. H^*(DJ(K); Q), over the common denominator (1 - t^2)^n where n is
    the largest face size.
    """
    f = f_vector(K)
    n = f.dimension + 1
    numerator = IntPolynomial()
    for i in range(n + 1):
        numerator = numerator + IntPolynomial.monomial(2 * i, f[i - 1]) * ONE_MINUS_T_SQUARED ** (n - i)
    return RationalFunction([(numerator, 1)], [(ONE_MINUS_T_SQUARED, n)])


def loop_dj_series(K: SimplicialComplex) -> RationalFunction:
    """
    (1 + t)^m * loop_zk_series.

    Raises:
        NotElliptic: K is hyperbolic
    """
    return loop_partial_quotient_series(K, K.m)


def loop_partial_quotient_series(K: SimplicialComplex, q: int) -> RationalFunction:
    """
    Omega(ET^m x_{T^q} Z_K) = Omega Z_K x T^q for a coordinate subtorus T^q;
    q = 0 gives Omega Z_K and q = m gives Omega DJ(K).

    Raises:
        ParameterOutOfRange: q outside 0..m
        NotElliptic: K is hyperbolic
    """
    if not 0 <= q <= K.m:
        raise ParameterOutOfRange(f"subtorus rank {q} is not in 0..{K.m}")
    torus = RationalFunction([(ONE_PLUS_T, q)])
    return torus * loop_zk_series(moment_angle_type(K))


def free_loop_dj_upper_series(K: SimplicialComplex) -> RationalFunction:
    """
    Coefficientwise upper bound for the free loop space L DJ(K): the Serre
    E_2 page polynomial (x) exterior (x) Stanley-Reisner.

    Raises:
        NotElliptic: K is hyperbolic
    """
    return face_ring_series(K) * loop_dj_series(K)


def free_loop_cp_infty_power_series(m: int) -> RationalFunction:
    """L(CP^inf)^m = (CP^inf)^m x (S^1)^m: (1 + t)^m / (1 - t^2)^m."""
    if m < 0:
        raise ParameterOutOfRange(f"m must be >= 0, got {m}")
    return RationalFunction([(ONE_PLUS_T, m)], [(ONE_MINUS_T_SQUARED, m)])


def loop_zk_growth(K: SimplicialComplex) -> GrowthClass:
    """
    Growth of the rational homology of L Z_K: sub-exponential exactly when
    K is elliptic. For hyperbolic K the evidence is the wedge retract.
    """
    verdict = classify(K)
    if verdict.is_elliptic:
        return growth_classify(free_loop_zk_series(moment_angle_type(K)))

    witness = wedge_retract_witness(K)
    return GrowthClass(
        kind=GrowthKind.EXPONENTIAL,
        evidence=f"{witness} is a {RETRACT_KIND} retract of Z_K",
    )


def hochschild_growth_verdict(K: SimplicialComplex) -> GrowthClass:
    """
    Growth of the Hochschild homology of the face ring of K, read off the
    free loop space L DJ(K).

    Elliptic K: sub-exponential, certified by free_loop_dj_upper_series, a
    rational function with every pole on the unit circle. Hyperbolic K: no
    closed form is known, the verdict is UNDETERMINED and the exponential
    L Z_K verdict is attached.
    """
    verdict = classify(K)
    if not verdict.is_elliptic:
        attached = loop_zk_growth(K)
        logger.info("%s: hyperbolic, L DJ(K) growth left undetermined", K)
        return GrowthClass(
            kind=GrowthKind.UNDETERMINED,
            evidence="L DJ(K) may have exponential growth; no closed form is available",
            attached=attached,
        )

    bound = free_loop_dj_upper_series(K)
    growth = growth_classify(bound)
    evidence = growth.evidence

    decomposition = join_decompose(K)
    # A join of simplex boundaries is the boundary of a simplicial polytope.
    if decomposition.boundary_factors and is_product_of_simplices_polytope(K, user_asserts_polytopal_sphere=True):
        simplices = " x ".join(f"Delta^{n}" for n in dual_simplex_dimensions(decomposition))
        evidence += f"; rational, dual polytope is the product of simplices {simplices}"

    return GrowthClass(
        kind=growth.kind,
        evidence=evidence,
        poles_inside=growth.poles_inside,
        certificate=bound,
    )
