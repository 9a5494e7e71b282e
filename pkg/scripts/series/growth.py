"""
Growth Classification

A rational generating function with integer coefficients grows exponentially
exactly when its reduced denominator has a root strictly inside the unit
disk. The verdict is reached without floating point:

1. cyclotomic factors (roots of unity, i.e. poles on the unit circle) are
   split off through sympy's exact factorization over ZZ;
2. the rest is located against the unit circle in two parts.

   The self-reciprocal factor g = gcd(p, p*), p* = t^n p(1/t), holds every
   root on the circle and every pair z, 1/z. Apart from t = 1 and t = -1 it
   is t^k H(t + 1/t); roots on the circle are the real roots of H in
   (-2, 2), counted exactly by sympy, and the other roots of g split evenly
   between inside and outside.

   The cofactor p / g is counted with the Schur-Cohn reduction

       T p = p(0) * p - lc(p) * p*

   which keeps the count when |p(0)| > |lc(p)| and complements it (n - count)
   when |p(0)| < |lc(p)|. A singular step (|p(0)| = |lc(p)|) is made regular
   by multiplying p by (t - c), a root outside the disk whose inverse is not
   a root of p, so the chain stays coprime to its reciprocal. After
   SCHUR_COHN_MAX_DEFLATIONS such steps BoundaryRootUnresolved is raised.

Non-cyclotomic roots on the circle (Salem factors such as Lehmer's
polynomial) therefore never block a verdict: with den(0) = 1 they always come
with a reciprocal root inside the disk.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from series.polynomial import IntPolynomial
from series.rational import RationalFunction
from utils.config import GROWTH_BRACKET_STEPS, SCHUR_COHN_MAX_DEFLATIONS
from utils.errors import BoundaryRootUnresolved, ParameterOutOfRange
from utils.log import get_logger

logger = get_logger("growth")


class GrowthKind(Enum):
    SUB_EXPONENTIAL = "sub-exponential"
    EXPONENTIAL = "exponential"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class GrowthClass:
    kind: GrowthKind
    evidence: str
    poles_inside: Optional[int] = None
    pole_bracket: Optional[tuple[Fraction, Fraction]] = None
    certificate: Optional[RationalFunction] = None
    attached: Optional["GrowthClass"] = None

    @property
    def is_exponential(self) -> bool:
        return self.kind is GrowthKind.EXPONENTIAL


@dataclass(frozen=True)
class CyclotomicSplit:
    residual: IntPolynomial
    unit_circle_poles: int  # with multiplicity


def strip_cyclotomic(p: IntPolynomial) -> CyclotomicSplit:
    """Split p into its cyclotomic part and the residual factor."""
    if p.is_zero():
        raise ParameterOutOfRange("cannot factor the zero polynomial")
    if p.is_constant():
        return CyclotomicSplit(residual=p, unit_circle_poles=0)

    coeff, factors = p.to_sympy().factor_list()
    residual = IntPolynomial.constant(int(coeff))
    on_circle = 0
    for factor, exponent in factors:
        if factor.is_cyclotomic:
            on_circle += factor.degree() * exponent
        else:
            residual = residual * IntPolynomial.from_sympy(factor) ** exponent
    return CyclotomicSplit(residual=residual, unit_circle_poles=on_circle)


@dataclass(frozen=True)
class RootLocation:
    """Roots of a polynomial against the unit circle, with multiplicity."""

    inside: int
    on_circle: int
    outside: int


def _strip_zero_roots(p: IntPolynomial) -> tuple[int, IntPolynomial]:
    zeros = 0
    while p[zeros] == 0:
        zeros += 1
    return zeros, IntPolynomial(p.coefficients[zeros:])


def _trace_polynomial(g: IntPolynomial) -> IntPolynomial:
    """H with g = t^k H(t + 1/t), for palindromic g of degree 2k."""
    k = g.degree // 2
    x = IntPolynomial([0, 1])
    previous, current = IntPolynomial.constant(2), x  # t^j + t^-j for j = 0, 1
    H = IntPolynomial.constant(g[k])
    for j in range(1, k + 1):
        H = H + current * g[k + j]
        previous, current = current, x * current - previous
    return H


def _self_reciprocal_location(g: IntPolynomial) -> RootLocation:
    """Location of the roots of g, where g and its reciprocal agree up to sign."""
    degree = g.degree
    on_circle = 0
    for root in (1, -1):
        factor = IntPolynomial([-root, 1])
        while g(root) == 0:
            g = g.divexact(factor)
            on_circle += 1

    if not g.is_constant():
        _, factors = _trace_polynomial(g).to_sympy().sqf_list()
        for factor, multiplicity in factors:
            # each real x in (-2, 2) is a conjugate pair t, 1/t on the circle
            on_circle += 2 * multiplicity * int(factor.count_roots(-2, 2))

    paired = (degree - on_circle) // 2
    return RootLocation(inside=paired, on_circle=on_circle, outside=paired)


def _schur_cohn_step(p: IntPolynomial) -> IntPolynomial:
    a0, an = p[0], p[p.degree]
    return (p * a0 - p.reciprocal() * an).primitive()


def _outside_factor(p: IntPolynomial) -> IntPolynomial:
    """t - c for the smallest c >= 2 with p(1/c) != 0."""
    c = 2
    while p(Fraction(1, c)) == 0:
        c += 1
    return IntPolynomial([-c, 1])


def _schur_cohn_count(p: IntPolynomial, max_deflations: int) -> int:
    """Roots of p inside the disk, for p coprime to its reciprocal."""
    # count(p) = base + sign * count(current)
    base, sign = 0, 1
    deflations = 0
    current = p.primitive()

    while not current.is_constant():
        n = current.degree
        delta = current[0] ** 2 - current[n] ** 2
        if delta == 0:
            if deflations >= max_deflations:
                raise BoundaryRootUnresolved(
                    f"Schur-Cohn chain for {p} stays singular after {deflations} deflations"
                )
            deflations += 1
            current = current * _outside_factor(current)
            continue
        if delta < 0:
            base += sign * n
            sign = -sign
        current = _schur_cohn_step(current)

    if deflations:
        logger.debug("%s: %d singular step(s) deflated", p, deflations)
    return base


def locate_unit_disk_roots(p: IntPolynomial, max_deflations: int = SCHUR_COHN_MAX_DEFLATIONS) -> RootLocation:
    """
    Roots of p inside, on and outside the unit circle, with multiplicity.

    Raises:
        BoundaryRootUnresolved: the Schur-Cohn chain of the part coprime to
            its reciprocal stays singular past max_deflations
    """
    if p.is_zero():
        raise ParameterOutOfRange("the zero polynomial has no root count")

    zeros, p = _strip_zero_roots(p.primitive())
    reciprocal_part = p.gcd(p.reciprocal())
    if reciprocal_part.is_constant():
        paired = RootLocation(inside=0, on_circle=0, outside=0)
        rest = p
    else:
        paired = _self_reciprocal_location(reciprocal_part)
        rest = p.divexact(reciprocal_part)

    inside = _schur_cohn_count(rest, max_deflations)
    return RootLocation(
        inside=zeros + paired.inside + inside,
        on_circle=paired.on_circle,
        outside=paired.outside + rest.degree - inside,
    )


def count_inside_unit_disk(p: IntPolynomial, max_deflations: int = SCHUR_COHN_MAX_DEFLATIONS) -> int:
    """Number of roots of p with |z| < 1, with multiplicity."""
    return locate_unit_disk_roots(p, max_deflations).inside


def locate_radius_roots(p: IntPolynomial, radius: Fraction) -> RootLocation:
    """Roots of p against the circle |z| = radius, for a positive rational radius."""
    radius = Fraction(radius)
    if radius <= 0:
        raise ParameterOutOfRange(f"radius must be positive, got {radius}")
    return locate_unit_disk_roots(p.scaled(radius))


def count_inside_radius(p: IntPolynomial, radius: Fraction) -> int:
    """Number of roots of p with |z| < radius, for a positive rational radius."""
    return locate_radius_roots(p, radius).inside


def smallest_pole_bracket(p: IntPolynomial, steps: int = GROWTH_BRACKET_STEPS) -> tuple[Fraction, Fraction]:
    """
    Rational [lo, hi] holding the smallest root modulus of p, which must have
    a root inside the unit disk. When a bisection circle carries a root and
    nothing lies strictly inside it, that radius is the smallest modulus and
    the bracket collapses to it.
    """
    lo, hi = Fraction(0), Fraction(1)
    for _ in range(steps):
        mid = (lo + hi) / 2
        location = locate_radius_roots(p, mid)
        if location.inside:
            hi = mid
        elif location.on_circle:
            return mid, mid
        else:
            lo = mid
    return lo, hi


def growth_classify(f: RationalFunction, bracket_steps: int = GROWTH_BRACKET_STEPS) -> GrowthClass:
    """
    Sub-exponential or exponential growth of the coefficients of f.

    Raises:
        ParameterOutOfRange: f is the zero function
        BoundaryRootUnresolved: the Schur-Cohn chain of the denominator stays
            singular past SCHUR_COHN_MAX_DEFLATIONS
    """
    if f.numerator.is_zero():
        raise ParameterOutOfRange("the zero series has no growth rate")

    split = strip_cyclotomic(f.denominator)
    inside = count_inside_unit_disk(split.residual)

    if inside == 0:
        if split.residual.is_constant():
            evidence = "all poles on unit circle"
        else:
            evidence = "no poles inside the unit disk"
        logger.info("%s: sub-exponential (%d pole(s) on the unit circle)", f, split.unit_circle_poles)
        return GrowthClass(
            kind=GrowthKind.SUB_EXPONENTIAL,
            evidence=evidence,
            poles_inside=0,
            certificate=f,
        )

    lo, hi = smallest_pole_bracket(split.residual, bracket_steps)
    logger.info("%s: exponential, smallest pole modulus in [%s, %s]", f, lo, hi)
    return GrowthClass(
        kind=GrowthKind.EXPONENTIAL,
        evidence=f"smallest pole modulus in [{lo}, {hi}]",
        poles_inside=inside,
        pole_bracket=(lo, hi),
        certificate=f,
    )


def empirical_ratio(coefficients: list[int]) -> Optional[Fraction]:
    """a_N / a_{N-1} of the last nonzero pair, a rough growth-rate estimate."""
    nonzero = [c for c in coefficients if c]
    if len(nonzero) < 2:
        return None
    return Fraction(abs(nonzero[-1]), abs(nonzero[-2]))
