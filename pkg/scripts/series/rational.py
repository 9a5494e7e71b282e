"""
Rational Functions

A RationalFunction keeps two views of one value:

- the factored form it was built from, e.g. (1+t^3)^2 / (1-t^2)^2, used for
  human-readable output;
- the reduced form numerator/denominator with gcd 1 and denominator(0) = 1,
  used for equality, JSON and power-series expansion.

Constructing a function whose reduced denominator has constant term other
than 1 raises NonUnitConstantTerm: its expansion would not be integral.
"""

from typing import Iterable, Optional

from series.polynomial import ONE, IntPolynomial
from utils.errors import NonUnitConstantTerm

Factor = tuple[IntPolynomial, int]


def _merge(factors: Iterable[Factor]) -> tuple[Factor, ...]:
    """Combine equal factors and drop units."""
    merged: dict[IntPolynomial, int] = {}
    for poly, exponent in factors:
        if exponent == 0 or poly == ONE:
            continue
        merged[poly] = merged.get(poly, 0) + exponent
    return tuple((p, e) for p, e in merged.items() if e)


def _product(factors: Iterable[Factor]) -> IntPolynomial:
    result = ONE
    for poly, exponent in factors:
        result = result * poly**exponent
    return result


def _reduce(numerator: IntPolynomial, denominator: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    if denominator.is_zero():
        raise ZeroDivisionError("zero denominator")
    g = numerator.gcd(denominator)
    if not g.is_zero() and g != ONE:
        numerator = numerator.divexact(g)
        denominator = denominator.divexact(g)

    lead = denominator[0]
    if lead < 0:
        numerator, denominator = -numerator, -denominator
        lead = -lead
    if lead != 1:
        raise NonUnitConstantTerm(
            f"reduced denominator {denominator} has constant term {lead}, not 1"
        )
    return numerator, denominator


class RationalFunction:
    __slots__ = ("numerator", "denominator", "num_factors", "den_factors")

    def __init__(self, num_factors: Iterable[Factor] = (), den_factors: Iterable[Factor] = ()):
        num_factors = _merge(num_factors)
        den_factors = _merge(den_factors)
        numerator, denominator = _reduce(_product(num_factors), _product(den_factors))
        object.__setattr__(self, "num_factors", num_factors)
        object.__setattr__(self, "den_factors", den_factors)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_polynomials(cls, numerator: IntPolynomial, denominator: IntPolynomial = ONE) -> "RationalFunction":
        return cls([(numerator, 1)], [(denominator, 1)])

    @classmethod
    def from_coefficients(cls, num: Iterable[int], den: Iterable[int] = (1,)) -> "RationalFunction":
        return cls.from_polynomials(IntPolynomial(num), IntPolynomial(den))

    # Comparison uses the reduced form only

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        return f"RationalFunction({self.numerator}, {self.denominator})"

    def __str__(self) -> str:
        return self.factored()

    # Arithmetic

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce(other)
        return RationalFunction(
            self.num_factors + other.num_factors,
            self.den_factors + other.den_factors,
        )

    __rmul__ = __mul__

    def __add__(self, other) -> "RationalFunction":
        other = _coerce(other)
        numerator = self.numerator * other.denominator + other.numerator * self.denominator
        return RationalFunction.from_polynomials(numerator, self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.num_factors + ((IntPolynomial.constant(-1), 1),), self.den_factors)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_coerce(other))

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        return RationalFunction(
            [(p, e * exponent) for p, e in self.num_factors],
            [(p, e * exponent) for p, e in self.den_factors],
        )

    # Rendering

    def factored(self) -> str:
        """e.g. "(1+t^3)^2/(1-t^2)^2"; numerator 1 renders as "1"."""
        num_text = _render_factors(self.num_factors, alone=not self.den_factors)
        if not self.den_factors:
            return num_text
        return f"{num_text}/{_render_factors(self.den_factors, alone=False)}"

    def reduced(self) -> str:
        if self.denominator == ONE:
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"


def _render_factor(poly: IntPolynomial, exponent: int, alone: bool) -> str:
    text = str(poly)
    multi_term = sum(1 for c in poly if c) > 1 or text.startswith("-")
    if multi_term and (exponent > 1 or not alone):
        text = f"({text})"
    return f"{text}^{exponent}" if exponent > 1 else text


def _render_factors(factors: tuple[Factor, ...], alone: bool) -> str:
    if not factors:
        return "1"
    alone = alone and len(factors) == 1
    return "*".join(_render_factor(p, e, alone) for p, e in factors)


def _coerce(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, int):
        return RationalFunction.from_polynomials(IntPolynomial.constant(value))
    if isinstance(value, IntPolynomial):
        return RationalFunction.from_polynomials(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational function")


def expand(f: RationalFunction, N: int) -> list[int]:
    """
    Coefficients a_0..a_N of the power series of f, exactly.

    From sum a_n t^n * den = num: a_n = num_n - sum_{k>=1} den_k a_{n-k}.
    """
    if N < 0:
        return []
    num, den = f.numerator, f.denominator
    top = den.degree if not den.is_zero() else 0
    coefficients: list[int] = []
    for n in range(N + 1):
        value = num[n]
        for k in range(1, min(n, top) + 1):
            value -= den[k] * coefficients[n - k]
        coefficients.append(value)
    return coefficients


def convolve(a: list[int], b: list[int], N: Optional[int] = None) -> list[int]:
    """Truncated Cauchy product of two coefficient lists."""
    if N is None:
        N = min(len(a), len(b)) - 1
    return [
        sum(a[i] * b[n - i] for i in range(n + 1) if i < len(a) and n - i < len(b))
        for n in range(N + 1)
    ]
