"""
Integer Polynomials

IntPolynomial is an immutable coefficient tuple (index = degree in t) with
trailing zeros trimmed. Multiplication, exact quotients and gcds go through
sympy's dense polynomials over ZZ.
"""

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from sympy import Poly, Rational, Symbol, ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

from utils.errors import InexactDivision

T = Symbol("t")

ZERO_DEGREE = float("-inf")


def _trim(coefficients: Iterable[int]) -> tuple[int, ...]:
    coeffs = [int(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        object.__setattr__(self, "coefficients", _trim(coefficients))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # Constructors

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [c])

    @classmethod
    def one_minus_t_pow(cls, k: int) -> "IntPolynomial":
        """1 - t^k"""
        return cls([1] + [0] * (k - 1) + [-1])

    @classmethod
    def one_plus_t_pow(cls, k: int) -> "IntPolynomial":
        """1 + t^k"""
        return cls([1] + [0] * (k - 1) + [1])

    # sympy bridge

    def to_sympy(self) -> Poly:
        rep = list(reversed(self.coefficients)) or [0]
        return Poly.from_list(rep, T, domain=ZZ)

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPolynomial":
        coeffs = []
        for c in reversed(poly.all_coeffs()):
            value = Rational(c)
            if value.q != 1:
                raise InexactDivision(f"non-integral coefficient {value}")
            coeffs.append(int(value.p))
        return cls(coeffs)

    # Basic properties

    @property
    def degree(self):
        return len(self.coefficients) - 1 if self.coefficients else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += sign + body
        return text

    # Arithmetic

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __add__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        size = max(len(self), len(other))
        return IntPolynomial(self[k] + other[k] for k in range(size))

    __radd__ = __add__

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        return IntPolynomial.from_sympy(self.to_sympy() * other.to_sympy())

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return IntPolynomial.from_sympy(self.to_sympy() ** exponent)

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """
        Exact quotient in ZZ[t].

        Raises:
            InexactDivision: other does not divide self over the integers
        """
        other = _coerce(other)
        if other.is_zero():
            raise InexactDivision("division by the zero polynomial")
        try:
            quotient = self.to_sympy().exquo(other.to_sympy())
        except ExactQuotientFailed as exc:
            raise InexactDivision(f"({self}) is not divisible by ({other})") from exc
        return IntPolynomial.from_sympy(quotient)

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        """gcd in ZZ[t], integer content included."""
        other = _coerce(other)
        return IntPolynomial.from_sympy(self.to_sympy().gcd(other.to_sympy()))

    def content(self) -> int:
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial(c // g for c in self.coefficients)

    def __call__(self, x: Union[int, Fraction]):
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def reciprocal(self) -> "IntPolynomial":
        """t^deg p(1/t): the coefficients reversed."""
        return IntPolynomial(reversed(self.coefficients))

    def scaled(self, radius: Fraction) -> "IntPolynomial":
        """Integer polynomial with the roots of p divided by radius: b^n p(a t / b) for radius a/b."""
        radius = Fraction(radius)
        a, b = radius.numerator, radius.denominator
        n = len(self.coefficients) - 1
        return IntPolynomial(c * a**k * b ** (n - k) for k, c in enumerate(self.coefficients))


def _coerce(value) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as an integer polynomial")


ONE = IntPolynomial.constant(1)
ZERO = IntPolynomial()
