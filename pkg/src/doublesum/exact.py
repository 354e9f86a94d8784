"""Exact scalar and polynomial arithmetic.

All values are :class:`fractions.Fraction`; integers are promoted on entry.
The serialized form of a rational is ``"num/den"`` (or ``"n"`` for integers).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def Q(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` literal to a Fraction.

    Floats are rejected: they would smuggle rounding into exact mode.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot make an exact rational from {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not s or any(c in s for c in ".eE_ "):
        raise ValueError(f"not a rational literal: {text!r}")
    num, sep, den = s.partition("/")
    try:
        if sep:
            d = int(den)
            if d == 0:
                raise ZeroDivisionError
            return Fraction(int(num), d)
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}") from None


def format_rational(value: RationalLike) -> str:
    v = Q(value)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


@lru_cache(maxsize=None)
def _binom_int(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) for integer ``n >= 0``; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n} (use gen_binomial)")
    return Fraction(_binom_int(n, k))


def gen_binomial(x: RationalLike, k: int) -> Fraction:
    """Generalized binomial ``x (x-1) ... (x-k+1) / k!`` for any rational ``x``."""
    if k < 0:
        raise ValueError(f"gen_binomial needs k >= 0, got {k}")
    x = Q(x)
    num = ONE
    for i in range(k):
        num *= x - i
    return num / factorial(k)


def binomial_any(n: int, k: int) -> Fraction:
    """C(n, k) for any integer ``n`` (negative upper argument allowed), zero for k < 0."""
    if k < 0:
        return ZERO
    if n >= 0:
        return binomial(n, k)
    return gen_binomial(n, k)


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return Fraction(_factorial(n))


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def kronecker_delta(i: int, j: int) -> Fraction:
    return ONE if i == j else ZERO


def sign(n: int) -> int:
    """(-1)**n for any integer n."""
    return -1 if n % 2 else 1


def qpow(base: RationalLike, e: int) -> Fraction:
    """Exact integer power; negative exponents require a nonzero base."""
    b = Q(base)
    if e < 0:
        if b == 0:
            raise ZeroDivisionError("zero to a negative power")
        return 1 / b ** (-e)
    return b**e


class Poly:
    """Univariate polynomial with rational coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, c: RationalLike) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, at: RationalLike) -> Fraction:
        a = Q(at)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def _lift(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other) -> "Poly":
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        out, base = Poly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])


def poly_from_values(points: Sequence[RationalLike], values: Sequence[RationalLike]) -> Poly:
    """Lagrange interpolation through distinct rational points."""
    if len(points) != len(values):
        raise ValueError("points and values differ in length")
    xs = [Q(p) for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must be distinct")
    out = Poly()
    for i, (xi, yi) in enumerate(zip(xs, values)):
        basis = Poly([1])
        denom = ONE
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom *= xi - xj
        out = out + basis * (Q(yi) / denom)
    return out
