"""Evaluators for double sums whose inner sum is an incomplete binomial row.

Everything here is exact except :func:`hypergeometric_2f1_check`, which is
the single floating-point routine in the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import ONE, ZERO, Q, RationalLike, binomial, sign


class SingularParameterError(ValueError):
    """A closed form was asked for at a parameter value where it divides by zero."""


class OutOfDomainError(ValueError):
    """Parameters fall outside the region where an evaluator is defined."""


def incomplete_binomial_sum(n: int, k: int, y: RationalLike) -> Fraction:
    """sum_{j=0}^k C(n,j) y^j for 0 <= k <= n."""
    if not 0 <= k <= n:
        raise OutOfDomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    y = Q(y)
    total, power = ZERO, ONE
    for j in range(k + 1):
        total += binomial(n, j) * power
        power *= y
    return total


@dataclass(frozen=True)
class DoubleSumSpec:
    """sum_{k=k0}^{k1(n)} outer(k) sum_{j=0}^{k-dk} inner(n, k, j) * seq(index(n, k, j)).

    ``inner_stop`` gives the upper limit of j as ``k - inner_stop`` (0 for
    the full incomplete row, 1 for the ``j <= k - 1`` variants).
    """

    outer: Callable[[int], Fraction]
    inner: Callable[[int, int, int], Fraction]
    index: Callable[[int, int, int], int]
    seq: Callable[[int], Fraction]
    k_start: int = 0
    inner_stop: int = 0

    def __call__(self, n: int) -> Fraction:
        total = ZERO
        for k in range(self.k_start, n + 1):
            w = self.outer(k)
            if not w:
                continue
            acc = ZERO
            for j in range(k - self.inner_stop + 1):
                c = self.inner(n, k, j)
                if c:
                    acc += c * self.seq(self.index(n, k, j))
            total += w * acc
        return total


def thm31_lhs(n: int, x: RationalLike, y: RationalLike) -> Fraction:
    """sum_{k=0}^n x^k sum_{j=0}^k C(n,j) y^j, by direct summation."""
    x, y = Q(x), Q(y)
    total, xk = ZERO, ONE
    for k in range(n + 1):
        total += xk * incomplete_binomial_sum(n, k, y)
        xk *= x
    return total


def thm31_rhs(n: int, x: RationalLike, y: RationalLike) -> Fraction:
    """((1+xy)^n - x^(n+1) (1+y)^n) / (1-x)."""
    x, y = Q(x), Q(y)
    if x == 1:
        raise SingularParameterError("closed form is singular at x = 1; use cor32_check")
    return ((1 + x * y) ** n - x ** (n + 1) * (1 + y) ** n) / (1 - x)


def cor32_sides(n: int, y: RationalLike) -> tuple[Fraction, Fraction]:
    """The x = 1 companion: double sum with (1-y)^j weights vs n y^(n-1) + y^n."""
    if n < 1:
        raise OutOfDomainError("needs n >= 1")
    y = Q(y)
    u = -(1 - y)
    lhs = sum((incomplete_binomial_sum(n, k, u) for k in range(n + 1)), ZERO)
    return lhs, n * y ** (n - 1) + y**n


def cor32_check(n: int, y: RationalLike) -> bool:
    lhs, rhs = cor32_sides(n, y)
    return lhs == rhs


def reciprocal_sides(n: int, y: RationalLike) -> tuple[Fraction, Fraction]:
    """sum_k sum_{j<=k} C(n,j)(-1)^j y^(n-k+j)  vs  (1-y)^(n-1)."""
    if n < 1:
        raise OutOfDomainError("needs n >= 1")
    y = Q(y)
    lhs = sum(
        (sign(j) * binomial(n, j) * y ** (n - k + j) for k in range(n + 1) for j in range(k + 1)),
        ZERO,
    )
    return lhs, (1 - y) ** (n - 1)


# --------------------------------------------------------------------------
# Gauss hypergeometric representation of the incomplete row (floating point)


def hyp2f1_series(a: float, b: float, c: float, z: float, eps: float, max_terms: int = 100_000) -> float:
    """Partial sum of 2F1(a, b; c; z), stopped once |term| < eps * |partial|."""
    if abs(z) >= 1:
        raise OutOfDomainError(f"series diverges for |z| = {abs(z)} >= 1")
    total = term = 1.0
    for i in range(max_terms):
        term *= (a + i) * (b + i) / ((c + i) * (i + 1)) * z
        total += term
        if abs(term) < eps * abs(total):
            return total
    raise OutOfDomainError("series did not converge within the term budget")


def hypergeometric_2f1_value(n: int, k: int, y: RationalLike, eps: float = 1e-12) -> float:
    """y^(k+1)/(y+1) C(n,k) 2F1(1, n+1; n+1-k; 1/(y+1)) in floating point."""
    if not 0 <= k <= n:
        raise OutOfDomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    y = Q(y)
    if y == -1:
        raise OutOfDomainError("y = -1 makes the argument infinite")
    z = 1 / (y + 1)
    if abs(z) >= 1:
        raise OutOfDomainError(f"|1/(y+1)| = {abs(z)} >= 1")
    f = hyp2f1_series(1.0, n + 1.0, n + 1.0 - k, float(z), eps)
    return float(y ** (k + 1) / (y + 1) * binomial(n, k)) * f


def hypergeometric_2f1_relerr(n: int, k: int, y: RationalLike, eps: float = 1e-12) -> float:
    exact = incomplete_binomial_sum(n, k, y)
    approx = hypergeometric_2f1_value(n, k, y, eps)
    if exact == 0:
        return abs(approx)
    return abs(approx - float(exact)) / abs(float(exact))


def hypergeometric_2f1_check(n: int, k: int, y: RationalLike, eps: float = 1e-12) -> bool:
    """Series value within relative tolerance 10*eps of the exact incomplete sum."""
    return hypergeometric_2f1_relerr(n, k, y, eps) < 10 * eps


# --------------------------------------------------------------------------
# Hyperbolic identities through x = 2 ln t
#
# With e^(x/2) = t every hyperbolic factor is a Laurent polynomial in t:
#   2^i cosh^i(x/2) = (t + 1/t)^i,  cosh(i x/2) = (t^i + t^-i)/2,
#   cosh(i x) = (t^2i + t^-2i)/2,   sinh likewise with a minus sign.


def _ch(t: Fraction, i: int) -> Fraction:
    return (t**i + t ** (-i)) / 2


def _sh(t: Fraction, i: int) -> Fraction:
    return (t**i - t ** (-i)) / 2


def _lhs_weight(kind: str) -> Callable[[Fraction, int], Fraction]:
    return _ch if kind.startswith("cosh") else _sh


def _lhs_sum(kind: str, t: Fraction, n: int) -> Fraction:
    half = _lhs_weight(kind)
    c2 = t + 1 / t  # 2 cosh(x/2)
    family = kind.rsplit("-", 1)[1]
    total = ZERO
    if family == "1":
        for k in range(n + 1):
            for j in range(k + 1):
                i = n - k + j
                total += sign(j) * binomial(n, j) * c2**i * half(t, i)
    elif family == "2":
        for k in range(1, n + 1):
            for j in range(k):
                i = n - k + j
                total += binomial(n, j) * n * sign(j) * c2**i * half(t, i) / (k - j)
    elif family == "3":
        for k in range(n + 1):
            for j in range(k + 1):
                i = k - j
                total += binomial(n, j) * sign(j) * c2**i * half(t, i)
    elif family == "4":
        for k in range(n + 1):
            for j in range(k + 1):
                i = j + 1
                total += binomial(n + 1, i) * sign(i) * c2**i * half(t, i)
    else:
        raise ValueError(f"unknown hyperbolic identity {kind!r}")
    return total


def _rhs_closed(kind: str, t: Fraction, n: int) -> Fraction:
    cosh = kind.startswith("cosh")
    big = _ch if cosh else _sh  # argument multiples of x = 2 ln t
    full = lambda i: big(t, 2 * i)
    half = lambda i: big(t, i)
    c2 = t + 1 / t
    family = kind.rsplit("-", 1)[1]
    if family == "1":
        return sign(n - 1) * full(n - 1)
    if family == "2":
        return sign(n) * (full(n) - c2**n * half(n))
    if family == "3":
        return full(n) + full(n - 1)
    if family == "4":
        out = sign(n) * ((n + 1) * full(n) - full(n + 1))
        return out - (n + 2) if cosh else out
    raise ValueError(f"unknown hyperbolic identity {kind!r}")


HYPERBOLIC_KINDS = tuple(f"{f}-identity-{i}" for i in "1234" for f in ("cosh", "sinh"))


def _hyp_args(kind: str, t: RationalLike, n: int) -> tuple[str, Fraction, int]:
    if kind not in HYPERBOLIC_KINDS:
        raise ValueError(f"unknown hyperbolic identity {kind!r}; expected one of {HYPERBOLIC_KINDS}")
    t = Q(t)
    if t <= 0:
        raise OutOfDomainError("t must be positive (t = e^(x/2))")
    if n < 1:
        raise OutOfDomainError("needs n >= 1")
    return kind, t, n


def hyperbolic_eval(kind: str, t: RationalLike, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of a hyperbolic double-sum identity at x = 2 ln t."""
    return hyperbolic_lhs(kind, t, n), hyperbolic_rhs(kind, t, n)


def hyperbolic_lhs(kind: str, t: RationalLike, n: int) -> Fraction:
    return _lhs_sum(*_hyp_args(kind, t, n))


def hyperbolic_rhs(kind: str, t: RationalLike, n: int) -> Fraction:
    return _rhs_closed(*_hyp_args(kind, t, n))


def hyperbolic_degree_bound(kind: str, n: int) -> int:
    """Span of t-exponents, after clearing t^-d, of either side as a Laurent polynomial.

    Both sides are Laurent polynomials whose exponents lie in [-d, d] with
    d = 2n + 2; equality at more than 2d + 1 distinct positive t therefore
    proves the identity for that n.
    """
    if kind not in HYPERBOLIC_KINDS:
        raise ValueError(f"unknown hyperbolic identity {kind!r}")
    return 2 * (2 * n + 2)
