"""Independent reference implementations used only by the tests."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def bernoulli_explicit(n: int) -> Fraction:
    """Double-sum formula B_n = sum_k 1/(k+1) sum_j (-1)^j C(k,j) j^n (B_1 = -1/2)."""
    return sum(
        (Fraction(1, k + 1) * sum((-1) ** j * comb(k, j) * j**n for j in range(k + 1)) for k in range(n + 1)),
        Fraction(0),
    )


def fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) by fast doubling, n >= 0."""
    if n == 0:
        return 0, 1
    a, b = fib_pair(n // 2)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if n % 2 else (c, d)


def fib_any(n: int) -> int:
    return fib_pair(n)[0] if n >= 0 else (-1) ** (n + 1) * fib_pair(-n)[0]


def catalan_closed(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def stirling2_explicit(r: int, n: int) -> Fraction:
    return Fraction(sum((-1) ** (n - k) * comb(n, k) * k**r for k in range(n + 1)), factorial(n))


def harmonic_direct(n: int, m: int = 1) -> Fraction:
    return sum((Fraction(1, k**m) for k in range(1, n + 1)), Fraction(0))
