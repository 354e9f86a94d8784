"""The signed binomial transform and binomial transform pairs."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import ZERO, Q, RationalLike, binomial, sign

Seq = Callable[[int], Fraction]

DEFAULT_CHECK_RANGE = 16


def forward_transform(s: Seq, n: int) -> Fraction:
    """sum_{k=0}^n C(n,k) (-1)^k s(k)."""
    if n < 0:
        raise ValueError(f"transform index must be >= 0, got {n}")
    total = ZERO
    for k in range(n + 1):
        term = binomial(n, k) * s(k)
        total += -term if k & 1 else term
    return total


def transformed(s: Seq, label: str | None = None):
    """The transformed sequence as a SequenceSpec (memoized per index)."""
    from .sequences import custom

    cache: dict[int, Fraction] = {}

    def term(n: int) -> Fraction:
        v = cache.get(n)
        if v is None:
            v = cache[n] = forward_transform(s, n)
        return v

    name = getattr(s, "text", lambda: "s")()
    return custom(term, label or f"T[{name}]")


def involution_check(s: Seq, N: int) -> bool:
    """True iff transforming twice returns s(n) for all 0 <= n <= N."""
    if N < 0:
        raise ValueError("N must be >= 0")
    sigma = [forward_transform(s, n) for n in range(N + 1)]
    return all(forward_transform(sigma.__getitem__, n) == s(n) for n in range(N + 1))


def classify(s: Seq, N: int) -> str:
    """'self-inverse', 'anti-self-inverse' or 'neither' over the prefix 0..N.

    A sequence that is identically zero on the prefix satisfies both
    patterns and is reported as self-inverse.
    """
    if N < 1:
        raise ValueError("classification needs N >= 1")
    is_self = is_anti = True
    for n in range(N + 1):
        t, v = forward_transform(s, n), s(n)
        is_self = is_self and t == v
        is_anti = is_anti and t == -v
        if not (is_self or is_anti):
            return "neither"
    return "self-inverse" if is_self else "anti-self-inverse"


class PairValidationError(ValueError):
    """A cataloged pair does not satisfy the transform relation."""

    def __init__(self, label: str, n: int, expected: Fraction, got: Fraction):
        super().__init__(f"{label}: sigma({n}) = {got}, transform of s gives {expected}")
        self.label, self.n, self.expected, self.got = label, n, expected, got


@dataclass(frozen=True)
class TransformPair:
    """(s, sigma) with sigma_n = sum_k C(n,k)(-1)^k s_k."""

    s: Seq
    sigma: Seq
    label: str

    def mismatch(self, N: int = DEFAULT_CHECK_RANGE) -> tuple[int, Fraction, Fraction] | None:
        """First n <= N where either direction fails, as (n, expected, got)."""
        for n in range(N + 1):
            want = forward_transform(self.s, n)
            got = self.sigma(n)
            if want != got:
                return n, want, got
            back = forward_transform(self.sigma, n)
            if back != self.s(n):
                return n, back, self.s(n)
        return None

    def validate(self, N: int = DEFAULT_CHECK_RANGE) -> "TransformPair":
        bad = self.mismatch(N)
        if bad is not None:
            raise PairValidationError(self.label, *bad)
        return self

    def swapped(self) -> "TransformPair":
        return TransformPair(self.sigma, self.s, f"swap[{self.label}]")


def chen_shift_lhs(pair: TransformPair, m: int, n: int) -> Fraction:
    """sum_{k=0}^m C(m,k)(-1)^k s(n+k)."""
    return sum((sign(k) * binomial(m, k) * pair.s(n + k) for k in range(m + 1)), ZERO)


def chen_shift_rhs(pair: TransformPair, m: int, n: int) -> Fraction:
    """sum_{j=0}^n C(n,j)(-1)^j sigma(m+j)."""
    if m < 0 or n < 0:
        raise ValueError("shift indices must be >= 0")
    return sum((sign(j) * binomial(n, j) * pair.sigma(m + j) for j in range(n + 1)), ZERO)


def _p_sides(pair: TransformPair, p: RationalLike, n: int, m: int, weighted: bool) -> tuple[Fraction, Fraction]:
    p = Q(p)
    if p == 0 or p == -1:
        raise ValueError("p must differ from 0 and -1")
    q = p + 1
    w = (lambda k: binomial(m, k)) if weighted else (lambda k: 1)
    left = sum(
        (binomial(n, j) * w(k) * p ** (n + m - j - k) * pair.sigma(j + k) for j in range(n + 1) for k in range(m + 1)),
        ZERO,
    )
    right = sum(
        (
            sign(j + k) * binomial(n, j) * w(k) * q ** (n + m - j - k) * pair.s(j + k)
            for j in range(n + 1)
            for k in range(m + 1)
        ),
        ZERO,
    )
    return left, right


def p_identity_sides(pair: TransformPair, p: RationalLike, n: int, m: int) -> tuple[Fraction, Fraction]:
    """Both sides of the p-parameter double sum with inner weight C(m,k).

    Without that weight (the printed form, see :func:`p_identity_printed_sides`)
    the identity only holds for m <= 1.
    """
    return _p_sides(pair, p, n, m, weighted=True)


def p_identity_printed_sides(pair: TransformPair, p: RationalLike, n: int, m: int) -> tuple[Fraction, Fraction]:
    """The unweighted inner sum over k, kept for auditing the printed statement."""
    return _p_sides(pair, p, n, m, weighted=False)


def p_particular_sides(pair: TransformPair, p: RationalLike, n: int) -> tuple[Fraction, Fraction]:
    """sum_j C(n,j) sigma_j p^(n-j)  vs  sum_j C(n,j)(-1)^j s_j (p+1)^(n-j)."""
    p = Q(p)
    left = sum((binomial(n, j) * pair.sigma(j) * p ** (n - j) for j in range(n + 1)), ZERO)
    right = sum((sign(j) * binomial(n, j) * pair.s(j) * (p + 1) ** (n - j) for j in range(n + 1)), ZERO)
    return left, right


def p_identity_check(pair: TransformPair, p: RationalLike, n: int, m: int) -> bool:
    """The p-parameter identity at (n, m), and its particular case at n."""
    a, b = p_identity_sides(pair, p, n, m)
    c, d = p_particular_sides(pair, p, n)
    return a == b and c == d
