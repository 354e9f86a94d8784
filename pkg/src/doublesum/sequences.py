"""Exact generators for the special numbers and recurrence families.

Every generator memoizes a prefix table.  Tables only ever grow, and each
fill computes the same value from the same inputs, so a lost race between
two readers costs a duplicate computation and nothing else.
"""
from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exact import ONE, ZERO, Poly, Q, RationalLike, binomial, factorial, format_rational, sign

_lock = threading.Lock()

# --------------------------------------------------------------------------
# Bernoulli numbers and polynomials

_bernoulli: list[Fraction] = []


def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2 (coefficients of z/(e^z - 1)).

    Computed row by row with the Akiyama-Tanigawa transform, which yields
    the B_1 = +1/2 variant; the sign of B_1 is flipped on the way out.
    """
    if n < 0:
        raise ValueError(f"Bernoulli number index must be >= 0, got {n}")
    if n >= len(_bernoulli):
        _extend_bernoulli(n)
    return _bernoulli[n]


def _extend_bernoulli(n: int) -> None:
    with _lock:
        # Akiyama-Tanigawa needs the whole triangle up to n; recompute it once
        # for a comfortable size rather than per index.
        size = max(n + 1, 2 * len(_bernoulli), 32)
        if size <= len(_bernoulli):
            return
        out = []
        row: list[Fraction] = []
        for m in range(size):
            row.append(Fraction(1, m + 1))
            for j in range(m, 0, -1):
                row[j - 1] = j * (row[j - 1] - row[j])
            out.append(row[0])
        out[1] = -out[1]
        _bernoulli[:] = out


_bernoulli_polys: dict[int, Poly] = {}


def bernoulli_poly(n: int) -> Poly:
    """B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
    if n < 0:
        raise ValueError(f"Bernoulli polynomial degree must be >= 0, got {n}")
    p = _bernoulli_polys.get(n)
    if p is None:
        p = Poly([binomial(n, n - i) * bernoulli_number(n - i) for i in range(n + 1)])
        _bernoulli_polys[n] = p
    return p


def bernoulli_poly_value(n: int, x: RationalLike) -> Fraction:
    return bernoulli_poly(n)(x)


# --------------------------------------------------------------------------
# Two-sided linear recurrences (Gibonacci, Horadam, m-step)


class _TwoSidedTable:
    """Memo for a sequence defined by a forward and a backward step."""

    def __init__(self, seed: Sequence[Fraction], forward, backward):
        self.pos = list(seed)  # indices 0, 1, 2, ...
        self.neg: list[Fraction] = []  # indices -1, -2, ...
        self.order = len(seed)
        self.forward = forward
        self.backward = backward

    def _get(self, i: int) -> Fraction:
        return self.pos[i] if i >= 0 else self.neg[-i - 1]

    def __getitem__(self, n: int) -> Fraction:
        if n >= 0:
            while len(self.pos) <= n:
                self.pos.append(self.forward(self.pos[-self.order:]))
            return self.pos[n]
        if self.backward is None:
            raise ValueError("sequence has no backward extension")
        while len(self.neg) < -n:
            low = -len(self.neg) - 1  # index to fill
            window = [self._get(low + i) for i in range(1, self.order + 1)]
            self.neg.append(self.backward(window))
        return self.neg[-n - 1]


_tables: dict[tuple, _TwoSidedTable] = {}


def _table(key: tuple, make: Callable[[], _TwoSidedTable]) -> _TwoSidedTable:
    t = _tables.get(key)
    if t is None:
        with _lock:
            t = _tables.get(key)
            if t is None:
                t = make()
                _tables[key] = t
    return t


def gibonacci(g0: RationalLike, g1: RationalLike, n: int) -> Fraction:
    """G_n with G_k = G_(k-1) + G_(k-2), extended to negative n."""
    g0, g1 = Q(g0), Q(g1)
    t = _table(
        ("gib", g0, g1),
        lambda: _TwoSidedTable(
            [g0, g1],
            forward=lambda w: w[0] + w[1],
            # window = [w_(i+1), w_(i+2)]
            backward=lambda w: w[1] - w[0],
        ),
    )
    return t[n]


def fibonacci(n: int) -> Fraction:
    return gibonacci(0, 1, n)


def lucas(n: int) -> Fraction:
    return gibonacci(2, 1, n)


def horadam(a: RationalLike, b: RationalLike, p: RationalLike, q: RationalLike, n: int) -> Fraction:
    """w_n(a, b; p, q) with w_n = p w_(n-1) - q w_(n-2), for every integer n."""
    a, b, p, q = Q(a), Q(b), Q(p), Q(q)
    if n < 0 and q == 0:
        raise ValueError("Horadam backward recurrence needs q != 0")

    def make() -> _TwoSidedTable:
        back = None if q == 0 else (lambda w: (p * w[0] - w[1]) / q)
        return _TwoSidedTable([a, b], forward=lambda w: p * w[1] - q * w[0], backward=back)

    return _table(("hor", a, b, p, q), make)[n]


def mstep(seed: Sequence[RationalLike], n: int) -> Fraction:
    """m-step number: each term is the sum of the previous ``m = len(seed)`` terms.

    ``seed`` holds W_0 .. W_(m-1); negative indices use
    W_(k-m) = W_k - (W_(k-1) + ... + W_(k-m+1)).
    """
    s = tuple(Q(v) for v in seed)
    if len(s) < 2:
        raise ValueError("m-step numbers need m >= 2")
    t = _table(
        ("mstep", s),
        lambda: _TwoSidedTable(list(s), forward=sum, backward=lambda w: w[-1] - sum(w[:-1])),
    )
    return t[n]


def fibonacci_mstep_seed(m: int) -> list[Fraction]:
    """W_0 = ... = W_(m-2) = 0, W_(m-1) = 1."""
    if m < 2:
        raise ValueError("m-step numbers need m >= 2")
    return [ZERO] * (m - 1) + [ONE]


def lucas_mstep_seed(m: int) -> list[Fraction]:
    """Power sums of the characteristic roots: m, 1, 3, 7, ..., 2^(m-1) - 1."""
    if m < 2:
        raise ValueError("m-step numbers need m >= 2")
    return [Fraction(m)] + [Fraction(2**k - 1) for k in range(1, m)]


def tribonacci(n: int) -> Fraction:
    return mstep(fibonacci_mstep_seed(3), n)


# --------------------------------------------------------------------------
# Harmonic, Catalan, Stirling

_harm: dict[tuple[bool, int], list[Fraction]] = {}


def _harmonic_table(odd: bool, m: int, n: int) -> Fraction:
    if n < 0:
        raise ValueError(f"harmonic index must be >= 0 in exact mode, got {n}")
    if m < 1:
        raise ValueError(f"harmonic order must be >= 1, got {m}")
    tab = _harm.setdefault((odd, m), [ZERO])
    while len(tab) <= n:
        j = len(tab)
        base = 2 * j - 1 if odd else j
        tab.append(tab[-1] + Fraction(1, base**m))
    return tab[n]


def harmonic(n: int, m: int = 1) -> Fraction:
    """H_n^(m) = sum_{j=1}^n 1/j^m."""
    return _harmonic_table(False, m, n)


def odd_harmonic(n: int, m: int = 1) -> Fraction:
    """O_n^(m) = sum_{j=1}^n 1/(2j-1)^m."""
    return _harmonic_table(True, m, n)


_catalan: list[Fraction] = [ONE]


def catalan(n: int) -> Fraction:
    """C_n via C_n = 2(2n-1)/(n+1) C_(n-1)."""
    if n < 0:
        raise ValueError(f"Catalan index must be >= 0, got {n}")
    while len(_catalan) <= n:
        k = len(_catalan)
        _catalan.append(_catalan[-1] * Fraction(2 * (2 * k - 1), k + 1))
    return _catalan[n]


_stirling_rows: list[list[int]] = [[1]]


def stirling2(r: int, n: int) -> Fraction:
    """Stirling number of the second kind {r over n} from the triangle recurrence."""
    if r < 0 or n < 0:
        raise ValueError("Stirling numbers need non-negative arguments")
    if n > r:
        return ZERO
    while len(_stirling_rows) <= r:
        prev = _stirling_rows[-1]
        i = len(_stirling_rows)
        row = [0] * (i + 1)
        for k in range(1, i + 1):
            row[k] = k * (prev[k] if k < len(prev) else 0) + prev[k - 1]
        _stirling_rows.append(row)
    return Fraction(_stirling_rows[r][n])


def stirling2_explicit(r: int, n: int) -> Fraction:
    """{r over n} from the alternating sum (-1)^n/n! * sum_k (-1)^k C(n,k) k^r."""
    if r < 0 or n < 0:
        raise ValueError("Stirling numbers need non-negative arguments")
    total = sum(sign(k) * binomial(n, k) * k**r for k in range(n + 1))
    return sign(n) * total / factorial(n)


def clear_caches() -> None:
    """Drop every memo table (used to check that memoization is invisible)."""
    with _lock:
        _bernoulli.clear()
        _bernoulli_polys.clear()
        _tables.clear()
        _harm.clear()
        del _catalan[1:]
        del _stirling_rows[1:]


# --------------------------------------------------------------------------
# SequenceSpec: named, parameterized sequences with a canonical text form


@dataclass(frozen=True)
class SequenceSpec:
    """A named exact sequence ``n -> Fraction``.

    ``family`` is one of the names in :data:`FAMILIES`; ``params`` holds the
    family parameters.  ``custom`` sequences carry their own callable and
    a free-form label, which doubles as their text form.
    """

    family: str
    params: tuple = ()
    fn: Callable[[int], Fraction] | None = field(default=None, compare=False, repr=False)
    label: str | None = None

    def __call__(self, n: int) -> Fraction:
        return self.term(n)

    def term(self, n: int) -> Fraction:
        if self.family == "custom":
            return Q(self.fn(n))
        return _FAMILY_TERMS[self.family](self.params, n)

    def text(self) -> str:
        if self.family == "custom":
            return self.label or "custom"
        return _FAMILY_TEXT[self.family](self.params)

    def __str__(self) -> str:
        return self.text()

    # derived sequences

    def signed(self) -> "SequenceSpec":
        """n -> (-1)^n s_n."""
        return custom(lambda n: sign(n) * self.term(n), f"(-1)^n*{self.text()}")

    def scaled(self, c: RationalLike) -> "SequenceSpec":
        """n -> c^n s_n."""
        c = Q(c)
        return custom(lambda n: c**n * self.term(n) if n >= 0 else self.term(n) / c ** (-n),
                      f"({format_rational(c)})^n*{self.text()}")

    def shifted(self, a: int) -> "SequenceSpec":
        """n -> s_(n+a)."""
        return custom(lambda n: self.term(n + a), f"{self.text()}>>{a}")


def custom(fn: Callable[[int], RationalLike], label: str) -> SequenceSpec:
    return SequenceSpec("custom", (), fn, label)


def _nonneg(f):
    def g(params, n):
        if n < 0:
            raise ValueError(f"sequence is defined only for n >= 0, got {n}")
        return f(params, n)

    return g


_FAMILY_TERMS: dict[str, Callable[[tuple, int], Fraction]] = {
    "bernoulli": _nonneg(lambda p, n: bernoulli_number(n)),
    "bernoulli-poly-at": _nonneg(lambda p, n: bernoulli_poly(n)(p[0])),
    "gibonacci": lambda p, n: gibonacci(p[0], p[1], n),
    "horadam": lambda p, n: horadam(p[0], p[1], p[2], p[3], n),
    "harmonic": _nonneg(lambda p, n: harmonic(n, p[0])),
    "odd-harmonic": _nonneg(lambda p, n: odd_harmonic(n, p[0])),
    "catalan": _nonneg(lambda p, n: catalan(n)),
    "stirling2-diagonal": _nonneg(lambda p, n: stirling2(n + p[0], n)),
    "mstep": lambda p, n: mstep(p, n),
    "constant": lambda p, n: Q(p[0]),
    "power": lambda p, n: Q(p[0]) ** n if n >= 0 else 1 / Q(p[0]) ** (-n),
}

FAMILIES = tuple(_FAMILY_TERMS) + ("custom",)


def _fmt(vals) -> str:
    return ",".join(format_rational(v) for v in vals)


_FAMILY_TEXT: dict[str, Callable[[tuple], str]] = {
    "bernoulli": lambda p: "bernoulli",
    "bernoulli-poly-at": lambda p: f"bernoulli-poly-at({_fmt(p)})",
    "gibonacci": lambda p: f"gibonacci({_fmt(p)})",
    "horadam": lambda p: f"horadam({_fmt(p[:2])};{_fmt(p[2:])})",
    "harmonic": lambda p: f"harmonic^{p[0]}",
    "odd-harmonic": lambda p: f"odd-harmonic^{p[0]}",
    "catalan": lambda p: "catalan",
    "stirling2-diagonal": lambda p: f"stirling2-diagonal({p[0]})",
    "mstep": lambda p: f"mstep[{_fmt(p)}]",
    "constant": lambda p: f"constant({_fmt(p)})",
    "power": lambda p: f"power({_fmt(p)})",
}

_ALIASES = {
    "fibonacci": ("gibonacci", (ONE * 0, ONE)),
    "lucas": ("gibonacci", (Fraction(2), ONE)),
    "harmonic": ("harmonic", (1,)),
    "odd-harmonic": ("odd-harmonic", (1,)),
    "tribonacci": ("mstep", tuple(fibonacci_mstep_seed(3))),
}

_TEXT_RE = re.compile(
    r"^(?P<name>[a-z0-9-]+)"
    r"(?:\^(?P<order>\d+)|\((?P<args>[^()]*)\)|\[(?P<seed>[^\[\]]*)\])?$"
)


def _rats(text: str) -> list[Fraction]:
    return [Q(t) for t in text.split(",")] if text.strip() else []


def parse_sequence(text: str) -> SequenceSpec:
    """Parse the canonical text form, e.g. ``horadam(0,1;4,3)`` or ``mstep[0,0,1]``."""
    s = text.strip().replace(" ", "")
    m = _TEXT_RE.match(s)
    if not m:
        raise ValueError(f"malformed sequence spec: {text!r}")
    name, order, args, seed = m["name"], m["order"], m["args"], m["seed"]
    if name in _ALIASES and order is None and args is None and seed is None:
        fam, params = _ALIASES[name]
        return SequenceSpec(fam, params)
    if name in ("harmonic", "odd-harmonic") and order is not None:
        if int(order) < 1:
            raise ValueError("harmonic order must be >= 1")
        return SequenceSpec(name, (int(order),))
    if name in ("bernoulli", "catalan") and args is None and seed is None and order is None:
        return SequenceSpec(name)
    if name == "mstep" and seed is not None:
        vals = _rats(seed)
        if len(vals) < 2:
            raise ValueError("mstep needs at least two seed values")
        return SequenceSpec("mstep", tuple(vals))
    if name in ("fibonacci-mstep", "lucas-mstep") and args is not None:
        m_ = int(args)
        make = fibonacci_mstep_seed if name == "fibonacci-mstep" else lucas_mstep_seed
        return SequenceSpec("mstep", tuple(make(m_)))
    if name == "horadam" and args is not None:
        seeds, _, coeffs = args.partition(";")
        vals = _rats(seeds) + _rats(coeffs)
        if len(vals) != 4 or not _:
            raise ValueError("horadam needs (a,b;p,q)")
        return SequenceSpec("horadam", tuple(vals))
    if name == "gibonacci" and args is not None:
        vals = _rats(args)
        if len(vals) != 2:
            raise ValueError("gibonacci needs (G0,G1)")
        return SequenceSpec("gibonacci", tuple(vals))
    if name in ("constant", "power", "bernoulli-poly-at") and args is not None:
        vals = _rats(args)
        if len(vals) != 1:
            raise ValueError(f"{name} takes one rational argument")
        return SequenceSpec(name, tuple(vals))
    if name == "stirling2-diagonal" and args is not None:
        d = int(args)
        if d < 0:
            raise ValueError("stirling2-diagonal offset must be >= 0")
        return SequenceSpec(name, (d,))
    raise ValueError(f"unknown sequence spec: {text!r}")
