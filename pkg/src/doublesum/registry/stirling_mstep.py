"""Stirling-number, Beta-type and m-step double sums."""
from __future__ import annotations

from fractions import Fraction

from ..exact import ZERO, Q, binomial, factorial, gen_binomial, sign
from ..sequences import (
    fibonacci_mstep_seed,
    gibonacci,
    lucas_mstep_seed,
    mstep,
    stirling2 as S,
    tribonacci as T,
)
from .core import dsum, dsum_lower, ident, rats, ssum, transform_of

# -- Stirling numbers of the second kind ---------------------------------------------

ident(
    "lem-4.5-y7bhb70", "4.5", "y7bhb70",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} k^r = (-1)^n n! {r \brace n}",
    {"n": range(0, 16), "r": range(0, 13)},
    lambda n, r: transform_of(lambda k: Fraction(k**r), n),
    lambda n, r: sign(n) * factorial(n) * S(r, n),
    notes="0^0 is read as 1.",
    labels=("lem.pbovlru", "y7bhb70"),
)

ident(
    "lem-4.5-prwewl3", "4.5", "prwewl3",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} (k+1)^{r-1} = (-1)^n n! {r \brace n+1},\quad r \ge 1",
    {"n": range(0, 16), "r": range(1, 13)},
    lambda n, r: transform_of(lambda k: Fraction((k + 1) ** (r - 1)), n),
    lambda n, r: sign(n) * factorial(n) * S(r, n + 1),
    labels=("prwewl3",),
)


def _ratio(i: int, r: int, s: int) -> Fraction:
    return S(i + r + 1, s + 1) / binomial(i + r, r)


ident(
    "lem-4.5-yxdoz00", "4.5", "yxdoz00",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} {k+r+1 \brace s+1}\binom{k+r}{r}^{-1} = (-1)^n {n+r \brace s}\binom{n+r}{r}^{-1},\quad s \ge r",
    {"n": range(0, 11), "r": range(0, 6), "s": range(0, 7)},
    lambda n, r, s: transform_of(lambda k: _ratio(k, r, s), n),
    lambda n, r, s: sign(n) * S(n + r, s) / binomial(n + r, r),
    constraint=lambda n, r, s: s >= r,
    labels=("yxdoz00",),
)

_SHIFT_GRID = {"n": range(1, 9), "m": range(0, 6), "r": range(0, 9)}


def _shift_lhs(n, m, e):
    return dsum(n, lambda k, j: sign(j) * binomial(n, j) * Fraction((m + n - k + j) ** e))


ident(
    "prop-4.5-power", "4.5", "stirling-power-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} (m+n-k+j)^r = (-1)^{n-1}\sum_{k=0}^m \binom{m}{k} (n+k-1)! {r \brace n+k-1}",
    _SHIFT_GRID,
    lambda n, m, r: _shift_lhs(n, m, r),
    lambda n, m, r: sign(n - 1) * ssum(0, m, lambda k: binomial(m, k) * factorial(n + k - 1) * S(r, n + k - 1)),
    status="edge-restricted",
    known_gaps=({"n": 0, "m": 0, "r": 0},),
    notes="Stated for n >= 0; at n = 0 the right side needs (-1)!, so the domain is n >= 1.",
)


def _shift1_lhs(n, m, r, plus=1):
    return dsum(n, lambda k, j: sign(j) * binomial(n, j) * Fraction((m + n - k + j + plus) ** (r - 1)))


ident(
    "prop-4.5-power-shift", "4.5", "stirling-power-shift-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} (m+n-k+j)^{r-1} = (-1)^{n-1}\sum_{k=0}^m \binom{m}{k} (n+k-1)! {r \brace n+k},\quad r \ge 1",
    {"n": range(1, 9), "m": range(0, 6), "r": range(1, 9)},
    _shift1_lhs,
    lambda n, m, r: sign(n - 1) * ssum(0, m, lambda k: binomial(m, k) * factorial(n + k - 1) * S(r, n + k)),
    status="amended",
    printed_lhs=lambda n, m, r: _shift1_lhs(n, m, r, plus=0),
    witness={"n": 1, "m": 0, "r": 2},
    notes="The summand must be (m+n-k+j+1)^(r-1), the shifted sequence of the lemma it comes from.",
)


def _mgi_rhs(n, m, r, s, alternating=False):
    def term(k):
        w = sign(k) if alternating else 1
        return w * binomial(m, k) * S(n + k + r - 1, s) / binomial(n + k + r - 1, r)

    return sign(n - 1) * ssum(0, m, term)


ident(
    "prop-4.5-mgi6qsx", "4.5", "mgi6qsx",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} {m+n-k+j+r+1 \brace s+1}\binom{m+n-k+j+r}{r}^{-1} = (-1)^{n-1}\sum_{k=0}^m (-1)^k \binom{m}{k} {n+k+r-1 \brace s}\binom{n+k+r-1}{r}^{-1},\quad s \ge r",
    {"n": range(1, 7), "m": range(0, 5), "r": range(0, 4), "s": range(0, 5)},
    lambda n, m, r, s: dsum(n, lambda k, j: sign(j) * binomial(n, j) * _ratio(m + n - k + j, r, s)),
    _mgi_rhs,
    constraint=lambda n, m, r, s: s >= r,
    status="amended",
    printed_rhs=lambda n, m, r, s: _mgi_rhs(n, m, r, s, alternating=True),
    witness={"n": 1, "m": 1, "r": 0, "s": 1},
    notes="The sign (-1)^k inside the sum over k cancels against the sign of the transform and must be dropped.",
    labels=("mgi6qsx",),
)


def _cp(n, f):
    return dsum_lower(n, lambda k, j: sign(j) * binomial(n, j) * f(n - k + j) / (k - j))


ident(
    "prop-4.5-ih1affl", "4.5", "ih1affl",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j \binom{n}{j} \frac{(n-k+j)^r}{k-j} = (-1)^n (n-1)! {r \brace n} - (-1)^n n^{r-1}",
    {"n": range(1, 13), "r": range(0, 11)},
    lambda n, r: _cp(n, lambda i: Fraction(i**r)),
    lambda n, r: sign(n) * (factorial(n - 1) * S(r, n) - Fraction(n) ** (r - 1)),
    labels=("ih1affl",),
)

ident(
    "prop-4.5-bjpvnnv", "4.5", "bjpvnnv",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j \binom{n}{j} \frac{(n-k+j+1)^{r-1}}{k-j} = (-1)^n (n-1)! {r \brace n+1} - (-1)^n \frac{(n+1)^{r-1}}{n},\quad r \ge 1",
    {"n": range(1, 13), "r": range(1, 11)},
    lambda n, r: _cp(n, lambda i: Fraction((i + 1) ** (r - 1))),
    lambda n, r: sign(n) * (factorial(n - 1) * S(r, n + 1) - Fraction((n + 1) ** (r - 1), n)),
    labels=("bjpvnnv",),
)


def _cp_ratio_rhs(n, r, s, scaled=True):
    val = sign(n - 1) * (s + 1) * S(n + r, s + 1) / binomial(n + r, r)
    return val / n if scaled else val


ident(
    "prop-4.5-stirling-ratio-cp", "4.5", "stirling-ratio-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j \binom{n}{j} {n-k+j+r+1 \brace s+1}\binom{n-k+j+r}{r}^{-1}\frac{1}{k-j} = (-1)^{n-1}(s+1){n+r \brace s+1}\binom{n+r}{r}^{-1},\quad s \ge r",
    {"n": range(1, 11), "r": range(0, 5), "s": range(0, 6)},
    lambda n, r, s: _cp(n, lambda i: _ratio(i, r, s)),
    _cp_ratio_rhs,
    constraint=lambda n, r, s: s >= r,
    status="amended",
    printed_rhs=lambda n, r, s: _cp_ratio_rhs(n, r, s, scaled=False),
    witness={"n": 2, "r": 0, "s": 0},
    notes="The left side lacks the factor n of the corollary it is taken from, so the right side needs 1/n.",
)

ident(
    "prop-4.5-ih1affl-particular", "4.5", "ih1affl-particular",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j \binom{n}{j} \frac{(n-k+j)^{n-1}}{k-j} = (-1)^{n+1} n^{n-2}",
    {"n": range(1, 16)},
    lambda n: _cp(n, lambda i: Fraction(i ** (n - 1))),
    lambda n: sign(n + 1) * Fraction(n) ** (n - 2),
)

ident(
    "prop-4.5-bjpvnnv-particular", "4.5", "bjpvnnv-particular",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j \binom{n}{j} \frac{(n-k+j+1)^{n-1}}{k-j} = (-1)^{n+1} \frac{(n+1)^{n-1}}{n}",
    {"n": range(1, 16)},
    lambda n: _cp(n, lambda i: Fraction((i + 1) ** (n - 1))),
    lambda n: sign(n + 1) * Fraction((n + 1) ** (n - 1), n),
)

# -- reciprocal binomials with a rational shift r -------------------------------------

R_VALUES = rats(0, 1, 2, "1/2", "-1/3", "5/2")


def _gb(x, k: int) -> Fraction:
    return gen_binomial(x, k) if k >= 0 else ZERO


def _beta_s(i: int, r: Fraction, m: int) -> Fraction:
    return Fraction(i**m) / gen_binomial(i + r, i)


def _beta_sigma(n: int, r: Fraction, m: int) -> Fraction:
    acc = ssum(0, m, lambda k: _gb(-r, n - k) * S(m, k) * factorial(k))
    return acc / gen_binomial(-r - 1, n)


ident(
    "lem-4.5-wk165o9", "4.5", "wk165o9",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k}\binom{k+r}{k}^{-1} k^m = \binom{-r-1}{n}^{-1}\sum_{k=0}^m \binom{-r}{n-k}{m \brace k}k!",
    {"n": range(0, 13), "m": range(0, 5), "r": R_VALUES},
    lambda n, m, r: transform_of(lambda k: _beta_s(k, r, m), n),
    lambda n, m, r: _beta_sigma(n, r, m),
    notes="r sampled at rationals that are not negative integers; binomials with a negative lower index are 0.",
    labels=("wk165o9",),
)

ident(
    "prop-4.5-beta-power", "4.5", "beta-power-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j}\binom{n+j-k+r}{r}^{-1}(n+j-k)^m = \binom{-r-1}{n-1}^{-1}\sum_{k=0}^m \binom{-r}{n-k-1}{m \brace k}k!",
    {"n": range(1, 11), "m": range(0, 5), "r": R_VALUES},
    lambda n, m, r: dsum(n, lambda k, j: sign(j) * binomial(n, j) * _beta_s(n + j - k, r, m)),
    lambda n, m, r: _beta_sigma(n - 1, r, m),
    notes="The reciprocal binomial is read as Gamma-based, equal to 1/C(i+r, i) for rational r.",
)

# -- m-step numbers ----------------------------------------------------------------------

PRESETS = {"fibonacci-mstep": fibonacci_mstep_seed, "lucas-mstep": lucas_mstep_seed}
ARBITRARY_SEEDS = ("[1;-2;5]", "[2;0;-1;3]", "[1/2;3;-4;0;7]")


def _seed_of(text: str) -> tuple[Fraction, ...]:
    return tuple(Q(v) for v in text.strip("[]").split(";"))


def _mstep_entries(tag: str, seeds_axis: dict, W) -> None:
    ident(
        f"lem-4.6-fwavfkb-a-{tag}", "4.6", "lem.fwavfkb",
        r"\sum_{k=0}^n (-1)^k \binom{n}{k} 2^k W_{mk}^{(m)} = (-1)^n W_{(m+1)n}^{(m)}",
        {**seeds_axis, "n": range(0, 13)},
        lambda n, **kw: transform_of(lambda k: 2**k * W(kw, len(_wseed(kw)) * k), n),
        lambda n, **kw: sign(n) * W(kw, (len(_wseed(kw)) + 1) * n),
        notes=_MSTEP_NOTES[tag],
        labels=("lem.fwavfkb",),
    )
    ident(
        f"lem-4.6-fwavfkb-b-{tag}", "4.6", "lem.fwavfkb",
        r"\sum_{k=0}^n (-1)^k \binom{n}{k} 2^{-k} W_k^{(m)} = 2^{-n} W_{-mn}^{(m)}",
        {**seeds_axis, "n": range(0, 13)},
        lambda n, **kw: transform_of(lambda k: W(kw, k) / 2**k, n),
        lambda n, **kw: W(kw, -len(_wseed(kw)) * n) / 2**n,
        notes=_MSTEP_NOTES[tag],
        labels=("lem.fwavfkb",),
    )


def _wseed(kw) -> tuple[Fraction, ...]:
    if "seed" in kw:
        return _seed_of(kw["seed"])
    return tuple(PRESETS[kw["preset"]](kw["m"]))


def _W(kw, i: int) -> Fraction:
    return mstep(_wseed(kw), i)


_MSTEP_NOTES = {
    "preset": "Checked for the Fibonacci and Lucas m-step presets with m = 2..5.",
    "seed": "Seed generality is checked empirically on arbitrary rational seeds of lengths 3, 4 and 5.",
}

_mstep_entries("preset", {"preset": tuple(PRESETS), "m": range(2, 6)}, _W)
_mstep_entries("seed", {"seed": ARBITRARY_SEEDS}, _W)


def _ft_lhs(n, w, mult):
    return dsum(n, lambda k, j: sign(j) * binomial(n, j) * 2 ** (n + j - k) * w(mult * (n + j - k)))


ident(
    "prop-4.6-ft6yauz", "4.6", "prop.ft6yauz",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{n+j-k} W_{m(n+j-k)}^{(m)} = (-1)^{n-1} W_{(m+1)(n-1)}^{(m)}",
    {"preset": tuple(PRESETS), "m": range(2, 6), "n": range(1, 13)},
    lambda preset, m, n: _ft_lhs(n, lambda i: _W({"preset": preset, "m": m}, i), m),
    lambda preset, m, n: sign(n - 1) * _W({"preset": preset, "m": m}, (m + 1) * (n - 1)),
    status="edge-restricted",
    known_gaps=({"preset": "fibonacci-mstep", "m": 2, "n": 0},),
    notes="Stated for n >= 0; at n = 0 the left side is W_0 and the right side -W_{-(m+1)}.",
    labels=("prop.ft6yauz",),
)

GIB_SEEDS = {"fibonacci": (0, 1), "lucas": (2, 1), "gibonacci(3,-1/2)": (3, Fraction(-1, 2))}


def _Gs(name: str, i: int) -> Fraction:
    return gibonacci(*GIB_SEEDS[name], i)


ident(
    "prop-4.6-ft6yauz-gibonacci", "4.6", "ft6yauz-gibonacci",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{n+j-k} G_{2(n+j-k)} = (-1)^{n-1} G_{3(n-1)}",
    {"G": tuple(GIB_SEEDS), "n": range(1, 21)},
    lambda G, n: _ft_lhs(n, lambda i: _Gs(G, i), 2),
    lambda G, n: sign(n - 1) * _Gs(G, 3 * (n - 1)),
    status="edge-restricted",
    known_gaps=({"G": "fibonacci", "n": 0},),
    notes="Same n = 0 edge as the m-step form.",
)

ident(
    "prop-4.6-ft6yauz-tribonacci", "4.6", "ft6yauz-tribonacci",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{n+j-k} T_{3(n+j-k)} = (-1)^{n-1} T_{4(n-1)}",
    {"n": range(1, 21)},
    lambda n: _ft_lhs(n, T, 3),
    lambda n: sign(n - 1) * T(4 * (n - 1)),
    status="edge-restricted",
    known_gaps=({"n": 0},),
    notes="Same n = 0 edge as the m-step form: T_0 = 0 against -T_{-4}.",
)


def _up_lhs(n, w):
    return dsum(n, lambda k, j: sign(j) * binomial(n, j) * 2 ** (k - j) * w(n + j - k))


ident(
    "prop-4.6-up76gra", "4.6", "prop.up76gra",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{k-j} W_{n+j-k}^{(m)} = 2W_{-m(n-1)}^{(m)}",
    {"preset": tuple(PRESETS), "m": range(2, 6), "n": range(1, 13)},
    lambda preset, m, n: _up_lhs(n, lambda i: _W({"preset": preset, "m": m}, i)),
    lambda preset, m, n: 2 * _W({"preset": preset, "m": m}, -m * (n - 1)),
    status="edge-restricted",
    known_gaps=({"preset": "fibonacci-mstep", "m": 2, "n": 0},),
    notes="Stated for n >= 0; at n = 0 the left side is W_0 and the right side 2W_m.",
    labels=("prop.up76gra",),
)

ident(
    "prop-4.6-up76gra-gibonacci", "4.6", "up76gra-gibonacci",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{k-j} G_{n+j-k} = 2G_{-2(n-1)}",
    {"G": tuple(GIB_SEEDS), "n": range(1, 21)},
    lambda G, n: _up_lhs(n, lambda i: _Gs(G, i)),
    lambda G, n: 2 * _Gs(G, -2 * (n - 1)),
    status="edge-restricted",
    known_gaps=({"G": "fibonacci", "n": 0},),
    notes="Same n = 0 edge as the m-step form.",
)

ident(
    "prop-4.6-up76gra-tribonacci", "4.6", "up76gra-tribonacci",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{k-j} T_{n+j-k} = 2T_{-3(n-1)}",
    {"n": range(1, 21)},
    lambda n: _up_lhs(n, T),
    lambda n: 2 * T(-3 * (n - 1)),
    status="edge-restricted",
    known_gaps=({"n": 0},),
    notes="Same n = 0 edge as the m-step form.",
)
