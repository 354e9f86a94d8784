"""Harmonic, odd harmonic and Catalan double sums."""
from __future__ import annotations

from fractions import Fraction

from ..exact import ZERO, binomial, sign
from ..sequences import catalan as C, harmonic as H, odd_harmonic as O
from .core import cached_pair, dsum, dsum_lower, ident, ssum, transform_of

N30 = range(1, 31)
N0_30 = range(0, 31)
R8 = range(0, 9)


def _ceil_half(n: int) -> int:
    return -(-n // 2)


# -- harmonic numbers with a shift ------------------------------------------------


def _hr_sigma(n: int, r: int) -> Fraction:
    d = 1 if n == 0 else 0
    return (d * (1 + H(r)) - 1) / (n + d) / binomial(n + r, r)


def _o_tau(n: int) -> Fraction:
    d = 1 if n == 0 else 0
    return -(1 - d) * Fraction(2) ** (2 * n - 1) / (n + d) / binomial(2 * n, n)


ident(
    "lem-4.3-wt34kp1", "4.3", "eq.wt34kp1",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} H_{k+r} = -\frac{1}{n}\binom{n+r}{r}^{-1}",
    {"n": N30, "r": R8},
    lambda n, r: transform_of(lambda k: H(k + r), n),
    lambda n, r: Fraction(-1, n) / binomial(n + r, r),
    notes="r instantiated at integers 0..8; n != 0.",
    labels=("eq.wt34kp1",),
)

ident(
    "lem-4.3-jupxl7y", "4.3", "eq.jupxl7y",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} O_k = -\binom{2n}{n}^{-1} \frac{2^{2n-1}}{n}",
    {"n": N30},
    lambda n: transform_of(O, n),
    lambda n: -Fraction(2) ** (2 * n - 1) / n / binomial(2 * n, n),
    labels=("eq.jupxl7y",),
)

ident(
    "lem-4.3-gxb8nr4", "4.3", "gxb8nr4",
    r"s_n = H_{n+r},\ \sigma_n = \frac{\delta_{n0}(1+H_r)-1}{n+\delta_{n0}}\binom{n+r}{r}^{-1}",
    {"n": N0_30, "r": R8},
    lambda n, r: transform_of(lambda k: H(k + r), n),
    _hr_sigma,
    notes="Checked as a transform pair: sigma_n equals the transform of s at every n.",
    labels=("gxb8nr4",),
)

ident(
    "lem-4.3-h5ajier", "4.3", "h5ajier",
    r"t_n = O_n,\ \tau_n = -\frac{1-\delta_{n0}}{n+\delta_{n0}}\binom{2n}{n}^{-1}2^{2n-1}",
    {"n": N0_30},
    lambda n: transform_of(O, n),
    _o_tau,
    labels=("h5ajier",),
)


def _hr_shift_rhs(n: int, r: int) -> Fraction:
    if n == 1:
        return H(r)
    return Fraction(-1, n - 1) / binomial(n - 1 + r, r)


ident(
    "prop-4.3-harmonic-shift", "4.3", "harmonic-shift-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} H_{n+r+j-k} = [n=1: H_r;\ n>1: -\frac{1}{n-1}\binom{n-1+r}{r}^{-1}]",
    {"n": range(1, 41), "r": R8},
    lambda n, r: dsum(n, lambda k, j: sign(j) * binomial(n, j) * H(n + r + j - k)),
    _hr_shift_rhs,
    notes="r instantiated at integers 0..8.",
)

ident(
    "prop-4.3-odd-harmonic", "4.3", "odd-harmonic-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} O_{n+j-k} = -\frac{1}{n-1}\binom{2(n-1)}{n-1}^{-1} 2^{2n-3}",
    {"n": range(2, 41)},
    lambda n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * O(n + j - k)),
    lambda n: Fraction(-1, n - 1) / binomial(2 * (n - 1), n - 1) * Fraction(2) ** (2 * n - 3),
    status="edge-restricted",
    known_gaps=({"n": 1},),
    notes="At n = 1 the left side is tau_0 = 0 while the closed form divides by n - 1.",
)


def _hkr_rhs(n: int, r: int) -> Fraction:
    if n == 1:
        return -sign(n) * H(r + 1)
    return sign(n) * (Fraction(1, n - 1) / binomial(n + r - 1, r) - Fraction(1, n) / binomial(n + r, r))


ident(
    "prop-4.3-harmonic-kj", "4.3", "harmonic-kj-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} H_{k+r-j} = (-1)^n [n=1: -H_{r+1};\ n>1: \frac{1}{n-1}\binom{n+r-1}{r}^{-1} - \frac{1}{n}\binom{n+r}{r}^{-1}]",
    {"n": range(1, 41), "r": R8},
    lambda n, r: dsum(n, lambda k, j: sign(j) * binomial(n, j) * H(k + r - j)),
    _hkr_rhs,
    notes="r instantiated at integers 0..8.",
)

# -- central binomial harmonic differences -------------------------------------------


def _ho(i: int) -> Fraction:
    return binomial(2 * i, i) * (H(i) - O(i))


ident(
    "lem-4.3-ey4kpm3", "4.3", "ey4kpm3",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} 2^{-k} \binom{2k}{k} (H_k - O_k) = [n \text{ even}: 2^{-n-1}\binom{n}{n/2}H_{n/2};\ n \text{ odd}: 0]",
    {"n": N0_30},
    lambda n: transform_of(lambda k: _ho(k) / 2**k, n),
    lambda n: ZERO if n % 2 else binomial(n, n // 2) * H(n // 2) / 2 ** (n + 1),
    labels=("ey4kpm3",),
)

ident(
    "prop-4.3-central-harmonic", "4.3", "central-harmonic-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{k-j} \binom{2(n-k+j)}{n-k+j} (H_{n-k+j} - O_{n-k+j}) = [n \text{ odd}: \binom{n-1}{(n-1)/2}H_{(n-1)/2};\ n \text{ even}: 0]",
    {"n": N0_30},
    lambda n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * 2 ** (k - j) * _ho(n - k + j)),
    lambda n: binomial(n - 1, (n - 1) // 2) * H((n - 1) // 2) if n % 2 else ZERO,
)

ident(
    "prop-4.3-central-harmonic-cp", "4.3", "central-harmonic-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} 2^{k-j} \binom{2(n-k+j)}{n-k+j} \frac{H_{n-k+j} - O_{n-k+j}}{k-j} = (-1)^{n+1}\binom{2n}{n}(H_n - O_n) + [n \text{ even}: \frac12\binom{n}{n/2}H_{n/2};\ n \text{ odd}: 0]",
    {"n": N0_30},
    lambda n: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * 2 ** (k - j) * _ho(n - k + j) / (k - j)),
    lambda n: sign(n + 1) * _ho(n) + (ZERO if n % 2 else binomial(n, n // 2) * H(n // 2) / 2),
)

# -- powers of two over powers of k + 1 ----------------------------------------------


def _p2sq(i: int) -> Fraction:
    return Fraction(2**i, (i + 1) ** 2)


def _p2cube(i: int) -> Fraction:
    return Fraction(2**i, (i + 1) ** 3)


ident(
    "lem-4.3-sr1lpuj", "4.3", "lem.sr1lpuj",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} \frac{2^k}{(k+1)^2} = O_{\lfloor (n+2)/2 \rfloor}",
    {"n": N0_30},
    lambda n: transform_of(_p2sq, n),
    lambda n: O((n + 2) // 2) / (n + 1),
    status="amended",
    printed_rhs=lambda n: O((n + 2) // 2),
    witness={"n": 1},
    notes="The right side needs the factor 1/(n+1): at n = 1 the sum is 1/2 while O_1 = 1.",
    labels=("lem.sr1lpuj",),
)

ident(
    "lem-4.3-y56cnyf", "4.3", "y56cnyf",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} \frac{2^k}{(k+1)^3} = \frac14\frac{H_{n+1}^2+H_{n+1}^{(2)}}{n+1} - \frac18\frac{H_{\lceil n/2\rceil}^2+H_{\lceil n/2\rceil}^{(2)}}{n+1} + \frac12\frac{O_{\lfloor (n+2)/2\rfloor}^2+O_{\lfloor (n+2)/2\rfloor}^{(2)}}{n+1} - \frac{1}{2(n+1)}\sum_{k=0}^n (-1)^k\frac{H_{k+1}}{k+1}",
    {"n": N0_30},
    lambda n: transform_of(_p2cube, n),
    lambda n: cached_pair("pair:power2-over-cube").sigma(n),
    labels=("y56cnyf",),
)


def _p2sq_rhs(n: int, m: int, scaled: bool = True) -> Fraction:
    def term(k: int) -> Fraction:
        val = O(_ceil_half(n + k))
        return val / (n + k) if scaled else val

    return ssum(0, m, lambda k: sign(k) * binomial(m, k) * term(k))


ident(
    "prop-4.3-power2-square", "4.3", "power2-square-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} \frac{2^{m+n+j-k}}{(m+n+j-k+1)^2} = \sum_{k=0}^m (-1)^k \binom{m}{k} O_{\lceil (n+k)/2 \rceil}",
    {"n": range(1, 16), "m": range(0, 7)},
    lambda n, m: dsum(n, lambda k, j: sign(j) * binomial(n, j) * _p2sq(m + n + j - k)),
    _p2sq_rhs,
    status="amended",
    printed_rhs=lambda n, m: _p2sq_rhs(n, m, scaled=False),
    witness={"n": 2, "m": 0},
    notes="Inherits the missing 1/(n+1) of the single-sum lemma: each O_{ceil((n+k)/2)} is divided by n + k.",
)


def _p2cube_rhs(n: int) -> Fraction:
    a, b = n // 2, _ceil_half(n)
    alt = ssum(1, n, lambda k: sign(k) * H(k) / k)
    return (
        (H(n) ** 2 + H(n, 2)) / (4 * n)
        - (H(a) ** 2 + H(a, 2)) / (8 * n)
        + (O(b) ** 2 + O(b, 2)) / (2 * n)
        + alt / (2 * n)
    )


ident(
    "prop-4.3-power2-cube", "4.3", "power2-cube-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} \frac{2^{n+j-k}}{(n+j-k+1)^3} = \frac{H_n^2+H_n^{(2)}}{4n} - \frac{H_{\lfloor n/2\rfloor}^2+H_{\lfloor n/2\rfloor}^{(2)}}{8n} + \frac{O_{\lceil n/2\rceil}^2+O_{\lceil n/2\rceil}^{(2)}}{2n} + \frac{1}{2n}\sum_{k=1}^n (-1)^k\frac{H_k}{k}",
    {"n": range(1, 31)},
    lambda n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * _p2cube(n + j - k)),
    _p2cube_rhs,
)

# -- plain harmonic numbers ---------------------------------------------------------------


def _hn_lhs(n: int, power: int = 1) -> Fraction:
    return dsum(n, lambda k, j: sign(j) * binomial(n, j) * H(n + j - k) ** power)


ident(
    "prop-4.3-harmonic-Hnjk", "4.3", "jw8f41m",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} H_{n+j-k} = -\frac{1}{n-1},\quad n \ne 1",
    {"n": range(2, 41), "r": R8},
    lambda n, r: _hn_lhs(n),
    lambda n, r: Fraction(-1, n - 1),
    notes="Neither side depends on r; the axis 0..8 is kept so the entry shares the grid of its harmonic neighbours.",
    labels=("jw8f41m",),
)

ident(
    "prop-4.3-harmonic-square", "4.3", "qwgdu5z",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} H_{n+j-k}^2 = \frac{H_{n-1}}{n-1} - \frac{2}{(n-1)^2},\quad n \ne 1",
    {"n": range(2, 41)},
    lambda n: _hn_lhs(n, 2),
    lambda n: H(n - 1) / (n - 1) - Fraction(2, (n - 1) ** 2),
    labels=("qwgdu5z",),
)

ident(
    "prop-4.3-harmonic-square-intermediate", "4.3", "qwgdu5z-intermediate",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} H_{n+j-k}^2 = -\frac{H_{n-1}}{n-1} + \sum_{k=1}^{n-2}\frac{1}{k(n-1-k)}",
    {"n": range(2, 41)},
    lambda n: _hn_lhs(n, 2),
    lambda n: -H(n - 1) / (n - 1) + ssum(1, n - 2, lambda k: Fraction(1, k * (n - 1 - k))),
)

ident(
    "prop-4.3-gt3kuk2", "4.3", "gt3kuk2",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j} H_{n+j-k} = (-1)^n 2^{n-1}\left(H_{n-1} - \sum_{k=1}^{n-1}\frac{1}{k2^k}\right)",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: sign(k) * binomial(n, j) * H(n + j - k)),
    lambda n: sign(n) * Fraction(2) ** (n - 1) * (H(n - 1) - ssum(1, n - 1, lambda k: Fraction(1, k * 2**k))),
    labels=("gt3kuk2",),
)


def _dh_alt_lhs(n: int) -> Fraction:
    return dsum(n, lambda k, j: sign(k) * n * binomial(n, j) / (k - j + 1) * H(k - j + 1))


def _dh_alt_rhs(n: int, lo: int = 1, sgn: int = -1) -> Fraction:
    return sgn * ssum(lo, n, lambda k: binomial(n, k) * Fraction((2 * k + 1) * (-2) ** (n - k), k * (k + 1) ** 2))


ident(
    "prop-4.3-double-harmonic-alt", "4.3", "double-harmonic-alternating",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \frac{n\binom{n}{j}}{k-j+1} H_{k-j+1} = \sum_{k=0}^n \binom{n}{k} \frac{(2k+1)(-2)^{n-k}}{k(k+1)^2}",
    {"n": N30},
    _dh_alt_lhs,
    _dh_alt_rhs,
    status="amended",
    printed_rhs=lambda n: _dh_alt_rhs(n, lo=0, sgn=1),
    witness={"n": 1},
    notes="Carries the amendment of the Beta-integral double harmonic corollary: "
    "the sum starts at k = 1 and the overall sign flips.",
)


def _triple(m: int, power: int) -> Fraction:
    return ssum(0, m, lambda n: _hn_lhs(n, power))


ident(
    "prop-4.3-triple-harmonic", "4.3", "triple-harmonic",
    r"\sum_{n=0}^m \sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} H_{n+j-k} = -H_{m-1}",
    {"m": range(1, 26)},
    lambda m: _triple(m, 1),
    lambda m: -H(m - 1),
)

ident(
    "prop-4.3-triple-harmonic-square", "4.3", "triple-harmonic-square",
    r"\sum_{n=0}^m \sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} H_{n+j-k}^2 = \frac12\left(H_{m-1}^2 - 3H_{m-1}^{(2)}\right)",
    {"m": range(1, 26)},
    lambda m: _triple(m, 2),
    lambda m: (H(m - 1) ** 2 - 3 * H(m - 1, 2)) / 2,
)

# -- Catalan numbers ---------------------------------------------------------------------


def _floor_binom(i: int) -> Fraction:
    return binomial(i, i // 2)


ident(
    "lem-4.4-w8utb12", "4.4", "w8utb12",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} 2^{-k}\binom{k}{\lfloor k/2 \rfloor} = 2^{-n} C_n",
    {"n": range(0, 41)},
    lambda n: transform_of(lambda k: _floor_binom(k) / 2**k, n),
    lambda n: C(n) / 2**n,
    labels=("w8utb12",),
)

ident(
    "lem-4.4-i1hknxb", "4.4", "i1hknxb",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} 2^{-k} C_{k+1} = [n \text{ odd}: 0;\ n \text{ even}: 2^{-n}C_{n/2}]",
    {"n": range(0, 41)},
    lambda n: transform_of(lambda k: C(k + 1) / 2**k, n),
    lambda n: ZERO if n % 2 else C(n // 2) / 2**n,
    labels=("i1hknxb",),
)

ident(
    "prop-4.4-catalan-floor", "4.4", "catalan-floor-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{-(m-k+j)} C_{m+n-k+j} = \sum_{k=0}^m (-1)^k \binom{m}{k} 2^{-(k-1)} \binom{n+k-1}{\lfloor (n+k-1)/2 \rfloor}",
    {"n": range(1, 13), "m": range(0, 7)},
    lambda n, m: dsum(n, lambda k, j: sign(j) * binomial(n, j) * Fraction(2) ** (k - j - m) * C(m + n - k + j)),
    lambda n, m: ssum(0, m, lambda k: sign(k) * binomial(m, k) * Fraction(2) ** (1 - k) * _floor_binom(n + k - 1)),
)

ident(
    "prop-4.4-catalan-half", "4.4", "catalan-half-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{-(n+j-k)} C_{n+j-k+1} = [n \text{ odd}: 2^{-(n-1)}C_{(n-1)/2};\ n \text{ even}: 0]",
    {"n": range(1, 41)},
    lambda n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * C(n + j - k + 1) / 2 ** (n + j - k)),
    lambda n: C((n - 1) // 2) / 2 ** (n - 1) if n % 2 else ZERO,
)

ident(
    "prop-4.4-catalan-floor-particular", "4.4", "catalan-floor-particular",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{-(n+j-k)} C_{n+j-k} = 2^{-(n-1)}\binom{n-1}{\lfloor (n-1)/2 \rfloor}",
    {"n": range(1, 41)},
    lambda n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * C(n + j - k) / 2 ** (n + j - k)),
    lambda n: _floor_binom(n - 1) / 2 ** (n - 1),
)

ident(
    "prop-4.4-catalan-cp", "4.4", "catalan-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} 2^{k-j} \frac{C_{n-k+j+1}}{k-j} = [n \text{ odd}: C_{n+1};\ n \text{ even}: C_{n/2} - C_{n+1}]",
    {"n": N0_30},
    lambda n: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * 2 ** (k - j) * C(n - k + j + 1) / (k - j)),
    lambda n: C(n + 1) if n % 2 else C(n // 2) - C(n + 1),
)


def _g0638ke_rhs(n: int, m: int) -> Fraction:
    return 4 ** (m + 1) * ssum(0, m, lambda k: sign(k) * binomial(m, k) * C(n + k) / 4**k)


ident(
    "prop-4.4-g0638ke", "4.4", "g0638ke",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{2(k-j)} C_{m+n-k+j+1} = 2^{2m+2}\sum_{k=0}^m (-1)^k \binom{m}{k} 2^{-2k} C_{n+k}",
    {"n": range(1, 13), "m": range(0, 7)},
    lambda n, m: dsum(n, lambda k, j: sign(j) * binomial(n, j) * 4 ** (k - j) * C(m + n - k + j + 1)),
    _g0638ke_rhs,
    status="edge-restricted",
    known_gaps=({"n": 0, "m": 0}, {"n": 0, "m": 1}),
    notes="Stated for n >= 0 but derived from a theorem needing n >= 1; at n = 0, m = 0 the sides are 1 and 4.",
    labels=("g0638ke",),
)


def _donaghey(i: int) -> Fraction:
    return C(i + 1) / 4**i


ident(
    "prop-4.4-sbl52oj", "4.4", "sbl52oj",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} \frac{2^{-2(m+n-k+j)}}{k-j} C_{m+n-k+j+1} = \sum_{k=0}^{m-1} (-1)^k \binom{m}{k} 2^{-2(k+n)} C_{k+n+1} + ((-1)^m - (-1)^n) 2^{-2(m+n)} C_{m+n+1}",
    {"n": range(0, 13), "m": range(0, 7)},
    lambda n, m: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * _donaghey(m + n - k + j) / (k - j)),
    lambda n, m: ssum(0, m - 1, lambda k: sign(k) * binomial(m, k) * _donaghey(k + n)) + (sign(m) - sign(n)) * _donaghey(m + n),
    labels=("sbl52oj",),
)

ident(
    "prop-4.4-catalan-4Cn", "4.4", "g0638ke-particular",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{2(k-j)} C_{n-k+j+1} = 4C_n",
    {"n": range(1, 61)},
    lambda n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * 4 ** (k - j) * C(n - k + j + 1)),
    lambda n: 4 * C(n),
    status="edge-restricted",
    known_gaps=({"n": 0},),
    notes="Fails at n = 0: the left side is C_1 = 1 and the right side 4.",
)

ident(
    "prop-4.4-sbl52oj-particular", "4.4", "sbl52oj-particular",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} \frac{2^{-2(n-k+j)}}{k-j} C_{n-k+j+1} = [n \text{ odd}: 2^{1-2n}C_{n+1};\ n \text{ even}: 0]",
    {"n": N0_30},
    lambda n: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * _donaghey(n - k + j) / (k - j)),
    lambda n: 2 * _donaghey(n) if n % 2 else ZERO,
)


def _cho(i: int) -> Fraction:
    return C(i + 1) * (H(i + 2) - O(i + 1))


ident(
    "lem-4.4-qhaw2rp", "4.4", "qhaw2rp",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} 2^{-k} C_{k+1} (H_{k+2} - O_{k+1}) = [n \text{ even}: 2^{-n-1}C_{n/2}H_{(n+2)/2};\ n \text{ odd}: 0]",
    {"n": N0_30},
    lambda n: transform_of(lambda k: _cho(k) / 2**k, n),
    lambda n: ZERO if n % 2 else C(n // 2) * H((n + 2) // 2) / 2 ** (n + 1),
    labels=("qhaw2rp",),
)

ident(
    "prop-4.4-catalan-harmonic", "4.4", "catalan-harmonic-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} 2^{-(j-k)} C_{n+j-k+1} (H_{n+j-k+2} - O_{n+j-k+1}) = [n \text{ odd}: C_{(n-1)/2}H_{(n+1)/2};\ n \text{ even}: 0]",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * Fraction(2) ** (k - j) * _cho(n + j - k)),
    lambda n: C((n - 1) // 2) * H((n + 1) // 2) if n % 2 else ZERO,
    status="edge-restricted",
    known_gaps=({"n": 0},),
    notes="Stated for n >= 0; at n = 0 the left side is C_1(H_2 - O_1) = 1/2 and the right side 0.",
)


def _codd(i: int) -> Fraction:
    return (2 * i + 1) * C(i) / 4**i * O(i + 1) / (i + 1)


ident(
    "lem-4.4-l6wv97g", "4.4", "l6wv97g",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} (2k+1)\frac{C_k}{2^{2k}}\frac{O_{k+1}}{k+1} = (2n+1)\frac{C_n}{2^{2n}}\frac{O_{n+1}}{n+1}",
    {"n": N0_30},
    lambda n: transform_of(_codd, n),
    lambda n: _codd(n),
    labels=("l6wv97g",),
)

ident(
    "prop-4.4-catalan-odd-harmonic", "4.4", "catalan-odd-harmonic-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} (2(m+n-k+j)+1)\frac{C_{m+n-k+j}}{2^{2(m+n-k+j)}}\frac{O_{m+n-k+j+1}}{m+n-k+j+1} = \sum_{k=0}^m (-1)^k \binom{m}{k} (2(k+n)-1)\frac{C_{k+n-1}}{2^{2(k+n-1)}}\frac{O_{k+n}}{k+n}",
    {"n": range(1, 13), "m": range(0, 7)},
    lambda n, m: dsum(n, lambda k, j: sign(j) * binomial(n, j) * _codd(m + n - k + j)),
    lambda n, m: ssum(0, m, lambda k: sign(k) * binomial(m, k) * _codd(n + k - 1)),
)
