"""Pair-generic double-sum identities and their polynomial kernels."""
from __future__ import annotations

from fractions import Fraction

from ..engine import thm31_rhs
from ..exact import binomial, sign
from ..sequences import harmonic as H
from .core import dsum, dsum_lower, ident, rats, ssum
from .pairsets import ANTI_SELF_INVERSE, GENERIC, SELF_INVERSE, SMALL

X_GRID = rats(-2, -1, "-1/2", 0, "1/3", "3/2", 2)
Y_GRID = rats(-3, -1, "-1/2", 0, "1/2", "2/3", 3)
T_GRID = rats(-2, "-1/2", 0, "1/3", 1, "3/2")

# -- the kernel identity and its x = 1 and x = 1/y relatives --------------------


def _thm31_lhs(n, x, y):
    total, xk = Fraction(0), Fraction(1)
    for k in range(n + 1):
        total += xk * ssum(0, k, lambda j: binomial(n, j) * y**j)
        xk *= x
    return total


ident(
    "thm-3.1", "3", "main_id1",
    r"\sum_{k=0}^n x^k \sum_{j=0}^k \binom{n}{j} y^j = \frac{1}{1-x}((1+xy)^n - x^{n+1}(1+y)^n)",
    {"n": range(0, 17), "x": X_GRID, "y": Y_GRID},
    _thm31_lhs,
    thm31_rhs,
    notes="x = 1 is singular for the closed form and is handled by cor-3.2.",
    labels=("main_id1", "double_sum"),
)

ident(
    "cor-3.2", "3", "gr3jv5j",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j (1-y)^j = n y^{n-1} + y^n",
    {"n": range(1, 17), "y": Y_GRID},
    lambda n, y: dsum(n, lambda k, j: binomial(n, j) * sign(j) * (1 - y) ** j),
    lambda n, y: n * y ** (n - 1) + y**n,
    notes="0^0 is read as 1, so n = 1, y = 0 is in the domain.",
    labels=("gr3jv5j",),
)

ident(
    "thm-3.4-reciprocal-kernel", "3", "hctczju",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j y^{n-k+j} = (1-y)^{n-1}",
    {"n": range(1, 17), "y": Y_GRID},
    lambda n, y: dsum(n, lambda k, j: binomial(n, j) * sign(j) * y ** (n - k + j)),
    lambda n, y: (1 - y) ** (n - 1),
    labels=("hctczju",),
)

ident(
    "lem-3.3-operator", "3", "main_lem",
    r"\mathcal L_y((1-y)^j) = \sigma_j",
    {"pair": GENERIC, "j": range(0, 13)},
    lambda pair, j: ssum(0, j, lambda k: binomial(j, k) * sign(k) * pair.s(k)),
    lambda pair, j: pair.sigma(j),
    notes="The operator maps y^k to s_k; expanding (1-y)^j termwise gives the left side.",
    labels=("main_lem",),
)

# -- Theorem on shifted pairs ----------------------------------------------------

ident(
    "thm-3.4-general", "3", "thm.qtnqdr9",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} s_{m+n-k+j} = \sum_{k=0}^m (-1)^k \binom{m}{k} \sigma_{n+k-1}",
    {"pair": GENERIC, "n": range(1, 11), "m": range(0, 7)},
    lambda pair, n, m: dsum(n, lambda k, j: sign(j) * binomial(n, j) * pair.s(m + n - k + j)),
    lambda pair, n, m: ssum(0, m, lambda k: sign(k) * binomial(m, k) * pair.sigma(n + k - 1)),
    labels=("thm.qtnqdr9",),
)

ident(
    "thm-3.4-particular", "3", "utju7bn",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} s_{n+j-k} = \sigma_{n-1}",
    {"pair": GENERIC, "n": range(1, 17)},
    lambda pair, n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * pair.s(n + j - k)),
    lambda pair, n: pair.sigma(n - 1),
    labels=("utju7bn",),
)


def _hw_rhs(pair, n):
    return pair.sigma(n - 1) * H(n - 1) - ssum(1, n - 1, lambda k: pair.sigma(n - 1 - k) / k)


ident(
    "cor-3.5-harmonic-weighted", "3", "vsjufnd",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{k} H_{n+j-k} s_{n+j-k} = \sigma_{n-1} H_{n-1} - \sum_{k=1}^{n-1} \frac{\sigma_{n-1-k}}{k}",
    {"pair": GENERIC, "n": range(1, 13)},
    lambda pair, n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * H(n + j - k) * pair.s(n + j - k)),
    _hw_rhs,
    status="amended",
    printed_lhs=lambda pair, n: dsum(n, lambda k, j: sign(j) * binomial(n, k) * H(n + j - k) * pair.s(n + j - k)),
    witness={"pair": "pair:ones-delta", "n": 2},
    notes="The binomial weight must be C(n,j), as in the particular theorem the proof substitutes into. "
    "The printed C(n,k) form stays evaluable through printed_lhs.",
    labels=("gca1g47", "vsjufnd"),
)

ident(
    "cor-3.5-boyadzhiev", "3", "harmonic-weighted-transform",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} H_k s_k = \sigma_n H_n - \sum_{k=1}^n \frac{\sigma_{n-k}}{k}",
    {"pair": GENERIC, "n": range(0, 13)},
    lambda pair, n: ssum(0, n, lambda k: sign(k) * binomial(n, k) * H(k) * pair.s(k)),
    lambda pair, n: pair.sigma(n) * H(n) - ssum(1, n, lambda k: pair.sigma(n - k) / k),
)

# -- products of two pairs ---------------------------------------------------------


def _diff(pair, i):
    # sigma_i - sigma_{i-1}, only ever requested with a vanishing prefactor at i = 0
    return pair.sigma(i) - pair.sigma(i - 1)


ident(
    "thm-3.6", "3", "2ndpart12asdszdfw",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j n \binom{n}{j} s_{k-j} t_{n-k+j} = \sum_{k=0}^n (-1)^k k \binom{n}{k} \tau_{n-k} (\sigma_k - \sigma_{k-1})",
    {"pair": SMALL, "pair2": SMALL, "n": range(0, 11)},
    lambda pair, pair2, n: dsum(n, lambda k, j: sign(j) * n * binomial(n, j) * pair.s(k - j) * pair2.s(n - k + j)),
    lambda pair, pair2, n: ssum(1, n, lambda k: sign(k) * k * binomial(n, k) * pair2.sigma(n - k) * _diff(pair, k)),
    notes="The k = 0 term carries the factor k and is omitted, so sigma_{-1} is never needed.",
    labels=("ef1drze", "2ndpart12asdszdfw"),
)

ident(
    "thm-3.6-general", "3", "2ndpart12asdszdfw_general",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j n \binom{n}{j} s_{m+k-j} t_{n-k+j} = \sum_{k=0}^n \sum_{j=0}^m (-1)^{k+j} k \binom{n}{k} \binom{m}{j} \tau_{n-k} (\sigma_{j+k} - \sigma_{j+k-1})",
    {"pair": SMALL, "pair2": SMALL, "n": range(0, 8), "m": range(0, 5)},
    lambda pair, pair2, n, m: dsum(n, lambda k, j: sign(j) * n * binomial(n, j) * pair.s(m + k - j) * pair2.s(n - k + j)),
    lambda pair, pair2, n, m: ssum(
        1, n, lambda k: ssum(
            0, m, lambda j: sign(k + j) * k * binomial(n, k) * binomial(m, j) * pair2.sigma(n - k) * _diff(pair, j + k)
        )
    ),
    labels=("2ndpart12asdszdfw_general",),
)

ident(
    "thm-3.6-intermediate", "3", "intermediate_identity",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j n \binom{n}{j} s_{k-j} t_{n-k+j} = \sum_{k=0}^n (-1)^{n-k} k \binom{n}{k} s_k t_{n-k}",
    {"pair": SMALL, "pair2": SMALL, "n": range(0, 11)},
    lambda pair, pair2, n: dsum(n, lambda k, j: sign(j) * n * binomial(n, j) * pair.s(k - j) * pair2.s(n - k + j)),
    lambda pair, pair2, n: ssum(0, n, lambda k: sign(n - k) * k * binomial(n, k) * pair.s(k) * pair2.s(n - k)),
    labels=("intermediate_identity",),
)

# -- corollaries with t_n = 1/n, 1, t^n --------------------------------------------

ident(
    "cor-3.7-general", "3", "cp9d6at",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} \frac{s_{m+n-k+j}}{k-j} = \sum_{k=0}^m (-1)^k \binom{m}{k} \sigma_{k+n} - (-1)^n s_{m+n}",
    {"pair": GENERIC, "n": range(0, 11), "m": range(0, 6)},
    lambda pair, n, m: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * pair.s(m + n - k + j) / (k - j)),
    lambda pair, n, m: ssum(0, m, lambda k: sign(k) * binomial(m, k) * pair.sigma(k + n)) - sign(n) * pair.s(m + n),
    labels=("cp9d6at",),
)

ident(
    "cor-3.7-particular", "3", "msdi8n1",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} \frac{s_{n-k+j}}{k-j} = \sigma_n - (-1)^n s_n",
    {"pair": GENERIC, "n": range(0, 17)},
    lambda pair, n: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * pair.s(n - k + j) / (k - j)),
    lambda pair, n: pair.sigma(n) - sign(n) * pair.s(n),
    labels=("msdi8n1",),
)


def _cp_lhs(seq, n, m):
    return dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * seq.s(m + n - k + j) / (k - j))


ident(
    "cor-3.8-self-general", "3", "eb6nqko",
    r"\text{self-inverse } s:\ \sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} \frac{s_{m+n-k+j}}{k-j} = \sum_{k=0}^{m-1} (-1)^k \binom{m}{k} s_{k+n} + ((-1)^m - (-1)^n) s_{m+n}",
    {"seq": SELF_INVERSE, "n": range(0, 11), "m": range(0, 6)},
    _cp_lhs,
    lambda seq, n, m: ssum(0, m - 1, lambda k: sign(k) * binomial(m, k) * seq.s(k + n)) + (sign(m) - sign(n)) * seq.s(m + n),
    notes="Sequences are drawn from catalog pairs whose two members coincide.",
    labels=("eb6nqko", "self"),
)

ident(
    "cor-3.8-anti-general", "3", "eb6nqko",
    r"\text{anti-self-inverse } s:\ \ldots = -\sum_{k=0}^{m-1} (-1)^k \binom{m}{k} s_{k+n} - ((-1)^m + (-1)^n) s_{m+n}",
    {"seq": ANTI_SELF_INVERSE, "n": range(0, 11), "m": range(0, 6)},
    _cp_lhs,
    lambda seq, n, m: -ssum(0, m - 1, lambda k: sign(k) * binomial(m, k) * seq.s(k + n)) - (sign(m) + sign(n)) * seq.s(m + n),
    notes="Sequences are drawn from catalog pairs with sigma = -s.",
    labels=("eb6nqko", "anti_self"),
)

ident(
    "cor-3.8-self-particular", "3", "eb6nqko",
    r"\text{self-inverse } s:\ \sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} \frac{s_{n-k+j}}{k-j} = [n \text{ even}: 0;\ n \text{ odd}: 2s_n]",
    {"seq": SELF_INVERSE, "n": range(0, 17)},
    lambda seq, n: _cp_lhs(seq, n, 0),
    lambda seq, n: 2 * seq.s(n) if n % 2 else Fraction(0),
    labels=("eb6nqko", "self"),
)

ident(
    "cor-3.8-anti-particular", "3", "eb6nqko",
    r"\text{anti-self-inverse } s:\ \ldots = [n \text{ even}: -2s_n;\ n \text{ odd}: 0]",
    {"seq": ANTI_SELF_INVERSE, "n": range(0, 17)},
    lambda seq, n: _cp_lhs(seq, n, 0),
    lambda seq, n: Fraction(0) if n % 2 else -2 * seq.s(n),
    labels=("eb6nqko", "anti_self"),
)

ident(
    "cor-3.9-general", "3", "cor_Ber_fin",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} s_{m+k-j} = (-1)^n \sum_{k=0}^m (-1)^k \binom{m}{k} (\sigma_{k+n} - \sigma_{k+n-1})",
    {"pair": GENERIC, "n": range(1, 11), "m": range(0, 6)},
    lambda pair, n, m: dsum(n, lambda k, j: sign(j) * binomial(n, j) * pair.s(m + k - j)),
    lambda pair, n, m: sign(n) * ssum(0, m, lambda k: sign(k) * binomial(m, k) * _diff(pair, k + n)),
    notes="n >= 1 so that sigma_{k+n-1} has a non-negative index.",
    labels=("cor_Ber_fin",),
)

ident(
    "cor-3.9-particular", "3", "b5uqn54",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} s_{k-j} = (-1)^n (\sigma_n - \sigma_{n-1})",
    {"pair": GENERIC, "n": range(1, 17)},
    lambda pair, n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * pair.s(k - j)),
    lambda pair, n: sign(n) * _diff(pair, n),
    notes="n >= 1 so that sigma_{n-1} has a non-negative index.",
    labels=("b5uqn54",),
)

ident(
    "cor-3.9-weighted-transform", "3", "k-weighted-transform",
    r"\sum_{k=0}^n \binom{n}{k} (-1)^k k s_k = n(\sigma_n - \sigma_{n-1})",
    {"pair": GENERIC, "n": range(1, 17)},
    lambda pair, n: ssum(0, n, lambda k: binomial(n, k) * sign(k) * k * pair.s(k)),
    lambda pair, n: n * _diff(pair, n),
)

ident(
    "cor-3.10", "3", "oolyn_s_sigma",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j n \binom{n}{j} t^{k-j} s_{n-k+j} = \sum_{k=1}^n (-1)^{k+1} k \binom{n}{k} \sigma_{n-k} t (1-t)^{k-1}",
    {"pair": GENERIC, "t": T_GRID, "n": range(0, 11)},
    lambda pair, t, n: dsum(n, lambda k, j: sign(j) * n * binomial(n, j) * t ** (k - j) * pair.s(n - k + j)),
    lambda pair, t, n: ssum(1, n, lambda k: sign(k + 1) * k * binomial(n, k) * pair.sigma(n - k) * t * (1 - t) ** (k - 1)),
    labels=("oolyn_s_sigma",),
)

# -- Beta-integral family ------------------------------------------------------------


def _beta_w(i, r, s):
    return (i + s) * binomial(i + r, i + s)


ident(
    "thm-3.11-beta-a", "3", "ds_binom_generalss",
    r"\sum_{k=0}^n\sum_{j=0}^k\frac{(-1)^j n\binom{n}{j}}{(k-j+s)\binom{k-j+r}{k-j+s}}s_{n-k+j} = \sum_{k=1}^n\frac{(-1)^{k+1}k\binom{n}{k}}{(s+1)\binom{r+k}{s+1}}\sigma_{n-k}",
    {"pair": SMALL, "r": range(1, 5), "s": range(1, 5), "n": range(0, 9)},
    lambda pair, r, s, n: dsum(n, lambda k, j: sign(j) * n * binomial(n, j) / _beta_w(k - j, r, s) * pair.s(n - k + j)),
    lambda pair, r, s, n: ssum(1, n, lambda k: sign(k + 1) * k * binomial(n, k) / ((s + 1) * binomial(r + k, s + 1)) * pair.sigma(n - k)),
    constraint=lambda pair, r, s, n: s <= r,
    notes="r, s instantiated at integers 1 <= s <= r, which covers s != 0 and r - s not a negative integer.",
    labels=("btp_harmonic", "ds_binom_generalss"),
)

ident(
    "thm-3.11-beta-b", "3", "ds_binom_generalss_b",
    r"\sum_{k=0}^n\sum_{j=0}^k\frac{(-1)^j n\binom{n}{j}(H_{r-s}-H_{k-j+r})}{(k-j+s)\binom{k-j+r}{k-j+s}}s_{n-k+j} = \sum_{k=1}^n\frac{(-1)^{k+1}k\binom{n}{k}(H_{r+k-s-1}-H_{r+k})}{(s+1)\binom{r+k}{s+1}}\sigma_{n-k}",
    {"pair": SMALL, "r": range(1, 5), "s": range(1, 5), "n": range(0, 9)},
    lambda pair, r, s, n: dsum(
        n, lambda k, j: sign(j) * n * binomial(n, j) * (H(r - s) - H(k - j + r)) / _beta_w(k - j, r, s) * pair.s(n - k + j)
    ),
    lambda pair, r, s, n: ssum(
        1, n, lambda k: sign(k + 1) * k * binomial(n, k) * (H(r + k - s - 1) - H(r + k))
        / ((s + 1) * binomial(r + k, s + 1)) * pair.sigma(n - k)
    ),
    constraint=lambda pair, r, s, n: s <= r,
    notes="r, s instantiated at integers 1 <= s <= r.",
    labels=("ds_binom_generalss_b",),
)


def _dh_lhs(pair, n):
    return dsum(n, lambda k, j: sign(j) * n * binomial(n, j) / (k - j + 1) * H(k - j + 1) * pair.s(n - k + j))


ident(
    "cor-3.12-double-harmonic", "3", "duble_harmonic",
    r"\sum_{k=0}^n\sum_{j=0}^k\frac{(-1)^{j}n\binom{n}{j}}{k-j+1}H_{k-j+1}s_{n-k+j} = \sum_{k=0}^n(-1)^{k}\binom{n}{k}\frac{2k+1}{k(k+1)^2}\sigma_{n-k}",
    {"pair": GENERIC, "n": range(0, 13)},
    _dh_lhs,
    lambda pair, n: ssum(1, n, lambda k: sign(k + 1) * binomial(n, k) * Fraction(2 * k + 1, k * (k + 1) ** 2) * pair.sigma(n - k)),
    status="amended",
    printed_rhs=lambda pair, n: ssum(0, n, lambda k: sign(k) * binomial(n, k) * Fraction(2 * k + 1, k * (k + 1) ** 2) * pair.sigma(n - k)),
    witness={"pair": "pair:alternating-power2", "n": 1},
    notes="Setting r = s = 1 in the Beta-integral identity gives the sum over k = 1..n with sign (-1)^(k+1); "
    "the printed right side starts at k = 0, where it divides by zero, and has the opposite sign.",
    labels=("duble_harmonic",),
)

# -- integrated kernels ------------------------------------------------------------------

ident(
    "cor-3.14-integrated-kernel", "3", "int_cor",
    r"\sum_{k=0}^n\sum_{j=0}^k(-1)^{j+1}\binom{n+1}{j+1} (1-y)^{j+1} = (n+1)y^n + y^{n+1} - (n+2)",
    {"n": range(1, 17), "y": Y_GRID},
    lambda n, y: dsum(n, lambda k, j: sign(j + 1) * binomial(n + 1, j + 1) * (1 - y) ** (j + 1)),
    lambda n, y: (n + 1) * y**n + y ** (n + 1) - (n + 2),
    labels=("int_cor",),
)

ident(
    "cor-3.14-integrated-pair", "3", "int_cor",
    r"\sum_{k=0}^n\sum_{j=0}^k (-1)^{j+1} \binom{n+1}{j+1} s_{j+1} = (n+1)\sigma_n + \sigma_{n+1} - (n+2)\sigma_0",
    {"pair": GENERIC, "n": range(1, 17)},
    lambda pair, n: dsum(n, lambda k, j: sign(j + 1) * binomial(n + 1, j + 1) * pair.s(j + 1)),
    lambda pair, n: (n + 1) * pair.sigma(n) + pair.sigma(n + 1) - (n + 2) * pair.sigma(0),
    labels=("int_cor",),
)

ident(
    "cor-3.15-twice-integrated-kernel", "3", "second-integration",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^{j} \binom{n+2}{j+2} (1-y)^{j+2} = (n+2)y^{n+1}+y^{n+2}-(n+2)^2y+n^2+3n+1",
    {"n": range(0, 17), "y": Y_GRID},
    lambda n, y: dsum(n, lambda k, j: sign(j) * binomial(n + 2, j + 2) * (1 - y) ** (j + 2)),
    lambda n, y: (n + 2) * y ** (n + 1) + y ** (n + 2) - (n + 2) ** 2 * y + n * n + 3 * n + 1,
    labels=("second-integration",),
)

ident(
    "cor-3.15-twice-integrated-pair", "3", "second-integration",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^{j} \binom{n+2}{j+2} s_{j+2} = (n+2)\sigma_{n+1}+\sigma_{n+2}+(n+2)^2s_1-(n+3)s_0",
    {"pair": GENERIC, "n": range(0, 17)},
    lambda pair, n: dsum(n, lambda k, j: sign(j) * binomial(n + 2, j + 2) * pair.s(j + 2)),
    lambda pair, n: (n + 2) * pair.sigma(n + 1) + pair.sigma(n + 2) + (n + 2) ** 2 * pair.s(1) - (n + 3) * pair.s(0),
    labels=("second-integration",),
)
