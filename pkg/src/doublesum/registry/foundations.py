"""Highlight identities, the shift and p-parameter identities, and sequence definitions."""
from __future__ import annotations

import math
from fractions import Fraction

from ..engine import hypergeometric_2f1_value, incomplete_binomial_sum
from ..exact import binomial, qpow, sign
from ..sequences import (
    bernoulli_number as B,
    bernoulli_poly_value as Bx,
    catalan,
    fibonacci as F,
    gibonacci,
    harmonic as H,
    lucas as L,
    odd_harmonic as O,
)
from .core import dsum, ident, rats, ssum, transform_of
from .pairsets import GENERIC, SMALL

P_VALUES = rats(2, "1/2", "-1/3", 3, "-5/2")
GRID5 = rats(-2, "-1/2", "1/3", "3/2", 4)

# -- transform pairs and the two basic pair identities ------------------------

ident(
    "intro-chen-shift", "1", "s4v4rqn",
    r"\sum_{k=0}^m \binom{m}{k} (-1)^k s_{n+k} = \sum_{j=0}^n \binom{n}{j} (-1)^j \sigma_{m+j}",
    {"pair": GENERIC, "m": range(0, 9), "n": range(0, 9)},
    lambda pair, m, n: ssum(0, m, lambda k: binomial(m, k) * sign(k) * pair.s(n + k)),
    lambda pair, m, n: ssum(0, n, lambda j: binomial(n, j) * sign(j) * pair.sigma(m + j)),
    labels=("s4v4rqn",),
)


def _p_left(pair, p, n, m, weight=binomial):
    # sigma rebuilt from raw s terms so this side shares nothing with a closed form
    inner = lambda j: ssum(0, m, lambda k: weight(m, k) * transform_of(pair.s, j + k) * qpow(p, -k))
    return qpow(p, n + m) * ssum(0, n, lambda j: binomial(n, j) * qpow(p, -j) * inner(j))


def _p_right(pair, p, n, m, weight=binomial):
    q = p + 1
    inner = lambda j: ssum(0, m, lambda k: weight(m, k) * sign(j + k) * pair.s(j + k) * qpow(q, -k))
    return qpow(q, n + m) * ssum(0, n, lambda j: binomial(n, j) * qpow(q, -j) * inner(j))


def _unit(m, k):
    return 1


ident(
    "intro-p-identity", "1", "p-identity",
    r"p^{n+m} \sum_j \binom{n}{j} p^{-j} \sum_k \sigma_{j+k} p^{-k} = (p+1)^{n+m} \sum_j \binom{n}{j} (p+1)^{-j} \sum_k (-1)^{j+k} s_{j+k} (p+1)^{-k}",
    {"pair": SMALL, "p": P_VALUES, "n": range(0, 6), "m": range(0, 5)},
    _p_left, _p_right,
    status="amended",
    printed_lhs=lambda pair, p, n, m: _p_left(pair, p, n, m, _unit),
    printed_rhs=lambda pair, p, n, m: _p_right(pair, p, n, m, _unit),
    witness={"pair": "pair:ones-delta", "p": 2, "n": 0, "m": 2},
    notes="Both inner sums over k need the weight C(m,k); as printed the identity holds only for m <= 1. "
    "p ranges over rationals other than 0 and -1.",
    labels=("p-identity",),
)

ident(
    "intro-p-particular", "1", "p-identity-particular",
    r"\sum_j \binom{n}{j} \sigma_j p^{n-j} = \sum_j \binom{n}{j} (-1)^j s_j (p+1)^{n-j}",
    {"pair": GENERIC, "p": rats(0, -1, *P_VALUES), "n": range(0, 11)},
    lambda pair, p, n: ssum(0, n, lambda j: binomial(n, j) * transform_of(pair.s, j) * p ** (n - j)),
    lambda pair, p, n: ssum(0, n, lambda j: binomial(n, j) * sign(j) * pair.s(j) * (p + 1) ** (n - j)),
    labels=("p-identity-particular",),
)

# -- incomplete binomial row as a Gauss hypergeometric value -------------------

_EPS = 1e-12


def _close(a: Fraction, b: Fraction) -> bool:
    return abs(float(a) - float(b)) <= 10 * _EPS * abs(float(a))


ident(
    "intro-2f1-incomplete-row", "1", "2f1-incomplete-row",
    r"\sum_{j=0}^{k} \binom{n}{j} y^j = \frac{y^{k+1}}{y+1} \binom{n}{k} {}_2F_1(1,n+1;n+1-k;\tfrac{1}{y+1})",
    {"n": range(0, 16), "k": range(0, 16), "y": rats(2, 3, 10)},
    lambda n, k, y: incomplete_binomial_sum(n, k, y),
    lambda n, k, y: Fraction(hypergeometric_2f1_value(n, k, y, _EPS)),
    constraint=lambda n, k, y: k <= n,
    compare=_close,
    notes="Floating-point series truncated at relative term size 1e-12; compared within relative error 1e-11.",
    labels=("2f1",),
)

# -- the four highlighted double sums ------------------------------------------

ident(
    "intro-bernoulli-double", "1", "highlight-bernoulli",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^k B_{k-j} = B_n + B_{n-1}",
    {"n": range(1, 61)},
    lambda n: dsum(n, lambda k, j: binomial(n, j) * sign(k) * B(k - j)),
    lambda n: B(n) + B(n - 1),
)


def _fib_double(n: int) -> Fraction:
    # every term is an integer, so accumulate in int to keep n = 200 fast
    fib = [int(F(i)) for i in range(n + 1)]
    row = [math.comb(n, j) * (-1) ** j for j in range(n + 1)]
    total = sum(row[j] * fib[k - j] for k in range(n + 1) for j in range(k + 1))
    return Fraction(total)


ident(
    "intro-fibonacci-double", "1", "highlight-fibonacci",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j F_{k-j} = (-1)^{n-1} F_{n-2}",
    {"n": range(1, 201)},
    _fib_double,
    lambda n: sign(n - 1) * F(n - 2),
)


def _harm_highlight_rhs(n: int, r: int) -> Fraction:
    if n == 1:
        return sign(n) * -H(r + 1)
    return sign(n) * (Fraction(1, n - 1) / binomial(n + r - 1, r) - Fraction(1, n) / binomial(n + r, r))


ident(
    "intro-harmonic-double", "1", "highlight-harmonic",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j H_{k+r-j} = (-1)^n [n=1: -H_{r+1};\ n\ge2: \frac{1}{n-1}\binom{n+r-1}{r}^{-1} - \frac{1}{n}\binom{n+r}{r}^{-1}]",
    {"n": range(1, 61), "r": range(0, 9)},
    lambda n, r: dsum(n, lambda k, j: binomial(n, j) * sign(j) * H(k + r - j)),
    _harm_highlight_rhs,
    notes="r instantiated at integers 0..8.",
)

ident(
    "intro-catalan-double", "1", "highlight-catalan",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j 2^{2(k-j)} C_{n-k+j+1} = 4C_n",
    {"n": range(1, 101)},
    lambda n: dsum(n, lambda k, j: binomial(n, j) * sign(j) * 4 ** (k - j) * catalan(n - k + j + 1)),
    lambda n: 4 * catalan(n),
    status="edge-restricted",
    known_gaps=({"n": 0},),
    notes="Fails at n = 0 (lhs C_1 = 1, rhs 4); the underlying theorem needs n >= 1.",
)

# -- preliminaries: definitions cross-checked against independent forms -----

ident(
    "prelim-catalan-recursion", "2", "catalan-recursion",
    r"C_n = \frac{2(2n-1)}{n+1} C_{n-1} = \frac{1}{n+1}\binom{2n}{n}",
    {"n": range(0, 201)},
    lambda n: catalan(n),
    lambda n: binomial(2 * n, n) / (n + 1),
)

ident(
    "prelim-bernoulli-explicit", "2", "nskd3u8",
    r"B_n(x) = \sum_{k=0}^n \binom{n}{k} B_k x^{n-k}",
    {"n": range(0, 21), "x": GRID5},
    lambda n, x: ssum(0, n, lambda k: binomial(n, k) * B(k) * x ** (n - k)),
    lambda n, x: Bx(n, x),
    labels=("nskd3u8",),
)


def _bernoulli_shift_lhs(n, x, y):
    return ssum(0, n, lambda k: binomial(n, k) * Bx(k, x) * y ** (n - k))


ident(
    "prelim-bernoulli-addition", "2", "de8ucu6",
    r"B_n(x+y) = \sum_{k=0}^n \binom{n}{k} B_k(x) y^{n-k}",
    {"n": range(0, 21), "x": GRID5, "y": GRID5},
    _bernoulli_shift_lhs,
    lambda n, x, y: Bx(n, x + y),
    labels=("de8ucu6",),
)

ident(
    "prelim-bernoulli-unit-shift", "2", "bernoulli-unit-shift",
    r"B_n(x+1) = \sum_{k=0}^n \binom{n}{k} B_k(x)",
    {"n": range(0, 21), "x": GRID5},
    lambda n, x: ssum(0, n, lambda k: binomial(n, k) * Bx(k, x)),
    lambda n, x: Bx(n, x + 1),
)

ident(
    "prelim-bernoulli-transform", "2", "Ber_bt",
    r"\sum_{k=0}^n \binom{n}{k} B_k = (-1)^n B_n",
    {"n": range(0, 61)},
    lambda n: ssum(0, n, lambda k: binomial(n, k) * B(k)),
    lambda n: sign(n) * B(n),
    labels=("Ber_bt",),
)

ident(
    "prelim-fibonacci-negative", "2", "fibonacci-negative-index",
    r"F_{-n} = (-1)^{n-1} F_n",
    {"n": range(0, 41)},
    lambda n: F(-n),
    lambda n: sign(n - 1) * F(n),
)

ident(
    "prelim-lucas-negative", "2", "lucas-negative-index",
    r"L_{-n} = (-1)^n L_n",
    {"n": range(0, 41)},
    lambda n: L(-n),
    lambda n: sign(n) * L(n),
)

ident(
    "prelim-gibonacci-linear", "2", "gibonacci-definition",
    r"G_k = G_{k-1} + G_{k-2},\ G_n = G_0 F_{n-1} + G_1 F_n",
    {"g0": rats(0, 2, "3/2", -1), "g1": rats(1, "-1/3", 4), "n": range(-20, 21)},
    lambda g0, g1, n: gibonacci(g0, g1, n),
    lambda g0, g1, n: g0 * F(n - 1) + g1 * F(n),
)

ident(
    "prelim-harmonic-orders", "2", "harmonic-definition",
    r"H_n^{(m)} = \sum_{j=1}^n j^{-m},\ O_n^{(m)} = \sum_{j=1}^n (2j-1)^{-m}",
    {"n": range(0, 31), "m": range(1, 5)},
    lambda n, m: ssum(1, 2 * n, lambda j: Fraction(1, j**m)),
    lambda n, m: O(n, m) + H(n, m) / 2**m,
    notes="Checked through the split of H_{2n}^{(m)} into odd and even reciprocals.",
)
