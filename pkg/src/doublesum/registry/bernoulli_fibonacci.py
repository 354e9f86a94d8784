"""Bernoulli-number and Fibonacci/Lucas/Gibonacci double sums."""
from __future__ import annotations

from fractions import Fraction

from ..exact import ZERO, binomial, qpow, sign
from ..sequences import bernoulli_number as B, bernoulli_poly_value, fibonacci as F, gibonacci, lucas as L
from .core import dsum, dsum_lower, ident, rats, ssum, transform_of

N30 = range(1, 31)


def _Bz(i: int) -> Fraction:
    # B_i, with B_{-1} only ever reached behind a vanishing prefactor
    return B(i) if i >= 0 else ZERO


# -- Bernoulli numbers ----------------------------------------------------------------

ident(
    "prop-4.1-bernoulli-shift", "4.1", "bernoulli-signed-shift",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j} B_{n+j-k} = -B_{n-1}",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: sign(k) * binomial(n, j) * B(n + j - k)),
    lambda n: -B(n - 1),
)

ident(
    "prop-4.1-bernoulli-2", "4.1", "bernoulli-power2",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^k 2^{n-k+j} B_{n-k+j} = (-1)^n (2 - 2^{n-1}) B_{n-1}",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: binomial(n, j) * sign(k) * 2 ** (n - k + j) * B(n - k + j)),
    lambda n: sign(n) * (2 - qpow(2, n - 1)) * B(n - 1),
)

ident(
    "prop-4.1-bernoulli-2-even", "4.1", "bernoulli-power2-even",
    r"n \text{ even}:\ \sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^k 2^{n-k+j} B_{n-k+j} = 0",
    {"n": range(2, 31, 2)},
    lambda n: dsum(n, lambda k, j: binomial(n, j) * sign(k) * 2 ** (n - k + j) * B(n - k + j)),
    lambda n: ZERO,
)

ident(
    "prop-4.1-bernoulli-reciprocal-poly", "4.1", "bernoulli-reciprocal-poly",
    r"\sum_{k=0}^n \binom{n}{k} y^k B_k = y^n B_n(1/y)",
    {"n": range(0, 21), "y": rats(2, -3, "1/2", "-2/5", 7)},
    lambda n, y: ssum(0, n, lambda k: binomial(n, k) * y**k * B(k)),
    lambda n, y: y**n * bernoulli_poly_value(n, 1 / y),
)


ident(
    "prop-4.1-bernoulli-2-pair", "4.1", "bernoulli-power2-pair",
    r"\sum_{k=0}^n \binom{n}{k} (-1)^k 2^k B_k = (-1)^n (2 - 2^n) B_n + 2n",
    {"n": range(0, 31)},
    lambda n: transform_of(lambda k: 2**k * B(k), n),
    lambda n: sign(n) * (2 - 2**n) * B(n) + 2 * n,
)

ident(
    "prop-4.1-bernoulli-2-alt", "4.1", "bernoulli-power2-alt",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j 2^{n-k+j} B_{n-k+j} = (-1)^{n-1} (2 - 2^{n-1}) B_{n-1} + 2(n-1)",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: binomial(n, j) * sign(j) * 2 ** (n - k + j) * B(n - k + j)),
    lambda n: sign(n - 1) * (2 - qpow(2, n - 1)) * B(n - 1) + 2 * (n - 1),
)

ident(
    "prop-4.1-bernoulli-2-alt-even", "4.1", "bernoulli-power2-alt-even",
    r"n \text{ even}:\ \sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j 2^{n-k+j} B_{n-k+j} = 2(n-1)",
    {"n": range(2, 31, 2)},
    lambda n: dsum(n, lambda k, j: binomial(n, j) * sign(j) * 2 ** (n - k + j) * B(n - k + j)),
    lambda n: Fraction(2 * (n - 1)),
)


def _genocchi(i: int) -> Fraction:
    return (2 ** (i + 1) - 1) * B(i + 1) / (i + 1)


ident(
    "prop-4.1-genocchi", "4.1", "bernoulli-genocchi",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^k (2^{n-k+j+1} - 1) \frac{B_{n-k+j+1}}{n-k+j+1} = (1 - 2^n) \frac{B_n}{n}",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: binomial(n, j) * sign(k) * (2 ** (n - k + j + 1) - 1) * B(n - k + j + 1) / (n - k + j + 1)),
    lambda n: (1 - 2**n) * B(n) / n,
)

ident(
    "prop-4.1-vrhyzb2", "4.1", "vrhyzb2",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j} (n+j-k) B_{n+j-k-1} = (n-1) B_{n-2}",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: sign(k) * binomial(n, j) * (n + j - k) * _Bz(n + j - k - 1)),
    lambda n: (n - 1) * _Bz(n - 2),
    notes="Terms whose index would be -1 carry the factor 0 and are dropped.",
    labels=("vrhyzb2",),
)


def _zir_printed(n: int) -> Fraction:
    if n % 2:
        return -(n - 1) * B(n - 1)
    if n == 2:
        return Fraction(-1, 2)
    return -(n - 1) * B(n - 2)


def _zir_rhs(n: int) -> Fraction:
    # the odd case drops B_{n-2}, which is only zero once n - 2 >= 3
    return Fraction(2, 3) if n == 3 else _zir_printed(n)


ident(
    "prop-4.1-zir34uy", "4.1", "zir34uy",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j} (n+j-k) B_{n+j-k} = [n \text{ odd}: -(n-1)B_{n-1};\ n>2 \text{ even}: -(n-1)B_{n-2};\ n=2: -1/2]",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: sign(k) * binomial(n, j) * (n + j - k) * B(n + j - k)),
    _zir_rhs,
    status="amended",
    printed_rhs=lambda n: _zir_printed(n),
    witness={"n": 3},
    notes="The uniform value is -(n-1)(B_{n-1} + B_{n-2}). The odd case drops B_{n-2}, "
    "which fails at n = 3 where B_1 = -1/2; the amended case split adds n = 3 with value 2/3.",
    labels=("zir34uy",),
)


ident(
    "prop-4.1-hmg5qf4", "4.1", "hmg5qf4",
    r"\sum_{k=0}^n \binom{n}{k} k B_k = (-1)^n n (B_n + B_{n-1})",
    {"n": N30},
    lambda n: ssum(0, n, lambda k: binomial(n, k) * k * B(k)),
    lambda n: sign(n) * n * (B(n) + B(n - 1)),
    labels=("hmg5qf4",),
)

ident(
    "prop-4.1-tv4r72c", "4.1", "tv4r72c",
    r"\sum_{k=1}^n \binom{n}{k} k B_{k-1} = (-1)^{n-1} n B_{n-1}",
    {"n": N30},
    lambda n: ssum(1, n, lambda k: binomial(n, k) * k * B(k - 1)),
    lambda n: sign(n - 1) * n * B(n - 1),
    labels=("tv4r72c",),
)

ident(
    "prop-4.1-self-inverse-bernoulli", "4.1", "bernoulli-self-inverse-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} \binom{n}{j} (-1)^k \frac{B_{n-k+j}}{k-j} = [n=1: -1;\ n\ge2: 0]",
    {"n": N30},
    lambda n: dsum_lower(n, lambda k, j: binomial(n, j) * sign(k) * B(n - k + j) / (k - j)),
    lambda n: Fraction(-1) if n == 1 else ZERO,
)

ident(
    "prop-4.1-self-inverse-genocchi", "4.1", "genocchi-self-inverse-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} \binom{n}{j} (-1)^k (2^{n-k+j+1}-1) \frac{B_{n-k+j+1}}{(n-k+j+1)(k-j)} = [n \text{ even}: 0;\ n \text{ odd}: 2(2^{n+1}-1)\frac{B_{n+1}}{n(n+1)}]",
    {"n": N30},
    lambda n: dsum_lower(n, lambda k, j: binomial(n, j) * sign(k) * _genocchi(n - k + j) / (k - j)),
    lambda n: ZERO if n % 2 == 0 else 2 * (2 ** (n + 1) - 1) * B(n + 1) / (n * (n + 1)),
)

ident(
    "prop-4.1-bernoulli-double", "4.1", "bernoulli-double",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^k B_{k-j} = B_n + B_{n-1}",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: binomial(n, j) * sign(k) * B(k - j)),
    lambda n: B(n) + B(n - 1),
)

ident(
    "prop-4.1-bernoulli-double-2", "4.1", "bernoulli-double-power2",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^k 2^{k-j} B_{k-j} = (-1)^n ((2-2^n)B_n - (2-2^{n-1})B_{n-1})",
    {"n": N30},
    lambda n: dsum(n, lambda k, j: binomial(n, j) * sign(k) * 2 ** (k - j) * B(k - j)),
    lambda n: sign(n) * ((2 - 2**n) * B(n) - (2 - qpow(2, n - 1)) * B(n - 1)),
)

# -- Fibonacci, Lucas, Gibonacci ----------------------------------------------------------

SEEDS = (rats(0, 1), rats(2, 1), rats(3, "-1/2"))
SEED_NAMES = ("fibonacci", "lucas", "gibonacci(3,-1/2)")


def _G(seed: str, i: int) -> Fraction:
    g0, g1 = SEEDS[SEED_NAMES.index(seed)]
    return gibonacci(g0, g1, i)


ident(
    "lem-4.2-gibonacci-binomial", "4.2", "4.2_first_identity",
    r"\sum_{k=m}^n (-1)^k \binom{n}{k}\binom{k}{m}\frac{G_{r+(k-m)t}}{L_t^k} = (-1)^{(n-m)t+m} \binom{n}{m}\frac{G_{r-(n-m)t}}{L_t^n}",
    {"G": SEED_NAMES, "m": range(0, 4), "n": range(0, 9), "r": range(-3, 4), "t": range(-2, 4)},
    lambda G, m, n, r, t: ssum(m, n, lambda k: sign(k) * binomial(n, k) * binomial(k, m) * _G(G, r + (k - m) * t) / L(t) ** k),
    lambda G, m, n, r, t: sign((n - m) * t + m) * binomial(n, m) * _G(G, r - (n - m) * t) / L(t) ** n,
    constraint=lambda G, m, n, r, t: m <= n,
    labels=("4.2_first_identity",),
)

ident(
    "prop-4.2-eeyr1j1", "4.2", "eeyr1j1",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} \binom{n-k+j}{m} L_t^{k-j} G_{r+(n-k+j-m)t} = (-1)^{(n-m-1)t+m} \binom{n-1}{m} L_t G_{r-(n-m-1)t}",
    {"G": SEED_NAMES, "m": range(0, 4), "n": range(1, 9), "r": range(-3, 4), "t": range(-2, 4)},
    lambda G, m, n, r, t: dsum(
        n, lambda k, j: sign(j) * binomial(n, j) * binomial(n - k + j, m) * qpow(L(t), k - j) * _G(G, r + (n - k + j - m) * t)
    ),
    lambda G, m, n, r, t: sign((n - m - 1) * t + m) * binomial(n - 1, m) * L(t) * _G(G, r - (n - m - 1) * t),
    labels=("eeyr1j1",),
)

ident(
    "prop-4.2-ibhbsoo", "4.2", "ibhbsoo",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{k-j} F_j = (-1)^n F_{2n-1}",
    {"n": range(1, 31)},
    lambda n: dsum(n, lambda k, j: sign(k) * binomial(n, k - j) * F(j)),
    lambda n: sign(n) * F(2 * n - 1),
    labels=("ibhbsoo",),
)

ident(
    "prop-4.2-n5ooj8u", "4.2", "n5ooj8u",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{k-j} L_j = (-1)^n L_{2n-1}",
    {"n": range(1, 31)},
    lambda n: dsum(n, lambda k, j: sign(k) * binomial(n, k - j) * L(j)),
    lambda n: sign(n) * L(2 * n - 1),
    labels=("n5ooj8u",),
)

ident(
    "prop-4.2-jvjrby6", "4.2", "jvjrby6",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j}\binom{n-k+j}{m} F^3_{n+j+r-k-m} = \frac{(-1)^m}{5}\binom{n-1}{m}((-1)^{n-m-1}2^{n-m-1}F_{n+3r-m-1} - (-1)^r 3F_{2(n-m-1)+r})",
    {"m": range(0, 4), "n": range(1, 11), "r": range(-3, 4)},
    lambda m, n, r: dsum(n, lambda k, j: sign(j) * binomial(n, j) * binomial(n - k + j, m) * F(n + j + r - k - m) ** 3),
    lambda m, n, r: sign(m) * Fraction(1, 5) * binomial(n - 1, m)
    * (sign(n - m - 1) * qpow(2, n - m - 1) * F(n + 3 * r - m - 1) - sign(r) * 3 * F(2 * (n - m - 1) + r)),
    labels=("jvjrby6",),
)

ident(
    "prop-4.2-oxhs032", "4.2", "oxhs032",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j}\binom{n-k+j}{m} L^3_{n+j+r-k-m} = (-1)^m\binom{n-1}{m}((-1)^{n-m-1}2^{n-m-1}L_{n+3r-m-1} + (-1)^r 3L_{2(n-m-1)+r})",
    {"m": range(0, 4), "n": range(1, 11), "r": range(-3, 4)},
    lambda m, n, r: dsum(n, lambda k, j: sign(j) * binomial(n, j) * binomial(n - k + j, m) * L(n + j + r - k - m) ** 3),
    lambda m, n, r: sign(m) * binomial(n - 1, m)
    * (sign(n - m - 1) * qpow(2, n - m - 1) * L(n + 3 * r - m - 1) + sign(r) * 3 * L(2 * (n - m - 1) + r)),
    labels=("oxhs032",),
)

ident(
    "prop-4.2-fibonacci-cube-particular", "4.2", "fibonacci-cube-particular",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j}\binom{n-k+j}{m} F^3_{n+k-m-j-2} = \frac{(-1)^n}{5}\binom{n-1}{m} 2^{n-m-1} F_{5(n-m-1)}",
    {"m": range(0, 4), "n": range(1, 11)},
    lambda m, n: dsum(n, lambda k, j: sign(k) * binomial(n, j) * binomial(n - k + j, m) * F(n + k - m - j - 2) ** 3),
    lambda m, n: sign(n) * Fraction(1, 5) * binomial(n - 1, m) * qpow(2, n - m - 1) * F(5 * (n - m - 1)),
)

ident(
    "prop-4.2-fibonacci-cube-special", "4.2", "fibonacci-cube-special",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j}\binom{n-k+j}{n-2} F^3_{k-j} = (-1)^n 2(n-1)",
    {"n": range(2, 21)},
    lambda n: dsum(n, lambda k, j: sign(k) * binomial(n, j) * binomial(n - k + j, n - 2) * F(k - j) ** 3),
    lambda n: sign(n) * 2 * (n - 1),
)


def _fib_cube_sigma(k, r):
    return Fraction(1, 5) * (sign(k) * qpow(2, k) * F(k + 3 * r) - sign(r) * 3 * F(2 * k + r))


def _luc_cube_sigma(k, r):
    return sign(k) * qpow(2, k) * L(k + 3 * r) + sign(r) * 3 * L(2 * k + r)


ident(
    "prop-4.2-glq7t03", "4.2", "glq7t03",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} F^3_{k+r} = \frac{1}{5}((-1)^n 2^n F_{n+3r} - (-1)^r 3F_{2n+r})",
    {"n": range(0, 21), "r": range(-4, 5)},
    lambda n, r: transform_of(lambda k: F(k + r) ** 3, n),
    lambda n, r: _fib_cube_sigma(n, r),
    labels=("glq7t03",),
)

ident(
    "prop-4.2-piuu548", "4.2", "piuu548",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} L^3_{k+r} = (-1)^n 2^n L_{n+3r} + (-1)^r 3L_{2n+r}",
    {"n": range(0, 21), "r": range(-4, 5)},
    lambda n, r: transform_of(lambda k: L(k + r) ** 3, n),
    lambda n, r: _luc_cube_sigma(n, r),
    labels=("piuu548",),
)

ident(
    "prop-4.2-gs5dmhf", "4.2", "gs5dmhf",
    r"s_k = \binom{k}{m} F^3_{k-m+r},\ \sigma_k = \frac{(-1)^m}{5}\binom{k}{m}((-1)^{k-m}2^{k-m}F_{k+3r-m} - (-1)^r 3F_{2k-2m+r})",
    {"m": range(0, 4), "n": range(0, 16), "r": range(-3, 4)},
    lambda m, n, r: transform_of(lambda k: binomial(k, m) * F(k - m + r) ** 3, n),
    lambda m, n, r: sign(m) * binomial(n, m) * _fib_cube_sigma(n - m, r),
    labels=("gs5dmhf",),
)

ident(
    "prop-4.2-vm8tp3m", "4.2", "vm8tp3m",
    r"s_k = \binom{k}{m} L^3_{k-m+r},\ \sigma_k = (-1)^m\binom{k}{m}((-1)^{k-m}2^{k-m}L_{k-m+3r} + (-1)^r 3L_{2k-2m+r})",
    {"m": range(0, 4), "n": range(0, 16), "r": range(-3, 4)},
    lambda m, n, r: transform_of(lambda k: binomial(k, m) * L(k - m + r) ** 3, n),
    lambda m, n, r: sign(m) * binomial(n, m) * _luc_cube_sigma(n - m, r),
    labels=("vm8tp3m",),
)

ident(
    "prop-4.2-fibonacci-cube-cp", "4.2", "fibonacci-cube-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} \frac{F^3_{n-k+j+r}}{k-j} = \frac{1}{5}((-1)^n 2^n F_{n+3r} - (-1)^r 3F_{2n+r}) - (-1)^n F^3_{n+r}",
    {"n": range(0, 13), "r": range(-3, 4)},
    lambda n, r: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * F(n - k + j + r) ** 3 / (k - j)),
    lambda n, r: _fib_cube_sigma(n, r) - sign(n) * F(n + r) ** 3,
)

ident(
    "prop-4.2-lucas-cube-cp", "4.2", "lucas-cube-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n \binom{n}{j} \frac{L^3_{n-k+j+r}}{k-j} = (-1)^n 2^n L_{n+3r} + (-1)^r 3L_{2n+r} - (-1)^n L^3_{n+r}",
    {"n": range(0, 13), "r": range(-3, 4)},
    lambda n, r: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * L(n - k + j + r) ** 3 / (k - j)),
    lambda n, r: _luc_cube_sigma(n, r) - sign(n) * L(n + r) ** 3,
)

ident(
    "prop-4.2-fibonacci-cube-cp-particular", "4.2", "fibonacci-cube-cp-particular",
    r"\sum_{k=1}^n (-1)^{k-1} \sum_{j=0}^{k-1} n \binom{n}{j} \frac{F^3_{k-j}}{k-j} = \frac{(-1)^{n+1}}{5}(2^n F_{2n} + 3F_n)",
    {"n": range(0, 21)},
    lambda n: dsum_lower(n, lambda k, j: sign(k - 1) * n * binomial(n, j) * F(k - j) ** 3 / (k - j)),
    lambda n: sign(n + 1) * Fraction(1, 5) * (2**n * F(2 * n) + 3 * F(n)),
)

ident(
    "prop-4.2-lucas-cube-cp-particular", "4.2", "lucas-cube-cp-particular",
    r"\sum_{k=1}^n (-1)^{n-k} \sum_{j=0}^{k-1} n \binom{n}{j} \frac{L^3_{k-j}}{k-j} = 2^n L_{2n} + 3L_n - 8",
    {"n": range(0, 21)},
    lambda n: dsum_lower(n, lambda k, j: sign(n - k) * n * binomial(n, j) * L(k - j) ** 3 / (k - j)),
    lambda n: 2**n * L(2 * n) + 3 * L(n) - 8,
)

ident(
    "prop-4.2-lucas-cp", "4.2", "lucas-self-inverse-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n\binom{n}{j}\frac{L_{n-k+j}}{k-j} = [n \text{ even}: 0;\ n \text{ odd}: 2L_n]",
    {"n": range(0, 31)},
    lambda n: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * L(n - k + j) / (k - j)),
    lambda n: 2 * L(n) if n % 2 else ZERO,
)

ident(
    "prop-4.2-fibonacci-cp", "4.2", "fibonacci-anti-self-inverse-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n\binom{n}{j}\frac{F_{n-k+j}}{k-j} = [n \text{ even}: -2F_n;\ n \text{ odd}: 0]",
    {"n": range(0, 31)},
    lambda n: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * F(n - k + j) / (k - j)),
    lambda n: ZERO if n % 2 else -2 * F(n),
)

ident(
    "prop-4.2-gibonacci-double", "4.2", "gibonacci-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} G_{r+k-j} = G_{r-n+2}",
    {"G": SEED_NAMES, "n": range(1, 21), "r": range(-4, 5)},
    lambda G, n, r: dsum(n, lambda k, j: sign(j) * binomial(n, j) * _G(G, r + k - j)),
    lambda G, n, r: _G(G, r - n + 2),
    status="edge-restricted",
    known_gaps=tuple({"G": g, "n": 0, "r": 0} for g in SEED_NAMES),
    notes="Stated for n >= 0 but derived from an identity needing sigma_{n-1}; at n = 0 the left side is G_r "
    "while the right side is G_{r+2}.",
)

ident(
    "prop-4.2-fibonacci-double", "4.2", "fibonacci-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} F_{k-j} = (-1)^{n-1} F_{n-2}",
    {"n": range(1, 41)},
    lambda n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * F(k - j)),
    lambda n: sign(n - 1) * F(n - 2),
    status="edge-restricted",
    known_gaps=({"n": 0},),
    notes="At n = 0 the left side is F_0 = 0 while the right side is -F_{-2} = 1.",
)

ident(
    "prop-4.2-lucas-double", "4.2", "lucas-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j \binom{n}{j} L_{k-j} = (-1)^n L_{n-2}",
    {"n": range(1, 41)},
    lambda n: dsum(n, lambda k, j: sign(j) * binomial(n, j) * L(k - j)),
    lambda n: sign(n) * L(n - 2),
    status="edge-restricted",
    known_gaps=({"n": 0},),
    notes="At n = 0 the left side is L_0 = 2 while the right side is L_{-2} = 3.",
)
