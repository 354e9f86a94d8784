"""Catalog of known binomial transform pairs.

Each factory builds a :class:`TransformPair` and re-checks the transform
relation on 0..16 before handing it out.  Pairs are addressed by text ids
such as ``pair:bernoulli-signed`` or ``pair:horadam(a=0,b=1,p=1,q=-1)``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .exact import ONE, ZERO, Q, binomial, factorial, gen_binomial, kronecker_delta, sign
from .sequences import (
    bernoulli_number,
    bernoulli_poly,
    catalan,
    gibonacci,
    harmonic,
    horadam,
    lucas,
    mstep,
    odd_harmonic,
    stirling2,
)
from .transforms import DEFAULT_CHECK_RANGE, TransformPair

B = bernoulli_number
PairFactory = Callable[..., TransformPair]

_FACTORIES: dict[str, tuple[PairFactory, dict]] = {}


def _pair(name: str, **defaults):
    def deco(f: PairFactory) -> PairFactory:
        _FACTORIES[name] = (f, defaults)
        return f

    return deco


def _memo(f: Callable[[int], Fraction]) -> Callable[[int], Fraction]:
    return lru_cache(maxsize=None)(f)


def _build(label: str, s, sigma) -> TransformPair:
    return TransformPair(_memo(s), _memo(sigma), label)


# --- elementary -------------------------------------------------------------


@_pair("ones-delta")
def ones_delta() -> TransformPair:
    return _build("pair:ones-delta", lambda n: ONE, lambda n: kronecker_delta(n, 0))


@_pair("alternating-power2")
def alternating_power2() -> TransformPair:
    return _build("pair:alternating-power2", lambda n: Fraction(sign(n)), lambda n: Fraction(2) ** n)


# --- Bernoulli --------------------------------------------------------------


@_pair("bernoulli-signed")
def bernoulli_signed() -> TransformPair:
    f = lambda n: sign(n) * B(n)
    return _build("pair:bernoulli-signed", f, f)


@_pair("bernoulli-signed-2")
def bernoulli_signed_2() -> TransformPair:
    return _build(
        "pair:bernoulli-signed-2",
        lambda n: sign(n) * 2**n * B(n),
        lambda n: (2 - Fraction(2) ** n) * B(n),
    )


@_pair("bernoulli-2")
def bernoulli_2() -> TransformPair:
    return _build(
        "pair:bernoulli-2",
        lambda n: 2**n * B(n),
        lambda n: sign(n) * (2 - Fraction(2) ** n) * B(n) + 2 * n,
    )


@_pair("bernoulli-genocchi")
def bernoulli_genocchi() -> TransformPair:
    f = lambda n: sign(n + 1) * (2 ** (n + 1) - 1) * B(n + 1) / (n + 1)
    return _build("pair:bernoulli-genocchi", f, f)


@_pair("bernoulli-poly", x=Fraction(1, 2), y=Fraction(1, 3))
def bernoulli_poly_pair(x, y) -> TransformPair:
    x, y = Q(x), Q(y)
    if x == 0:
        raise ValueError("bernoulli-poly pair needs x != 0")
    return _build(
        f"pair:bernoulli-poly(x={x},y={y})",
        lambda n: sign(n) * bernoulli_poly(n)(y) / x**n,
        lambda n: bernoulli_poly(n)(x + y) / x**n,
    )


@_pair("bernoulli-poly-shift", r=3)
def bernoulli_poly_shift(r) -> TransformPair:
    r = int(r)
    Br = bernoulli_poly(r)

    def sigma(n: int) -> Fraction:
        if n == 0:
            return Br(1)
        return sign(n) * factorial(n - 1) * r * stirling2(r, n)

    return _build(f"pair:bernoulli-poly-shift(r={r})", lambda n: Br(n + 1), sigma)


@_pair("bernoulli-poly-shift-div", r=3)
def bernoulli_poly_shift_div(r) -> TransformPair:
    r = int(r)
    Br = bernoulli_poly(r)

    def sigma(n: int) -> Fraction:
        tail = ZERO if r == 0 else sign(n) * factorial(n) / (n + 1) * r * stirling2(r - 1, n)
        return B(r) / (n + 1) + tail

    return _build(f"pair:bernoulli-poly-shift-div(r={r})", lambda n: Br(n + 1) / (n + 1), sigma)


# --- Fibonacci / Lucas / Gibonacci -----------------------------------------


@_pair("gibonacci-shift", g0=0, g1=1, r=0)
def gibonacci_shift(g0, g1, r) -> TransformPair:
    g0, g1, r = Q(g0), Q(g1), int(r)
    return _build(
        f"pair:gibonacci-shift(g0={g0},g1={g1},r={r})",
        lambda k: gibonacci(g0, g1, r + k),
        lambda k: sign(k) * gibonacci(g0, g1, r - k),
    )


@_pair("gibonacci-lucas-t", g0=0, g1=1, m=0, r=0, t=1)
def gibonacci_lucas_t(g0, g1, m, r, t) -> TransformPair:
    g0, g1, m, r, t = Q(g0), Q(g1), int(m), int(r), int(t)
    Lt = lucas(t)
    if Lt == 0:
        raise ValueError("L_t vanishes")
    G = lambda i: gibonacci(g0, g1, i)
    return _build(
        f"pair:gibonacci-lucas-t(g0={g0},g1={g1},m={m},r={r},t={t})",
        lambda k: binomial(k, m) * G(r + (k - m) * t) / Lt**k,
        lambda k: sign((k - m) * t + m) * binomial(k, m) * G(r - (k - m) * t) / Lt**k,
    )


@_pair("fibonacci-cube", m=0, r=0)
def fibonacci_cube(m, r) -> TransformPair:
    m, r = int(m), int(r)
    F = lambda i: gibonacci(0, 1, i)
    return _build(
        f"pair:fibonacci-cube(m={m},r={r})",
        lambda k: binomial(k, m) * F(k - m + r) ** 3,
        lambda k: sign(m) * binomial(k, m) / 5
        * (sign(k - m) * Fraction(2) ** (k - m) * F(k + 3 * r - m) - sign(r) * 3 * F(2 * k - 2 * m + r)),
    )


@_pair("lucas-cube", m=0, r=0)
def lucas_cube(m, r) -> TransformPair:
    m, r = int(m), int(r)
    return _build(
        f"pair:lucas-cube(m={m},r={r})",
        lambda k: binomial(k, m) * lucas(k - m + r) ** 3,
        lambda k: sign(m) * binomial(k, m)
        * (sign(k - m) * Fraction(2) ** (k - m) * lucas(k - m + 3 * r) + sign(r) * 3 * lucas(2 * k - 2 * m + r)),
    )


# --- harmonic ---------------------------------------------------------------


@_pair("harmonic-r", r=0)
def harmonic_r(r) -> TransformPair:
    r = int(r)
    if r < 0:
        raise ValueError("exact mode needs integer r >= 0")

    def sigma(n: int) -> Fraction:
        d = kronecker_delta(n, 0)
        return (d * (1 + harmonic(r)) - 1) / (n + d) / binomial(n + r, r)

    return _build(f"pair:harmonic-r(r={r})", lambda n: harmonic(n + r), sigma)


@_pair("harmonic")
def harmonic_plain() -> TransformPair:
    return _build("pair:harmonic", lambda n: harmonic(n), lambda n: ZERO if n == 0 else Fraction(-1, n))


@_pair("odd-harmonic")
def odd_harmonic_pair() -> TransformPair:
    def tau(n: int) -> Fraction:
        d = kronecker_delta(n, 0)
        return -(1 - d) / (n + d) / binomial(2 * n, n) * Fraction(2) ** (2 * n - 1)

    return _build("pair:odd-harmonic", lambda n: odd_harmonic(n), tau)


@_pair("central-harmonic-odd")
def central_harmonic_odd() -> TransformPair:
    def sigma(n: int) -> Fraction:
        if n % 2:
            return ZERO
        return Fraction(1, 2 ** (n + 1)) * binomial(n, n // 2) * harmonic(n // 2)

    return _build(
        "pair:central-harmonic-odd",
        lambda k: binomial(2 * k, k) / 2**k * (harmonic(k) - odd_harmonic(k)),
        sigma,
    )


@_pair("power2-over-square")
def power2_over_square() -> TransformPair:
    return _build(
        "pair:power2-over-square",
        lambda k: Fraction(2**k, (k + 1) ** 2),
        lambda n: odd_harmonic((n + 2) // 2) / (n + 1),
    )


def _ceil_half(n: int) -> int:
    return -(-n // 2)


@_pair("power2-over-cube")
def power2_over_cube() -> TransformPair:
    def sigma(n: int) -> Fraction:
        h = harmonic(n + 1)
        c = _ceil_half(n)
        o = odd_harmonic((n + 2) // 2)
        alt = sum((sign(k) * harmonic(k + 1) / (k + 1) for k in range(n + 1)), ZERO)
        return (
            Fraction(1, 4) * (h**2 + harmonic(n + 1, 2)) / (n + 1)
            - Fraction(1, 8) * (harmonic(c) ** 2 + harmonic(c, 2)) / (n + 1)
            + Fraction(1, 2) * (o**2 + odd_harmonic((n + 2) // 2, 2)) / (n + 1)
            - alt / (2 * (n + 1))
        )

    return _build("pair:power2-over-cube", lambda k: Fraction(2**k, (k + 1) ** 3), sigma)


# --- Catalan ----------------------------------------------------------------


@_pair("catalan-floor")
def catalan_floor() -> TransformPair:
    return _build(
        "pair:catalan-floor",
        lambda k: binomial(k, k // 2) / 2**k,
        lambda n: catalan(n) / 2**n,
    )


@_pair("catalan-half")
def catalan_half() -> TransformPair:
    return _build(
        "pair:catalan-half",
        lambda k: catalan(k + 1) / 2**k,
        lambda n: ZERO if n % 2 else catalan(n // 2) / 2**n,
    )


@_pair("catalan-donaghey")
def catalan_donaghey() -> TransformPair:
    f = lambda k: catalan(k + 1) / 4**k
    return _build("pair:catalan-donaghey", f, f)


@_pair("catalan-harmonic-odd")
def catalan_harmonic_odd() -> TransformPair:
    return _build(
        "pair:catalan-harmonic-odd",
        lambda k: catalan(k + 1) / 2**k * (harmonic(k + 2) - odd_harmonic(k + 1)),
        lambda n: ZERO if n % 2 else catalan(n // 2) * harmonic((n + 2) // 2) / 2 ** (n + 1),
    )


@_pair("catalan-odd-harmonic")
def catalan_odd_harmonic() -> TransformPair:
    f = lambda k: (2 * k + 1) * catalan(k) / 4**k * odd_harmonic(k + 1) / (k + 1)
    return _build("pair:catalan-odd-harmonic", f, f)


# --- Stirling ---------------------------------------------------------------


@_pair("power-stirling", r=3)
def power_stirling(r) -> TransformPair:
    r = int(r)
    return _build(
        f"pair:power-stirling(r={r})",
        lambda k: Fraction(k**r),
        lambda n: sign(n) * factorial(n) * stirling2(r, n),
    )


@_pair("power-stirling-shift", r=3)
def power_stirling_shift(r) -> TransformPair:
    r = int(r)
    if r < 1:
        raise ValueError("power-stirling-shift needs r >= 1")
    return _build(
        f"pair:power-stirling-shift(r={r})",
        lambda k: Fraction((k + 1) ** (r - 1)),
        lambda n: sign(n) * factorial(n) * stirling2(r, n + 1),
    )


@_pair("stirling-ratio", r=1, s=2)
def stirling_ratio(r, s) -> TransformPair:
    r, s_ = int(r), int(s)
    if s_ < r:
        raise ValueError("stirling-ratio needs s >= r")
    return _build(
        f"pair:stirling-ratio(r={r},s={s_})",
        lambda k: stirling2(k + r + 1, s_ + 1) / binomial(k + r, r),
        lambda n: sign(n) * stirling2(n + r, s_) / binomial(n + r, r),
    )


@_pair("beta-power", r=2, m=2)
def beta_power(r, m) -> TransformPair:
    r, m = Q(r), int(m)
    if r < 0 and r.denominator == 1:
        raise ValueError("r must not be a negative integer")

    def s(k: int) -> Fraction:
        return Fraction(k**m) / gen_binomial(k + r, k)

    def sigma(n: int) -> Fraction:
        acc = sum((gen_binomial(-r, n - k) * stirling2(m, k) * factorial(k) for k in range(min(m, n) + 1)), ZERO)
        return acc / gen_binomial(-r - 1, n)

    return _build(f"pair:beta-power(r={r},m={m})", s, sigma)


# --- m-step -----------------------------------------------------------------


def _seed(seed) -> tuple[Fraction, ...]:
    if isinstance(seed, str):
        seed = seed.strip("[]").split(";" if ";" in seed else ",")
    return tuple(Q(v) for v in seed)


@_pair("mstep-double", seed=(0, 0, 1))
def mstep_double(seed) -> TransformPair:
    w = _seed(seed)
    m = len(w)
    return _build(
        f"pair:mstep-double(seed=[{';'.join(map(str, w))}])",
        lambda k: 2**k * mstep(w, m * k),
        lambda n: sign(n) * mstep(w, (m + 1) * n),
    )


@_pair("mstep-half", seed=(0, 0, 1))
def mstep_half(seed) -> TransformPair:
    w = _seed(seed)
    m = len(w)
    return _build(
        f"pair:mstep-half(seed=[{';'.join(map(str, w))}])",
        lambda k: mstep(w, k) / 2**k,
        lambda n: mstep(w, -m * n) / 2**n,
    )


# --- Horadam ----------------------------------------------------------------


def _horadam_args(a, b, p, q):
    a, b, p, q = Q(a), Q(b), Q(p), Q(q)
    if p == 0 or q == 0:
        raise ValueError("Horadam pairs need p != 0 and q != 0")
    return a, b, p, q


def _hlabel(name, a, b, p, q) -> str:
    return f"pair:{name}(a={a},b={b},p={p},q={q})"


@_pair("horadam", a=0, b=1, p=1, q=-1)
def horadam_pair(a, b, p, q) -> TransformPair:
    a, b, p, q = _horadam_args(a, b, p, q)
    w = lambda n: horadam(a, b, p, q, n)
    return _build(_hlabel("horadam", a, b, p, q), lambda n: (p / q) ** n * w(n), lambda n: sign(n) * w(2 * n) / q**n)


@_pair("horadam-x1", a=0, b=1, p=1, q=-1)
def horadam_x1(a, b, p, q) -> TransformPair:
    a, b, p, q = _horadam_args(a, b, p, q)
    w = lambda n: horadam(a, b, p, q, n)
    return _build(
        _hlabel("horadam-x1", a, b, p, q),
        lambda n: ((p * p - q) / (p * q)) ** n * w(n),
        lambda n: w(3 * n) / (-p * q) ** n,
    )


@_pair("horadam-x2", a=0, b=1, p=1, q=-1)
def horadam_x2(a, b, p, q) -> TransformPair:
    a, b, p, q = _horadam_args(a, b, p, q)
    w = lambda n: horadam(a, b, p, q, n)
    return _build(
        _hlabel("horadam-x2", a, b, p, q),
        lambda n: ((p * p - q) / q**2) ** n * w(2 * n),
        lambda n: sign(n) * (p / q**2) ** n * w(3 * n),
    )


@_pair("horadam-x3", a=0, b=1, p=1, q=-1)
def horadam_x3(a, b, p, q) -> TransformPair:
    a, b, p, q = _horadam_args(a, b, p, q)
    if p * p == q or p * p == 2 * q:
        raise ValueError("horadam-x3 needs p^2 != q and p^2 != 2q")
    w = lambda n: horadam(a, b, p, q, n)
    return _build(
        _hlabel("horadam-x3", a, b, p, q),
        lambda n: (p * (p * p - 2 * q) / (q * (p * p - q))) ** n * w(n),
        lambda n: sign(n) * w(4 * n) / (q * (p * p - q)) ** n,
    )


@_pair("horadam-x4", a=0, b=1, p=1, q=-1)
def horadam_x4(a, b, p, q) -> TransformPair:
    a, b, p, q = _horadam_args(a, b, p, q)
    w = lambda n: horadam(a, b, p, q, n)
    return _build(
        _hlabel("horadam-x4", a, b, p, q),
        lambda n: ((p * p - 2 * q) / q**2) ** n * w(2 * n),
        lambda n: sign(n) * w(4 * n) / q ** (2 * n),
    )


EXTRA_HORADAM = ("horadam-x1", "horadam-x2", "horadam-x3", "horadam-x4")


# --- lookup -----------------------------------------------------------------

_ID_RE = re.compile(r"^pair:(?P<name>[a-z0-9-]+)(?:\((?P<args>.*)\))?$")


def pair_names() -> list[str]:
    return sorted(_FACTORIES)


def make_pair(name: str, validate: bool = True, check_range: int = DEFAULT_CHECK_RANGE, **params) -> TransformPair:
    """Build a cataloged pair by name; validates the transform relation unless told not to."""
    try:
        factory, defaults = _FACTORIES[name]
    except KeyError:
        raise KeyError(f"unknown transform pair: {name!r}") from None
    unknown = set(params) - set(defaults)
    if unknown:
        raise ValueError(f"pair {name} has no parameter(s) {sorted(unknown)}")
    pair = factory(**{**defaults, **params})
    return pair.validate(check_range) if validate else pair


def get_pair(text: str, validate: bool = True) -> TransformPair:
    """Parse ``pair:name(k=v,...)`` and build the pair."""
    m = _ID_RE.match(text.strip().replace(" ", ""))
    if not m:
        raise ValueError(f"malformed pair id: {text!r}")
    params = {}
    if m["args"]:
        for item in re.split(r",(?![^\[]*\])", m["args"]):
            key, eq, val = item.partition("=")
            if not eq:
                raise ValueError(f"malformed pair parameter: {item!r}")
            params[key] = val
    return make_pair(m["name"], validate=validate, **params)

