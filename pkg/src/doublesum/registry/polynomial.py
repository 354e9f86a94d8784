"""Horadam-polynomial, hyperbolic and Bernoulli-polynomial double sums."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..engine import HYPERBOLIC_KINDS, hyperbolic_degree_bound, hyperbolic_lhs, hyperbolic_rhs
from ..exact import Q, binomial, factorial, sign
from ..sequences import bernoulli_number, bernoulli_poly_value as Bx, horadam, stirling2 as S
from .core import cached_pair, dsum, dsum_lower, ident, rats, ssum, transform_of

# Fibonacci, Lucas, Pell, Pell-Lucas, Chebyshev T and U, Fibonacci and Lucas
# polynomials at rational x, a base-3 repunit point and one generic point.
HORADAM_POINTS = (
    "horadam(0,1;1,-1)",
    "horadam(2,1;1,-1)",
    "horadam(0,1;3,-1)",
    "horadam(2,-4;-4,-1)",
    "horadam(1,1/3;2/3,1)",
    "horadam(1,3/2;3/2,1)",
    "horadam(0,1;2/5,-1)",
    "horadam(2,-3/2;-3/2,-1)",
    "horadam(0,1;4,3)",
    "horadam(2,1/3;3/2,1/2)",
)


@lru_cache(maxsize=None)
def horadam_params(text: str) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    inner = text[text.index("(") + 1 : text.rindex(")")]
    seeds, pq = inner.split(";")
    a, b = seeds.split(",")
    p, q = pq.split(",")
    return Q(a), Q(b), Q(p), Q(q)


def _w(text: str, i: int) -> Fraction:
    return horadam(*horadam_params(text), i)


def _s(text: str, i: int) -> Fraction:
    _, _, p, q = horadam_params(text)
    return (p / q) ** i * _w(text, i)


def _sigma(text: str, i: int) -> Fraction:
    q = horadam_params(text)[3]
    return sign(i) * _w(text, 2 * i) / q**i


HOR_AXIS = {"w": HORADAM_POINTS}

ident(
    "lem-5.1-Hor_bin1", "5.1", "Hor_bin1",
    r"\{s_n,\sigma_n\} = \{(p/q)^n w_n, (-1)^n q^{-n} w_{2n}\}",
    {**HOR_AXIS, "n": range(0, 16)},
    lambda w, n: transform_of(lambda k: _s(w, k), n),
    lambda w, n: _sigma(w, n),
    notes="w ranges over Horadam parameter points (a,b;p,q) with p, q != 0.",
    labels=("Hor_bin1",),
)

ident(
    "prop-5.1-horadam", "5.1", "horadam-double",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j (p/q)^{n-k+j} w_{n-k+j} = (-1)^{n-1} q^{-(n-1)} w_{2(n-1)}",
    {**HOR_AXIS, "n": range(1, 13)},
    lambda w, n: dsum(n, lambda k, j: binomial(n, j) * sign(j) * _s(w, n - k + j)),
    lambda w, n: _sigma(w, n - 1),
)

X_POW = rats(-3, "-1/2", "1/3", 2, "7/2")

ident(
    "prop-5.1-powers-repunit", "5.1", "powers",
    r"w_n(0,1;x+1,x) = \frac{x^n-1}{x-1}",
    {"x": X_POW, "n": range(-8, 16)},
    lambda x, n: horadam(0, 1, x + 1, x, n),
    lambda x, n: (x**n - 1) / (x - 1),
    notes="x != 0, 1; negative n uses the backward recurrence.",
    labels=("powers",),
)

ident(
    "prop-5.1-powers-b", "5.1", "powers",
    r"w_n(2,x+1;x+1,x) = x^n - 1",
    {"x": X_POW, "n": range(-8, 16)},
    lambda x, n: horadam(2, x + 1, x + 1, x, n),
    lambda x, n: x**n + 1,
    status="amended",
    printed_rhs=lambda x, n: x**n - 1,
    witness={"x": 2, "n": 0},
    notes="The seed w_0 = 2 forces x^n + 1; the printed x^n - 1 already fails at n = 0.",
    labels=("powers",),
)


def _pm_lhs(x, n, sgn):
    return dsum(n, lambda k, j: binomial(n, j) * sign(j) * (1 + x) ** (n - k + j) * (1 + sgn * x ** -(n - k + j)))


ident(
    "prop-5.1-repunit-plus", "5.1", "powers-plus-double",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j (1+x)^{n-k+j}(1 + x^{-(n-k+j)}) = (-1)^{n-1}(x^{n-1} + x^{-(n-1)})",
    {"x": X_POW, "n": range(1, 13)},
    lambda x, n: _pm_lhs(x, n, 1),
    lambda x, n: sign(n - 1) * (x ** (n - 1) + x ** -(n - 1)),
)

ident(
    "prop-5.1-repunit-minus", "5.1", "powers-minus-double",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j (1+x)^{n-k+j}(1 - x^{-(n-k+j)}) = (-1)^{n-1}(x^{n-1} - x^{-(n-1)})",
    {"x": X_POW, "n": range(1, 13)},
    lambda x, n: _pm_lhs(x, n, -1),
    lambda x, n: sign(n - 1) * (x ** (n - 1) - x ** -(n - 1)),
)

ident(
    "prop-5.1-horadam-cp", "5.1", "horadam-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} \binom{n}{j} n (-1)^j (p/q)^{n-k+j} \frac{w_{n-k+j}}{k-j} = (-1)^n q^{-n}(w_{2n} - p^n w_n)",
    {**HOR_AXIS, "n": range(1, 13)},
    lambda w, n: dsum_lower(n, lambda k, j: binomial(n, j) * n * sign(j) * _s(w, n - k + j) / (k - j)),
    lambda w, n: sign(n) * (_w(w, 2 * n) - horadam_params(w)[2] ** n * _w(w, n)) / horadam_params(w)[3] ** n,
)

ident(
    "prop-5.1-horadam-berfin", "5.1", "horadam-berfin",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j (p/q)^{k-j} w_{k-j} = q^{-n} w_{2n} + q^{-(n-1)} w_{2(n-1)}",
    {**HOR_AXIS, "n": range(1, 13)},
    lambda w, n: dsum(n, lambda k, j: binomial(n, j) * sign(j) * _s(w, k - j)),
    lambda w, n: _w(w, 2 * n) / horadam_params(w)[3] ** n + _w(w, 2 * n - 2) / horadam_params(w)[3] ** (n - 1),
)

ident(
    "prop-5.1-horadam-int", "5.1", "horadam-int",
    r"\sum_{k=0}^n \sum_{j=0}^k \binom{n+1}{j+1} (-1)^{j+1} (p/q)^{j+1} w_{j+1} = (n+1)(-1)^n q^{-n} w_{2n} + (-1)^{n+1} q^{-(n+1)} w_{2(n+1)} - (n+2)a",
    {**HOR_AXIS, "n": range(1, 13)},
    lambda w, n: dsum(n, lambda k, j: binomial(n + 1, j + 1) * sign(j + 1) * _s(w, j + 1)),
    lambda w, n: (n + 1) * _sigma(w, n) + _sigma(w, n + 1) - (n + 2) * horadam_params(w)[0],
)

# -- hyperbolic forms through t = e^{x/2} -----------------------------------------------

# the six required sample points, padded to more than 4(12) + 5 distinct values
T_CORE = rats("1/3", "1/2", "2/3", "3/2", 2, 3)
T_EXTRA = tuple(Fraction(k, 7) for k in range(1, 80) if k != 7)
T_HYP = T_CORE + tuple(t for t in T_EXTRA if t not in T_CORE)[: 56 - len(T_CORE)]

_HYP_QUOTES = {
    "1": (
        r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j 2^{n-k+j} \cosh^{n-k+j}(x/2) \{F\}((n-k+j)x/2) = (-1)^{n-1}\{F\}((n-1)x)",
        "hyperbolic-1",
    ),
    "2": (
        r"\sum_{k=1}^n \sum_{j=0}^{k-1} \binom{n}{j} n (-1)^j 2^{n-k+j} \cosh^{n-k+j}(x/2) \frac{\{F\}((n-k+j)x/2)}{k-j} = (-1)^n(\{F\}(nx) - 2^n\cosh^n(x/2)\{F\}(nx/2))",
        "hyperbolic-cp",
    ),
    "3": (
        r"\sum_{k=0}^n \sum_{j=0}^k \binom{n}{j} (-1)^j 2^{k-j} \cosh^{k-j}(x/2) \{F\}((k-j)x/2) = \{F\}(nx) + \{F\}((n-1)x)",
        "hyperbolic-berfin",
    ),
    "4": (
        r"\sum_{k=0}^n \sum_{j=0}^k \binom{n+1}{j+1} (-1)^{j+1} 2^{j+1} \cosh^{j+1}(x/2) \{F\}((j+1)x/2) = (-1)^n((n+1)\{F\}(nx) - \{F\}((n+1)x)) \{C\}",
        "hyperbolic-int",
    ),
}

for _kind in HYPERBOLIC_KINDS:
    _fn, _, _fam = _kind.split("-")
    _quote, _anchor = _HYP_QUOTES[_fam]
    ident(
        f"cor-5.1-{_kind}", "5.1", _anchor,
        _quote.replace("{F}", "\\" + _fn).replace("{C}", "- (n+2)" if _fn == "cosh" else ""),
        {"n": range(1, 13), "t": T_HYP},
        lambda n, t, _k=_kind: hyperbolic_lhs(_k, t, n),
        lambda n, t, _k=_kind: hyperbolic_rhs(_k, t, n),
        notes=f"Checked at x = 2 ln t on {len(T_HYP)} values of t; both sides are Laurent polynomials in t "
        f"of degree span at most {hyperbolic_degree_bound(_kind, 12)} for n <= 12.",
        kinds={"n": "int", "t": "rational"},
    )

# -- the four further Horadam pairs --------------------------------------------------------

_EXTRA_QUOTES = (
    r"\{s_n,\sigma_n\} = \{((p^2-q)/(pq))^n w_n, (-pq)^{-n} w_{3n}\}",
    r"\{s_n,\sigma_n\} = \{((p^2-q)/q^2)^n w_{2n}, (-1)^n (p/q^2)^n w_{3n}\}",
    r"\{s_n,\sigma_n\} = \{(p(p^2-2q)/(q(p^2-q)))^n w_n, (-1)^n (q(p^2-q))^{-n} w_{4n}\}",
    r"\{s_n,\sigma_n\} = \{((p^2-2q)/q^2)^n w_{2n}, (-1)^n q^{-2n} w_{4n}\}",
)


def _extra_pair(i: int, w: str):
    a, b, p, q = horadam_params(w)
    return cached_pair(f"pair:horadam-x{i}(a={a},b={b},p={p},q={q})")


for _i, _quote in enumerate(_EXTRA_QUOTES, start=1):
    ident(
        f"rem-5.1-horadam-x{_i}", "5.1", "horadam-remark-pairs",
        _quote,
        {**HOR_AXIS, "n": range(0, 13)},
        lambda w, n, _i=_i: transform_of(lambda k: _extra_pair(_i, w).s(k), n),
        lambda w, n, _i=_i: _extra_pair(_i, w).sigma(n),
        optional=True,
        notes="Given without proof; checked as a transform pair on every Horadam point.",
    )

# -- Bernoulli polynomials ------------------------------------------------------------------

XY = rats(-2, "-1/2", "1/3", 1, "5/2")
XY0 = rats(-2, "-1/2", 0, "1/3", 1, "5/2")
BGRID = {"n": range(1, 9), "m": range(0, 5), "x": XY, "y": XY0}

ident(
    "lem-5.2-kc11oa4", "5.2", "kc11oa4",
    r"s_n = (-1)^n x^{-n} B_n(y),\ \sigma_n = x^{-n} B_n(x+y)",
    {"n": range(0, 13), "x": XY, "y": XY0},
    lambda n, x, y: transform_of(lambda k: sign(k) * x ** -k * Bx(k, y), n),
    lambda n, x, y: x ** -n * Bx(n, x + y),
    labels=("kc11oa4",),
)

ident(
    "prop-5.2-t6lc9ok", "5.2", "t6lc9ok",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j}\frac{B_{m+n-k+j}(y)}{x^{m-k+j}} = (-1)^{m+n}\sum_{k=0}^m (-1)^k \binom{m}{k}\frac{B_{n+k-1}(x+y)}{x^{k-1}}",
    BGRID,
    lambda n, m, x, y: dsum(n, lambda k, j: sign(k) * binomial(n, j) * Bx(m + n - k + j, y) / x ** (m - k + j)),
    lambda n, m, x, y: sign(m + n) * ssum(0, m, lambda k: sign(k) * binomial(m, k) * Bx(n + k - 1, x + y) / x ** (k - 1)),
    labels=("t6lc9ok",),
)

ident(
    "prop-5.2-t6lc9ok-particular", "5.2", "t6lc9ok-particular",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j} x^{k-j} B_{n-k+j}(y) = (-1)^n x B_{n-1}(x+y)",
    {"n": range(1, 13), "x": XY0, "y": XY0},
    lambda n, x, y: dsum(n, lambda k, j: sign(k) * binomial(n, j) * x ** (k - j) * Bx(n - k + j, y)),
    lambda n, x, y: sign(n) * x * Bx(n - 1, x + y),
    notes="Polynomial in x, so x = 0 is included.",
)

ident(
    "prop-5.2-bernoulli-cp", "5.2", "bernoulli-poly-cp",
    r"\sum_{k=1}^n (-1)^k \sum_{j=0}^{k-1} n\binom{n}{j}\frac{x^{k-j}}{k-j}B_{m+n-k+j}(y) = (-1)^{m+n}\sum_{k=0}^m (-1)^k\binom{m}{k}x^{m-k}B_{k+n}(x+y) - (-1)^n B_{m+n}(y)",
    {"n": range(0, 9), "m": range(0, 5), "x": XY0, "y": XY0},
    lambda n, m, x, y: dsum_lower(n, lambda k, j: sign(k) * n * binomial(n, j) * x ** (k - j) / (k - j) * Bx(m + n - k + j, y)),
    lambda n, m, x, y: sign(m + n) * ssum(0, m, lambda k: sign(k) * binomial(m, k) * x ** (m - k) * Bx(k + n, x + y))
    - sign(n) * Bx(m + n, y),
)

ident(
    "prop-5.2-bernoulli-cp-particular", "5.2", "bernoulli-poly-cp-particular",
    r"\sum_{k=1}^n (-1)^k \sum_{j=0}^{k-1} n\binom{n}{j}\frac{x^{k-j}}{k-j}B_{n-k+j}(y) = (-1)^n(B_n(x+y) - B_n(y))",
    {"n": range(0, 13), "x": XY0, "y": XY0},
    lambda n, x, y: dsum_lower(n, lambda k, j: sign(k) * n * binomial(n, j) * x ** (k - j) / (k - j) * Bx(n - k + j, y)),
    lambda n, x, y: sign(n) * (Bx(n, x + y) - Bx(n, y)),
)

ident(
    "prop-5.2-bernoulli-berfin", "5.2", "bernoulli-poly-berfin",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j} x^{n-m-k+j} B_{m+k-j}(y) = (-1)^{m-n}\sum_{k=0}^m (-1)^k\binom{m}{k}x^{-k}(B_{k+n}(x+y) - xB_{k+n-1}(x+y))",
    BGRID,
    lambda n, m, x, y: dsum(n, lambda k, j: sign(k) * binomial(n, j) * x ** (n - m - k + j) * Bx(m + k - j, y)),
    lambda n, m, x, y: sign(m - n) * ssum(
        0, m, lambda k: sign(k) * binomial(m, k) * x ** -k * (Bx(k + n, x + y) - x * Bx(k + n - 1, x + y))
    ),
)

ident(
    "prop-5.2-bernoulli-berfin-particular", "5.2", "bernoulli-poly-berfin-particular",
    r"\sum_{k=0}^n (-1)^k \sum_{j=0}^k \binom{n}{j} x^{n-k+j} B_{k-j}(y) = (-1)^n(B_n(x+y) - xB_{n-1}(x+y))",
    {"n": range(1, 13), "x": XY0, "y": XY0},
    lambda n, x, y: dsum(n, lambda k, j: sign(k) * binomial(n, j) * x ** (n - k + j) * Bx(k - j, y)),
    lambda n, x, y: sign(n) * (Bx(n, x + y) - x * Bx(n - 1, x + y)),
)

# -- Bernoulli polynomials at integer arguments ---------------------------------------------


def _br(r: int, i: int) -> Fraction:
    return Bx(r, i + 1)


ident(
    "lem-5.2-etio67p", "5.2", "etio67p",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} B_r(k+1) = (-1)^n (n-1)!\, r {r \brace n},\quad n \ne 0",
    {"n": range(1, 13), "r": range(0, 11)},
    lambda n, r: transform_of(lambda k: _br(r, k), n),
    lambda n, r: sign(n) * factorial(n - 1) * r * S(r, n),
    labels=("etio67p", "qtczn06"),
)


def _cmg_sigma(n: int, r: int) -> Fraction:
    return bernoulli_number(r) / (n + 1) + sign(n) * factorial(n) / (n + 1) * r * S(r - 1, n)


ident(
    "lem-5.2-cmg5y2b", "5.2", "cmg5y2b",
    r"\sum_{k=0}^n (-1)^k \binom{n}{k} \frac{B_r(k+1)}{k+1} = \frac{B_r}{n+1} + \frac{(-1)^n n!}{n+1} r {r-1 \brace n}",
    {"n": range(0, 13), "r": range(1, 11)},
    lambda n, r: transform_of(lambda k: _br(r, k) / (k + 1), n),
    _cmg_sigma,
    notes="r >= 1 so that the Stirling number has a non-negative upper index.",
    labels=("cmg5y2b",),
)

ident(
    "lem-5.2-qtczn06-b", "5.2", "qtczn06",
    r"s_n = \frac{B_r(n+1)}{n+1},\ \sigma_n = \frac{(-1)^n n!}{n+1} r {r-1 \brace n}",
    {"n": range(0, 13), "r": range(1, 11)},
    lambda n, r: transform_of(lambda k: _br(r, k) / (k + 1), n),
    _cmg_sigma,
    status="amended",
    printed_rhs=lambda n, r: sign(n) * factorial(n) / (n + 1) * r * S(r - 1, n),
    witness={"n": 0, "r": 2},
    notes="The second pair drops the term B_r/(n+1) of the lemma it is read from; the double sum built on it keeps that term.",
    labels=("qtczn06",),
)


def _bern_shift_rhs(n, m, r, alternating):
    def term(k):
        w = sign(k) if alternating else 1
        return w * binomial(m, k) * factorial(n + k - 2) * S(r, n + k - 1)

    return sign(n - 1) * r * ssum(0, m, term)


ident(
    "prop-5.2-bernoulli-shift-a", "5.2", "bernoulli-integer-double",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j\binom{n}{j} B_r(m+n-k+j+1) = (-1)^{n-1} r\sum_{k=0}^m (-1)^k\binom{m}{k}(n+k-2)!{r \brace n+k-1}",
    {"n": range(2, 9), "m": range(0, 5), "r": range(0, 9)},
    lambda n, m, r: dsum(n, lambda k, j: sign(j) * binomial(n, j) * _br(r, m + n - k + j)),
    lambda n, m, r: _bern_shift_rhs(n, m, r, False),
    status="amended",
    printed_rhs=lambda n, m, r: _bern_shift_rhs(n, m, r, True),
    witness={"n": 2, "m": 1, "r": 2},
    notes="The sign (-1)^k inside the sum over k cancels against the sign of sigma and must be dropped.",
)


def _u0_rhs(n, m, r):
    head = bernoulli_number(r) / (m + n) / binomial(m + n - 1, m)
    tail = ssum(0, m, lambda k: factorial(n + k - 1) / (n + k) * binomial(m, k) * S(r - 1, n + k - 1))
    return head + sign(n - 1) * r * tail


ident(
    "prop-5.2-u0jw006", "5.2", "u0jw006",
    r"\sum_{k=0}^n \sum_{j=0}^k (-1)^j\binom{n}{j}\frac{B_r(m+n-k+j+1)}{m+n-k+j+1} = \frac{B_r}{m+n}\binom{m+n-1}{m}^{-1} + (-1)^{n-1} r\sum_{k=0}^m \frac{(n+k-1)!}{n+k}\binom{m}{k}{r-1 \brace n+k-1}",
    {"n": range(2, 9), "m": range(0, 5), "r": range(1, 9)},
    lambda n, m, r: dsum(n, lambda k, j: sign(j) * binomial(n, j) * _br(r, m + n - k + j) / (m + n - k + j + 1)),
    _u0_rhs,
    labels=("u0jw006",),
)

ident(
    "prop-5.2-u0jw006-aux", "5.2", "u0jw006-aux",
    r"\sum_{k=0}^m (-1)^k\binom{m}{k}\frac{1}{n+k} = \frac{1}{m+n}\binom{m+n-1}{m}^{-1}",
    {"n": range(1, 16), "m": range(0, 16)},
    lambda n, m: ssum(0, m, lambda k: sign(k) * binomial(m, k) * Fraction(1, n + k)),
    lambda n, m: Fraction(1, m + n) / binomial(m + n - 1, m),
)

ident(
    "prop-5.2-bernoulli-integer-cp", "5.2", "bernoulli-integer-cp",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n\binom{n}{j}\frac{B_r(m+n-k+j+1)}{k-j} = (-1)^n r\sum_{k=0}^m \binom{m}{k}{r \brace k+n}(k+n-1)! - (-1)^n B_r(m+n+1)",
    {"n": range(1, 9), "m": range(0, 5), "r": range(0, 9)},
    lambda n, m, r: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * _br(r, m + n - k + j) / (k - j)),
    lambda n, m, r: sign(n) * (r * ssum(0, m, lambda k: binomial(m, k) * S(r, k + n) * factorial(k + n - 1)) - _br(r, m + n)),
)

ident(
    "prop-5.2-bernoulli-integer-cp-particular", "5.2", "bernoulli-integer-cp-particular",
    r"\sum_{k=1}^n \sum_{j=0}^{k-1} (-1)^j n\binom{n}{j}\frac{B_r(n-k+j+1)}{k-j} = (-1)^n r{r \brace n}(n-1)! - (-1)^n B_r(n+1)",
    {"n": range(1, 13), "r": range(0, 11)},
    lambda n, r: dsum_lower(n, lambda k, j: sign(j) * n * binomial(n, j) * _br(r, n - k + j) / (k - j)),
    lambda n, r: sign(n) * (r * S(r, n) * factorial(n - 1) - _br(r, n)),
)
