from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from doublesum.exact import (
    Poly,
    Q,
    binomial,
    binomial_any,
    factorial,
    format_rational,
    gen_binomial,
    kronecker_delta,
    parse_rational,
    poly_from_values,
    qpow,
    sign,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


@pytest.mark.parametrize("text,value", [("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), ("4/6", Fraction(2, 3)), (" 7 ", Fraction(7))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "a", "1//2", "1.5.2"])
def test_parse_rational_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(bad)


@given(rationals)
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_format_is_canonical():
    assert format_rational(Fraction(-691, 2730)) == "-691/2730"
    assert format_rational(Fraction(4, 2)) == "2"


def test_q_rejects_floats():
    with pytest.raises((TypeError, ValueError)):
        Q(0.5)


@given(st.integers(0, 60), st.integers(-3, 63))
def test_binomial_matches_math_comb(n, k):
    assert binomial(n, k) == (comb(n, k) if 0 <= k <= n else 0)


@given(st.integers(1, 80), st.integers(1, 80))
def test_pascal_rule(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(rationals, st.integers(1, 12))
def test_generalized_binomial_recurrence(x, k):
    assert gen_binomial(x, k) == gen_binomial(x - 1, k) + gen_binomial(x - 1, k - 1)


@given(st.integers(0, 20), st.integers(0, 20))
def test_generalized_binomial_agrees_on_integers(n, k):
    assert gen_binomial(n, k) == binomial(n, k)


def test_binomial_any_negative_upper():
    # C(-1, k) = (-1)^k
    assert [binomial_any(-1, k) for k in range(5)] == [1, -1, 1, -1, 1]


def test_small_helpers():
    assert factorial(0) == 1 and factorial(6) == 720
    assert kronecker_delta(3, 3) == 1 and kronecker_delta(3, 2) == 0
    assert [sign(k) for k in range(-2, 3)] == [1, -1, 1, -1, 1]
    assert qpow(Fraction(2, 3), -2) == Fraction(9, 4)
    with pytest.raises(ZeroDivisionError):
        qpow(0, -1)


@given(st.lists(rationals, max_size=6), st.lists(rationals, max_size=6), rationals)
def test_poly_ring_ops_evaluate_pointwise(a, b, x):
    p, q = Poly(a), Poly(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


def test_poly_basics():
    x = Poly.x()
    p = (x + 1) ** 3
    assert p.coeffs == (1, 3, 3, 1)
    assert p.derivative() == 3 * (x + 1) ** 2
    assert Poly([0, 0]).degree == -1
    with pytest.raises(ValueError):
        x ** -1


@given(st.lists(rationals, min_size=1, max_size=6))
def test_interpolation_recovers_polynomial(coeffs):
    p = Poly(coeffs)
    xs = list(range(len(coeffs)))
    assert poly_from_values(xs, [p(v) for v in xs]) == p


def test_interpolation_rejects_repeated_nodes():
    with pytest.raises(ValueError):
        poly_from_values([1, 1], [2, 3])
