from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from doublesum import sequences as S
from doublesum.exact import binomial
from oracles import bernoulli_explicit, catalan_closed, fib_any, harmonic_direct, stirling2_explicit

GRID = [Fraction(-2), Fraction(-1, 2), Fraction(1, 3), Fraction(3, 2), Fraction(4)]


def test_bernoulli_examples():
    assert S.bernoulli_number(0) == 1
    assert S.bernoulli_number(1) == Fraction(-1, 2)
    assert S.bernoulli_number(12) == Fraction(-691, 2730)


def test_bernoulli_against_explicit_double_sum():
    for n in range(0, 41):
        assert S.bernoulli_number(n) == bernoulli_explicit(n), n


def test_bernoulli_defining_recurrence():
    for n in range(1, 61):
        assert sum(binomial(n + 1, k) * S.bernoulli_number(k) for k in range(n + 1)) == 0


def test_bernoulli_binomial_sum_relation():
    for n in range(61):
        assert sum(binomial(n, k) * S.bernoulli_number(k) for k in range(n + 1)) == (-1) ** n * S.bernoulli_number(n)


def test_bernoulli_poly_examples():
    assert S.bernoulli_poly(0).coeffs == (1,)
    assert S.bernoulli_poly(1).coeffs == (Fraction(-1, 2), 1)
    assert S.bernoulli_poly_value(2, Fraction(1, 2)) == Fraction(-1, 12)


@pytest.mark.parametrize("x", GRID)
@pytest.mark.parametrize("y", GRID)
def test_bernoulli_poly_addition_theorem(x, y):
    for n in range(21):
        rhs = sum(binomial(n, k) * S.bernoulli_poly_value(k, x) * y ** (n - k) for k in range(n + 1))
        assert S.bernoulli_poly_value(n, x + y) == rhs


def test_gibonacci_examples():
    assert S.gibonacci(0, 1, 10) == 55
    assert S.gibonacci(0, 1, -2) == -1
    assert S.gibonacci(2, 1, -3) == -4


def test_fibonacci_both_directions_against_fast_doubling():
    for n in range(-60, 201):
        assert S.fibonacci(n) == fib_any(n)


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20), st.integers(-30, 30))
def test_gibonacci_linearity(g0, g1, n):
    assert S.gibonacci(g0, g1, n) == g0 * S.gibonacci(1, 0, n) + g1 * S.gibonacci(0, 1, n)


def test_horadam_examples():
    assert S.horadam(0, 1, 1, -1, 7) == 13
    assert S.horadam(0, 1, 4, 3, 4) == 40
    assert S.horadam(1, Fraction(1, 2), 1, Fraction(1, 4), -1) == 2


def test_horadam_specializations():
    for n in range(-20, 21):
        assert S.horadam(0, 1, 1, -1, n) == S.fibonacci(n)
        assert S.horadam(2, 1, 1, -1, n) == S.lucas(n)
    for n in range(0, 15):
        assert S.horadam(0, 1, 2, -1, n) == _pell(n)
        assert S.horadam(0, 1, 3, 2, n) == 2**n - 1  # Mersenne, base-2 repunit


def _pell(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


@given(st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_chebyshev_point(x):
    # w(1, x; 2x, 1) is the Chebyshev T_n(x) recurrence
    t = [Fraction(1), x]
    for _ in range(10):
        t.append(2 * x * t[-1] - t[-2])
    assert [S.horadam(1, x, 2 * x, 1, n) for n in range(12)] == t


def test_horadam_backward_needs_q():
    with pytest.raises(ValueError):
        S.horadam(0, 1, 2, 0, -1)


def test_harmonic_examples():
    assert S.harmonic(2) == Fraction(3, 2)
    assert S.harmonic(3, 2) == Fraction(49, 36)
    assert S.odd_harmonic(3) == Fraction(23, 15)
    assert S.harmonic(0) == 0


def test_harmonic_against_direct_sum():
    for m in (1, 2, 3):
        for n in range(30):
            assert S.harmonic(n, m) == harmonic_direct(n, m)


@pytest.mark.parametrize("bad", [lambda: S.harmonic(-1), lambda: S.harmonic(3, 0), lambda: S.catalan(-1), lambda: S.stirling2(-1, 0)])
def test_domain_errors(bad):
    with pytest.raises(ValueError):
        bad()


def test_catalan_examples_and_closed_form():
    assert (S.catalan(0), S.catalan(3), S.catalan(10)) == (1, 5, 16796)
    for n in range(201):
        assert S.catalan(n) == catalan_closed(n)


def test_stirling_examples():
    assert S.stirling2(0, 0) == 1
    assert S.stirling2(4, 2) == 7
    assert S.stirling2(5, 5) == 1
    assert S.stirling2(3, 5) == 0


def test_stirling_recurrence_matches_alternating_sum():
    for r in range(21):
        for n in range(21):
            assert S.stirling2(r, n) == S.stirling2_explicit(r, n) == (stirling2_explicit(r, n) if n <= r else 0)


def test_mstep_examples():
    assert S.mstep([0, 1], 6) == 8
    assert S.tribonacci(7) == 13
    assert S.mstep([0, 1], -2) == -1


def test_mstep_seed_presets():
    assert S.fibonacci_mstep_seed(3) == [0, 0, 1]
    assert S.lucas_mstep_seed(2) == [2, 1]
    assert S.lucas_mstep_seed(3) == [3, 1, 3]
    with pytest.raises(ValueError):
        S.fibonacci_mstep_seed(1)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("make", [S.fibonacci_mstep_seed, S.lucas_mstep_seed])
def test_mstep_round_trip(m, make):
    seed = make(m)
    for n in range(-30, 31):
        # rebuild W_n from the m terms just below it, moving forward
        window = [S.mstep(seed, n - m + i) for i in range(m)]
        assert sum(window) == S.mstep(seed, n)
        # and backward from the m terms just above
        above = [S.mstep(seed, n + i) for i in range(1, m + 1)]
        assert above[-1] - sum(above[:-1]) == S.mstep(seed, n)


def _snapshot():
    return (
        [S.bernoulli_number(n) for n in range(0, 25, 3)],
        [S.fibonacci(n) for n in range(-15, 16)],
        [S.horadam(1, Fraction(1, 2), 3, Fraction(-2, 5), n) for n in range(-6, 10)],
        [S.mstep([1, -2, 5], n) for n in range(-8, 12)],
        [S.harmonic(n, 2) for n in range(12)],
        [S.catalan(n) for n in range(20)],
        [S.stirling2(12, n) for n in range(13)],
        S.bernoulli_poly(7).coeffs,
    )


def test_memoization_is_invisible():
    warm = _snapshot()
    S.clear_caches()
    # fill in reverse so tables grow in a different order
    S.fibonacci(-15), S.catalan(19), S.bernoulli_number(24), S.mstep([1, -2, 5], -8)
    assert _snapshot() == warm
    S.clear_caches()
    assert _snapshot() == warm


@settings(max_examples=50)
@given(st.integers(0, 40))
def test_repeated_calls_agree(n):
    assert S.bernoulli_number(n) == S.bernoulli_number(n)
    assert S.catalan(n) == S.catalan(n)


@pytest.mark.parametrize(
    "text",
    ["bernoulli", "catalan", "fibonacci", "lucas", "gibonacci(3,-1/2)", "horadam(0,1;4,3)", "harmonic^2",
     "odd-harmonic", "mstep[0,0,1]", "tribonacci", "constant(5)", "power(-1/2)", "stirling2-diagonal(2)",
     "bernoulli-poly-at(1/3)", "fibonacci-mstep(4)", "lucas-mstep(3)"],
)
def test_parse_sequence_round_trip(text):
    spec = S.parse_sequence(text)
    again = S.parse_sequence(spec.text())
    assert again == spec
    assert [again(n) for n in range(8)] == [spec(n) for n in range(8)]


@pytest.mark.parametrize("text", ["", "nope", "horadam(1,2)", "gibonacci(1)", "mstep[1]", "harmonic^0", "power(1,2)"])
def test_parse_sequence_rejects(text):
    with pytest.raises(ValueError):
        S.parse_sequence(text)


def test_negative_index_domain():
    with pytest.raises(ValueError):
        S.parse_sequence("catalan")(-1)
    assert S.parse_sequence("lucas")(-3) == -4


def test_derived_sequences():
    f = S.parse_sequence("fibonacci")
    assert [f.signed()(n) for n in range(5)] == [0, -1, 1, -2, 3]
    assert f.scaled(2)(3) == 16
    assert f.shifted(2)(0) == 1
    assert f.signed().text() == "(-1)^n*gibonacci(0,1)"


def test_binomial_row_of_catalan_matches_comb():
    # sanity link between two independent modules
    assert all(binomial(2 * n, n) / (n + 1) == comb(2 * n, n) // (n + 1) for n in range(30))
