from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from doublesum.engine import (
    HYPERBOLIC_KINDS,
    DoubleSumSpec,
    OutOfDomainError,
    SingularParameterError,
    cor32_check,
    cor32_sides,
    hypergeometric_2f1_check,
    hypergeometric_2f1_relerr,
    hyperbolic_degree_bound,
    hyperbolic_eval,
    hyperbolic_lhs,
    hyperbolic_rhs,
    incomplete_binomial_sum,
    reciprocal_sides,
    thm31_lhs,
    thm31_rhs,
)
from doublesum.exact import binomial, poly_from_values

GRID7 = [Fraction(v) for v in ("-3", "-1/2", "0", "1/3", "2", "5/2", "-7/4")]
T_POINTS = [Fraction(v) for v in ("1/3", "1/2", "2/3", "3/2", "2", "3")]


@pytest.mark.parametrize("n,k,y,want", [(4, 4, 1, 16), (3, 1, 2, 7), (2, 0, 5, 1)])
def test_incomplete_row_examples(n, k, y, want):
    assert incomplete_binomial_sum(n, k, y) == want


def test_incomplete_row_domain():
    with pytest.raises(OutOfDomainError):
        incomplete_binomial_sum(3, 4, 1)


@pytest.mark.parametrize("n,x,y,want", [(1, 2, 3, 9), (0, 5, 7, 1), (2, 0, 4, 1)])
def test_theorem_examples(n, x, y, want):
    assert thm31_lhs(n, x, y) == thm31_rhs(n, x, y) == want


def test_theorem_full_grid():
    for n in range(17):
        for x in GRID7:
            for y in GRID7:
                assert thm31_lhs(n, x, y) == thm31_rhs(n, x, y)


@given(st.integers(0, 12), st.fractions(max_denominator=12).filter(lambda v: v != 1), st.fractions(max_denominator=12))
def test_theorem_random_points(n, x, y):
    assert thm31_lhs(n, x, y) == thm31_rhs(n, x, y)


def test_theorem_is_singular_at_one():
    with pytest.raises(SingularParameterError):
        thm31_rhs(3, 1, 2)
    assert thm31_lhs(3, 1, 2) == sum(incomplete_binomial_sum(3, k, 2) for k in range(4))


@pytest.mark.parametrize("n,y,want", [(2, 3, 15), (1, 0, 1), (3, -1, 2)])
def test_x_equals_one_companion(n, y, want):
    assert cor32_sides(n, y) == (want, want)
    assert cor32_check(n, y)


def test_x_equals_one_companion_grid():
    for n in range(1, 17):
        for y in GRID7:
            assert cor32_check(n, y)
    with pytest.raises(OutOfDomainError):
        cor32_sides(0, 2)


def test_reciprocal_replacement():
    for n in range(1, 17):
        for y in GRID7:
            lhs, rhs = reciprocal_sides(n, y)
            assert lhs == rhs


@pytest.mark.parametrize("n,k,y", [(5, 2, 3), (1, 1, 9)])
def test_2f1_examples(n, k, y):
    assert hypergeometric_2f1_check(n, k, y, eps=1e-12)


def test_2f1_out_of_domain():
    with pytest.raises(OutOfDomainError):
        hypergeometric_2f1_check(4, 0, Fraction(-1, 2))


def test_2f1_grid():
    worst = max(hypergeometric_2f1_relerr(n, k, y) for n in range(16) for k in range(n + 1) for y in (2, 3, 10))
    assert worst < 1e-11


def test_hyperbolic_examples():
    assert hyperbolic_eval("cosh-identity-1", 2, 1) == (1, 1)
    assert hyperbolic_eval("sinh-identity-1", 2, 1) == (0, 0)
    t = Fraction(3, 2)
    assert hyperbolic_lhs("cosh-identity-1", t, 3) == hyperbolic_rhs("cosh-identity-1", t, 3) == (t**4 + t**-4) / 2


@pytest.mark.parametrize("kind", HYPERBOLIC_KINDS)
def test_hyperbolic_core_points(kind):
    for n in range(1, 13):
        for t in T_POINTS:
            lhs, rhs = hyperbolic_eval(kind, t, n)
            assert lhs == rhs


@pytest.mark.parametrize("kind", HYPERBOLIC_KINDS)
def test_hyperbolic_degree_bound_is_honest(kind):
    # multiply through by t^d and interpolate: the result has degree <= bound
    for n in (1, 4, 7):
        bound = hyperbolic_degree_bound(kind, n)
        d = bound // 2
        ts = [Fraction(k, 3) for k in range(1, bound + 3)]
        p = poly_from_values(ts, [hyperbolic_lhs(kind, t, n) * t**d for t in ts])
        assert p.degree <= bound


def test_hyperbolic_domain():
    with pytest.raises(ValueError):
        hyperbolic_eval("tanh-identity-1", 2, 1)
    with pytest.raises(OutOfDomainError):
        hyperbolic_eval("cosh-identity-1", 0, 1)
    with pytest.raises(OutOfDomainError):
        hyperbolic_eval("cosh-identity-1", 2, 0)


def test_double_sum_spec_reproduces_theorem_lhs():
    x, y = Fraction(2, 3), Fraction(-5, 2)
    spec = DoubleSumSpec(
        outer=lambda k: x**k,
        inner=lambda n, k, j: binomial(n, j),
        index=lambda n, k, j: j,
        seq=lambda j: y**j,
    )
    assert all(spec(n) == thm31_lhs(n, x, y) for n in range(10))


def test_double_sum_spec_inner_stop():
    spec = DoubleSumSpec(outer=lambda k: 1, inner=lambda n, k, j: 1, index=lambda n, k, j: 0,
                         seq=lambda i: Fraction(1), k_start=1, inner_stop=1)
    # sum_{k=1}^n k = n(n+1)/2
    assert [spec(n) for n in range(6)] == [0, 1, 3, 6, 10, 15]
