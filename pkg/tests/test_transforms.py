from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from doublesum import sequences as S
from doublesum.exact import binomial, sign
from doublesum.pairs import EXTRA_HORADAM, get_pair, make_pair, pair_names
from doublesum.transforms import (
    PairValidationError,
    TransformPair,
    chen_shift_lhs,
    chen_shift_rhs,
    classify,
    forward_transform,
    involution_check,
    p_identity_check,
    p_identity_printed_sides,
    p_identity_sides,
    transformed,
)

CATALOG_SEQUENCES = [
    "bernoulli", "catalan", "fibonacci", "lucas", "gibonacci(3,-1/2)", "horadam(0,1;4,3)",
    "horadam(2,1/3;3/2,1/2)", "harmonic", "harmonic^2", "odd-harmonic", "odd-harmonic^3", "tribonacci",
    "mstep[1,-2,5]", "fibonacci-mstep(4)", "lucas-mstep(5)", "constant(7/3)", "power(-2/3)",
    "stirling2-diagonal(3)", "bernoulli-poly-at(1/3)",
]


def donaghey(k: int) -> Fraction:
    return S.catalan(k + 1) / 4**k


def test_transform_examples():
    assert forward_transform(lambda n: Fraction(1), 3) == 0
    assert forward_transform(lambda n: sign(n) * S.bernoulli_number(n), 4) == Fraction(-1, 30)
    assert forward_transform(donaghey, 2) == Fraction(5, 16)
    with pytest.raises(ValueError):
        forward_transform(S.fibonacci, -1)


@pytest.mark.parametrize("text", CATALOG_SEQUENCES)
def test_involution_every_catalog_sequence(text):
    assert involution_check(S.parse_sequence(text), 30)


def test_involution_examples():
    assert involution_check(S.fibonacci, 20)
    assert involution_check(S.harmonic, 20)
    assert involution_check(lambda n: Fraction(1), 0)


@settings(max_examples=40)
@given(st.lists(st.fractions(max_denominator=9), min_size=12, max_size=12))
def test_involution_on_arbitrary_prefixes(vals):
    assert involution_check(vals.__getitem__, 11)


def test_classify_examples():
    assert classify(lambda n: sign(n) * S.bernoulli_number(n), 30) == "self-inverse"
    assert classify(donaghey, 30) == "self-inverse"
    # the signed transform of F_n is -F_n
    assert classify(S.fibonacci, 10) == "anti-self-inverse"
    assert classify(S.catalan, 10) == "neither"
    assert classify(lambda n: Fraction(0), 5) == "self-inverse"
    with pytest.raises(ValueError):
        classify(S.fibonacci, 0)


def test_classify_anti_self_inverse():
    # e - T(e) is sent to its own negative
    s = lambda n: Fraction(1 if n == 0 else 0) - forward_transform(lambda k: Fraction(1 if k == 0 else 0), n)
    assert classify(s, 12) == "anti-self-inverse"


@pytest.mark.parametrize("text", CATALOG_SEQUENCES)
def test_self_inverse_classification_is_exact(text):
    seq = S.parse_sequence(text)
    if classify(seq, 12) == "self-inverse":
        assert all(forward_transform(seq, n) - seq(n) == 0 for n in range(13))


def test_transformed_is_memoized_and_labelled():
    t = transformed(S.parse_sequence("fibonacci"))
    assert t.text() == "T[gibonacci(0,1)]"
    assert [t(n) for n in range(6)] == [forward_transform(S.fibonacci, n) for n in range(6)]


ALL_PAIRS = pair_names()


@pytest.mark.parametrize("name", ALL_PAIRS)
def test_every_cataloged_pair_validates(name):
    pair = make_pair(name, check_range=20)
    for n in range(21):
        assert pair.sigma(n) == sum(binomial(n, k) * sign(k) * pair.s(k) for k in range(n + 1))


@pytest.mark.parametrize("name", ALL_PAIRS)
def test_chen_shift_every_pair(name):
    pair = make_pair(name)
    for m in range(13):
        for n in range(13):
            assert chen_shift_lhs(pair, m, n) == chen_shift_rhs(pair, m, n)


def test_chen_shift_examples():
    assert chen_shift_lhs(make_pair("ones-delta"), 2, 3) == 0
    fib = TransformPair(S.fibonacci, lambda n: forward_transform(S.fibonacci, n), "fib").validate()
    # m = 0 collapses the left side to s(n)
    assert chen_shift_lhs(fib, 0, 2) == chen_shift_rhs(fib, 0, 2) == S.fibonacci(2) == 1
    assert chen_shift_lhs(fib, 2, 0) == forward_transform(S.fibonacci, 2) == -1
    b = make_pair("bernoulli-signed")
    # with s_k = (-1)^k B_k: s_1 - s_2 = 1/2 - 1/6
    assert chen_shift_lhs(b, 1, 1) == chen_shift_rhs(b, 1, 1) == Fraction(1, 3)


def test_pair_validation_rejects_wrong_sigma():
    bad = TransformPair(S.fibonacci, S.fibonacci, "wrong")
    with pytest.raises(PairValidationError) as exc:
        bad.validate()
    assert (exc.value.n, exc.value.expected, exc.value.got) == (1, -1, 1)


def test_extra_horadam_pairs_are_cataloged():
    assert set(EXTRA_HORADAM) <= set(ALL_PAIRS)


def test_pair_ids_parse():
    p = get_pair("pair:horadam(a=0,b=1,p=1,q=-1)")
    # s_n = (p/q)^n w_n
    assert [p.s(n) for n in range(6)] == [(-1) ** n * S.fibonacci(n) for n in range(6)]
    assert get_pair("pair:mstep-half(seed=[1;-2;5])").label.startswith("pair:mstep-half")
    with pytest.raises(KeyError):
        get_pair("pair:nope")
    with pytest.raises(ValueError):
        get_pair("pair:harmonic-r(bogus=1)")
    with pytest.raises(ValueError):
        get_pair("harmonic")


def test_p_identity_examples():
    assert p_identity_check(make_pair("ones-delta"), 2, 1, 1)
    fib = TransformPair(S.fibonacci, lambda n: forward_transform(S.fibonacci, n), "fib")
    assert p_identity_check(fib, 1, 2, 0)
    don = TransformPair(donaghey, donaghey, "donaghey").validate()
    assert p_identity_check(don, 3, 2, 2)


def test_p_identity_unweighted_form_only_for_small_m():
    pair = make_pair("ones-delta")
    for m in (0, 1):
        a, b = p_identity_printed_sides(pair, 2, 1, m)
        assert a == b
    a, b = p_identity_printed_sides(pair, 2, 0, 2)
    assert a != b
    a, b = p_identity_sides(pair, 2, 0, 2)
    assert a == b


def test_p_identity_rejects_singular_p():
    with pytest.raises(ValueError):
        p_identity_sides(make_pair("ones-delta"), -1, 1, 1)
