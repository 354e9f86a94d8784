from __future__ import annotations

import json
from fractions import Fraction

import pytest

from doublesum.engine import thm31_lhs, thm31_rhs
from doublesum.registry import UnknownIdentityError, all_identities
from doublesum.registry.core import Identity
from doublesum.verifier import (
    Failure,
    Probe,
    _classify,
    canonical,
    fuzz_points,
    independence_violations,
    lhs_names,
    report_json,
    resolve_jobs,
    select,
    suite_json,
    summarize,
    verify,
    verify_all,
)


def test_theorem_passes():
    r = verify("thm-3.1")
    assert r.classification == "pass" and r.failures == [] and r.points == r.passes == 17 * 49


def test_catalan_zero_is_a_confirmed_gap():
    r = verify("prop-4.4-catalan-4Cn", {"n": range(0, 1)})
    assert r.classification == "known-gap-confirmed"
    assert [(f.params, f.lhs, f.rhs, f.known_gap) for f in r.failures] == [({"n": 0}, "1", "4", True)]


def test_fibonacci_long_range():
    r = verify("intro-fibonacci-double", {"n": range(1, 201)})
    assert r.classification == "pass" and r.points == 200


def test_unexpected_failure_classifies_as_fail():
    r = verify("prop-4.3-harmonic-Hnjk", {"n": [1, 2], "r": [0]})
    assert r.classification == "fail"
    assert r.failures[0].params == {"n": 1, "r": 0} and r.failures[0].error
    assert not r.failures[0].known_gap


@pytest.mark.parametrize("id,ov", [("thm-3.1", {"n": [0, 5]}), ("prop-4.4-catalan-4Cn", {"n": range(0, 4)}),
                                   ("prop-4.3-harmonic-Hnjk", {"n": range(1, 4)}), ("intro-p-identity", None)])
def test_passes_plus_failures_is_points(id, ov):
    r = verify(id, ov)
    assert r.passes + len(r.failures) == r.points


def test_verify_errors():
    with pytest.raises(UnknownIdentityError):
        verify("no-such-id")
    with pytest.raises(ValueError):
        verify("thm-3.1", {"q": [1]})
    with pytest.raises(ValueError):
        verify("thm-3.1", {"n": [Fraction(1, 2)]})


def test_override_coerces_integral_fractions():
    r = verify("thm-3.1", {"n": [Fraction(4, 2)], "x": [2], "y": ["1/3"]})
    assert r.points == 1 and r.classification == "pass"


def test_classification_rules():
    ok = Probe({}, "1", "2", True)
    stale = Probe({}, "1", "1", False)
    gap = Failure({"n": 0}, "1", "4", known_gap=True)
    real = Failure({"n": 5}, "1", "4", known_gap=False)
    assert _classify([], None, []) == "pass"
    assert _classify([gap], None, [ok]) == "known-gap-confirmed"
    assert _classify([gap, real], None, [ok]) == "fail"
    assert _classify([], stale, []) == "fail"
    assert _classify([], None, [stale]) == "fail"


def test_section_filter():
    reports = verify_all(section="4.1")
    assert len(reports) >= 8 and all(r.section == "4.1" for r in reports)
    assert set(select("4")) >= set(select("4.1")) | set(select("4.6"))
    assert select("4.1") == [r.identity for r in reports]
    assert select("9") == [] and verify_all(section="9") == []


def test_status_filters(full_run):
    as_stated = [r for r in full_run if r.status == "as-stated"]
    assert as_stated and all(r.classification == "pass" for r in as_stated)
    amended = [r for r in full_run if r.status == "amended"]
    assert all(r.witness.reproduces and r.classification == "pass" for r in amended)
    assert [r.identity for r in as_stated] == select(status="as-stated")


def test_summary_counts(full_run):
    s = summarize(full_run)
    assert s["reports"] == len(all_identities())
    assert sum(s["by_classification"].values()) == s["reports"]
    assert s["passes"] + s["failures"] == s["points"]


def test_determinism_across_parallelism():
    a = verify_all(section="1", jobs=1)
    b = verify_all(section="1", jobs=3)
    assert suite_json(a, timing=False) == suite_json(b, timing=False)


def test_determinism_across_execution_order():
    ids = select("4.4")
    forward = [verify(i) for i in ids]
    backward = [verify(i) for i in reversed(ids)]
    assert suite_json(forward, timing=False) == suite_json(backward, timing=False)
    assert [r.identity for r in canonical(backward)] == ids


def test_jobs_resolution(monkeypatch):
    monkeypatch.delenv("DOUBLESUM_JOBS", raising=False)
    assert resolve_jobs() == 1
    monkeypatch.setenv("DOUBLESUM_JOBS", "3")
    assert resolve_jobs() == 3
    assert resolve_jobs(2) == 2
    assert resolve_jobs(0) >= 1
    monkeypatch.setenv("DOUBLESUM_JOBS", "many")
    with pytest.raises(ValueError):
        resolve_jobs()
    with pytest.raises(ValueError):
        resolve_jobs(-1)


def test_report_json_schema_and_round_trip():
    r = verify("prop-4.4-catalan-4Cn", {"n": [0, 1, 2]})
    text = report_json(r)
    data = json.loads(text)
    assert list(data)[:7] == ["identity", "anchor", "status", "section", "points", "passes", "failures"]
    assert data["failures"][0]["lhs"] == "1" and data["failures"][0]["rhs"] == "4"
    assert isinstance(data["ms"], int)
    assert json.dumps(data, indent=2, ensure_ascii=False) + "\n" == text


def test_witness_in_report():
    r = verify("cor-3.12-double-harmonic")
    assert r.witness.params == {"pair": "pair:alternating-power2", "n": 1}
    assert r.witness.lhs == "3/4" and r.witness.rhs is None and r.witness.reproduces


@pytest.mark.parametrize("ident", all_identities(), ids=lambda d: d.id)
def test_lhs_is_independent_of_closed_forms(ident):
    assert independence_violations(ident) == []


def test_independence_audit_catches_shortcuts():
    cheat = Identity(id="cheat", section="3", anchor="x", quote="", grid={"n": (1,), "x": (2,), "y": (3,)},
                     lhs=lambda n, x, y: thm31_rhs(n, x, y), rhs=thm31_rhs)
    assert "thm31_rhs" in independence_violations(cheat)
    honest = Identity(id="honest", section="3", anchor="x", quote="", grid={"n": (1,), "x": (2,), "y": (3,)},
                      lhs=thm31_lhs, rhs=thm31_rhs)
    assert independence_violations(honest) == []
    assert "incomplete_binomial_sum" in lhs_names(honest)


def test_fuzz_is_seeded():
    d = next(x for x in all_identities() if x.id == "prop-4.1-bernoulli-2-even")
    a, b = fuzz_points(d, 7, 10), fuzz_points(d, 7, 10)
    assert a == b and len(a) == 10
    assert all(p["n"] % 2 == 0 for p in a)
    assert fuzz_points(d, 8, 10) != a


@pytest.mark.parametrize("id", ["intro-catalan-double", "thm-3.1", "prop-4.5-mgi6qsx", "lem-4.6-fwavfkb-a-preset"])
def test_fuzzed_runs_pass(id):
    r = verify(id, fuzz=(11, 15))
    assert r.classification == "pass"
    assert r.points == len(list(next(d for d in all_identities() if d.id == id).points())) + 15
