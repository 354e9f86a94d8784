from __future__ import annotations

import json
from fractions import Fraction

import pytest

from doublesum.registry import (
    STATUSES,
    DomainError,
    UnknownIdentityError,
    all_identities,
    check_witness,
    default_domain,
    evaluate_identity,
    get_identity,
)
from doublesum.registry.index import ALIASES, DISPLAY_LABELS, EXCLUDED, index_json, label_index, uncovered

IDS = [d.id for d in all_identities()]


def test_table_size_and_unique_ids():
    assert len(IDS) >= 60
    assert len(set(IDS)) == len(IDS)


def test_order_is_by_section_then_display():
    keys = [tuple(int(p) for p in d.section.split(".")) for d in all_identities()]
    assert keys == sorted(keys)
    assert [d.id for d in all_identities()] == IDS


@pytest.mark.parametrize("id", ["intro-bernoulli-double", "intro-fibonacci-double", "intro-harmonic-double",
                                "intro-catalan-double", "intro-chen-shift", "intro-p-identity", "intro-p-particular",
                                "thm-3.1", "thm-3.11-beta-a", "prop-4.3-harmonic-Hnjk", "prop-4.4-catalan-4Cn"])
def test_required_entries_present(id):
    assert get_identity(id).id == id


def test_every_display_label_is_covered():
    assert uncovered(list(DISPLAY_LABELS)) == []


def test_exclusions_and_aliases_are_sane():
    assert set(EXCLUDED) <= set(DISPLAY_LABELS)
    assert all(reason.strip() for reason in EXCLUDED.values())
    idx = label_index()
    for target in ALIASES.values():
        assert target in idx


def test_uncovered_reports_unknown_labels():
    assert uncovered(["definitely-not-a-label"]) == ["definitely-not-a-label"]


def test_status_contract():
    for d in all_identities():
        assert d.status in STATUSES
        if d.status == "amended":
            assert d.witness is not None
            assert d.printed_lhs is not None or d.printed_rhs is not None
        if d.status == "edge-restricted":
            assert d.known_gaps, d.id
            assert d.notes, d.id
        if d.status == "as-stated":
            assert d.witness is None and not d.known_gaps


@pytest.mark.parametrize("id,point,lhs,rhs", [
    ("intro-bernoulli-double", {"n": 2}, Fraction(-1, 3), Fraction(-1, 3)),
    ("intro-fibonacci-double", {"n": 1}, 1, 1),
    ("intro-catalan-double", {"n": 1}, 4, 4),
    ("prop-4.3-harmonic-Hnjk", {"n": 2, "r": 0}, -1, -1),
])
def test_evaluate_examples(id, point, lhs, rhs):
    ev = evaluate_identity(id, point)
    assert (ev.lhs, ev.rhs, ev.equal) == (lhs, rhs, True)


def test_evaluate_errors():
    with pytest.raises(UnknownIdentityError):
        evaluate_identity("no-such-id", {"n": 1})
    with pytest.raises(DomainError):
        evaluate_identity("prop-4.3-harmonic-Hnjk", {"n": 1, "r": 0})
    with pytest.raises(DomainError):
        evaluate_identity("thm-3.1", {"n": 1})
    with pytest.raises(UnknownIdentityError):
        list(default_domain("no-such-id"))


def test_known_gap_points_evaluate_and_fail():
    ev = evaluate_identity("prop-4.4-catalan-4Cn", {"n": 0})
    assert (ev.lhs, ev.rhs, ev.equal) == (1, 4, False)


def test_theorem_default_domain():
    pts = list(default_domain("thm-3.1"))
    ns = sorted({p["n"] for p in pts})
    xs = {p["x"] for p in pts}
    ys = {p["y"] for p in pts}
    assert ns == list(range(17))
    assert len(xs) == 7 and len(ys) == 7 and 1 not in xs
    assert len(pts) == 17 * 49


def test_harmonic_hnjk_domain():
    pts = list(default_domain("prop-4.3-harmonic-Hnjk"))
    assert {p["n"] for p in pts} == set(range(2, 41))
    assert {p["r"] for p in pts} == set(range(9))


def test_catalan_4cn_domain_skips_zero():
    assert [p["n"] for p in default_domain("prop-4.4-catalan-4Cn")] == list(range(1, 61))


def test_documented_amendments():
    weighted = get_identity("cor-3.5-harmonic-weighted")
    assert weighted.status == "amended" and "gca1g47" in weighted.labels
    w = check_witness(weighted)
    assert w.lhs == 1 and not w.equal

    dh = get_identity("cor-3.12-double-harmonic")
    assert dh.status == "amended" and dict(dh.witness)["n"] == 1
    w = check_witness(dh)
    assert w.lhs == Fraction(3, 4) and not w.equal

    cat = get_identity("prop-4.4-catalan-4Cn")
    assert cat.status == "edge-restricted" and {"n": 0} in [dict(g) for g in cat.known_gaps]


def test_typo_audit_keeps_printed_form_evaluable():
    d = get_identity("cor-3.5-harmonic-weighted")
    ev = check_witness(d)
    assert ev.error is None and ev.lhs is not None and ev.rhs is not None


def test_as_stated_entries_pass_everywhere(full_run):
    bad = [(r.identity, r.failures[:2]) for r in full_run if r.status == "as-stated" and r.classification != "pass"]
    assert bad == []


def test_amended_witnesses_reproduce_and_amended_forms_pass(full_run):
    amended = [r for r in full_run if r.status == "amended"]
    assert len(amended) >= 3
    for r in amended:
        assert r.witness is not None and r.witness.reproduces, r.identity
        assert r.passes == r.points and not r.failures, r.identity


def test_edge_restricted_gaps_confirmed(full_run):
    for r in full_run:
        if r.status == "edge-restricted":
            assert r.classification == "pass", r.identity
            assert r.gaps and all(g.reproduces for g in r.gaps), r.identity


def test_optional_entries_validate():
    opt = [d for d in all_identities() if d.optional]
    assert len(opt) == 4
    for d in opt:
        assert all(evaluate_identity(d.id, p).equal for p in list(d.points())[:40])


def test_json_index_fields():
    data = json.loads(index_json())
    assert len(data["identities"]) == len(IDS)
    for e in data["identities"]:
        assert {"id", "anchor", "quote", "params", "status", "notes"} <= set(e)
    assert data["excluded"] == EXCLUDED


def test_summary_serializes_witness_exactly():
    s = get_identity("prop-4.5-mgi6qsx").summary()
    assert s["witness"] == {"n": 1, "m": 1, "r": 0, "s": 1}
    assert json.loads(json.dumps(s)) == s


def test_points_override_keeps_constraint():
    d = get_identity("thm-3.1")
    pts = list(d.points({"n": [2], "x": [Fraction(1, 2)], "y": [3]}))
    assert pts == [{"n": 2, "x": Fraction(1, 2), "y": 3}]
    with pytest.raises(DomainError):
        list(d.points({"zz": [1]}))


def test_declared_domain_extends_grid_upward():
    assert evaluate_identity("intro-catalan-double", {"n": 150}).equal
    assert evaluate_identity("thm-3.1", {"n": 3, "x": Fraction(5, 7), "y": Fraction(-9, 4)}).equal
    even = get_identity("prop-4.1-bernoulli-2-even")
    assert even.admits({"n": 32}) and not even.admits({"n": 31})
    with pytest.raises(DomainError):
        evaluate_identity("thm-3.1", {"n": 3, "x": 1, "y": 2})
