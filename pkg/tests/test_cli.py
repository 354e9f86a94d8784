from __future__ import annotations

import json
import subprocess
import sys

import pytest

from doublesum.cli import main, parse_values, split_top
from doublesum.exact import Q


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_catalan_json(capsys):
    code, out, _ = run(capsys, "check", "intro-catalan-double", "--n", "1..50", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["points"] == data["passes"] == 50 and data["failures"] == []


def test_unknown_identity_is_usage_error(capsys):
    code, out, err = run(capsys, "check", "no-such-id")
    assert code == 2 and "no-such-id" in err and out == ""


def test_eval_seq_bernoulli(capsys):
    code, out, _ = run(capsys, "eval-seq", "bernoulli", "12")
    assert (code, out) == (0, "-691/2730\n")


def test_eval_transform(capsys):
    assert run(capsys, "eval-transform", "fibonacci", "10")[1] == "-55\n"
    assert run(capsys, "eval-transform", "pair:harmonic", "4")[1] == "-1/4\n"
    code, out, _ = run(capsys, "eval-seq", "catalan", "10", "--format", "json")
    assert json.loads(out) == {"sequence": "catalan", "transform": False, "n": 10, "value": "16796"}


@pytest.mark.parametrize("argv", [
    ["eval-seq", "nope", "3"],
    ["eval-seq", "catalan", "-1"],
    ["eval-seq", "catalan"],
    ["frobnicate"],
    [],
    ["list", "--bogus"],
    ["verify-all", "--status", "weird"],
    ["verify-all", "--jobs", "x"],
    ["check", "thm-3.1", "--bogus", "1"],
    ["check", "thm-3.1", "--n", "5..2"],
    ["check", "thm-3.1", "--n", "a..b"],
    ["check", "thm-3.1", "--n", "1/2"],
    ["check", "thm-3.1", "--n"],
    ["check", "thm-3.1", "--n", "1", "--n", "2"],
    ["check", "thm-3.1", "stray"],
    ["check", "thm-3.1", "--fuzz", "x"],
    ["check", "thm-3.1", "--p", "1"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_policy_controls_known_gaps(capsys):
    strict = run(capsys, "check", "prop-4.4-catalan-4Cn", "--n", "0..0")
    allow = run(capsys, "check", "prop-4.4-catalan-4Cn", "--n", "0..0", "--policy", "allow")
    assert strict[0] == 1 and allow[0] == 0
    assert "known-gap-confirmed" in strict[1]


def test_unexpected_failure_exits_1(capsys):
    code, out, _ = run(capsys, "check", "prop-4.3-harmonic-Hnjk", "--n", "1", "--r", "0", "--policy", "allow")
    assert code == 1 and "FAIL" in out


def test_rational_and_list_overrides(capsys):
    code, out, _ = run(capsys, "check", "thm-3.1", "--n=2,4", "--x", "1/2,-3", "--y=-1/2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["points"] == 4


def test_preset_override_with_nested_commas(capsys):
    code, out, _ = run(capsys, "check", "prop-5.1-horadam", "--w", "horadam(0,1;1,-1),horadam(2,1;1,-1)", "--format", "json")
    assert code == 0 and json.loads(out)["points"] > 0


def test_json_round_trip_is_byte_identical(capsys):
    _, out, _ = run(capsys, "check", "prop-4.4-catalan-4Cn", "--n", "0..3", "--format", "json")
    assert json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n" == out
    _, out, _ = run(capsys, "verify-all", "--section", "1", "--format", "json")
    assert json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n" == out


def test_text_and_json_counts_agree(capsys):
    _, text, _ = run(capsys, "check", "prop-4.4-catalan-4Cn", "--n", "0..9")
    _, js, _ = run(capsys, "check", "prop-4.4-catalan-4Cn", "--n", "0..9", "--format", "json")
    data = json.loads(js)
    assert f"{data['passes']}/{data['points']} points pass" in text
    assert text.count("  FAIL") == len(data["failures"])


def test_verify_all_section_text_and_json(capsys):
    code, text, _ = run(capsys, "verify-all", "--section", "4.4")
    code2, js, _ = run(capsys, "verify-all", "--section", "4.4", "--format", "json")
    summary = json.loads(js)["summary"]
    assert code == code2 == 0
    assert f"{summary['reports']} identities, {summary['points']} points, {summary['passes']} passes" in text


def test_verify_all_status_filter(capsys):
    code, out, _ = run(capsys, "verify-all", "--status", "amended", "--format", "json")
    data = json.loads(out)
    assert code == 0 and all(r["status"] == "amended" and r["witness"]["reproduces"] for r in data["reports"])


def test_verify_all_env_jobs(capsys, monkeypatch):
    monkeypatch.setenv("DOUBLESUM_JOBS", "2")
    code, out, _ = run(capsys, "verify-all", "--section", "1", "--format", "json")
    monkeypatch.setenv("DOUBLESUM_JOBS", "1")
    code1, out1, _ = run(capsys, "verify-all", "--section", "1", "--format", "json")
    strip = lambda s: [{k: v for k, v in r.items() if k != "ms"} for r in json.loads(s)["reports"]]
    assert code == code1 == 0 and strip(out) == strip(out1)


def test_list_and_index(capsys):
    code, out, _ = run(capsys, "list", "--section", "4.1", "--format", "json")
    entries = json.loads(out)
    assert code == 0 and len(entries) >= 8 and all(e["section"] == "4.1" for e in entries)
    code, out, _ = run(capsys, "list", "--index")
    assert code == 0 and {"identities", "labels", "excluded"} <= set(json.loads(out))
    code, out, _ = run(capsys, "list")
    assert code == 0 and "intro-bernoulli-double" in out


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "check" in capsys.readouterr().out


def test_value_parsing_helpers():
    assert parse_values("1..3,7", "int") == [1, 2, 3, 7]
    assert parse_values("1/2,-3", "rational") == [Q("1/2"), Q(-3)]
    assert parse_values("harmonic,pair:odd-harmonic", "pair") == ["pair:harmonic", "pair:odd-harmonic"]
    assert split_top("horadam(0,1;1,-1),[1;2]") == ["horadam(0,1;1,-1)", "[1;2]"]
    with pytest.raises(ValueError):
        parse_values("", "int")
    with pytest.raises(ValueError):
        parse_values("1,,2", "int")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "doublesum", "eval-seq", "bernoulli", "12"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "-691/2730"
