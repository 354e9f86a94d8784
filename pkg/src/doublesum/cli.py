"""Command-line front end: list, check, verify-all, eval-seq, eval-transform."""
from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from .exact import Q, format_rational
from .registry import UnknownIdentityError, all_identities, get_identity
from .registry.core import cached_pair
from .registry.index import index_json
from .sequences import parse_sequence
from .transforms import forward_transform
from .verifier import (
    JOBS_ENV,
    VerificationReport,
    dumps,
    report_json,
    resolve_jobs,
    select,
    suite_json,
    summarize,
    verify,
    verify_all,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # no prefix matching: "--p" must reach a parameter named p, not --policy
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message: str):  # argparse would call sys.exit itself
        raise UsageError(f"{self.prog}: {message}")


# --------------------------------------------------------------------------
# override syntax: "a..b" inclusive ranges, "p/q" rationals, comma lists


def split_top(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside (), [] so preset names like horadam(0,1;1,-1) survive."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def parse_values(text: str, kind: str) -> list[Any]:
    """Expand an override literal for one axis of the given kind."""
    if not text.strip():
        raise ValueError("empty value list")
    vals: list[Any] = []
    for item in split_top(text):
        item = item.strip()
        if not item:
            raise ValueError(f"empty item in {text!r}")
        if kind in ("pair", "choice"):
            vals.append(item if kind == "choice" or item.startswith("pair:") else f"pair:{item}")
            continue
        if ".." in item:
            lo, _, hi = item.partition("..")
            try:
                a, b = int(lo), int(hi)
            except ValueError:
                raise ValueError(f"malformed range {item!r}; expected a..b with integers") from None
            if b < a:
                raise ValueError(f"empty range {item!r}")
            vals.extend(range(a, b + 1))
            continue
        try:
            q = Q(item)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed number {item!r}") from None
        vals.append(q)
    return vals


def parse_overrides(id: str, extra: Sequence[str]) -> dict[str, list]:
    ident = get_identity(id)
    out: dict[str, list] = {}
    i = 0
    while i < len(extra):
        tok = extra[i]
        if not tok.startswith("--") or len(tok) == 2:
            raise UsageError(f"unexpected argument {tok!r}")
        name, eq, value = tok[2:].partition("=")
        if not eq:
            if i + 1 >= len(extra):
                raise UsageError(f"option --{name} needs a value")
            value = extra[i + 1]
            i += 1
        i += 1
        if name not in ident.grid:
            raise UsageError(f"unrecognized option --{name} (parameters of {id}: {', '.join(ident.params) or 'none'})")
        if name in out:
            raise UsageError(f"--{name} given twice")
        try:
            out[name] = parse_values(value, ident.kind(name))
        except ValueError as exc:
            raise UsageError(f"--{name}: {exc}") from None
    return out


def parse_fuzz(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    seed, _, count = text.partition(":")
    try:
        out = int(seed), int(count or 20)
    except ValueError:
        raise UsageError(f"--fuzz expects SEED[:COUNT], got {text!r}") from None
    if out[1] < 0:
        raise UsageError("--fuzz count must be >= 0")
    return out


# --------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, policy: bool = False, jobs: bool = False) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    if policy:
        p.add_argument("--policy", choices=("strict", "allow"), default="strict",
                       help="whether known-gap-confirmed counts as success (allow) or not (strict)")
    if jobs:
        p.add_argument("--jobs", type=int, default=None, help=f"worker processes (0 = per CPU; default ${JOBS_ENV} or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="doublesum", description="Exact verification of binomial-transform double-sum identities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("list", help="list registry entries")
    p.add_argument("--section")
    p.add_argument("--status")
    p.add_argument("--index", action="store_true", help="emit the full JSON index (entries, label map, exclusions)")
    _common(p)

    p = sub.add_parser("check", help="verify one identity; --<param> a..b / p/q / comma lists override axes")
    p.add_argument("id")
    p.add_argument("--fuzz", metavar="SEED[:COUNT]")
    _common(p, policy=True)

    p = sub.add_parser("verify-all", help="verify every (matching) identity")
    p.add_argument("--section")
    p.add_argument("--status")
    p.add_argument("--fuzz", metavar="SEED[:COUNT]")
    _common(p, policy=True, jobs=True)

    p = sub.add_parser("eval-seq", help="print one term of a sequence")
    p.add_argument("spec")
    p.add_argument("n", type=int)
    _common(p)

    p = sub.add_parser("eval-transform", help="print one term of the signed binomial transform")
    p.add_argument("spec")
    p.add_argument("n", type=int)
    _common(p)
    return parser


def _succeeded(r: VerificationReport, policy: str) -> bool:
    return r.classification == "pass" or (policy == "allow" and r.classification == "known-gap-confirmed")


def _text_report(r: VerificationReport) -> str:
    lines = [f"{r.identity} [{r.status}] {r.classification}: {r.passes}/{r.points} points pass ({r.ms} ms)"]
    for f in r.failures:
        tag = " (known gap)" if f.known_gap else ""
        detail = f.error or f"lhs={f.lhs} rhs={f.rhs}"
        lines.append(f"  FAIL {f.params}: {detail}{tag}")
    if r.witness is not None:
        w = r.witness
        lines.append(f"  printed form at {w.params}: lhs={w.lhs} rhs={w.rhs} "
                     f"{'discrepancy reproduces' if w.reproduces else 'NO LONGER FAILS'}")
    for g in r.gaps:
        lines.append(f"  known gap {g.params}: lhs={g.lhs} rhs={g.rhs} "
                     f"{'confirmed' if g.reproduces else 'NO LONGER FAILS'}")
    return "\n".join(lines)


def _text_summary(s: dict) -> str:
    c = s["by_classification"]
    return (f"{s['reports']} identities, {s['points']} points, {s['passes']} passes, {s['failures']} failures; "
            f"pass={c['pass']} known-gap-confirmed={c['known-gap-confirmed']} fail={c['fail']} ({s['ms']} ms)")


def _cmd_list(a) -> int:
    if a.index:
        sys.stdout.write(index_json() + "\n")
        return EXIT_OK
    wanted = set(select(a.section, a.status))
    entries = [d.summary() for d in all_identities() if d.id in wanted]
    if a.format == "json":
        sys.stdout.write(dumps(entries))
    else:
        for e in entries:
            params = " ".join(f"{k}={v}" for k, v in e["params"].items())
            print(f"{e['id']:<44} {e['section']:<5} {e['status']:<16} {params}")
    return EXIT_OK


def _cmd_check(a, extra) -> int:
    try:
        get_identity(a.id)
    except UnknownIdentityError:
        raise UsageError(f"unknown identity {a.id!r} (see 'doublesum list')") from None
    overrides = parse_overrides(a.id, extra)
    try:
        report = verify(a.id, overrides, fuzz=parse_fuzz(a.fuzz))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if a.format == "json":
        sys.stdout.write(report_json(report))
    else:
        print(_text_report(report))
    return EXIT_OK if _succeeded(report, a.policy) else EXIT_FAIL


def _cmd_verify_all(a) -> int:
    from .registry import STATUSES

    if a.status is not None and a.status not in STATUSES:
        raise UsageError(f"--status must be one of {', '.join(STATUSES)}")
    try:
        jobs = resolve_jobs(a.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = verify_all(a.section, a.status, jobs=jobs, fuzz=parse_fuzz(a.fuzz))
    if a.format == "json":
        sys.stdout.write(suite_json(reports))
    else:
        for r in reports:
            print(_text_report(r))
        print(_text_summary(summarize(reports)))
    return EXIT_OK if all(_succeeded(r, a.policy) for r in reports) else EXIT_FAIL


def _term(spec: str, n: int, transform: bool) -> tuple[str, Any]:
    if spec.startswith("pair:"):
        pair = cached_pair(spec)
        seq, label = pair.s, pair.label
    else:
        seq = parse_sequence(spec)
        label = seq.text()
    return label, forward_transform(seq, n) if transform else seq(n)


def _cmd_eval(a, transform: bool) -> int:
    try:
        label, value = _term(a.spec, a.n, transform)
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot evaluate {a.spec!r} at n={a.n}: {exc}") from None
    text = format_rational(value)
    if a.format == "json":
        sys.stdout.write(dumps({"sequence": label, "transform": transform, "n": a.n, "value": text}))
    else:
        print(text)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        if extra and args.command != "check":
            raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "check":
            return _cmd_check(args, extra)
        if args.command == "verify-all":
            return _cmd_verify_all(args)
        return _cmd_eval(args, transform=args.command == "eval-transform")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


run = main

if __name__ == "__main__":
    sys.exit(main())
