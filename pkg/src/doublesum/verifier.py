"""Grid runner over the identity table, with classification reports."""
from __future__ import annotations

import json
import os
import random
import re
import time
import types
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping

from .exact import Q, format_rational
from .registry import all_identities, check_witness, evaluate_point, get_identity
from .registry.core import Identity, serialize_point

JOBS_ENV = "DOUBLESUM_JOBS"
CLASSIFICATIONS = ("pass", "fail", "known-gap-confirmed")


def _fmt(v: Fraction | None) -> str | None:
    return None if v is None else format_rational(v)


@dataclass(frozen=True)
class Failure:
    params: dict
    lhs: str | None
    rhs: str | None
    known_gap: bool = False
    error: str | None = None

    def to_dict(self) -> dict:
        out = {"params": self.params, "lhs": self.lhs, "rhs": self.rhs, "known_gap": self.known_gap}
        if self.error:
            out["error"] = self.error
        return out


@dataclass(frozen=True)
class Probe:
    """A single-point check of the printed form: a witness or a known gap."""

    params: dict
    lhs: str | None
    rhs: str | None
    reproduces: bool

    def to_dict(self) -> dict:
        return {"params": self.params, "lhs": self.lhs, "rhs": self.rhs, "reproduces": self.reproduces}


@dataclass
class VerificationReport:
    identity: str
    anchor: str
    status: str
    section: str
    points: int
    passes: int
    failures: list[Failure]
    ms: int
    classification: str
    witness: Probe | None = None
    gaps: list[Probe] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.classification == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        out: dict[str, Any] = {
            "identity": self.identity,
            "anchor": self.anchor,
            "status": self.status,
            "section": self.section,
            "points": self.points,
            "passes": self.passes,
            "failures": [f.to_dict() for f in self.failures],
            "classification": self.classification,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.gaps:
            out["gaps"] = [g.to_dict() for g in self.gaps]
        out["ms"] = self.ms if timing else 0
        return out


def _classify(failures: list[Failure], witness: Probe | None, gaps: list[Probe]) -> str:
    # a witness or gap that stops failing means the table itself is stale
    if witness is not None and not witness.reproduces:
        return "fail"
    if any(not g.reproduces for g in gaps):
        return "fail"
    if not failures:
        return "pass"
    if all(f.known_gap for f in failures):
        return "known-gap-confirmed"
    return "fail"


def _coerce(ident: Identity, name: str, value: Any) -> Any:
    kind = ident.kind(name)
    if kind == "int":
        q = Q(value)
        if q.denominator != 1:
            raise ValueError(f"{ident.id}: parameter {name} takes integers, got {format_rational(q)}")
        return int(q)
    if kind == "rational":
        return Q(value)
    if not isinstance(value, str):
        raise ValueError(f"{ident.id}: parameter {name} takes a named value, got {value!r}")
    return value


def normalize_overrides(ident: Identity, overrides: Mapping[str, Iterable] | None) -> dict[str, tuple]:
    if not overrides:
        return {}
    out = {}
    for name, values in overrides.items():
        if name not in ident.grid:
            raise ValueError(f"{ident.id} has no parameter {name!r}; parameters: {', '.join(ident.params)}")
        out[name] = tuple(_coerce(ident, name, v) for v in values)
    return out


def fuzz_points(ident: Identity, seed: int, count: int) -> list[dict]:
    """Extra points drawn from a seeded RNG.

    Integer axes stretch a little past their declared top; other axes reuse
    declared values, since their exclusions live in the grid itself.
    """
    rng = random.Random(f"{seed}:{ident.id}")
    out: list[dict] = []
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        pt = {}
        for name, values in ident.grid.items():
            if ident.kind(name) == "int" and values:
                lo, hi = min(values), max(values)
                pt[name] = rng.randint(lo, hi + max(2, (hi - lo) // 4))
            else:
                pt[name] = rng.choice(values)
        if ident.admits(pt) and not ident.is_known_gap(pt):
            out.append(pt)
    return out


def _probe(ident: Identity, point: Mapping[str, Any], printed: bool) -> Probe:
    if printed:
        ev = check_witness(ident)
    else:
        ev = evaluate_point(ident, point)
    return Probe(serialize_point(point), _fmt(ev.lhs), _fmt(ev.rhs), reproduces=not ev.equal)


def verify(
    id: str,
    overrides: Mapping[str, Iterable] | None = None,
    fuzz: tuple[int, int] | None = None,
) -> VerificationReport:
    """Evaluate ``id`` over its grid (or the overridden axes) and classify.

    ``fuzz=(seed, count)`` appends seeded random points.  Raises
    UnknownIdentityError for unknown ids and ValueError for bad overrides.
    """
    ident = get_identity(id)
    ov = normalize_overrides(ident, overrides)
    t0 = time.perf_counter()
    pts = list(ident.points(ov))
    if fuzz is not None:
        pts += fuzz_points(ident, *fuzz)
    passes = 0
    failures: list[Failure] = []
    for pt in pts:
        ev = evaluate_point(ident, pt)
        if ev.equal:
            passes += 1
        else:
            failures.append(Failure(serialize_point(pt), _fmt(ev.lhs), _fmt(ev.rhs), ident.is_known_gap(pt), ev.error))
    witness = _probe(ident, ident.witness, printed=True) if ident.witness is not None else None
    gaps = [_probe(ident, g, printed=False) for g in ident.known_gaps]
    ms = round((time.perf_counter() - t0) * 1000)
    return VerificationReport(
        identity=ident.id,
        anchor=ident.anchor,
        status=ident.status,
        section=ident.section,
        points=len(pts),
        passes=passes,
        failures=failures,
        ms=ms,
        classification=_classify(failures, witness, gaps),
        witness=witness,
        gaps=gaps,
    )


def section_matches(section: str, wanted: str) -> bool:
    """'4' matches 4.1 and 4.3; '4.1' matches exactly 4.1 (and any 4.1.x)."""
    return section == wanted or section.startswith(wanted + ".")


def select(section: str | None = None, status: str | None = None) -> list[str]:
    return [
        d.id
        for d in all_identities()
        if (section is None or section_matches(d.section, section)) and (status is None or d.status == status)
    ]


def resolve_jobs(jobs: int | None = None) -> int:
    if jobs is None:
        raw = os.environ.get(JOBS_ENV, "").strip()
        if not raw:
            return 1
        try:
            jobs = int(raw)
        except ValueError:
            raise ValueError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None
    if jobs == 0:
        jobs = os.cpu_count() or 1
    if jobs < 0:
        raise ValueError("jobs must be >= 0 (0 means one per CPU)")
    return jobs


def _verify_task(args: tuple) -> VerificationReport:
    id, fuzz = args
    return verify(id, fuzz=fuzz)


def verify_all(
    section: str | None = None,
    status: str | None = None,
    jobs: int | None = None,
    fuzz: tuple[int, int] | None = None,
) -> list[VerificationReport]:
    """One report per matching entry, in table order whatever the parallelism.

    ``jobs`` defaults to the DOUBLESUM_JOBS environment variable, then 1.
    """
    ids = select(section, status)
    n = min(resolve_jobs(jobs), max(1, len(ids)))
    tasks = [(i, fuzz) for i in ids]
    if n <= 1:
        return [_verify_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(_verify_task, tasks))


def summarize(reports: list[VerificationReport]) -> dict:
    counts = {c: 0 for c in CLASSIFICATIONS}
    for r in reports:
        counts[r.classification] += 1
    return {
        "reports": len(reports),
        "points": sum(r.points for r in reports),
        "passes": sum(r.passes for r in reports),
        "failures": sum(len(r.failures) for r in reports),
        "by_classification": counts,
        "ms": sum(r.ms for r in reports),
    }


def canonical(reports: list[VerificationReport]) -> list[VerificationReport]:
    order = {d.id: i for i, d in enumerate(all_identities())}
    return sorted(reports, key=lambda r: (order.get(r.identity, len(order)), r.identity))


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def report_json(report: VerificationReport, timing: bool = True) -> str:
    return dumps(report.to_dict(timing))


def suite_json(reports: list[VerificationReport], timing: bool = True) -> str:
    """Canonical JSON for a batch; ``timing=False`` zeroes wall-clock fields."""
    reports = canonical(reports)
    summary = summarize(reports)
    if not timing:
        summary["ms"] = 0
    return dumps({"reports": [r.to_dict(timing) for r in reports], "summary": summary})


# --------------------------------------------------------------------------
# independence audit

CLOSED_FORM_NAME = re.compile(r"(rhs|sides|closed|sigma|2f1\w*|_eval)$")


def _call_graph(fn: Callable, seen: set, names: set) -> None:
    code = getattr(fn, "__code__", None)
    if code is None or code in seen:
        return
    seen.add(code)
    glb = getattr(fn, "__globals__", {})

    def visit(c: types.CodeType) -> None:
        for nm in c.co_names:
            names.add(nm)
            obj = glb.get(nm)
            if callable(obj) and getattr(obj, "__module__", "").startswith("doublesum"):
                _call_graph(getattr(obj, "__wrapped__", obj), seen, names)
        for const in c.co_consts:
            if isinstance(const, types.CodeType):
                visit(const)

    visit(code)
    for cell in fn.__closure__ or ():
        try:
            v = cell.cell_contents
        except ValueError:
            continue
        if callable(v) and getattr(v, "__module__", "").startswith("doublesum"):
            _call_graph(v, seen, names)
    for d in fn.__defaults__ or ():
        if callable(d):
            _call_graph(d, seen, names)


def lhs_names(ident: Identity) -> set[str]:
    """Global and attribute names reachable from the brute-force side."""
    names: set[str] = set()
    _call_graph(ident.lhs, set(), names)
    return names


def independence_violations(ident: Identity) -> list[str]:
    """Closed-form helpers reachable from the brute-force side (should be empty)."""
    names = lhs_names(ident)
    rhs_own = getattr(ident.rhs, "__name__", "<lambda>")
    bad = {n for n in names if CLOSED_FORM_NAME.search(n)}
    if rhs_own != "<lambda>" and rhs_own in names:
        bad.add(rhs_own)
    return sorted(bad)
