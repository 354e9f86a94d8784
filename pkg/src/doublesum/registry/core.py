"""Identity records, the global table, and evaluation plumbing."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable, Iterator, Mapping

from ..exact import ZERO, Q, binomial, format_rational, sign
from ..pairs import get_pair
from ..transforms import TransformPair

STATUSES = ("as-stated", "amended", "edge-restricted")


class UnknownIdentityError(KeyError):
    pass


class DomainError(ValueError):
    """A parameter point lies outside an identity's declared domain."""


@dataclass(frozen=True)
class Identity:
    """One displayed identity: parameter grid plus two independent evaluators.

    ``lhs`` is always the brute-force side built from sequence terms and raw
    summation.  For ``amended`` entries, ``printed_lhs``/``printed_rhs`` hold
    the side(s) as originally printed and ``witness`` a point where the
    printed form fails.  ``known_gaps`` lists points outside the declared
    domain where the printed statement is known to fail.
    """

    id: str
    section: str
    anchor: str
    quote: str
    grid: Mapping[str, tuple]
    lhs: Callable[..., Fraction]
    rhs: Callable[..., Fraction]
    status: str = "as-stated"
    constraint: Callable[..., bool] | None = None
    notes: str = ""
    labels: tuple[str, ...] = ()
    printed_lhs: Callable[..., Fraction] | None = None
    printed_rhs: Callable[..., Fraction] | None = None
    witness: Mapping[str, Any] | None = None
    known_gaps: tuple[Mapping[str, Any], ...] = ()
    compare: Callable[[Fraction, Fraction], bool] | None = None
    optional: bool = False
    kinds: Mapping[str, str] = field(default_factory=dict)

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(self.grid)

    def kind(self, name: str) -> str:
        """'int', 'rational', 'pair' or 'choice' (a named preset)."""
        if name in self.kinds:
            return self.kinds[name]
        sample = self.grid[name][0] if self.grid[name] else 0
        if isinstance(sample, str):
            return "pair" if sample.startswith("pair:") else "choice"
        if isinstance(sample, Fraction):
            return "rational"
        return "int"

    def in_domain(self, point: Mapping[str, Any]) -> bool:
        if set(point) != set(self.grid):
            return False
        return self.constraint is None or bool(self.constraint(**resolve(point)))

    def admits(self, point: Mapping[str, Any]) -> bool:
        """Membership in the declared domain, which is wider than the grid.

        Integer axes extend upward from the grid along its progression
        (so an even-only grid admits any larger even n); preset axes admit
        only their listed values; rational and pair axes are open.
        """
        if not self.in_domain(point):
            return False
        for name, values in self.grid.items():
            kind, v = self.kind(name), point[name]
            if kind == "int":
                if isinstance(v, Fraction):
                    if v.denominator != 1:
                        return False
                    v = int(v)
                if not isinstance(v, int) or not _on_progression(v, values):
                    return False
            elif kind == "choice" and v not in values:
                return False
        return True

    def is_known_gap(self, point: Mapping[str, Any]) -> bool:
        if set(point) != set(self.grid):
            return False
        norm = canonical_point(self, point)
        return any(canonical_point(self, g) == norm for g in self.known_gaps)

    def points(self, overrides: Mapping[str, Iterable] | None = None) -> Iterator[dict]:
        """Grid points in declaration order; overrides replace whole axes.

        The constraint (e.g. s <= r) still applies to overridden axes.
        """
        overrides = dict(overrides or {})
        bad = set(overrides) - set(self.grid)
        if bad:
            raise DomainError(f"{self.id} has no parameter(s) {sorted(bad)}")
        axes = [tuple(overrides.get(name, self.grid[name])) for name in self.grid]
        for combo in itertools.product(*axes):
            pt = dict(zip(self.grid, combo))
            if self.in_domain(pt):
                yield pt

    def summary(self) -> dict:
        out = {
            "id": self.id,
            "section": self.section,
            "anchor": self.anchor,
            "quote": self.quote,
            "params": {name: describe_axis(self.grid[name]) for name in self.grid},
            "status": self.status,
            "notes": self.notes,
            "labels": list(self.labels),
        }
        if self.witness is not None:
            out["witness"] = serialize_point(self.witness)
        if self.known_gaps:
            out["known_gaps"] = [serialize_point(g) for g in self.known_gaps]
        if self.optional:
            out["optional"] = True
        return out


def _on_progression(v: int, values: tuple) -> bool:
    vals = sorted(set(values))
    if len(vals) < 2:
        return v in vals or (bool(vals) and v >= vals[0])
    step = vals[1] - vals[0]
    if all(b - a == step for a, b in zip(vals, vals[1:])):
        return v >= vals[0] and (v - vals[0]) % step == 0
    return v in vals


def describe_axis(values: tuple) -> str:
    if not values:
        return "(empty)"
    if all(isinstance(v, int) for v in values) and list(values) == list(range(values[0], values[-1] + 1)):
        return f"{values[0]}..{values[-1]}"
    return ",".join(str(v) if isinstance(v, str) else format_rational(v) for v in values)


@lru_cache(maxsize=None)
def cached_pair(text: str) -> TransformPair:
    return get_pair(text)


def resolve(point: Mapping[str, Any]) -> dict:
    """Turn pair ids into TransformPair objects; leave numbers alone."""
    return {k: cached_pair(v) if isinstance(v, str) and v.startswith("pair:") else v for k, v in point.items()}


def serialize_value(v: Any) -> Any:
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else format_rational(v)
    return v


def serialize_point(point: Mapping[str, Any]) -> dict:
    return {k: serialize_value(v) for k, v in point.items()}


def canonical_point(ident: Identity, point: Mapping[str, Any]) -> tuple:
    out = []
    for name in ident.grid:
        v = point.get(name)
        kind = ident.kind(name)
        if kind == "rational" or (kind == "int" and isinstance(v, Fraction)):
            v = Q(v)
        out.append((name, v))
    return tuple(out)


_REGISTRY: dict[str, Identity] = {}
_ORDER: list[str] = []


def register(ident: Identity) -> Identity:
    if ident.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {ident.id}")
    if ident.status not in STATUSES:
        raise ValueError(f"{ident.id}: bad status {ident.status}")
    if ident.status == "amended" and (ident.witness is None or (ident.printed_lhs is None and ident.printed_rhs is None)):
        raise ValueError(f"{ident.id}: amended entries need a printed form and a witness")
    _REGISTRY[ident.id] = ident
    _ORDER.append(ident.id)
    return ident


def ident(id: str, section: str, anchor: str, quote: str, grid: Mapping[str, Iterable], lhs, rhs, **kw) -> Identity:
    return register(
        Identity(id=id, section=section, anchor=anchor, quote=quote,
                 grid={k: tuple(v) for k, v in grid.items()}, lhs=lhs, rhs=rhs, **kw)
    )


def _section_key(sec: str) -> tuple:
    return tuple(int(p) for p in sec.split("."))


def all_identities() -> list[Identity]:
    """Registry entries ordered by section, then registration (display) order."""
    pos = {k: i for i, k in enumerate(_ORDER)}
    return sorted(_REGISTRY.values(), key=lambda d: (_section_key(d.section), pos[d.id]))


def get_identity(id: str) -> Identity:
    try:
        return _REGISTRY[id]
    except KeyError:
        raise UnknownIdentityError(id) from None


# --------------------------------------------------------------------------
# evaluation


@dataclass(frozen=True)
class Evaluation:
    lhs: Fraction | None
    rhs: Fraction | None
    equal: bool
    error: str | None = None


def _safe(fn, args) -> tuple[Fraction | None, str | None]:
    try:
        return Q(fn(**args)), None
    except ZeroDivisionError:
        return None, "undefined (division by zero)"
    except ValueError as exc:
        return None, f"undefined ({exc})"


def evaluate_point(ident: Identity, point: Mapping[str, Any], lhs=None, rhs=None) -> Evaluation:
    args = resolve(point)
    left, e1 = _safe(lhs or ident.lhs, args)
    right, e2 = _safe(rhs or ident.rhs, args)
    if left is None or right is None:
        return Evaluation(left, right, False, e1 or e2)
    eq = ident.compare(left, right) if ident.compare else left == right
    return Evaluation(left, right, eq)


def evaluate_identity(id: str, point: Mapping[str, Any]) -> Evaluation:
    """Exact evaluation of both sides at a point in the declared domain (or a known gap)."""
    ident = get_identity(id)
    gap = ident.is_known_gap(point)
    if not (gap or ident.admits(point)):
        raise DomainError(f"{id}: point {serialize_point(point)} is outside the declared domain")
    ev = evaluate_point(ident, point)
    if ev.error and not gap:
        raise DomainError(f"{id}: {ev.error} at {serialize_point(point)}")
    return ev


def default_domain(id: str) -> Iterator[dict]:
    return get_identity(id).points()


def check_witness(ident: Identity) -> Evaluation | None:
    """Evaluate the as-printed form at the witness; ``equal`` False means it reproduces."""
    if ident.witness is None:
        return None
    return evaluate_point(ident, ident.witness, lhs=ident.printed_lhs, rhs=ident.printed_rhs)


# --------------------------------------------------------------------------
# summation helpers shared by the section tables


def dsum(n: int, f: Callable[[int, int], Fraction]) -> Fraction:
    """sum_{k=0}^n sum_{j=0}^k f(k, j)."""
    total = ZERO
    for k in range(n + 1):
        for j in range(k + 1):
            total += f(k, j)
    return total


def dsum_lower(n: int, f: Callable[[int, int], Fraction]) -> Fraction:
    """sum_{k=1}^n sum_{j=0}^{k-1} f(k, j)."""
    total = ZERO
    for k in range(1, n + 1):
        for j in range(k):
            total += f(k, j)
    return total


def ssum(lo: int, hi: int, f: Callable[[int], Fraction]) -> Fraction:
    """sum_{k=lo}^{hi} f(k); empty ranges give 0."""
    total = ZERO
    for k in range(lo, hi + 1):
        total += f(k)
    return total


def transform_of(s: Callable[[int], Fraction], n: int) -> Fraction:
    """Raw signed binomial transform sum_k C(n,k)(-1)^k s(k)."""
    return ssum(0, n, lambda k: binomial(n, k) * sign(k) * s(k))


def rats(*vals) -> tuple[Fraction, ...]:
    return tuple(Q(v) for v in vals)
