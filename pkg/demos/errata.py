"""Print every entry whose printed form needed a fix or an edge restriction, with evidence."""
from __future__ import annotations

from doublesum.registry import all_identities
from doublesum.verifier import verify


def main() -> None:
    for d in all_identities():
        if d.status == "as-stated":
            continue
        r = verify(d.id)
        print(f"{d.id} [{d.status}] default grid {r.passes}/{r.points} pass")
        if r.witness is not None:
            w = r.witness
            print(f"    printed form at {w.params}: lhs {w.lhs}, rhs {w.rhs}")
        for g in r.gaps:
            print(f"    edge {g.params}: lhs {g.lhs}, rhs {g.rhs}")
        print(f"    {d.notes}")


if __name__ == "__main__":
    main()
