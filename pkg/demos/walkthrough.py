"""A short tour: sequences, a transform pair, one double sum, and its verification."""
from __future__ import annotations

from fractions import Fraction

from doublesum.engine import thm31_lhs, thm31_rhs
from doublesum.exact import format_rational as fr
from doublesum.pairs import get_pair
from doublesum.registry import evaluate_identity
from doublesum.sequences import bernoulli_number, parse_sequence
from doublesum.transforms import chen_shift_lhs, chen_shift_rhs, classify
from doublesum.verifier import verify


def main() -> None:
    print("Bernoulli numbers B_0..B_12:", ", ".join(fr(bernoulli_number(n)) for n in range(13)))
    fib = parse_sequence("fibonacci")
    print("Fibonacci under the signed binomial transform is", classify(fib, 20))

    pair = get_pair("pair:harmonic")
    print("harmonic pair, first terms:", [fr(pair.s(n)) for n in range(5)], "->", [fr(pair.sigma(n)) for n in range(5)])
    print("shift identity at m=3, n=4:", fr(chen_shift_lhs(pair, 3, 4)), "=", fr(chen_shift_rhs(pair, 3, 4)))

    x, y = Fraction(2, 3), Fraction(-5, 2)
    print(f"incomplete-row double sum at n=6, x={fr(x)}, y={fr(y)}:", fr(thm31_lhs(6, x, y)), "vs closed form", fr(thm31_rhs(6, x, y)))

    ev = evaluate_identity("intro-bernoulli-double", {"n": 2})
    print("Bernoulli double sum at n=2:", fr(ev.lhs), "=", fr(ev.rhs))

    for id in ("thm-3.1", "intro-catalan-double"):
        r = verify(id)
        print(f"{id}: {r.classification}, {r.passes}/{r.points} points, {r.ms} ms")


if __name__ == "__main__":
    main()
