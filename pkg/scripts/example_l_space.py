"""Reals times the long segment: find the points of uncountable character,
isolate them, and show that the result is first-countable."""
from fractions import Fraction

from ordtopo import spaces as S
from ordtopo.fixtures import FIXTURES
from ordtopo.ordinal import ZERO
from ordtopo.refine import refine_first_countable
from ordtopo.schedules import PairSchedule, RatApproach, converges


def show(title, space):
    print(title)
    for e in S.character_spectrum(space):
        left, right = (c.value.lower() for c in e.chars)
        print(f"  {e.key:<42} {left:<12} {right}")
    print(f"  first countable: {S.first_countable(space)}")


def main():
    base = FIXTURES["L-base"].space
    show("base", base)
    L = S.apply_rules(base, [S.IsolateWhere(S.TOTAL_UNCOUNTABLE)])
    show("uncountable points isolated", L)
    print(f"base coarser than L: {S.is_coarser(base, L)}")
    r = refine_first_countable(base)
    show("minimal refinement (rays only)", r.output)
    print(f"refinement coarser than L: {S.is_coarser(r.output, L)}")
    x = Fraction(1, 3)
    target = S.Pair(S.Rat(x), S.LongPoint(ZERO, Fraction(0)))
    seq = PairSchedule(RatApproach(x, "up"), S.LongInfinity())
    print(f"rationals rising to 1/3 converge to <1/3, 0>: {converges(seq, target, base)}")


if __name__ == "__main__":
    main()
