"""Apply the first-countable transform to a few hereditarily paracompact
ordinal subspaces and print input, output and the case trace."""
import argparse
import json

from ordtopo import serialize as J
from ordtopo import spaces as S
from ordtopo.embed import PartitionSchedule, go5_transform, is_hered_paracompact
from ordtopo.fixtures import FIXTURES
from ordtopo.ordinal import ONE, ZERO, parse
from ordtopo.pieces import Full, OffsetClass, Singleton

W = parse("W")

CASES = {
    "successors below omega_1": (FIXTURES["E-successors"].space, FIXTURES["E-successors"].schedule),
    "omega^2 + 2": (S.full(parse("w^2+2")), None),
    "offset-1 points and the top": (
        S.OrdinalSub(W + ONE, [OffsetClass(ZERO, W, 1), Singleton(W)]),
        PartitionSchedule(W, ((OffsetClass(ZERO, W, 1),),))),
    "omega + 1, a gap, then up to omega^3": (
        S.OrdinalSub(parse("w^3"), [Full(ZERO, parse("w+1")), Full(parse("w*2"), parse("w^3"))]),
        None),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="print full JSON reports")
    args = ap.parse_args()
    for name, (s, sched) in CASES.items():
        r = go5_transform(s, sched)
        print(f"== {name}")
        if args.json:
            print(J.dumps(r))
            continue
        print(f"  in : {json.dumps(J.to_json(s))}")
        print(f"  out: {json.dumps(J.to_json(r.output))}")
        print(f"  cases: {[t['case'] for t in r.trace]}")
        print(f"  first countable {S.first_countable(r.output)}, "
              f"hereditarily paracompact {is_hered_paracompact(r.output)}")


if __name__ == "__main__":
    main()
