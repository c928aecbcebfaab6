"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (reported as JSON on stdout),
2 on a usage error (argparse message on stderr).
"""
from __future__ import annotations

import argparse
import io
import json
import os
import sys
from functools import reduce
from typing import List, Optional

from . import embed as E
from . import fixtures as F
from . import oracle as O
from . import pieces as P
from . import schedules as Sch
from . import serialize as J
from . import spaces as S
from .ordinal import OrdinalError, add, classify, cmp, mul, parse, to_string
from .refine import refine_first_countable

DOMAIN_ERRORS = (OrdinalError, S.SpaceError, P.PieceError, E.EmbedError,
                 Sch.ScheduleError, O.OracleError, J.SchemaError, KeyError)


class UsageError(Exception):
    pass


# -- argument decoding -------------------------------------------------------

def _json_arg(text: str):
    if text.lstrip().startswith(("{", "[")):
        return json.loads(text)
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return json.load(fh)
    return None


def load_space(text: str):
    """Fixture name, JSON (inline or file), or an ordinal bound for [0, bound)."""
    if text.startswith(F.PREFIX):
        return F.lookup(text).space
    data = _json_arg(text)
    if data is not None:
        return J.from_json(data)
    return S.full(parse(text))


def load_point(space, text: str):
    data = _json_arg(text)
    if data is not None:
        return J.from_json(data)
    if isinstance(S.base_of(space), S.OrdinalSub):
        return S.OrdPoint(parse(text))
    raise UsageError("points of this space must be given as JSON")


def load_schedule(text: str):
    if text.startswith("affine:"):
        stride, _, offset = text[len("affine:"):].partition(",")
        return Sch.AffineOrd(parse(stride), parse(offset) if offset else parse("0"))
    data = _json_arg(text)
    if data is None:
        raise UsageError(f"cannot read a schedule from {text!r}")
    if isinstance(data, list):
        return tuple(J.from_json(x) for x in data)
    return J.from_json(data)


def _space_arg(args, attr: str = "space"):
    value = getattr(args, attr, None)
    if args.fixture:
        if value is not None:
            raise UsageError("give either a space argument or --fixture, not both")
        return F.lookup(args.fixture).space
    if value is None:
        raise UsageError("a space argument or --fixture is required")
    return load_space(value)


def _fixture_of(args) -> Optional[F.Fixture]:
    if args.fixture:
        return F.lookup(args.fixture)
    name = getattr(args, "space", None)
    return F.lookup(name) if name and name.startswith(F.PREFIX) else None


# -- commands ----------------------------------------------------------------

def cmd_ord(args):
    vals = [parse(x) for x in args.exprs]
    op = args.op
    if op == "eval":
        if len(vals) != 1:
            raise UsageError("ord eval takes one expression")
        return {"value": to_string(vals[0])}
    if op == "cof":
        if len(vals) != 1:
            raise UsageError("ord cof takes one expression")
        return {"class": classify(vals[0]).value}
    if op == "cmp":
        if len(vals) != 2:
            raise UsageError("ord cmp takes two expressions")
        return {"cmp": cmp(*vals)}
    if len(vals) < 2:
        raise UsageError(f"ord {op} takes at least two expressions")
    return {"value": to_string(reduce(add if op == "add" else mul, vals))}


def cmd_space(args):
    items = list(args.items)
    if not args.fixture and items:
        args.space = items.pop(0)
    if len(items) > 1:
        raise UsageError("space takes a space and at most one point")
    args.point = items[0] if items else None
    s = _space_arg(args)
    if args.op == "spectrum":
        spec = S.character_spectrum(s)
        return {"space": J.to_json(s), "spectrum": [J.to_json(e) for e in spec],
                "first_countable": S.first_countable(s)}
    if args.point is None:
        raise UsageError(f"space {args.op} needs a point")
    p = load_point(s, args.point)
    if args.op == "member":
        return {"member": S.contains(s, S.normalize_point(s, p))}
    p = S.normalize_point(s, p)
    if not S.contains(s, p):
        raise S.SpaceError("point is not in the space")
    return {"point": J.to_json(p), "class": S.class_of(s, p),
            "left": S.side_character(s, p, S.LEFT).value.lower(),
            "right": S.side_character(s, p, S.RIGHT).value.lower()}


def cmd_refine(args):
    return J.to_json(refine_first_countable(_space_arg(args)))


def cmd_embed(args):
    if args.op == "double":
        if len(args.spaces) > 1:
            raise UsageError("embed double takes one space")
        args.space = args.spaces[0] if args.spaces else None
        return J.to_json(E.reembed(_space_arg(args)))
    summands = [load_space(x) for x in args.spaces]
    tail = load_space(args.tail) if args.tail else None
    return J.to_json(E.omega_sum_with_top(summands, tail))


def cmd_go5(args):
    s = _space_arg(args)
    if args.schedule:
        sched = load_schedule(args.schedule)
    else:
        fx = _fixture_of(args)
        sched = fx.schedule if fx else None
    return J.to_json(E.go5_transform(s, sched))


def cmd_check(args):
    items = list(args.args)
    if args.fixture:
        items.insert(0, F.PREFIX + args.fixture.removeprefix(F.PREFIX))
    if args.op == "paracompact":
        if len(items) != 1:
            raise UsageError("check paracompact takes one space")
        return {"hereditarily_paracompact": E.is_hered_paracompact(load_space(items[0]))}
    if args.op == "coarser":
        if len(items) != 2:
            raise UsageError("check coarser takes two spaces")
        return {"coarser": S.is_coarser(load_space(items[0]), load_space(items[1]))}
    if len(items) != 3:
        raise UsageError("check converges takes a space, a schedule and a point")
    s = load_space(items[0])
    return {"converges": Sch.converges(load_schedule(items[1]), load_point(s, items[2]), s)}


def cmd_oracle(args):
    return O.selftest(seed=args.seed)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def flags(top: bool) -> argparse.ArgumentParser:
        # subcommand copies must not clobber values given before the subcommand
        p = argparse.ArgumentParser(add_help=False)
        dflt = {} if top else {"default": argparse.SUPPRESS}
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--json", dest="text", action="store_false", help="JSON output (default)", **dflt)
        mode.add_argument("--text", dest="text", action="store_true", help="plain text output", **dflt)
        p.add_argument("--fixture", help="use a built-in example space", **dflt)
        if top:
            p.set_defaults(text=False, fixture=None)
        return p

    common = flags(top=False)
    ap = argparse.ArgumentParser(prog="ordtopo", parents=[flags(top=True)],
                                 description="Ordinals, GO-spaces and their refinements.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ord", parents=[common], help="ordinal arithmetic")
    p.add_argument("op", choices=["eval", "cmp", "add", "mul", "cof"])
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_ord)

    p = sub.add_parser("space", parents=[common], help="points and characters")
    p.add_argument("op", choices=["spectrum", "char", "member"])
    p.add_argument("items", nargs="*", metavar="space [point]")
    p.set_defaults(func=cmd_space, space=None)

    p = sub.add_parser("refine", parents=[common], help="first-countable refinement")
    p.add_argument("space", nargs="?")
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("embed", parents=[common], help="ordinal embeddings")
    p.add_argument("op", choices=["double", "omega-sum"])
    p.add_argument("spaces", nargs="*")
    p.add_argument("--tail", help="summand repeated omega times before the top")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("go5", parents=[common], help="first-countable transform")
    p.add_argument("space", nargs="?")
    p.add_argument("--schedule", help="partition schedule JSON (file or inline)")
    p.set_defaults(func=cmd_go5)

    p = sub.add_parser("check", parents=[common], help="predicates")
    p.add_argument("op", choices=["paracompact", "coarser", "converges"])
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", parents=[common], help="oracle cross-checks")
    p.add_argument("op", choices=["selftest"])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)
    return ap


def render_text(report, indent: str = "") -> str:
    lines = []
    if isinstance(report, dict):
        for k in sorted(report):
            v = report[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(render_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v)}")
    elif isinstance(report, list):
        for v in report:
            if isinstance(v, dict) and {"key", "left", "right"} <= v.keys():
                lines.append(f"{indent}{v['key']:<28} {v['left']:<12} {v['right']}")
            else:
                lines.append(f"{indent}- " + render_text(v, indent + "  ").lstrip())
    else:
        lines.append(f"{indent}{json.dumps(report)}")
    return "\n".join(lines)


_VALUED = ("--fixture", "--schedule", "--tail", "--seed")
_FLAGS = ("--json", "--text")


def _options_last(argv: List[str]) -> List[str]:
    """Move options behind the positionals so optional positionals parse."""
    pos, opts, i = [], [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUED and i + 1 < len(argv):
            opts += argv[i:i + 2]
            i += 2
            continue
        (opts if a in _FLAGS or a.split("=")[0] in _VALUED else pos).append(a)
        i += 1
    return pos + opts


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_options_last(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except UsageError as exc:
        parser.print_usage(err)
        print(f"ordtopo: error: {exc}", file=err)
        return 2
    except DOMAIN_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        out.write(J.dumps({"error": {"type": type(exc).__name__, "message": msg}}) + "\n")
        return 1
    if args.text:
        out.write(render_text(report) + "\n")
    else:
        out.write(J.dumps(report) + "\n")
    return 0


def golden_outputs() -> dict:
    """Output bytes of every golden fixture command, keyed by golden file name."""
    from .config import golden_commands
    out = {}
    for gc in golden_commands():
        buf = io.StringIO()
        if run([*gc.argv, F.PREFIX + gc.fixture], buf, io.StringIO()) != 0:
            raise RuntimeError(f"golden command failed: {gc.filename}")
        out[gc.filename] = buf.getvalue()
    return out


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
