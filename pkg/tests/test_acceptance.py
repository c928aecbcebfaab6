"""Acceptance criteria 1-8. Each test carries a ``criterion`` mark; the
conftest hook prints one PASS/FAIL line per criterion after the run."""
import itertools
import json
import os
import pathlib
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ordtopo import spaces as S
from ordtopo.config import AcceptanceConfig
from ordtopo.embed import go5_transform, is_hered_paracompact, reembed, reembed_double
from ordtopo.fixtures import FIXTURES
from ordtopo.oracle import cb_profile, cof_via_fs, converges_bruteforce
from ordtopo.ordinal import ONE, ZERO, Ordinal, add, classify, mul, parse, to_string
from ordtopo.pieces import (Full, LimitsOnly, OffsetClass, Repeat, Singleton,
                            SuccessorsOnly)
from ordtopo.refine import refine_first_countable
from ordtopo.schedules import AffineOrd, PairSchedule, RatApproach, converges
from ordtopo.spaces import (GoSpace, IsolateWhere, LexProduct, LongInfinity,
                            LongPoint, LongSegment, OrdPoint, Pair, Pred, Rat,
                            RealLine, Side)
from strategies import hp_with_schedules, left_isolating, ordinals, space_descs

CFG = AcceptanceConfig()
GOLDEN = pathlib.Path(__file__).parent / "golden"
p = parse
W = p("W")


def quick(n):
    return settings(max_examples=n, deadline=None, database=None, derandomize=True,
                    suppress_health_check=list(HealthCheck))


def note(request, text):
    request.node.acceptance_notes = getattr(request.node, "acceptance_notes", []) + [text]


# 1 -----------------------------------------------------------------------------

@pytest.mark.criterion(1, "ordinal arithmetic laws")
def test_arithmetic_laws(request):
    seen = set()

    @quick(int(CFG.arithmetic_triples * 1.1))
    @given(ordinals(max_degree=2), ordinals(max_degree=2), ordinals(max_degree=2))
    def check(a, b, c):
        seen.add((a, b, c))
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        for x, y in ((b, c), (c, b)):
            if x < y:
                assert add(a, x) < add(a, y)
                if a >= ONE:
                    assert mul(a, x) < mul(a, y)
        for x in (a, b, c):
            assert parse(to_string(x)) == x

    check()
    note(request, f"{len(seen)} distinct triples")
    assert len(seen) >= CFG.arithmetic_triples


# 2 -----------------------------------------------------------------------------

def _below_omega4(cs):
    x = ZERO
    for i in reversed(range(4)):
        if cs[i]:
            x = add(x, mul(Ordinal.power(0, Ordinal.nat(i)) if i else ONE, Ordinal.nat(cs[i])))
    return x


@pytest.mark.criterion(2, "classify agrees with cof_via_fs below omega^4")
def test_cofinality_oracle(request):
    seen = set()

    @quick(CFG.cofinality_samples)
    @given(st.lists(st.integers(0, 50), min_size=4, max_size=4))
    def check(cs):
        x = _below_omega4(cs)
        seen.add(x)
        assert classify(x) is cof_via_fs(x)

    check()
    note(request, f"{len(seen)} distinct ordinals")
    assert len(seen) >= CFG.cofinality_samples


# 3 -----------------------------------------------------------------------------

@pytest.mark.criterion(3, "refinement is first-countable, coarser-than and idempotent")
def test_refinement_suite(request):
    seen = set()

    @quick(int(CFG.refine_spaces * 1.5))
    @given(space_descs(depth=3))
    def check(s):
        seen.add(s)
        r = refine_first_countable(s)
        assert r.first_countable
        assert S.is_coarser(s, r.output)
        assert refine_first_countable(r.output).output == r.output

    check()
    note(request, f"{len(seen)} distinct spaces")
    assert len(seen) >= CFG.refine_spaces


# 4 -----------------------------------------------------------------------------

@pytest.mark.criterion(4, "reals times the long segment with uncountable points isolated")
def test_l_space_fixture():
    base = LexProduct(RealLine(), LongSegment(W))
    L = S.apply_rules(base, [IsolateWhere(S.TOTAL_UNCOUNTABLE)])
    assert L == FIXTURES["L"].space
    unc = [e for e in S.character_spectrum(base) if Side.UNCOUNTABLE in e.chars]
    assert [e.key for e in unc] == ["(generic)x(inf)"]
    for q in (Fraction(0), Fraction(-5, 3), Fraction(22, 7)):
        assert S.class_of(base, Pair(Rat(q), LongInfinity())) == unc[0].key
        assert S.class_of(base, Pair(Rat(q), LongPoint(p("w"), Fraction(0)))) != unc[0].key
    assert S.first_countable(L)
    assert S.is_coarser(base, L)
    x = Fraction(1, 3)
    target = Pair(Rat(x), LongPoint(ZERO, Fraction(0)))
    seq = PairSchedule(RatApproach(x, "up"), LongPoint(p("w^2"), Fraction(1, 2)))
    assert converges(seq, target, base)
    assert converges(seq, target, L)


# 5 -----------------------------------------------------------------------------

@pytest.mark.criterion(5, "doubling re-embedding keeps the character spectrum")
def test_reembed_suite(request):
    seen, countable = set(), [0]

    @quick(int(CFG.reembed_spaces * 2))
    @given(left_isolating())
    def check(g):
        seen.add(g)
        e = reembed(g)
        assert reembed_double(g) == e.output
        for en in S.character_spectrum(g):
            z = OrdPoint(e.image(en.sample.value))
            assert S.contains(e.output, z)
            assert (S.side_character(e.output, z, S.LEFT),
                    S.side_character(e.output, z, S.RIGHT)) == en.chars
        for en in S.character_spectrum(e.output):
            x = OrdPoint(e.preimage(en.sample.value))
            assert (S.side_character(g, x, S.LEFT), S.side_character(g, x, S.RIGHT)) == en.chars
        if g.base.bound.is_countable():
            countable[0] += 1
            assert cb_profile(e.output) == cb_profile(g)

    check()
    note(request, f"{len(seen)} distinct spaces, {countable[0]} countable")
    assert len(seen) >= CFG.reembed_spaces


# 6 -----------------------------------------------------------------------------

@pytest.mark.criterion(6, "go5 transform gives first-countable hereditarily paracompact spaces")
def test_go5_suite(request):
    seen = set()

    @quick(int(CFG.go5_spaces * 2))
    @given(hp_with_schedules())
    def check(case):
        s, scheds = case
        seen.add(s)
        assert is_hered_paracompact(s)
        out = go5_transform(s, scheds).output
        assert S.first_countable(out) and is_hered_paracompact(out)

    check()
    note(request, f"{len(seen)} distinct spaces")
    assert len(seen) >= CFG.go5_spaces


@pytest.mark.criterion(6, "go5 transform gives first-countable hereditarily paracompact spaces")
def test_go5_successor_fixture():
    fx = FIXTURES["E-successors"]
    out = go5_transform(fx.space, fx.schedule).output
    want = S.OrdinalSub(p("W*w+1"), [Repeat((SuccessorsOnly(ZERO, W),), W, ZERO),
                                      Singleton(p("W*w"))])
    assert out == want
    # block k is SuccessorsOnly(W*(k-1), W*k); spot-check the first few
    for k in range(1, 5):
        lo, hi = W * Ordinal.nat(k - 1), W * Ordinal.nat(k)
        assert not S.contains(out, OrdPoint(lo))
        assert S.contains(out, OrdPoint(lo + ONE)) and S.contains(out, OrdPoint(lo + p("w+7")))
        assert not S.contains(out, OrdPoint(lo + p("w^2")))
        assert not S.contains(out, OrdPoint(hi))
    assert S.contains(out, OrdPoint(p("W*w")))
    assert not S.contains(out, OrdPoint(p("W*w+1")))


# 7 -----------------------------------------------------------------------------

CONV_SPACES = [S.full(p(b)) for b in ("w^2+1", "w^3+1", "w^3*2+1", "w^2*3+w+1")] + [
    S.OrdinalSub(p("w^3+1"), [LimitsOnly(ZERO, p("w^3")), Singleton(p("w^3"))]),
    S.OrdinalSub(p("w^3+1"), [SuccessorsOnly(ZERO, p("w^2")), Full(p("w^2"), p("w^3+1"))]),
    S.OrdinalSub(p("w^3+1"), [OffsetClass(ZERO, p("w^3"), 1), Singleton(p("w^3"))]),
    GoSpace(S.full(p("w^3+1")), [IsolateWhere(Pred(classkey="max"))]),
    GoSpace(S.full(p("w^2*2+1")), [IsolateWhere(Pred(classkey="p0:first"))]),
]
CONV_STRIDES = [p(x) for x in ("1", "2", "w", "w+1", "w*2", "w^2", "w^2+w")]
CONV_OFFSETS = [p(x) for x in ("0", "1", "w", "w^2")]


def _targets(stride):
    lim = mul(stride, p("w"))
    return [lim, add(lim, ONE), p("w"), p("w^2"), p("w^3"), p("w^2*2")]


def conv_pool():
    for s, stride, offset in itertools.product(CONV_SPACES, CONV_STRIDES, CONV_OFFSETS):
        for x in _targets(stride):
            yield AffineOrd(stride, offset), OrdPoint(x), s


def _outcome(f, *args):
    try:
        return f(*args)
    except Exception as exc:  # both sides must fail the same way
        return type(exc).__name__


@pytest.mark.criterion(7, "convergence agrees with the brute-force oracle")
def test_convergence_oracle(request):
    n = decided = 0
    for seq, pt, s in conv_pool():
        fast, slow = _outcome(converges, seq, pt, s), _outcome(converges_bruteforce, seq, pt, s)
        assert fast == slow, (seq, pt, s)
        n += 1
        decided += isinstance(fast, bool)
    note(request, f"{n} triples, {decided} decided")
    assert n >= CFG.convergence_triples and decided >= CFG.convergence_triples


# 8 -----------------------------------------------------------------------------

def _golden_run(hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=hash_seed)
    code = ("import json, sys; from ordtopo.cli import golden_outputs; "
            "sys.stdout.write(json.dumps(golden_outputs()))")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                          text=True, check=True)
    return json.loads(proc.stdout)


@pytest.mark.criterion(8, "CLI golden files are byte-identical across runs")
def test_cli_golden(request):
    runs = [_golden_run(seed) for seed in CFG.hash_seeds]
    assert {f.split(".")[0] for f in runs[0]} == set(CFG.golden_fixtures)
    for name, text in runs[0].items():
        assert all(r[name] == text for r in runs[1:]), name
        assert (GOLDEN / name).read_text(encoding="utf-8") == text, name
    note(request, f"{len(runs[0])} files x {len(runs)} runs")
    assert json.loads(runs[0]["L-base.refine.json"])["first_countable"] is True
    go5 = json.loads(runs[0]["E-successors.go5.json"])
    assert go5["output"]["bound"] == "W*w+1" and go5["first_countable"] is True
