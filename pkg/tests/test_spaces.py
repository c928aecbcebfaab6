from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings

from ordtopo import spaces as S
from ordtopo.ordinal import ZERO, parse
from ordtopo.pieces import (Full, LimitsOnly, OffsetClass, PieceError, Repeat,
                            Singleton, SuccessorsOnly)
from ordtopo.spaces import (LEFT, RIGHT, GoSpace, IsolateWhere, LeftRayWhere,
                            LexProduct, LongInfinity, LongPoint, LongSegment,
                            OrdinalSub, OrdPoint, Pair, Pred, Rat, RealLine,
                            RightRayWhere, Side)
from strategies import space_descs

p = parse
W = p("W")
L_BASE = LexProduct(RealLine(), LongSegment(W))


def chars(s, pt):
    return S.side_character(s, pt, LEFT), S.side_character(s, pt, RIGHT)


def spectrum(s):
    return {e.key: e.chars for e in S.character_spectrum(s)}


def test_membership():
    assert S.contains(OrdinalSub(W + 1, [Full(ZERO, W + 1)]), OrdPoint(W))
    assert not S.contains(OrdinalSub(W, [SuccessorsOnly(ZERO, W)]), OrdPoint(p("w")))
    assert S.contains(OrdinalSub(W, [OffsetClass(ZERO, W, 2)]), OrdPoint(p("w+2")))
    assert not S.contains(OrdinalSub(W, [OffsetClass(ZERO, W, 2)]), OrdPoint(p("w+3")))
    assert S.contains(OrdinalSub(p("w^2"), [LimitsOnly(ZERO, p("w^2"))]), OrdPoint(p("w*5")))


def test_offset_class_matches_materialized_enumeration():
    s = OrdinalSub(p("w*3"), [OffsetClass(ZERO, p("w*3"), 2)])
    members = [x for lim in (ZERO, p("w"), p("w*2")) for x in (lim + n for n in range(8))
               if S.contains(s, OrdPoint(x))]
    assert members == [p("2"), p("w+2"), p("w*2+2")]


def test_pieces_must_be_ordered_and_inside_bound():
    with pytest.raises(PieceError):
        OrdinalSub(p("w"), [Full(ZERO, p("w+1"))])
    with pytest.raises(PieceError):
        OrdinalSub(p("w*2"), [Full(p("5"), p("w")), Full(ZERO, p("3"))])
    with pytest.raises(PieceError):
        OrdinalSub(p("w"), [OffsetClass(ZERO, p("w"), 0)])


@pytest.mark.parametrize("space, point, want", [
    (L_BASE, Pair(Rat(Fraction(0)), LongInfinity()), (Side.UNCOUNTABLE, Side.COUNTABLE)),
    (OrdinalSub(W + 1, [SuccessorsOnly(ZERO, W), Singleton(W)]), OrdPoint(W),
     (Side.UNCOUNTABLE, Side.EMPTY)),
    (LongSegment(W), LongPoint(p("w"), Fraction(0)), (Side.COUNTABLE, Side.COUNTABLE)),
    (OrdinalSub(p("w+1"), [Full(ZERO, p("w+1"))]), OrdPoint(ZERO), (Side.EMPTY, Side.NEIGHBOR)),
    (OrdinalSub(p("w*2"), [Full(ZERO, p("w")), Singleton(p("w+1"))]), OrdPoint(p("w+1")),
     (Side.NEIGHBOR, Side.EMPTY)),
    (LongSegment(W), LongInfinity(), (Side.UNCOUNTABLE, Side.EMPTY)),
])
def test_side_character(space, point, want):
    assert chars(space, point) == want


def test_long_segment_truncation_agrees():
    # a short long segment can be spot-checked against the long one
    short = LongSegment(p("w^2"))
    pt = LongPoint(p("w"), Fraction(0))
    assert chars(short, pt) == chars(LongSegment(W), pt)


def test_long_segment_spectrum():
    spec = spectrum(LongSegment(W))
    assert spec["inf"] == (Side.UNCOUNTABLE, Side.EMPTY)
    assert spec["(p0:first)x(min)"] == (Side.EMPTY, Side.COUNTABLE)
    others = {v for k, v in spec.items() if k not in ("inf", "(p0:first)x(min)")}
    assert others == {(Side.COUNTABLE, Side.COUNTABLE)}


def test_spectrum_of_omega():
    assert spectrum(S.full(p("w"))) == {
        "p0:first": (Side.EMPTY, Side.NEIGHBOR),
        "p0:successor": (Side.NEIGHBOR, Side.NEIGHBOR),
    }


def test_l_base_uncountable_class():
    spec = spectrum(L_BASE)
    unc = [k for k, v in spec.items() if Side.UNCOUNTABLE in v]
    assert unc == ["(generic)x(inf)"]
    assert S.class_of(L_BASE, Pair(Rat(Fraction(3, 7)), LongInfinity())) == "(generic)x(inf)"


def test_first_countable():
    assert S.first_countable(S.full(W))
    assert not S.first_countable(S.full(W + 1))
    assert S.first_countable(GoSpace(L_BASE, [IsolateWhere(S.TOTAL_UNCOUNTABLE)]))
    assert not S.first_countable(L_BASE)


def test_apply_rules():
    s = S.full(W + 1)
    assert S.same_spectrum(S.apply_rules(s, []), s)
    g = S.apply_rules(s, [RightRayWhere(S.LEFT_UNCOUNTABLE)])
    assert chars(g, OrdPoint(W)) == (Side.NEIGHBOR, Side.EMPTY)
    # a second application merges rules rather than nesting
    g2 = S.apply_rules(g, [RightRayWhere(S.LEFT_UNCOUNTABLE), LeftRayWhere(S.RIGHT_UNCOUNTABLE)])
    assert g2.base == s and len(g2.rules) == 2


def test_is_coarser():
    s = S.full(p("w^2+1"))
    pred = Pred(left=frozenset({Side.COUNTABLE}))
    assert S.is_coarser(s, s)
    assert S.is_coarser(s, GoSpace(s, [IsolateWhere(pred)]))
    # isolation cuts both sides; the right side of w*n is a neighbour, so
    # only the left cut is effective and the two topologies coincide
    iso, ray = GoSpace(s, [IsolateWhere(pred)]), GoSpace(s, [RightRayWhere(pred)])
    assert S.is_coarser(iso, ray) and S.is_coarser(ray, iso)
    lb_iso = GoSpace(L_BASE, [IsolateWhere(S.LEFT_UNCOUNTABLE)])
    lb_ray = GoSpace(L_BASE, [RightRayWhere(S.LEFT_UNCOUNTABLE)])
    assert not S.is_coarser(lb_iso, lb_ray)
    assert S.is_coarser(lb_ray, lb_iso)
    with pytest.raises(S.SpaceError):
        S.is_coarser(s, S.full(p("w")))


def test_repeat_classes():
    s = OrdinalSub(p("W*w+1"), [Repeat((SuccessorsOnly(ZERO, W),), W, ZERO), Singleton(p("W*w"))])
    spec = spectrum(s)
    assert spec["max"] == (Side.COUNTABLE, Side.EMPTY)
    assert all(Side.UNCOUNTABLE not in v for v in spec.values())
    assert S.class_of(s, OrdPoint(p("W*5+1"))) == S.class_of(s, OrdPoint(p("W*2+1")))


def test_lex_factor_may_not_be_refined():
    with pytest.raises(S.SpaceError):
        LexProduct(GoSpace(RealLine(), []), RealLine())


@settings(max_examples=120, deadline=None, suppress_health_check=list(HealthCheck))
@given(space_descs())
def test_spectrum_samples_are_members_of_their_class(s):
    for e in S.character_spectrum(s):
        assert S.contains(s, e.sample)
        assert S.class_of(s, e.sample) == e.key
        assert e.chars == chars(s, e.sample)
