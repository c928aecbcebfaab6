"""Monotone omega-sequences of points and their convergence."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import spaces as S
from .ordinal import OMEGA, ONE, ZERO, Ordinal
from .spaces import (GoSpace, LexProduct, LongInfinity, LongPoint,
                     LongSegment, OrdinalSub, OrdPoint, Pair, Rat,
                     RationalSegment, RealLine, SpaceError)

CHECK_TERMS = 16


class ScheduleError(ValueError):
    pass


@dataclass(frozen=True)
class AffineOrd:
    """n -> stride*n + offset."""
    stride: Ordinal
    offset: Ordinal = ZERO


@dataclass(frozen=True)
class RatApproach:
    """n -> target -/+ scale/(n+1), from below ("up") or above ("down")."""
    target: Fraction
    direction: str = "up"
    scale: Fraction = Fraction(1)


@dataclass(frozen=True)
class PairSchedule:
    first: Union["Schedule", S.Point]
    second: Union["Schedule", S.Point]


Schedule = Union[AffineOrd, RatApproach, PairSchedule]
_SCHEDULES = (AffineOrd, RatApproach, PairSchedule)


def is_schedule(x) -> bool:
    return isinstance(x, _SCHEDULES)


def term(seq, n: int):
    if isinstance(seq, AffineOrd):
        return OrdPoint(seq.stride * n + seq.offset)
    if isinstance(seq, RatApproach):
        step = Fraction(seq.scale) / (n + 1)
        return Rat(seq.target - step if seq.direction == "up" else seq.target + step)
    if isinstance(seq, PairSchedule):
        a = term(seq.first, n) if is_schedule(seq.first) else seq.first
        b = term(seq.second, n) if is_schedule(seq.second) else seq.second
        return Pair(a, b)
    raise ScheduleError(f"not a schedule: {seq!r}")


def direction(seq) -> str:
    if isinstance(seq, AffineOrd):
        return "up"
    if isinstance(seq, RatApproach):
        if seq.direction not in ("up", "down"):
            raise ScheduleError(f"bad direction {seq.direction!r}")
        return seq.direction
    if is_schedule(seq.first):
        return direction(seq.first)
    if is_schedule(seq.second):
        return direction(seq.second)
    raise ScheduleError("a pair schedule needs at least one moving coordinate")


def check_monotone(seq) -> None:
    """Raise unless ``seq`` is strictly monotone."""
    if isinstance(seq, AffineOrd):
        if not seq.offset < seq.stride + seq.offset:
            raise ScheduleError("affine schedule is eventually constant")
        return
    if isinstance(seq, RatApproach):
        if Fraction(seq.scale) <= 0:
            raise ScheduleError("rational approach needs a positive scale")
        direction(seq)
        return
    if isinstance(seq, PairSchedule):
        direction(seq)
        for part in (seq.first, seq.second):
            if is_schedule(part):
                check_monotone(part)
        return
    raise ScheduleError(f"not a schedule: {seq!r}")


# the limit of a monotone sequence: ("point", p), ("end",) when it runs off
# the end of the space, or ("none",) when there is no least bound in it
_NONE = ("none",)
_END = ("end",)


def _next_point(s, p, side):
    """Nearest point of ``s`` beyond ``p`` on ``side``, or the "end" marker."""
    a = S.approach(s, p, side)
    if a is S.Approach.EMPTY:
        return _END
    if a is not S.Approach.ADJ:
        return _NONE
    if isinstance(s, OrdinalSub) and side == S.RIGHT:
        return ("point", OrdPoint(S._ord_least_from(s, p.value + ONE)))
    if isinstance(s, LexProduct):
        nxt = _next_point(s.second, p.second, side)
        if nxt[0] == "point":
            return ("point", Pair(p.first, nxt[1]))
        outer = _next_point(s.first, p.first, side)
        if outer[0] != "point":
            return outer
        inner = _extreme(s.second, S.LEFT if side == S.RIGHT else S.RIGHT)
        return ("point", Pair(outer[1], inner)) if inner is not None else _NONE
    return _NONE


def _extreme(s, side):
    """Least (side=LEFT) or greatest point of ``s`` if it exists."""
    if isinstance(s, OrdinalSub):
        if side == S.LEFT:
            x = S._ord_least_from(s, ZERO)
        else:
            x = S.ord_max(s)
        return OrdPoint(x) if x is not None else None
    if isinstance(s, RationalSegment):
        if side == S.LEFT:
            return Rat(Fraction(0)) if s.has_min else None
        return Rat(Fraction(1)) if s.has_max else None
    if isinstance(s, LexProduct):
        a, b = _extreme(s.first, side), _extreme(s.second, side)
        return Pair(a, b) if a is not None and b is not None else None
    if isinstance(s, LongSegment):
        return LongInfinity() if side == S.RIGHT else LongPoint(ZERO, Fraction(0))
    return None


def limit(s, seq):
    """Supremum (increasing) or infimum (decreasing) of ``seq`` in ``s``."""
    if isinstance(s, GoSpace):
        return limit(s.base, seq)
    up = direction(seq) == "up"
    if isinstance(s, OrdinalSub):
        if not isinstance(seq, AffineOrd):
            raise ScheduleError("ordinal subspaces take affine schedules")
        sup = seq.stride * OMEGA
        if S.contains(s, OrdPoint(sup)):
            return ("point", OrdPoint(sup))
        return _END if S._ord_least_from(s, sup) is None else _NONE
    if isinstance(s, (RationalSegment, RealLine)):
        if not isinstance(seq, RatApproach):
            raise ScheduleError("dense orders take rational schedules")
        if S.contains(s, Rat(seq.target)):
            return ("point", Rat(seq.target))
        return _END if seq.target in (0, 1) else _NONE
    if isinstance(s, LongSegment):
        if not isinstance(seq, PairSchedule):
            raise ScheduleError("long segments take pair schedules")
        lim = limit(S._long_lex(s), seq)
        if lim == _END and up:
            return ("point", LongInfinity())
        if lim[0] == "point":
            return ("point", S.normalize_point(s, lim[1]))
        return lim
    if isinstance(s, LexProduct):
        if not isinstance(seq, PairSchedule):
            raise ScheduleError("lexicographic products take pair schedules")
        if is_schedule(seq.first):
            outer = limit(s.first, seq.first)
            if outer[0] != "point":
                return outer
            inner = _extreme(s.second, S.LEFT if up else S.RIGHT)
            return ("point", Pair(outer[1], inner)) if inner is not None else _NONE
        inner = limit(s.second, seq.second)
        if inner[0] == "point":
            return ("point", Pair(seq.first, inner[1]))
        if inner != _END or not S.contains(s.first, seq.first):
            return _NONE
        outer = _next_point(s.first, seq.first, S.RIGHT if up else S.LEFT)
        if outer[0] != "point":
            return outer
        edge = _extreme(s.second, S.LEFT if up else S.RIGHT)
        return ("point", Pair(outer[1], edge)) if edge is not None else _NONE
    raise SpaceError(f"unknown space {s!r}")


def check_terms(seq, s, k: int = CHECK_TERMS) -> None:
    check_monotone(seq)
    up = direction(seq) == "up"
    prev = None
    for n in range(k):
        t = S.normalize_point(s, term(seq, n))
        if not S.contains(s, t):
            raise ScheduleError(f"term {n} ({t!r}) is not a point of the space")
        if prev is not None:
            c = S.compare(s, prev, t)
            if (up and c >= 0) or (not up and c <= 0):
                raise ScheduleError("schedule is not strictly monotone")
        prev = t


def converges(seq, p, s) -> bool:
    """Does the monotone sequence ``seq`` converge to ``p`` in ``s``?"""
    check_terms(seq, s)
    p = S.normalize_point(s, p)
    if not S.contains(s, p):
        raise SpaceError(f"{p!r} is not a point of the space")
    lim = limit(s, seq)
    if lim[0] != "point" or lim[1] != p:
        return False
    side = S.LEFT if direction(seq) == "up" else S.RIGHT
    return S.approach(s, p, side).cofinal
