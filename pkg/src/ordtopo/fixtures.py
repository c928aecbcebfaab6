"""Named example spaces, addressable as ``example:<name>``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .embed import PartitionSchedule
from .ordinal import BIG_OMEGA, ONE, ZERO
from .pieces import Singleton, SuccessorsOnly
from .spaces import (TOTAL_UNCOUNTABLE, GoSpace, IsolateWhere, LexProduct,
                     LongSegment, OrdinalSub, RealLine, full)

PREFIX = "example:"


@dataclass(frozen=True)
class Fixture:
    name: str
    space: object
    schedule: Optional[object] = None
    note: str = ""


def _l_base():
    return LexProduct(RealLine(), LongSegment(BIG_OMEGA))


def _e_successors():
    return OrdinalSub(BIG_OMEGA + ONE, (SuccessorsOnly(ZERO, BIG_OMEGA), Singleton(BIG_OMEGA)))


FIXTURES = {
    "L-base": Fixture("L-base", _l_base(),
                      note="reals times the long segment, lexicographic order"),
    "L": Fixture("L", GoSpace(_l_base(), (IsolateWhere(TOTAL_UNCOUNTABLE),)),
                 note="L-base with every point of uncountable character isolated"),
    "E-successors": Fixture(
        "E-successors", _e_successors(),
        schedule=PartitionSchedule(BIG_OMEGA, (), (ZERO, BIG_OMEGA, 1)),
        note="successors below omega_1 plus omega_1; partition by finite offset"),
    "long-segment": Fixture("long-segment", LongSegment(BIG_OMEGA),
                            note="the closed long segment"),
    "omega1-plus-1": Fixture("omega1-plus-1", full(BIG_OMEGA + ONE),
                             note="the ordinal space [0, omega_1]"),
}


def lookup(name: str) -> Fixture:
    key = name[len(PREFIX):] if name.startswith(PREFIX) else name
    try:
        return FIXTURES[key]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: "
                       + ", ".join(PREFIX + k for k in sorted(FIXTURES))) from None
