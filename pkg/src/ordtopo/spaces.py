"""Descriptions of LOTS and GO spaces and their side-character calculus.

A point's character on one side is read off from how the points on that
side approach it.  Internally the approach is one of five kinds: nothing
there (EMPTY), a nearest point (ADJ), no nearest point but a jump (GAP), or
an approach of countable / uncountable cofinality.  ADJ and GAP both mean
the side is clopen and are reported publicly as NEIGHBOR; they are kept
apart because lexicographic products treat them differently.

Spectra are computed per syntactic point class, never per point.  Every
class carries a sample point; the character is constant on a class by
construction, so it is evaluated at the sample.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from . import pieces as P
from .ordinal import ONE, ZERO, CofClass, Ordinal, as_ordinal, classify


class SpaceError(ValueError):
    pass


class Side(enum.Enum):
    EMPTY = "Empty"
    NEIGHBOR = "Neighbor"
    COUNTABLE = "Countable"
    UNCOUNTABLE = "Uncountable"


class Approach(enum.Enum):
    EMPTY = "empty"
    ADJ = "adjacent"
    GAP = "gap"
    COUNTABLE = "countable"
    UNCOUNTABLE = "uncountable"

    @property
    def side(self) -> Side:
        return _PUBLIC[self]

    @property
    def cofinal(self) -> bool:
        return self in (Approach.COUNTABLE, Approach.UNCOUNTABLE)


_PUBLIC = {
    Approach.EMPTY: Side.EMPTY,
    Approach.ADJ: Side.NEIGHBOR,
    Approach.GAP: Side.NEIGHBOR,
    Approach.COUNTABLE: Side.COUNTABLE,
    Approach.UNCOUNTABLE: Side.UNCOUNTABLE,
}

LEFT, RIGHT = "left", "right"


def _of_cof(c: CofClass) -> Approach:
    return Approach.UNCOUNTABLE if c is CofClass.UNCOUNTABLE else Approach.COUNTABLE


# -- points -----------------------------------------------------------------

@dataclass(frozen=True)
class OrdPoint:
    value: Ordinal


@dataclass(frozen=True)
class Pair:
    first: "Point"
    second: "Point"


@dataclass(frozen=True)
class LongPoint:
    alpha: Ordinal
    q: Fraction


@dataclass(frozen=True)
class LongInfinity:
    pass


@dataclass(frozen=True)
class Rat:
    q: Fraction


Point = Union[OrdPoint, Pair, LongPoint, LongInfinity, Rat]


# -- rules ------------------------------------------------------------------

@dataclass(frozen=True)
class Pred:
    """Selects point classes by their characters in the base space.

    ``left``/``right`` constrain one side, ``either`` matches when at least
    one side is in the set, ``classkey`` pins a single class.
    """
    left: Optional[frozenset] = None
    right: Optional[frozenset] = None
    either: Optional[frozenset] = None
    classkey: Optional[str] = None

    def matches(self, key: str, chars: Tuple[Side, Side]) -> bool:
        lft, rgt = chars
        if self.left is not None and lft not in self.left:
            return False
        if self.right is not None and rgt not in self.right:
            return False
        if self.either is not None and lft not in self.either and rgt not in self.either:
            return False
        if self.classkey is not None and key != self.classkey:
            return False
        return True


LEFT_UNCOUNTABLE = Pred(left=frozenset({Side.UNCOUNTABLE}))
RIGHT_UNCOUNTABLE = Pred(right=frozenset({Side.UNCOUNTABLE}))
TOTAL_UNCOUNTABLE = Pred(either=frozenset({Side.UNCOUNTABLE}))


@dataclass(frozen=True)
class IsolateWhere:
    pred: Pred


@dataclass(frozen=True)
class RightRayWhere:
    """Adds ``{z >= y}`` for matching ``y``: cuts the left side."""
    pred: Pred


@dataclass(frozen=True)
class LeftRayWhere:
    """Adds ``{z <= y}`` for matching ``y``: cuts the right side."""
    pred: Pred


Rule = Union[IsolateWhere, RightRayWhere, LeftRayWhere]


def rule_cuts(rule) -> frozenset:
    if isinstance(rule, IsolateWhere):
        return frozenset({LEFT, RIGHT})
    if isinstance(rule, RightRayWhere):
        return frozenset({LEFT})
    return frozenset({RIGHT})


# -- space descriptions ------------------------------------------------------

@dataclass(frozen=True)
class OrdinalSub:
    bound: Ordinal
    pieces: Tuple[P.Piece, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        P.validate_list(self.pieces, self.bound)


@dataclass(frozen=True)
class LexProduct:
    first: "SpaceDesc"
    second: "SpaceDesc"

    def __post_init__(self):
        if isinstance(self.first, GoSpace) or isinstance(self.second, GoSpace):
            raise SpaceError("lexicographic factors must be order spaces, not GO refinements")


@dataclass(frozen=True)
class LongSegment:
    kappa: Ordinal

    def __post_init__(self):
        if not self.kappa:
            raise SpaceError("long segment over an empty ordinal")


@dataclass(frozen=True)
class RationalSegment:
    has_min: bool = True
    has_max: bool = True


@dataclass(frozen=True)
class RealLine:
    pass


@dataclass(frozen=True)
class GoSpace:
    base: "SpaceDesc"
    rules: Tuple[Rule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        if isinstance(self.base, GoSpace):
            raise SpaceError("GoSpace bases are flattened; use apply_rules")


SpaceDesc = Union[OrdinalSub, LexProduct, LongSegment, RationalSegment, RealLine, GoSpace]


def ordinal_space(bound, *pieces) -> OrdinalSub:
    return OrdinalSub(as_ordinal(bound), pieces)


def full(bound) -> OrdinalSub:
    b = as_ordinal(bound)
    return OrdinalSub(b, (P.Full(ZERO, b),))


# -- ordinal subspaces -------------------------------------------------------

def _ord_below(s: OrdinalSub, x: Ordinal):
    return P.best(P.below(p, x) for p in s.pieces)


def _ord_least_from(s: OrdinalSub, lo: Ordinal) -> Optional[Ordinal]:
    hits = [x for x in (P.least_from(p, lo) for p in s.pieces) if x is not None]
    return min(hits) if hits else None


def _ord_piece_of(s: OrdinalSub, x: Ordinal):
    for i, p in enumerate(s.pieces):
        lo, hi = P.interval(p)
        if lo <= x < hi:
            return (i, p) if P.contains(p, x) else None
    return None


@lru_cache(maxsize=None)
def ord_max(s: OrdinalSub) -> Optional[Ordinal]:
    r = _ord_below(s, s.bound)
    return r[1] if r is not None and r[0] == "max" else None


def _ord_approach(s: OrdinalSub, x: Ordinal, side: str) -> Approach:
    if side == RIGHT:
        return Approach.EMPTY if _ord_least_from(s, x + ONE) is None else Approach.ADJ
    r = _ord_below(s, x)
    if r is None:
        return Approach.EMPTY
    if r[0] == "max":
        return Approach.ADJ
    if r[1] < x:
        return Approach.GAP
    return _of_cof(classify(x))


def _ord_end(s: OrdinalSub, side: str) -> Approach:
    if side == LEFT:
        return Approach.ADJ if _ord_least_from(s, ZERO) is not None else Approach.EMPTY
    r = _ord_below(s, s.bound)
    if r is None:
        return Approach.EMPTY
    return Approach.ADJ if r[0] == "max" else _of_cof(classify(r[1]))


def _rest_classes(prefix: str, piece, smax):
    """(key, sample) for the first point and every nonempty rest kind."""
    first = P.least_from(piece, piece.a if not isinstance(piece, P.Singleton) else piece.a)
    if first is None:
        return []
    out = []
    if first != smax:
        out.append((f"{prefix}first", first))
    for kind in P.REST_KINDS[type(piece)]:
        w = P.least_of_kind(piece, kind, first + ONE)
        if w is not None and w != smax:
            out.append((f"{prefix}{kind}", w))
    return out


@lru_cache(maxsize=None)
def _ord_classes(s: OrdinalSub):
    smax = ord_max(s)
    out = []
    for i, p in enumerate(s.pieces):
        if isinstance(p, P.Repeat):
            for tag, n in (("b0", 0), ("bk", 1)):
                for j, q in enumerate(P.block(p, n)):
                    out.extend(_rest_classes(f"p{i}:{tag}:t{j}:", q, smax))
        else:
            out.extend(_rest_classes(f"p{i}:", p, smax))
    if smax is not None:
        out.append(("max", smax))
    return tuple(out)


def _ord_class_of(s: OrdinalSub, x: Ordinal) -> str:
    hit = _ord_piece_of(s, x)
    if hit is None:
        raise SpaceError(f"{x} is not a point of the space")
    if x == ord_max(s):
        return "max"
    i, p = hit
    prefix = f"p{i}:"
    if isinstance(p, P.Repeat):
        n = P.block_index(x, p.start, p.period)
        prefix += "b0:" if n == 0 else "bk:"
        for j, q in enumerate(P.block(p, n)):
            if P.contains(q, x):
                p, prefix = q, f"{prefix}t{j}:"
                break
    if x == P.least_from(p, p.a):
        return prefix + "first"
    return prefix + P.kind_of(p, x)


# -- dense orders ------------------------------------------------------------

def _rat_in(s, q: Fraction) -> bool:
    if isinstance(s, RealLine):
        return True
    lo_ok = q > 0 or (q == 0 and s.has_min)
    hi_ok = q < 1 or (q == 1 and s.has_max)
    return lo_ok and hi_ok


# -- long segment ------------------------------------------------------------

def _long_lex(s: LongSegment) -> LexProduct:
    return LexProduct(full(s.kappa), RationalSegment(True, False))


def _long_to_pair(p) -> Pair:
    return Pair(OrdPoint(p.alpha), Rat(p.q))


def normalize_point(s, p):
    """Accept pair-shaped points for a long segment."""
    base = s.base if isinstance(s, GoSpace) else s
    if isinstance(base, LongSegment) and isinstance(p, Pair):
        if isinstance(p.first, OrdPoint) and isinstance(p.second, Rat):
            return LongPoint(p.first.value, p.second.q)
    return p


# -- generic dispatch --------------------------------------------------------

def contains(s, p) -> bool:
    p = normalize_point(s, p)
    if isinstance(s, GoSpace):
        return contains(s.base, p)
    if isinstance(s, OrdinalSub):
        if not isinstance(p, OrdPoint):
            raise SpaceError("ordinal subspaces hold OrdPoint points")
        return _ord_piece_of(s, p.value) is not None
    if isinstance(s, LexProduct):
        if not isinstance(p, Pair):
            raise SpaceError("lexicographic products hold Pair points")
        return contains(s.first, p.first) and contains(s.second, p.second)
    if isinstance(s, LongSegment):
        if isinstance(p, LongInfinity):
            return True
        if not isinstance(p, LongPoint):
            raise SpaceError("long segments hold LongPoint/LongInfinity points")
        return p.alpha < s.kappa and 0 <= p.q < 1
    if isinstance(s, (RationalSegment, RealLine)):
        if not isinstance(p, Rat):
            raise SpaceError("dense orders hold Rat points")
        return _rat_in(s, p.q)
    raise SpaceError(f"unknown space {s!r}")


def compare(s, p, q) -> int:
    """-1, 0, 1 in the order of ``s``."""
    p, q = normalize_point(s, p), normalize_point(s, q)
    if isinstance(s, GoSpace):
        return compare(s.base, p, q)
    if isinstance(s, OrdinalSub):
        a, b = p.value, q.value
    elif isinstance(s, (RationalSegment, RealLine)):
        a, b = p.q, q.q
    elif isinstance(s, LexProduct):
        c = compare(s.first, p.first, q.first)
        return c if c else compare(s.second, p.second, q.second)
    elif isinstance(s, LongSegment):
        a = (1,) if isinstance(p, LongInfinity) else (0, p.alpha, p.q)
        b = (1,) if isinstance(q, LongInfinity) else (0, q.alpha, q.q)
    else:
        raise SpaceError(f"unknown space {s!r}")
    return (a > b) - (a < b)


def end(s, side: str) -> Approach:
    """How the whole space is approached at its top (right) or bottom (left)."""
    if isinstance(s, GoSpace):
        return end(s.base, side)
    if isinstance(s, OrdinalSub):
        return _ord_end(s, side)
    if isinstance(s, LexProduct):
        outer = end(s.first, side)
        return end(s.second, side) if outer is Approach.ADJ else outer
    if isinstance(s, LongSegment):
        return Approach.ADJ
    if isinstance(s, RationalSegment):
        has = s.has_min if side == LEFT else s.has_max
        return Approach.ADJ if has else Approach.COUNTABLE
    if isinstance(s, RealLine):
        return Approach.COUNTABLE
    raise SpaceError(f"unknown space {s!r}")


def approach(s, p, side: str) -> Approach:
    p = normalize_point(s, p)
    if not contains(s, p):
        raise SpaceError(f"{p!r} is not a point of the space")
    if isinstance(s, GoSpace):
        base = approach(s.base, p, side)
        if base is Approach.EMPTY or not base.cofinal:
            return base
        key = class_of(s.base, p)
        return Approach.GAP if side in _cuts(s)[key] else base
    if isinstance(s, OrdinalSub):
        return _ord_approach(s, p.value, side)
    if isinstance(s, (RationalSegment, RealLine)):
        edge = 0 if side == LEFT else 1
        if isinstance(s, RationalSegment) and p.q == edge:
            return Approach.EMPTY
        return Approach.COUNTABLE
    if isinstance(s, LexProduct):
        inner = approach(s.second, p.second, side)
        if inner is not Approach.EMPTY:
            return inner
        outer = approach(s.first, p.first, side)
        if outer is Approach.ADJ:
            return end(s.second, RIGHT if side == LEFT else LEFT)
        return outer
    if isinstance(s, LongSegment):
        if isinstance(p, LongInfinity):
            return end(_long_lex(s), RIGHT) if side == LEFT else Approach.EMPTY
        return approach(_long_lex(s), _long_to_pair(p), side)
    raise SpaceError(f"unknown space {s!r}")


def side_character(s, p, side: str) -> Side:
    if side not in (LEFT, RIGHT):
        raise SpaceError(f"side must be {LEFT!r} or {RIGHT!r}")
    return approach(s, p, side).side


# -- point classes -----------------------------------------------------------

@lru_cache(maxsize=None)
def point_classes(s) -> Tuple[Tuple[str, Point], ...]:
    """Exhaustive, disjoint syntactic classes of points as (key, sample)."""
    if isinstance(s, GoSpace):
        return point_classes(s.base)
    if isinstance(s, OrdinalSub):
        return tuple((k, OrdPoint(x)) for k, x in _ord_classes(s))
    if isinstance(s, LexProduct):
        return tuple((f"({ka})x({kb})", Pair(pa, pb))
                     for ka, pa in point_classes(s.first)
                     for kb, pb in point_classes(s.second))
    if isinstance(s, LongSegment):
        out = [(k, LongPoint(p.first.value, p.second.q))
               for k, p in point_classes(_long_lex(s))]
        return tuple(out + [("inf", LongInfinity())])
    if isinstance(s, RationalSegment):
        out = [("interior", Rat(Fraction(1, 2)))]
        if s.has_min:
            out.insert(0, ("min", Rat(Fraction(0))))
        if s.has_max:
            out.append(("max", Rat(Fraction(1))))
        return tuple(out)
    if isinstance(s, RealLine):
        return (("generic", Rat(Fraction(0))),)
    raise SpaceError(f"unknown space {s!r}")


def class_of(s, p) -> str:
    p = normalize_point(s, p)
    if not contains(s, p):
        raise SpaceError(f"{p!r} is not a point of the space")
    if isinstance(s, GoSpace):
        return class_of(s.base, p)
    if isinstance(s, OrdinalSub):
        return _ord_class_of(s, p.value)
    if isinstance(s, LexProduct):
        return f"({class_of(s.first, p.first)})x({class_of(s.second, p.second)})"
    if isinstance(s, LongSegment):
        if isinstance(p, LongInfinity):
            return "inf"
        return class_of(_long_lex(s), _long_to_pair(p))
    if isinstance(s, RationalSegment):
        if p.q == 0:
            return "min"
        return "max" if p.q == 1 else "interior"
    if isinstance(s, RealLine):
        return "generic"
    raise SpaceError(f"unknown space {s!r}")


@lru_cache(maxsize=None)
def _base_chars(s):
    return {key: (side_character(s, sample, LEFT), side_character(s, sample, RIGHT))
            for key, sample in point_classes(s)}


@lru_cache(maxsize=None)
def _cuts(g: GoSpace):
    chars = _base_chars(g.base)
    out = {}
    for key, _ in point_classes(g.base):
        cut = set()
        for rule in g.rules:
            if rule.pred.matches(key, chars[key]):
                cut |= rule_cuts(rule)
        out[key] = frozenset(cut)
    return out


@dataclass(frozen=True)
class SpectrumEntry:
    key: str
    sample: Point
    left: Side
    right: Side

    @property
    def chars(self) -> Tuple[Side, Side]:
        return (self.left, self.right)


@lru_cache(maxsize=None)
def character_spectrum(s) -> Tuple[SpectrumEntry, ...]:
    out = [SpectrumEntry(key, sample, side_character(s, sample, LEFT),
                         side_character(s, sample, RIGHT))
           for key, sample in point_classes(s)]
    return tuple(sorted(out, key=lambda e: e.key))


def first_countable(s) -> bool:
    return all(Side.UNCOUNTABLE not in e.chars for e in character_spectrum(s))


def apply_rules(s, rules) -> GoSpace:
    rules = tuple(rules)
    if isinstance(s, GoSpace):
        return GoSpace(s.base, s.rules + tuple(r for r in rules if r not in s.rules))
    return GoSpace(s, rules)


def base_of(s):
    return s.base if isinstance(s, GoSpace) else s


def effective_cuts(s):
    """Per class, the sides whose cofinal approach is cut by a rule."""
    base = base_of(s)
    cuts = _cuts(s) if isinstance(s, GoSpace) else {}
    out = {}
    for key, sample in point_classes(base):
        eff = set()
        for side in cuts.get(key, ()):
            if approach(base, sample, side).cofinal:
                eff.add(side)
        out[key] = frozenset(eff)
    return out


def is_coarser(a, b) -> bool:
    """True iff the topology of ``a`` is contained in that of ``b``."""
    if base_of(a) != base_of(b):
        raise SpaceError("is_coarser needs two topologies on the same ordered set")
    ca, cb = effective_cuts(a), effective_cuts(b)
    return all(ca[k] <= cb[k] for k in ca)


def same_spectrum(a, b) -> bool:
    return [(e.key, e.chars) for e in character_spectrum(a)] == \
        [(e.key, e.chars) for e in character_spectrum(b)]


__all__ = [
    "Side", "Approach", "SpaceError", "OrdPoint", "Pair", "LongPoint",
    "LongInfinity", "Rat", "Pred", "IsolateWhere", "RightRayWhere",
    "LeftRayWhere", "OrdinalSub", "LexProduct", "LongSegment",
    "RationalSegment", "RealLine", "GoSpace", "contains", "compare",
    "approach", "side_character", "point_classes", "class_of",
    "character_spectrum", "first_countable", "apply_rules", "is_coarser",
    "LEFT_UNCOUNTABLE", "RIGHT_UNCOUNTABLE", "TOTAL_UNCOUNTABLE",
    "SpectrumEntry", "ordinal_space", "full", "end", "ord_max",
    "normalize_point", "same_spectrum", "base_of", "effective_cuts",
    "LEFT", "RIGHT",
]
