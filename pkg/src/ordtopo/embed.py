"""Ordinal-side constructions.

``reembed`` turns a left-isolating GO refinement of an ordinal subspace back
into an ordinal subspace.  ``go5_transform`` converts a hereditarily
paracompact ordinal subspace into a first-countable one, given a partition
of the part below each point of uncountable left character.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import pieces as P
from . import spaces as S
from .ordinal import OMEGA, ONE, ZERO, Ordinal, next_power, sub
from .pieces import Full, LimitsOnly, OffsetClass, Repeat, Singleton, SuccessorsOnly
from .spaces import GoSpace, OrdinalSub, OrdPoint, Side

MEMBER_CAP = 64


class EmbedError(ValueError):
    pass


# -- hereditary paracompactness ----------------------------------------------

def is_hered_paracompact(s: OrdinalSub) -> bool:
    """No closed copy of Omega: every Full/LimitsOnly piece has countable length."""
    if not isinstance(s, OrdinalSub):
        raise EmbedError("paracompactness is decided for ordinal subspaces only")
    return all(_piece_hp(p) for p in s.pieces)


def _piece_hp(p) -> bool:
    if isinstance(p, Repeat):
        return all(_piece_hp(q) for q in p.template)
    if isinstance(p, (Full, LimitsOnly)):
        return sub(p.a, p.b).omega_degree() == 0
    return True


# -- helpers on ordinal subspaces --------------------------------------------

def points_min(s: OrdinalSub) -> Optional[Ordinal]:
    return S._ord_least_from(s, ZERO)


def tight(pieces, bound=None) -> OrdinalSub:
    """Ordinal subspace over the least bound that holds ``pieces``."""
    pieces = [p for p in pieces if P.least_from(p, P.interval(p)[0]) is not None]
    hi = P.interval(pieces[-1])[1] if pieces else ZERO
    if bound is not None:
        hi = min(hi, bound)
    return OrdinalSub(hi, tuple(pieces))


def restrict(s: OrdinalSub, lo: Ordinal, hi: Ordinal) -> List:
    out = []
    for p in s.pieces:
        out.extend(P.restrict(p, lo, hi))
    return out


def rebase(pieces) -> Tuple[OrdinalSub, Ordinal]:
    """Shift ``pieces`` down by the limit part of their least point."""
    probe = OrdinalSub(P.interval(pieces[-1])[1], tuple(pieces))
    m = points_min(probe)
    r = m.limit_part()
    tightened = [q for p in pieces for q in P.restrict(p, m, P.interval(p)[1])]
    moved = [q for p in tightened for q in P.untranslate(p, r)]
    return tight(moved), r


def shift(pieces, t: Ordinal) -> List:
    return [q for p in pieces for q in P.translate(p, t)]


def uc_points(s: OrdinalSub) -> List[Ordinal]:
    """Points of uncountable left character (always finitely many classes)."""
    out = []
    for e in S.character_spectrum(s):
        if e.left is Side.UNCOUNTABLE:
            out.extend(class_members(s, e.key))
    return sorted(out)


def class_members(s: OrdinalSub, key: str, cap: int = MEMBER_CAP) -> List[Ordinal]:
    """All points of a finite point class; raises if the class is infinite."""
    sample = dict(S._ord_classes(s))[key]
    parts = key.split(":")
    if key == "max" or parts[-1] == "first":
        return [sample]
    piece = s.pieces[int(parts[0][1:])]
    if isinstance(piece, Repeat):
        if parts[1] == "bk":
            raise EmbedError(f"class {key} has a member in every block")
        piece = P.block(piece, 0)[int(parts[2][1:])]
    smax = S.ord_max(s)
    out, x = [], sample
    while x is not None and x != smax:
        out.append(x)
        if len(out) > cap:
            raise EmbedError(f"class {key} is not expressible as finitely many points")
        x = P.least_of_kind(piece, parts[-1], x + ONE)
    return out


def is_discrete(s: OrdinalSub) -> bool:
    return all(not (e.left in (Side.COUNTABLE, Side.UNCOUNTABLE) or
                    e.right in (Side.COUNTABLE, Side.UNCOUNTABLE))
               for e in S.character_spectrum(s))


def cardinality(s: OrdinalSub):
    sizes = [P.size(p) for p in s.pieces]
    if "uncountable" in sizes:
        return "uncountable"
    if "countable" in sizes:
        return "countable"
    return sum(sizes)


def normal_discrete(s: OrdinalSub) -> OrdinalSub:
    """Canonical ordinal subspace homeomorphic to a discrete ``s``."""
    n = cardinality(s)
    if n == "uncountable":
        bound = Ordinal.power(1)
    elif n == "countable":
        bound = OMEGA
    else:
        return OrdinalSub(Ordinal.nat(n), (Full(ZERO, Ordinal.nat(n)),) if n else ())
    return OrdinalSub(bound, (SuccessorsOnly(ZERO, bound),))


# -- re-embedding of a left-isolating refinement -----------------------------

@dataclass(frozen=True)
class Reembedding:
    """Result of ``reembed``: the ordinal subspace plus the point map.

    Segment ``j`` is ``[starts[j], starts[j+1])`` of the input; it lands at
    ``offsets[j] + (x - starts[j])``.
    """
    source: GoSpace
    output: OrdinalSub
    starts: Tuple[Ordinal, ...]
    offsets: Tuple[Ordinal, ...]

    def image(self, x: Ordinal) -> Ordinal:
        j = max(i for i, y in enumerate(self.starts) if y <= x)
        return self.offsets[j] + sub(self.starts[j], x)

    def preimage(self, z: Ordinal) -> Ordinal:
        j = max(i for i, o in enumerate(self.offsets) if o <= z)
        return self.starts[j] + sub(self.offsets[j], z)


def flagged_points(g: GoSpace) -> List[Ordinal]:
    base = g.base
    cuts = S.effective_cuts(g)
    out = []
    for key, _ in S._ord_classes(base):
        if S.LEFT in cuts[key]:
            out.extend(class_members(base, key))
    return sorted(out)


def reembed(g) -> Reembedding:
    """Insert a gap point below every left-isolated limit.

    Each flagged point ``y`` is moved to ``e + 1`` where ``e`` is the (absent)
    image supremum of the points below it, so its left side becomes a jump
    while everything else keeps its character.
    """
    if not isinstance(g, GoSpace) or not isinstance(g.base, OrdinalSub):
        raise EmbedError("reembed takes a GoSpace over an ordinal subspace")
    if any(S.RIGHT in c for c in S.effective_cuts(g).values()):
        raise EmbedError("reembed needs rules that isolate from the left only")
    s = g.base
    flags = flagged_points(g)
    starts, offsets = [ZERO], [ZERO]
    out = restrict(s, ZERO, flags[0]) if flags else list(s.pieces)
    ends = flags[1:] + [s.bound]
    for j, y in enumerate(flags):
        e = offsets[-1] + sub(starts[-1], y)  # image sup of the previous segment
        o = e + ONE
        starts.append(y)
        offsets.append(o)
        seg = [q for p in restrict(s, y, ends[j]) for q in P.untranslate(p, y)]
        out.append(Singleton(o))
        for p in seg:
            for q in P.restrict(p, ONE, OMEGA):
                out.extend(_shift_finite(q, o))
            out.extend(shift(P.restrict(p, OMEGA, sub(y, ends[j])), e))
    bound = offsets[-1] + sub(starts[-1], s.bound)
    return Reembedding(g, OrdinalSub(bound, tuple(out)), tuple(starts), tuple(offsets))


def _shift_finite(q, o: Ordinal):
    # q lives inside [1, omega); image under n -> o + n
    if isinstance(q, Singleton):
        return [Singleton(o + q.a)]
    if isinstance(q, (Full, SuccessorsOnly)):
        return [Full(o + q.a, o + q.b)]
    if isinstance(q, OffsetClass):
        return [Singleton(o + Ordinal.nat(q.k))]
    return []


def reembed_double(g) -> OrdinalSub:
    return reembed(g).output


# -- partitions ---------------------------------------------------------------

@dataclass(frozen=True)
class PartitionSchedule:
    """A partition of the points below ``target`` into sets A_0, A_1, ...

    ``head`` lists finitely many sets explicitly; ``offset_family = (a, b, k0)``
    appends ``OffsetClass(a, b, k)`` for every ``k >= k0``.
    """
    target: Ordinal
    head: Tuple[Tuple[P.Piece, ...], ...] = ()
    offset_family: Optional[Tuple[Ordinal, Ordinal, int]] = None

    def family_member(self, k: int) -> Tuple[P.Piece, ...]:
        a, b, _ = self.offset_family
        return (OffsetClass(a, b, k),)


def _atoms(u: Ordinal, v: Ordinal, K: int):
    """Nonempty kind-atoms of the interval [u, v)."""
    out = []
    if not u:
        out.append("zero")
    if P.least_limit(u) < v:
        out.append("limit")
    for k in range(1, K + 1):
        if P.least_offset(u, k) < v:
            out.append(k)
    tail = u if u.finite_part() > K else u.limit_part() + (K + 1)
    if tail < v:
        out.append("tail")
    return out


def _covers(p, u: Ordinal, atom) -> bool:
    lo, hi = P.interval(p)
    if not (lo <= u < hi):
        return False
    if isinstance(p, Full):
        return True
    if isinstance(p, Singleton):
        x = p.a
        kind = "zero" if not x else ("limit" if x.is_limit() else x.finite_part())
        return kind == atom
    if isinstance(p, SuccessorsOnly):
        return atom not in ("zero", "limit")
    if isinstance(p, LimitsOnly):
        return atom == "limit"
    if isinstance(p, OffsetClass):
        return atom == p.k
    raise EmbedError("partition pieces must be finite piece lists")


def check_partition(universe: Sequence, sched: PartitionSchedule) -> None:
    """Raise unless the schedule's sets are disjoint and cover ``universe``."""
    sets = [list(h) for h in sched.head]
    everything = list(universe) + [p for h in sets for p in h]
    fam = None
    if sched.offset_family is not None:
        a, b, k0 = sched.offset_family
        if k0 < 1 or not a < b:
            raise EmbedError("bad offset family")
        fam = (a, b, k0)
        everything.append(Full(a, b))
    if any(isinstance(p, Repeat) for p in everything):
        raise EmbedError("partition check is not decidable for repeated blocks")
    ks = [1]
    for p in everything:
        if isinstance(p, OffsetClass):
            ks.append(p.k)
        if isinstance(p, Singleton):
            ks.append(p.a.finite_part())
    if fam:
        ks.append(fam[2])
    K = max(ks) + 1
    cuts = set()
    for p in everything:
        cuts.update(P.interval(p))
    cuts = sorted(cuts)
    for u, v in zip(cuts, cuts[1:]):
        for atom in _atoms(u, v, K):
            want = sum(_covers(p, u, atom) for p in universe)
            got = sum(any(_covers(p, u, atom) for p in h) for h in sets)
            if fam and fam[0] <= u < fam[1] and isinstance(atom, int) and atom >= fam[2]:
                got += 1
            if fam and fam[0] <= u < fam[1] and atom == "tail":
                got += 1
            if want > 1:
                raise EmbedError("universe pieces overlap")
            if got != want:
                raise EmbedError(
                    f"schedule is not a partition near {u}: atom {atom!r} covered "
                    f"{got} times, expected {want}")


# -- placement and omega sums -------------------------------------------------

def _slot(x: OrdinalSub, nxt: Optional[OrdinalSub]) -> Ordinal:
    """Room reserved for summand ``x`` so that ``nxt`` starts beyond a gap."""
    width = max(next_power(x.bound), OMEGA)
    r = S._ord_below(x, width)
    cofinal = r is not None and r[0] == "sup" and r[1] == width
    if cofinal and nxt is not None and S.contains(nxt, OrdPoint(ZERO)):
        width = width * 2
    return width


def place(summands: Sequence[OrdinalSub], after: Optional[OrdinalSub] = None):
    """Lay summands end to end with gaps; returns (pieces, next free offset)."""
    out, o = [], ZERO
    for i, x in enumerate(summands):
        nxt = summands[i + 1] if i + 1 < len(summands) else after
        out.extend(shift(x.pieces, o))
        o = o + _slot(x, nxt)
    return out, o


def _check_summand(x: OrdinalSub) -> None:
    if not S.first_countable(x):
        raise EmbedError("omega-sum summands must be first-countable")
    if not is_hered_paracompact(x):
        raise EmbedError("omega-sum summands must be hereditarily paracompact")


def omega_sum_with_top(head: Sequence[OrdinalSub], tail: Optional[OrdinalSub] = None) -> OrdinalSub:
    """Summands end to end, then a top point above all of them.

    ``tail`` (if given) is repeated omega times after ``head``; the top then
    sits at the omega-limit of the blocks.  Without a tail the top is
    isolated, placed just past a gap.
    """
    for x in list(head) + ([tail] if tail is not None else []):
        _check_summand(x)
    out, o = place(head, after=tail)
    if tail is None:
        top = o + ONE
    else:
        period = _slot(tail, tail)
        out.append(Repeat(tuple(tail.pieces), period, o))
        top = o + period * OMEGA
    out.append(Singleton(top))
    return OrdinalSub(top + ONE, tuple(out))


# -- gap splitting ---------------------------------------------------------

@dataclass(frozen=True)
class GapSplit:
    """Convex clopen pieces in order; ``tail`` (if any) repeats omega times."""
    head: Tuple[OrdinalSub, ...]
    tail: Optional[OrdinalSub] = None


def _first(p) -> Ordinal:
    return P.least_from(p, P.interval(p)[0])


def split_at_gaps(s: OrdinalSub) -> GapSplit:
    if not is_hered_paracompact(s):
        raise EmbedError("split_at_gaps needs a hereditarily paracompact space")
    if not s.bound.is_limit():
        raise EmbedError("split_at_gaps needs a limit bound")
    chunks: List[List] = []
    tail = None
    for i, p in enumerate(s.pieces):
        f = _first(p)
        if f is None:
            continue
        joined = chunks and S.approach(s, OrdPoint(f), S.LEFT).cofinal
        if isinstance(p, Repeat):
            b1 = P.block(p, 1)
            f1 = min(x for x in (_first(q) for q in b1) if x is not None)
            if not S.approach(s, OrdPoint(f1), S.LEFT).cofinal:
                if i != len(s.pieces) - 1:
                    raise EmbedError("pieces after an omega-family of clopen blocks")
                b0 = P.block(p, 0)
                if joined:
                    chunks[-1].extend(b0)
                else:
                    chunks.append(list(b0))
                tail = rebase(b1)[0]
                continue
        if joined:
            chunks[-1].append(p)
        else:
            chunks.append([p])
    head = tuple(rebase(c)[0] for c in chunks)
    if tail is None and any(not x.bound < s.bound for x in head):
        raise EmbedError("no gap decomposition into pieces over smaller bounds")
    return GapSplit(head, tail)


# -- the inductive first-countable transform ----------------------------------

@dataclass
class Go5Result:
    output: OrdinalSub
    trace: List[dict] = field(default_factory=list)


def _schedule_map(schedule) -> dict:
    if schedule is None:
        return {}
    if isinstance(schedule, PartitionSchedule):
        return {schedule.target: schedule}
    if not isinstance(schedule, (list, tuple)) or \
            not all(isinstance(sc, PartitionSchedule) for sc in schedule):
        raise EmbedError("go5 schedules must be partition schedules")
    return {sc.target: sc for sc in schedule}


def go5_transform(s: OrdinalSub, schedule=None) -> Go5Result:
    """First-countable hereditarily paracompact ordinal subspace from ``s``."""
    if not isinstance(s, OrdinalSub):
        raise EmbedError("go5_transform takes an ordinal subspace")
    if not is_hered_paracompact(s):
        raise EmbedError("input is not hereditarily paracompact")
    trace: List[dict] = []
    out = _go5(s, _schedule_map(schedule), trace)
    return Go5Result(out, trace)


def _go5(s: OrdinalSub, scheds: dict, trace: List[dict]) -> OrdinalSub:
    alpha = s.bound
    if alpha.is_successor():
        beta = alpha.pred()
        if not S.contains(s, OrdPoint(beta)):
            trace.append({"case": "successor-drop", "bound": str(alpha), "to": str(beta)})
            return _go5(OrdinalSub(beta, tuple(restrict(s, ZERO, beta))), scheds, trace)
        if not beta.is_limit():
            trace.append({"case": "successor-isolated", "bound": str(alpha), "top": str(beta)})
            lower = OrdinalSub(beta, tuple(restrict(s, ZERO, beta)))
            inner = _go5(lower, scheds, trace)
            if inner == lower:
                return s
            top = inner.bound + ONE
            return OrdinalSub(top + ONE, inner.pieces + (Singleton(top),))
    ucs = uc_points(s)
    if not ucs:
        trace.append({"case": "base", "bound": str(alpha)})
        return s
    cuts = clopen_cuts(s, ucs)
    if not cuts:
        # one convex run; its only uncountable-character point is the top
        return _omega_case(s, ucs[-1], scheds, trace)
    trace.append({"case": "split" if alpha.is_successor() else "limit-split",
                  "bound": str(alpha), "cuts": [str(c) for c in cuts]})
    bounds = [ZERO] + cuts + [alpha]
    parts = []
    for lo, hi in zip(bounds, bounds[1:]):
        chunk = restrict(s, lo, hi)
        if chunk:
            parts.append(_go5(OrdinalSub(hi, tuple(chunk)), scheds, trace))
    rebased = [rebase(list(x.pieces))[0] for x in parts if x.pieces]
    pieces, o = place(rebased)
    return OrdinalSub(o, tuple(pieces))


def clopen_cuts(s: OrdinalSub, ucs=()) -> List[Ordinal]:
    """Ordinals c splitting ``s`` into clopen parts below and from c.

    These are the first points of pieces not approached cofinally from the
    left, plus the successor of every point in ``ucs``.
    """
    lo = points_min(s)
    cuts = set()
    for p in s.pieces:
        f = _first(p)
        if f is not None and f != lo and not S.approach(s, OrdPoint(f), S.LEFT).cofinal:
            cuts.add(f)
    for z in ucs:
        if z + ONE < s.bound and S._ord_least_from(s, z + ONE) is not None:
            cuts.add(z + ONE)
    return sorted(cuts)


def _summand(pieces, scheds, trace) -> Optional[OrdinalSub]:
    pieces = [p for p in pieces if _first(p) is not None]
    if not pieces:
        return None
    x, _ = rebase(sorted(pieces, key=lambda p: P.interval(p)[0]))
    if not S.first_countable(x):
        x = _go5(x, scheds, trace)
    return normal_discrete(x) if is_discrete(x) else x


def _omega_case(s: OrdinalSub, z: Ordinal, scheds, trace) -> OrdinalSub:
    sched = scheds.get(z)
    if sched is None:
        raise EmbedError(f"a partition schedule is required for the point {z}")
    universe = restrict(s, ZERO, z)
    check_partition(universe, sched)
    trace.append({"case": "successor-limit", "bound": str(s.bound), "top": str(z)})
    head = [x for x in (_summand(h, scheds, trace) for h in sched.head) if x is not None]
    tail = None
    if sched.offset_family is not None:
        k0 = sched.offset_family[2]
        first, second = (_summand(sched.family_member(k), scheds, trace) for k in (k0, k0 + 1))
        if first != second:
            raise EmbedError("offset family members do not transform uniformly")
        tail = first
    return omega_sum_with_top(head, tail)
