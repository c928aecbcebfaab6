"""Piece kinds that make up a subspace of an ordinal.

Each piece occupies an interval ``[a, b)`` of the ambient ordinal and
selects points of that interval by kind.  ``Repeat`` describes an
omega-indexed family of translated copies of a finite template; it is the
only way to write an infinite union of blocks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .ordinal import (BIG_OMEGA, OMEGA, ONE, ZERO, CofClass, Ordinal,
                      OrdinalError, block_index, classify, sub)


class PieceError(ValueError):
    pass


@dataclass(frozen=True)
class Full:
    a: Ordinal
    b: Ordinal


@dataclass(frozen=True)
class Singleton:
    a: Ordinal


@dataclass(frozen=True)
class SuccessorsOnly:
    a: Ordinal
    b: Ordinal


@dataclass(frozen=True)
class LimitsOnly:
    a: Ordinal
    b: Ordinal


@dataclass(frozen=True)
class OffsetClass:
    a: Ordinal
    b: Ordinal
    k: int


@dataclass(frozen=True)
class Repeat:
    """Blocks ``start + period*n + template`` for every natural ``n``."""
    template: Tuple["Piece", ...]
    period: Ordinal
    start: Ordinal


Piece = Union[Full, Singleton, SuccessorsOnly, LimitsOnly, OffsetClass, Repeat]
INTERVAL_KINDS = (Full, SuccessorsOnly, LimitsOnly, OffsetClass)


# -- kinds of ordinals ------------------------------------------------------

def is_exp1(x: Ordinal) -> bool:
    """Limit whose last CNF term is omega*c, i.e. x = lambda + omega."""
    return bool(x.terms) and x.terms[-1][:2] == (0, ONE)


def is_deep(x: Ordinal) -> bool:
    """Nonzero limit that is a limit of limits."""
    return x.is_limit() and not is_exp1(x)


def drop_omega(x: Ordinal) -> Ordinal:
    """For x = rho + omega, return rho."""
    *head, (d, e, c) = x.terms
    return Ordinal(head + ([(d, e, c - 1)] if c > 1 else []))


def offset_point(x: Ordinal, k: int) -> bool:
    return x.is_successor() and x.finite_part() == k


# least ordinal >= lo of a given kind; every one of these is exact
def least_succ(lo):
    return lo if lo.is_successor() else lo + ONE


def least_limit(lo):
    return lo if lo.is_limit() else lo + OMEGA


def least_countable_cof(lo):
    return lo if classify(lo) is CofClass.COUNTABLE else lo + OMEGA


def least_uncountable_cof(lo):
    return lo if classify(lo) is CofClass.UNCOUNTABLE else lo + BIG_OMEGA


def least_exp1(lo):
    return lo if is_exp1(lo) else lo + OMEGA


def least_deep_countable(lo):
    if is_deep(lo) and classify(lo) is CofClass.COUNTABLE:
        return lo
    return lo + Ordinal.power(0, 2)


def least_succ_of_succ(lo):
    n = lo.finite_part()
    return lo if n >= 2 else lo + (2 - n)


def least_succ_of_limit(lo):
    n = lo.finite_part()
    r = lo.limit_part()
    if n == 1 and r:
        return lo
    if n == 0 and lo:
        return lo + ONE
    return lo + OMEGA + ONE


def least_offset(lo, k, mu_kind=None):
    r, n = lo.limit_part(), lo.finite_part()
    if mu_kind is None:
        return r + k if k >= n else r + OMEGA + k
    if mu_kind == "exp1":
        mu = r if (is_exp1(r) and k >= n) else r + OMEGA
    else:
        if k >= n and is_deep(r):
            mu = r
        else:
            mu = r + Ordinal.power(0, 2)
    return mu + k


# rest-class kinds per piece type, with their witness search
REST_KINDS = {
    Full: ("successor", "countable", "uncountable"),
    LimitsOnly: ("after-limit", "countable", "uncountable"),
    SuccessorsOnly: ("after-successor", "after-limit"),
    OffsetClass: ("after-omega-step", "after-deep-limit"),
    Singleton: (),
}


def least_of_kind(piece, kind: str, lo: Ordinal) -> Optional[Ordinal]:
    """Least point >= lo of ``piece`` in the named rest kind."""
    lo = max(lo, piece.a)
    t = type(piece)
    if t is Full:
        x = {"successor": least_succ, "countable": least_countable_cof,
             "uncountable": least_uncountable_cof}[kind](lo)
    elif t is LimitsOnly:
        x = {"after-limit": least_exp1, "countable": least_deep_countable,
             "uncountable": least_uncountable_cof}[kind](lo)
    elif t is SuccessorsOnly:
        x = {"after-successor": least_succ_of_succ,
             "after-limit": least_succ_of_limit}[kind](lo)
    elif t is OffsetClass:
        x = least_offset(lo, piece.k,
                         "exp1" if kind == "after-omega-step" else "deep")
    else:
        raise PieceError(f"no rest kinds for {piece!r}")
    return x if x < piece.b else None


def kind_of(piece, x: Ordinal) -> str:
    t = type(piece)
    if t is Full:
        c = classify(x)
        if c is CofClass.SUCCESSOR:
            return "successor"
        return "countable" if c is CofClass.COUNTABLE else "uncountable"
    if t is LimitsOnly:
        if is_exp1(x):
            return "after-limit"
        return "countable" if classify(x) is CofClass.COUNTABLE else "uncountable"
    if t is SuccessorsOnly:
        return "after-successor" if x.pred().is_successor() else "after-limit"
    if t is OffsetClass:
        return "after-omega-step" if is_exp1(x.limit_part()) else "after-deep-limit"
    raise PieceError(f"no rest kinds for {piece!r}")


# -- validation -------------------------------------------------------------

def interval(piece) -> Tuple[Ordinal, Ordinal]:
    if isinstance(piece, Singleton):
        return piece.a, piece.a + ONE
    if isinstance(piece, Repeat):
        return piece.start, piece.start + piece.period * OMEGA
    return piece.a, piece.b


def validate(piece) -> None:
    if isinstance(piece, Repeat):
        if not piece.period.is_limit():
            raise PieceError("repeat period must be a limit ordinal")
        if piece.start.is_successor():
            raise PieceError("repeat start must be zero or a limit")
        if not piece.template:
            raise PieceError("empty repeat template")
        validate_list(piece.template, piece.period)
        for p in piece.template:
            if isinstance(p, Repeat):
                raise PieceError("nested repeat")
        return
    if isinstance(piece, INTERVAL_KINDS) and not piece.a < piece.b:
        raise PieceError(f"empty interval in {piece!r}")
    if isinstance(piece, OffsetClass) and piece.k < 1:
        raise PieceError("offset must be a positive natural")


def validate_list(pieces, bound: Ordinal) -> None:
    prev_hi = ZERO
    for p in pieces:
        validate(p)
        lo, hi = interval(p)
        if lo < prev_hi:
            raise PieceError("pieces must be disjoint and in increasing order")
        if bound < hi:
            raise PieceError(f"piece {p!r} reaches past bound {bound}")
        prev_hi = hi


# -- translation ------------------------------------------------------------

def translate(piece, t: Ordinal):
    """Image of ``piece`` under x -> t + x (t zero or a limit)."""
    if not t:
        return [piece]
    if isinstance(piece, Singleton):
        return [Singleton(t + piece.a)]
    if isinstance(piece, Repeat):
        return [Repeat(piece.template, piece.period, t + piece.start)]
    if isinstance(piece, LimitsOnly) and not piece.a:
        return [LimitsOnly(t + ONE, t + piece.b)]
    if isinstance(piece, OffsetClass):
        return [OffsetClass(t + piece.a, t + piece.b, piece.k)]
    return [type(piece)(t + piece.a, t + piece.b)]


def untranslate(piece, r: Ordinal):
    """Image of ``piece`` under x -> x - r (r zero or a limit, below the piece)."""
    if not r:
        return [piece]
    if isinstance(piece, Singleton):
        return [Singleton(sub(r, piece.a))]
    if isinstance(piece, Repeat):
        return [Repeat(piece.template, piece.period, sub(r, piece.start))]
    a, b = sub(r, piece.a), sub(r, piece.b)
    if isinstance(piece, LimitsOnly) and piece.a == r:
        out = [Singleton(ZERO)]
        if ONE < b:
            out.append(LimitsOnly(ONE, b))
        return out
    if isinstance(piece, OffsetClass):
        return [OffsetClass(a, b, piece.k)]
    return [type(piece)(a, b)]


def block(piece: Repeat, n: int):
    return [q for p in piece.template
            for q in translate(p, piece.start + piece.period * n)]


# -- order queries ----------------------------------------------------------

def least_from(piece, lo: Ordinal) -> Optional[Ordinal]:
    """Least element of ``piece`` that is >= lo."""
    t = type(piece)
    if t is Singleton:
        return piece.a if lo <= piece.a else None
    if t is Repeat:
        lo = max(lo, piece.start)
        n = block_index(lo, piece.start, piece.period)
        if n is None:
            return None
        for m in (n, n + 1):
            hits = [x for x in (least_from(p, lo) for p in block(piece, m))
                    if x is not None]
            if hits:
                return min(hits)
        return None
    x = max(lo, piece.a)
    if t is SuccessorsOnly:
        x = least_succ(x)
    elif t is LimitsOnly:
        x = least_limit(x)
    elif t is OffsetClass:
        x = least_offset(x, piece.k)
    return x if x < piece.b else None


def contains(piece, x: Ordinal) -> bool:
    return least_from(piece, x) == x


def below(piece, m: Ordinal):
    """Describe ``piece`` restricted to ``[0, m)``.

    Returns None when empty, ``("max", x)`` when it has a greatest element
    and ``("sup", s)`` when it has none (then ``s`` is a limit).
    """
    t = type(piece)
    if t is Singleton:
        return ("max", piece.a) if piece.a < m else None
    if t is Repeat:
        if m <= piece.start:
            return None
        n = block_index(m, piece.start, piece.period)
        if n is None:
            return ("sup", piece.start + piece.period * OMEGA)
        found = best(below(p, m) for p in block(piece, n))
        if found is None and n >= 1:
            top = piece.start + piece.period * n
            found = best(below(p, top) for p in block(piece, n - 1))
        return found
    top = min(piece.b, m)
    a = piece.a
    if top <= a:
        return None
    if t is Full:
        return ("max", top.pred()) if top.is_successor() else ("sup", top)
    if t is SuccessorsOnly:
        if top.is_limit():
            return ("sup", top)
        q = top.pred()
        if q.is_successor():
            return ("max", q)
        return ("sup", q) if (q and a < q) else None
    if t is LimitsOnly:
        if top.is_successor():
            lim = top.pred().limit_part()
        elif is_exp1(top):
            lim = drop_omega(top)
        else:
            return ("sup", top)
        return ("max", lim) if (lim and a <= lim) else None
    if t is OffsetClass:
        r, n = top.limit_part(), top.finite_part()
        if n > piece.k:
            x = r + piece.k
        elif not r:
            return None
        elif is_exp1(r):
            x = drop_omega(r) + piece.k
        else:
            return ("sup", r)
        return ("max", x) if a <= x else None
    raise PieceError(f"unknown piece {piece!r}")


def best(results):
    """Combine ``below`` results of disjoint pieces."""
    out = None
    for r in results:
        if r is None:
            continue
        if out is None or out[1] < r[1] or (out[1] == r[1] and r[0] == "max"):
            out = r
    return out


# -- restriction ------------------------------------------------------------

MAX_BLOCKS = 10_000


def restrict(piece, lo: Ordinal, hi: Ordinal):
    """``piece`` intersected with ``[lo, hi)`` as a list of pieces."""
    if hi <= lo:
        return []
    if isinstance(piece, Singleton):
        return [piece] if lo <= piece.a < hi else []
    if isinstance(piece, Repeat):
        p_lo, p_hi = interval(piece)
        if hi <= p_lo or p_hi <= lo:
            return []
        n0 = block_index(max(lo, p_lo), piece.start, piece.period)
        out = []
        if p_hi <= hi:
            for p in block(piece, n0):
                out.extend(restrict(p, lo, hi))
            out.append(Repeat(piece.template, piece.period,
                              piece.start + piece.period * (n0 + 1)))
            return out
        n1 = block_index(hi, piece.start, piece.period)
        if n1 - n0 > MAX_BLOCKS:
            raise PieceError("restriction would materialize too many blocks")
        for n in range(n0, n1 + 1):
            for p in block(piece, n):
                out.extend(restrict(p, lo, hi))
        return out
    a, b = max(piece.a, lo), min(piece.b, hi)
    if not a < b:
        return []
    if isinstance(piece, OffsetClass):
        q = OffsetClass(a, b, piece.k)
    else:
        q = type(piece)(a, b)
    return [q] if least_from(q, a) is not None else []


# -- size -------------------------------------------------------------------

def size(piece, cap: int = 64):
    """Number of points: an int, ``"countable"`` (infinite) or ``"uncountable"``."""
    if isinstance(piece, Singleton):
        return 1
    if isinstance(piece, Repeat):
        sizes = [size(p, cap) for p in piece.template]
        if "uncountable" in sizes:
            return "uncountable"
        return "countable" if any(sizes) else 0
    lo, hi = interval(piece)
    if sub(lo, hi).omega_degree() >= 1:
        return "uncountable"
    count, x = 0, least_from(piece, lo)
    while x is not None:
        count += 1
        if count > cap:
            return "countable"
        x = least_from(piece, x + ONE)
    return count


__all__ = [
    "Full", "Singleton", "SuccessorsOnly", "LimitsOnly", "OffsetClass",
    "Repeat", "Piece", "PieceError", "REST_KINDS", "below", "best", "block",
    "contains", "interval", "kind_of", "least_from", "least_of_kind",
    "restrict", "size", "translate", "untranslate", "validate",
    "validate_list", "OrdinalError",
]
