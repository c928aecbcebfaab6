"""Slow, independent cross-checks.

Nothing here reuses the fast paths it is meant to check: cofinality comes from
explicit fundamental sequences, Cantor-Bendixson data from a strata model of
derived sets, and convergence from enumerating neighbourhood probes.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import pieces as P
from . import schedules as Sch
from . import spaces as S
from .ordinal import OMEGA, ONE, ZERO, CofClass, Ordinal, add, classify, mul, parse, to_string

PROBE_COEFF = 8
PROBE_DEGREE = 4
CB_MAX_RANK = 64


class OracleError(ValueError):
    pass


# -- fundamental sequences -------------------------------------------------

def _coeffs(x: Ordinal) -> Optional[List[int]]:
    """Coefficients (c_0, c_1, ...) of x = sum omega^i * c_i, or None past omega^omega."""
    out: List[int] = []
    for d, e, c in x.terms:
        if d or not e.is_countable() or e.terms and (e.terms[0][0] or e.terms[0][1]):
            return None
        i = int(e.terms[0][2]) if e.terms else 0
        while len(out) <= i:
            out.append(0)
        out[i] = c
    return out


def _from_coeffs(cs: List[int]) -> Ordinal:
    x = ZERO
    for i in reversed(range(len(cs))):
        if cs[i]:
            x = add(x, mul(Ordinal.power(0, Ordinal.nat(i)) if i else ONE, Ordinal.nat(cs[i])))
    return x


def fundamental_sequence(x: Ordinal, n: int) -> Ordinal:
    """n-th term of the standard fundamental sequence of a countable limit."""
    if not x.is_countable():
        raise OracleError("fundamental sequences are defined for countable ordinals")
    cs = _coeffs(x)
    if cs is not None:
        low = next((i for i, c in enumerate(cs) if c), None)
        if low is None or low == 0:
            raise OracleError(f"{to_string(x)} is not a limit")
        cs = list(cs)
        cs[low] -= 1
        cs[low - 1] = n
        return _from_coeffs(cs)
    # beyond omega^omega: peel the last term omega^e
    *head, (d, e, c) = x.terms
    prefix = Ordinal(list(head) + ([(d, e, c - 1)] if c > 1 else []))
    if e.is_successor():
        return add(prefix, mul(Ordinal.power(0, e.pred()), Ordinal.nat(n)))
    return add(prefix, Ordinal.power(0, fundamental_sequence(e, n)))


def cof_via_fs(x: Ordinal, probes: int = 6) -> CofClass:
    """Cofinality class of a countable ordinal, read off a fundamental sequence."""
    if not x.is_countable():
        raise OracleError("cof_via_fs is for countable ordinals")
    if x == ZERO:
        return CofClass.ZERO
    try:
        terms = [fundamental_sequence(x, n) for n in range(probes)]
    except OracleError:
        return CofClass.SUCCESSOR
    if not all(a < b < x for a, b in zip(terms, terms[1:])):
        raise OracleError(f"bad fundamental sequence for {to_string(x)}")
    return CofClass.COUNTABLE


# -- Cantor-Bendixson via strata ----------------------------------------------

@dataclass(frozen=True)
class Mult:
    """Multiples of omega^r in [a, b), zero excluded when r > 0."""
    a: Ordinal
    b: Ordinal
    r: int


@dataclass(frozen=True)
class Succ:
    """Successor-type points of [a, b); ``k`` pins the finite part when set."""
    a: Ordinal
    b: Ordinal
    k: Optional[int] = None


@dataclass(frozen=True)
class Pt:
    x: Ordinal


def _divisible(x: Ordinal, r: int) -> bool:
    if r == 0:
        return True
    if not x:
        return False
    e = x.terms[-1][1] if not x.terms[-1][0] else OMEGA
    return Ordinal.nat(r) <= e


def _member(c, x: Ordinal) -> bool:
    if isinstance(c, Pt):
        return c.x == x
    if not (c.a <= x < c.b):
        return False
    if isinstance(c, Mult):
        return _divisible(x, c.r)
    if not x.is_successor():
        return False
    return c.k is None or x.finite_part() == c.k


def _least_mult(a: Ordinal, r: int) -> Ordinal:
    if _divisible(a, r):
        return a
    step = Ordinal.power(0, Ordinal.nat(r))
    # drop everything below omega^r, then step up once
    keep = [(d, e, c) for d, e, c in a.terms if d or Ordinal.nat(r) <= e]
    return add(Ordinal(keep), step)


def _count(c) -> object:
    if isinstance(c, Pt):
        return 1
    if isinstance(c, Mult):
        m = _least_mult(c.a, c.r)
        n, x = 0, m
        step = Ordinal.power(0, Ordinal.nat(c.r)) if c.r else ONE
        while x < c.b:
            n += 1
            if n > 64:
                return "inf"
            x = add(x, step)
        return n
    n, x = 0, c.a
    while x < c.b:
        if _member(c, x):
            n += 1
            if n > 64:
                return "inf"
        x = add(x, ONE) if x.finite_part() < 70 else add(x.limit_part(), OMEGA)
    return n


def _nonempty(c) -> bool:
    return _count(c) != 0


def _sup(c) -> Optional[Ordinal]:
    """The point a component accumulates to from below, beyond itself."""
    if isinstance(c, Pt) or not _nonempty(c):
        return None
    if isinstance(c, Mult):
        return c.b if _divisible(c.b, c.r + 1) else None
    return c.b if c.b.is_limit() else None


def strata(s) -> Tuple[tuple, frozenset]:
    """Components of a countable ordinal subspace and its left-isolated points."""
    flagged = frozenset()
    if isinstance(s, S.GoSpace):
        from .embed import flagged_points
        flagged = frozenset(flagged_points(s))
        s = s.base
    if not isinstance(s, S.OrdinalSub):
        raise OracleError("CB data is computed for ordinal subspaces")
    if not s.bound.is_countable():
        raise OracleError("CB profile needs a countable space")
    comps = []
    for p in s.pieces:
        if isinstance(p, P.Full):
            comps.append(Mult(p.a, p.b, 0))
        elif isinstance(p, P.LimitsOnly):
            comps.append(Mult(p.a, p.b, 1))
        elif isinstance(p, P.SuccessorsOnly):
            comps.append(Succ(p.a, p.b))
        elif isinstance(p, P.OffsetClass):
            comps.append(Succ(p.a, p.b, p.k))
        elif isinstance(p, P.Singleton):
            comps.append(Pt(p.a))
        else:
            raise OracleError("repeated blocks are outside the CB oracle")
    return tuple(c for c in comps if _nonempty(c)), flagged


def cb_derivative(comps):
    """Components of the derived set, ignoring left-isolated points.

    Removing finitely many points never changes where a set accumulates, so
    the derived sets of a refined space are these minus the flagged points.
    """
    out = []
    for c in comps:
        if isinstance(c, Mult):
            d = Mult(add(c.a, ONE), c.b, c.r + 1)
            if _nonempty(d):
                out.append(d)
    for c in comps:
        x = _sup(c)
        if x is not None and any(_member(o, x) for o in comps) \
                and not any(_member(o, x) for o in out):
            out.append(Pt(x))
    return tuple(out)


def _size(comps, excluded) -> object:
    total = 0
    for c in comps:
        n = _count(c)
        if n == "inf":
            return "inf"
        total += n
    return total - sum(1 for x in excluded if any(_member(c, x) for c in comps))


def cb_profile(s) -> Tuple[object, ...]:
    """Sizes of the iterated derived sets, ending with the first empty one."""
    comps, flagged = strata(s)
    out = [_size(comps, ())]
    for _ in range(CB_MAX_RANK):
        if out[-1] == 0:
            return tuple(out)
        comps = cb_derivative(comps)
        out.append(_size(comps, flagged))
    raise OracleError("CB rank exceeds the oracle's limit")


# -- convergence by probes ----------------------------------------------------

def _key(x: Ordinal, degree: int = PROBE_DEGREE) -> Tuple[int, ...]:
    # below omega^degree the order is lexicographic on coefficients, top first
    cs = _coeffs(x)
    if cs is None or len(cs) > degree:
        raise OracleError(f"{to_string(x)} is not below omega^{degree}")
    return tuple(reversed(cs + [0] * (degree - len(cs))))


def probe_keys_below(p: Ordinal, coeff: int = PROBE_COEFF, degree: int = PROBE_DEGREE):
    """Coefficient vectors (top first) of the probes y < p."""
    kp = _key(p, degree)
    return (k for k in itertools.product(range(coeff + 1), repeat=degree) if k < kp)


def probes_below(p: Ordinal, coeff: int = PROBE_COEFF, degree: int = PROBE_DEGREE):
    for k in probe_keys_below(p, coeff, degree):
        yield _from_coeffs(list(reversed(k)))


def converges_bruteforce(seq, p, s, coeff: int = PROBE_COEFF) -> bool:
    """Convergence of an increasing affine sequence in a countable ordinal space."""
    base = S.base_of(s)
    if not isinstance(base, S.OrdinalSub) or not isinstance(seq, Sch.AffineOrd):
        raise OracleError("brute-force convergence covers affine sequences on ordinal subspaces")
    if not base.bound <= Ordinal.power(0, Ordinal.nat(PROBE_DEGREE)):
        raise OracleError("brute-force convergence needs a bound at most omega^4")
    x = p.value if isinstance(p, S.OrdPoint) else p
    n_terms = 2 * coeff + 2
    terms = [add(mul(seq.stride, Ordinal.nat(n)), seq.offset) for n in range(n_terms)]
    for a, b in zip(terms, terms[1:]):
        if not a < b:
            raise Sch.ScheduleError("schedule is not strictly monotone")
    for t in terms[:Sch.CHECK_TERMS]:
        if not S.contains(base, S.OrdPoint(t)):
            raise Sch.ScheduleError(f"term {to_string(t)} is not a point of the space")
    if not S.contains(base, S.OrdPoint(x)):
        raise S.SpaceError(f"{to_string(x)} is not a point of the space")
    if isinstance(s, S.GoSpace):
        from .embed import flagged_points
        if x in flagged_points(s):
            return False
    if any(not t < x for t in terms):
        return False
    keys = [_key(t) for t in terms]
    return all(any(y < k for k in keys) for y in probe_keys_below(x, coeff))


# -- self test ----------------------------------------------------------------

def _random_small(rng: random.Random) -> Ordinal:
    return _from_coeffs([rng.randint(0, 3) for _ in range(4)])


def selftest(seed: int = 0, n: int = 200) -> dict:
    """Scorecard of randomized cross-checks between fast paths and oracles."""
    rng = random.Random(seed)
    card = {}

    def tally(name, ok):
        row = card.setdefault(name, {"passed": 0, "failed": 0})
        row["passed" if ok else "failed"] += 1

    for _ in range(n):
        a, b, c = (_random_small(rng) for _ in range(3))
        tally("add-associative", (a + b) + c == a + (b + c))
        tally("mul-associative", (a * b) * c == a * (b * c))
        tally("left-distributive", a * (b + c) == a * b + a * c)
        tally("round-trip", parse(to_string(a)) == a)
        tally("cofinality", classify(a) is cof_via_fs(a))
    for _ in range(n // 4):
        bound = _random_small(rng) + ONE
        s = S.full(bound)
        stride = _from_coeffs([rng.randint(0, 1), rng.randint(0, 1), rng.randint(0, 1)])
        if not stride or not Sch.AffineOrd(stride).stride * 17 < bound:
            continue
        seq = Sch.AffineOrd(stride)
        pt = S.OrdPoint(stride * OMEGA if stride * OMEGA < bound else bound.pred())
        try:
            fast = Sch.converges(seq, pt, s)
        except (Sch.ScheduleError, S.SpaceError):
            continue
        tally("convergence", fast == converges_bruteforce(seq, pt, s))
    ok = all(row["failed"] == 0 for row in card.values())
    return {"checks": dict(sorted(card.items())), "ok": ok, "seed": seed}
