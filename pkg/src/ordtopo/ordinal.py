"""Ordinals below Omega^omega in Cantor normal form.

Every ordinal is stored as a flat sum of terms ``omega^(W*d + e) * c`` where
``W`` stands for a formal regular uncountable ordinal (omega_1), ``d`` is a
natural number, ``e`` is a countable ordinal (below epsilon_0) and ``c`` a
positive natural.  Since ``W = omega^W`` this is the same thing as
``W^d * omega^e * c``.  Terms are kept in strictly decreasing order of
``(d, e)``, so equality is syntactic.
"""
from __future__ import annotations

import enum
import re
from functools import total_ordering
from typing import Iterable, Tuple


class OrdinalError(ValueError):
    pass


class OrdinalSyntaxError(OrdinalError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class CofClass(enum.Enum):
    ZERO = "Zero"
    SUCCESSOR = "Successor"
    COUNTABLE = "CountableCof"
    UNCOUNTABLE = "UncountableCof"


Term = Tuple[int, "Ordinal", int]


@total_ordering
class Ordinal:
    __slots__ = ("terms", "_key")

    def __init__(self, terms: Iterable[Term] = ()):
        terms = tuple(terms)
        prev = None
        for d, e, c in terms:
            if not isinstance(d, int) or d < 0:
                raise OrdinalError(f"bad Omega-degree {d!r}")
            if not isinstance(c, int) or c <= 0:
                raise OrdinalError("coefficients must be positive naturals")
            if not isinstance(e, Ordinal) or not e.is_countable():
                raise OrdinalError("omega-exponents must be countable ordinals")
            if prev is not None and not (d, e) < prev:
                raise OrdinalError("terms must be strictly decreasing")
            prev = (d, e)
        self.terms = terms
        self._key = tuple((d, e._key, c) for d, e, c in terms)

    # -- construction helpers -------------------------------------------------
    @classmethod
    def nat(cls, n: int) -> "Ordinal":
        if n < 0:
            raise OrdinalError("negative ordinal")
        return cls(((0, ZERO, n),)) if n else ZERO

    @classmethod
    def power(cls, d: int, e: "Ordinal | int" = 0, c: int = 1) -> "Ordinal":
        """``W^d * omega^e * c``."""
        if isinstance(e, int):
            e = cls.nat(e)
        return cls(((d, e, c),))

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = Ordinal.nat(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other):
        if isinstance(other, int):
            other = Ordinal.nat(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Ordinal({self})"

    def __str__(self):
        return to_string(self)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.nat(other)
        return add(self, other)

    def __radd__(self, other):
        return add(Ordinal.nat(other), self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Ordinal.nat(other)
        return mul(self, other)

    def __rmul__(self, other):
        return mul(Ordinal.nat(other), self)

    # -- structure ------------------------------------------------------------
    def is_countable(self) -> bool:
        return all(d == 0 for d, _, _ in self.terms)

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][:2] == (0, ZERO)

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.is_successor()

    def finite_part(self) -> int:
        return self.terms[-1][2] if self.is_successor() else 0

    def limit_part(self) -> "Ordinal":
        """Largest limit-or-zero ordinal below or equal to self."""
        return Ordinal(self.terms[:-1]) if self.is_successor() else self

    def pred(self) -> "Ordinal":
        if not self.is_successor():
            raise OrdinalError(f"{self} has no predecessor")
        *head, (d, e, c) = self.terms
        return Ordinal(head + ([(d, e, c - 1)] if c > 1 else []))

    def succ(self) -> "Ordinal":
        return add(self, ONE)

    def leading(self) -> Tuple[int, "Ordinal"]:
        d, e, _ = self.terms[0]
        return d, e

    def omega_degree(self) -> int:
        return self.terms[0][0] if self.terms else 0


ZERO = Ordinal.__new__(Ordinal)
ZERO.terms = ()
ZERO._key = ()
ONE = Ordinal(((0, ZERO, 1),))
OMEGA = Ordinal(((0, ONE, 1),))
BIG_OMEGA = Ordinal(((1, ZERO, 1),))


def _exp_add(a: Tuple[int, Ordinal], b: Tuple[int, Ordinal]) -> Tuple[int, Ordinal]:
    # (W*d1 + e1) + (W*d2 + e2)
    if b[0] > 0:
        return (a[0] + b[0], b[1])
    return (a[0], add(a[1], b[1]))


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    head = b.terms[0][:2]
    kept = [t for t in a.terms if t[:2] > head]
    same = [t for t in a.terms if t[:2] == head]
    rest = list(b.terms)
    if same:
        d, e, c = rest[0]
        rest[0] = (d, e, c + same[0][2])
    return Ordinal(kept + rest)


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a.terms or not b.terms:
        return ZERO
    a_lead = a.terms[0][:2]
    out = ZERO
    for d, e, k in b.terms:
        if (d, e) == (0, ZERO):
            ld, le, lc = a.terms[0]
            piece = Ordinal(((ld, le, lc * k),) + a.terms[1:])
        else:
            nd, ne = _exp_add(a_lead, (d, e))
            piece = Ordinal(((nd, ne, k),))
        out = add(out, piece)
    return out


def cmp(a: Ordinal, b: Ordinal) -> str:
    if a == b:
        return "EQ"
    return "LT" if a < b else "GT"


def sub(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique ``delta`` with ``a + delta == b``."""
    if b < a:
        raise OrdinalError(f"{a} exceeds {b}")
    i = 0
    while i < len(a.terms) and i < len(b.terms) and a.terms[i] == b.terms[i]:
        i += 1
    if i == len(a.terms):
        return Ordinal(b.terms[i:])
    da, ea, ca = a.terms[i]
    db, eb, cb = b.terms[i]
    if (da, ea) == (db, eb):
        return Ordinal(((db, eb, cb - ca),) + b.terms[i + 1:])
    return Ordinal(b.terms[i:])


def classify(a: Ordinal) -> CofClass:
    if not a.terms:
        return CofClass.ZERO
    d, e, _ = a.terms[-1]
    if (d, e) == (0, ZERO):
        return CofClass.SUCCESSOR
    if e == ZERO:
        return CofClass.UNCOUNTABLE
    return CofClass.COUNTABLE


def next_power(a: Ordinal) -> Ordinal:
    """Least additively closed ordinal (a power of omega) that is >= a."""
    if not a.terms:
        return ONE
    d, e, c = a.terms[0]
    if c == 1 and len(a.terms) == 1:
        return a
    return Ordinal(((d, add(e, ONE), 1),))


def block_index(x: Ordinal, start: Ordinal, period: Ordinal):
    """Finite ``k`` with ``start + period*k <= x < start + period*(k+1)``.

    Returns None when ``x`` lies below ``start`` or at/after
    ``start + period*omega``.
    """
    if x < start:
        return None
    delta = sub(start, x)
    if delta < period:
        return 0
    pd, pe, pc = period.terms[0]
    dd, de, dc = delta.terms[0]
    if (dd, de) != (pd, pe):
        return None
    guess = dc // pc
    for k in (guess - 1, guess, guess + 1):
        if k >= 1 and period * k <= delta < period * (k + 1):
            return k
    raise AssertionError("block index search failed")  # pragma: no cover


# -- text form ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


class _Parser:
    def __init__(self, text: str):
        self.toks = []
        for m in _TOKEN.finditer(text):
            if m.group(1) is not None:
                self.toks.append(("nat", int(m.group(1)), m.start(1)))
            elif m.group(2) is not None:
                self.toks.append(("sym", m.group(2), m.start(2)))
        self.i = 0
        self.end = len(text)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", None, self.end)

    def take(self, sym=None):
        tok = self.peek()
        if sym is not None and (tok[0] != "sym" or tok[1] != sym):
            raise OrdinalSyntaxError(f"expected {sym!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Ordinal:
        val = self.term()
        while self.peek()[:2] == ("sym", "+"):
            self.take()
            val = add(val, self.term())
        return val

    def term(self) -> Ordinal:
        val = self.factor(allow_zero=True)
        first_zero = not val
        while self.peek()[:2] == ("sym", "*"):
            tok = self.take()
            rhs = self.factor(allow_zero=False)
            if first_zero:
                raise OrdinalSyntaxError("coefficient 0 rejected", tok[2])
            val = mul(val, rhs)
        return val

    def factor(self, allow_zero: bool) -> Ordinal:
        kind, val, pos = self.peek()
        if kind == "nat":
            self.take()
            if val == 0 and not allow_zero:
                raise OrdinalSyntaxError("coefficient 0 rejected", pos)
            return Ordinal.nat(val)
        if kind == "sym" and val == "w":
            self.take()
            if self.peek()[:2] == ("sym", "^"):
                self.take()
                return Ordinal.power(0, self.exponent())
            return OMEGA
        if kind == "sym" and val == "W":
            self.take()
            if self.peek()[:2] == ("sym", "^"):
                self.take()
                k, n, p = self.take()
                if k != "nat":
                    raise OrdinalSyntaxError("W exponent must be a natural", p)
                return Ordinal.power(n) if n else ONE
            return BIG_OMEGA
        if kind == "sym" and val == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise OrdinalSyntaxError("unexpected token", pos)

    def exponent(self) -> Ordinal:
        kind, val, pos = self.peek()
        if kind == "nat":
            self.take()
            return Ordinal.nat(val)
        if kind == "sym" and val == "w":
            self.take()
            if self.peek()[:2] == ("sym", "^"):
                self.take()
                return Ordinal.power(0, self.exponent())
            return OMEGA
        if kind == "sym" and val == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            if not inner.is_countable():
                raise OrdinalSyntaxError("omega exponent must be countable", pos)
            return inner
        raise OrdinalSyntaxError("bad exponent", pos)


def parse(text: str) -> Ordinal:
    p = _Parser(text)
    if p.peek()[0] == "eof":
        raise OrdinalSyntaxError("empty expression", 0)
    val = p.expr()
    kind, _, pos = p.peek()
    if kind != "eof":
        raise OrdinalSyntaxError("trailing input", pos)
    return val


def _term_string(d: int, e: Ordinal, c: int) -> str:
    parts = []
    if d == 1:
        parts.append("W")
    elif d > 1:
        parts.append(f"W^{d}")
    if e == ONE:
        parts.append("w")
    elif e:
        inner = to_string(e)
        if "+" in inner or "*" in inner:
            inner = f"({inner})"
        parts.append(f"w^{inner}")
    if not parts or c > 1:
        parts.append(str(c))
    return "*".join(parts)


def to_string(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    return "+".join(_term_string(*t) for t in a.terms)


def as_ordinal(x) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int):
        return Ordinal.nat(x)
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"cannot make an ordinal from {x!r}")
