"""JSON encoding for space descriptions, points, rules, schedules and reports.

Every object becomes ``{"kind": <lowercased class name>, <field>: ...}``.
Ordinals are written in the expression grammar, rationals as ``"p/q"``.
"""
from __future__ import annotations

import json
from dataclasses import fields
from fractions import Fraction

from . import embed as E
from . import pieces as P
from . import refine as R
from . import schedules as Sch
from . import spaces as S
from .ordinal import Ordinal, parse, to_string


class SchemaError(ValueError):
    pass


_ORD, _FRAC, _BOOL, _INT, _STR = "ord", "frac", "bool", "int", "str"
_SIDES, _SIDE, _NODE, _NODES, _NODES2, _ORDS, _FAMILY, _RAW = (
    "sides", "side", "node", "nodes", "nodes2", "ords", "family", "raw")
_PRED = "pred"

FIELDS = {
    P.Full: {"a": _ORD, "b": _ORD},
    P.Singleton: {"a": _ORD},
    P.SuccessorsOnly: {"a": _ORD, "b": _ORD},
    P.LimitsOnly: {"a": _ORD, "b": _ORD},
    P.OffsetClass: {"a": _ORD, "b": _ORD, "k": _INT},
    P.Repeat: {"template": _NODES, "period": _ORD, "start": _ORD},
    S.OrdinalSub: {"bound": _ORD, "pieces": _NODES},
    S.LexProduct: {"first": _NODE, "second": _NODE},
    S.LongSegment: {"kappa": _ORD},
    S.RationalSegment: {"has_min": _BOOL, "has_max": _BOOL},
    S.RealLine: {},
    S.GoSpace: {"base": _NODE, "rules": _NODES},
    S.Pred: {"left": _SIDES, "right": _SIDES, "either": _SIDES, "classkey": _STR},
    S.IsolateWhere: {"pred": _PRED},
    S.RightRayWhere: {"pred": _PRED},
    S.LeftRayWhere: {"pred": _PRED},
    S.OrdPoint: {"value": _ORD},
    S.Pair: {"first": _NODE, "second": _NODE},
    S.LongPoint: {"alpha": _ORD, "q": _FRAC},
    S.LongInfinity: {},
    S.Rat: {"q": _FRAC},
    S.SpectrumEntry: {"key": _STR, "sample": _NODE, "left": _SIDE, "right": _SIDE},
    Sch.AffineOrd: {"stride": _ORD, "offset": _ORD},
    Sch.RatApproach: {"target": _FRAC, "direction": _STR, "scale": _FRAC},
    Sch.PairSchedule: {"first": _NODE, "second": _NODE},
    E.PartitionSchedule: {"target": _ORD, "head": _NODES2, "offset_family": _FAMILY},
    E.Reembedding: {"source": _NODE, "output": _NODE, "starts": _ORDS, "offsets": _ORDS},
    E.GapSplit: {"head": _NODES, "tail": _NODE},
    E.Go5Result: {"output": _NODE, "trace": _RAW},
    R.RefinementReport: {"input": _NODE, "rules_added": _NODES, "output": _NODE,
                         "spectrum_before": _NODES, "spectrum_after": _NODES,
                         "coarseness_witness": _BOOL},
}
BY_KIND = {cls.__name__.lower(): cls for cls in FIELDS}

# derived values written alongside a report, ignored when read back
EXTRAS = {
    R.RefinementReport: lambda r: {"first_countable": r.first_countable},
    E.Go5Result: lambda r: {"first_countable": S.first_countable(r.output)},
}


def _frac(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _enc(codec, v):
    if v is None:
        return None
    if codec == _ORD:
        return to_string(v)
    if codec == _FRAC:
        return _frac(v)
    if codec == _SIDES:
        return sorted(s.value.lower() for s in v)
    if codec == _SIDE:
        return v.value.lower()
    if codec in (_NODE, _PRED):
        return to_json(v)
    if codec == _NODES:
        return [to_json(x) for x in v]
    if codec == _NODES2:
        return [[to_json(x) for x in row] for row in v]
    if codec == _ORDS:
        return [to_string(x) for x in v]
    if codec == _FAMILY:
        a, b, k0 = v
        return {"a": to_string(a), "b": to_string(b), "k0": k0}
    return v


def to_json(obj) -> dict:
    """Plain JSON-ready structure for a model object."""
    if isinstance(obj, Ordinal):
        return to_string(obj)
    spec = FIELDS.get(type(obj))
    if spec is None:
        raise SchemaError(f"no JSON schema for {type(obj).__name__}")
    out = {"kind": type(obj).__name__.lower()}
    for name, codec in spec.items():
        out[name] = _enc(codec, getattr(obj, name))
    if type(obj) in EXTRAS:
        out.update(EXTRAS[type(obj)](obj))
    return out


_SIDE_BY_NAME = {s.value.lower(): s for s in S.Side}


def _dec(codec, v):
    if v is None:
        return None
    try:
        if codec == _ORD:
            return parse(v)
        if codec == _FRAC:
            if not isinstance(v, str):
                raise SchemaError(f"expected a rational like '3/4', got {v!r}")
            try:
                return Fraction(v)
            except ValueError:
                raise SchemaError(f"bad rational {v!r}") from None
        if codec == _BOOL:
            if not isinstance(v, bool):
                raise SchemaError(f"expected a boolean, got {v!r}")
            return v
        if codec == _INT:
            if isinstance(v, bool) or not isinstance(v, int):
                raise SchemaError(f"expected an integer, got {v!r}")
            return v
        if codec == _SIDES:
            return frozenset(_SIDE_BY_NAME[x.lower()] for x in v)
        if codec == _SIDE:
            return _SIDE_BY_NAME[v.lower()]
        if codec == _NODE:
            return from_json(v)
        if codec == _PRED:
            return from_json(v if "kind" in v else {**v, "kind": "pred"})
        if codec == _NODES:
            return tuple(from_json(x) for x in v)
        if codec == _NODES2:
            return tuple(tuple(from_json(x) for x in row) for row in v)
        if codec == _ORDS:
            return tuple(parse(x) for x in v)
        if codec == _FAMILY:
            return (parse(v["a"]), parse(v["b"]), int(v["k0"]))
    except (KeyError, TypeError, AttributeError) as exc:
        raise SchemaError(f"malformed value {v!r}") from exc
    return v


def from_json(data):
    """Inverse of ``to_json``."""
    if isinstance(data, str):
        return parse(data)
    if not isinstance(data, dict) or "kind" not in data:
        raise SchemaError(f"expected an object with a kind, got {data!r}")
    cls = BY_KIND.get(str(data["kind"]).lower())
    if cls is None:
        raise SchemaError(f"unknown kind {data['kind']!r}")
    spec = FIELDS[cls]
    known = {f.name for f in fields(cls)}
    kwargs = {}
    for name, codec in spec.items():
        if name in data:
            kwargs[name] = _dec(codec, data[name])
        elif name not in known:
            raise SchemaError(f"{cls.__name__} needs field {name!r}")
    try:
        return cls(**kwargs)
    except TypeError as exc:
        raise SchemaError(str(exc)) from exc


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline free."""
    data = to_json(obj) if not isinstance(obj, (dict, list)) else obj
    return json.dumps(data, sort_keys=True, indent=2)


def loads(text: str):
    return from_json(json.loads(text))
