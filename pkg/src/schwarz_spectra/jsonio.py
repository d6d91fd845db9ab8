"""JSON encoding and decoding for every public value type.

Scalars travel as strings: ``"num/den"`` rationals in the exact backend and
``repr(float)`` in the float backend. Encoding is deterministic (sorted keys,
fixed separators) so repeated runs produce byte-identical output.
"""
from __future__ import annotations

import json
from typing import Any

from .classify import Classification
from .errors import ParseError
from .hurwitz import HurwitzTable
from .inverse import InverseReport
from .polynomial import Poly, Root, Spectrum, format_scalar, parse_literal
from .schwarz import SchwarzMatrix, SnView
from .wall import WallCoefficients


def dumps(obj: Any) -> str:
    return json.dumps(to_json(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _scalars(xs, exact: bool) -> list[str]:
    return [format_scalar(x, exact) for x in xs]


def to_json(obj: Any) -> Any:
    if isinstance(obj, Poly):
        return {"coeffs": _scalars(obj.trimmed().coeffs, obj.exact)}
    if isinstance(obj, HurwitzTable):
        return {"deltas": _scalars(obj.deltas, obj.exact)}
    if isinstance(obj, (WallCoefficients, SchwarzMatrix)):
        return {"b": _scalars(obj.b, obj.exact)}
    if isinstance(obj, SnView):
        return {"a": format_scalar(obj.a, obj.exact), "c": _scalars(obj.c, obj.exact), "k": obj.k}
    if isinstance(obj, Classification):
        return obj.to_dict()
    if isinstance(obj, Spectrum):
        return {"roots": [{"re": format_scalar(r.re, obj.exact), "im": format_scalar(r.im, obj.exact)}
                          for r in obj.sorted()]}
    if isinstance(obj, InverseReport):
        return {
            "matrix": to_json(obj.matrix),
            "verdict": to_json(obj.verdict),
            "checked": [{"name": name, "passed": bool(ok)} for name, ok in obj.checked],
            "view": to_json(obj.view) if obj.view is not None else None,
        }
    if isinstance(obj, dict):
        return {k: to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    return obj


# ---------------------------------------------------------------- decoding

def _literal(x, exact: bool):
    if isinstance(x, bool) or x is None:
        raise ParseError(f"not a number: {x!r}")
    if isinstance(x, int):
        return parse_literal(str(x), exact)
    if isinstance(x, float):
        if exact:
            raise ParseError(f"bare float {x!r} is not allowed in the exact backend")
        return parse_literal(repr(x), exact)
    if isinstance(x, str):
        return parse_literal(x, exact)
    raise ParseError(f"not a scalar literal: {x!r}")


def _list(d: dict, key: str) -> list:
    v = d.get(key)
    if not isinstance(v, list) or not v:
        raise ParseError(f"{key!r} must be a nonempty list")
    return v


def _root(x, exact: bool) -> Root:
    if isinstance(x, dict):
        if "re" not in x:
            raise ParseError(f"root object needs 're': {x!r}")
        return Root(_literal(x["re"], exact), _literal(x.get("im", "0"), exact))
    return Root(_literal(x, exact), _literal("0", exact))


def from_json(data: Any, exact: bool = True):
    """Decode a Poly, Spectrum, SchwarzMatrix or SnView, chosen by its keys."""
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object")
    try:
        if "coeffs" in data:
            coeffs = [_literal(x, exact) for x in _list(data, "coeffs")]
            p = Poly(tuple(coeffs), exact)
            if p.is_zero():
                raise ParseError("zero polynomial")
            return p
        if "roots" in data:
            return Spectrum(tuple(_root(x, exact) for x in _list(data, "roots")), exact)
        if "b" in data:
            return SchwarzMatrix(tuple(_literal(x, exact) for x in _list(data, "b")), exact)
        if {"a", "c", "k"} <= data.keys():
            k = data["k"]
            if not isinstance(k, int) or isinstance(k, bool):
                raise ParseError("'k' must be an integer")
            c = data["c"]
            if not isinstance(c, list):
                raise ParseError("'c' must be a list")
            return SnView(_literal(data["a"], exact), tuple(_literal(x, exact) for x in c), k, exact)
    except ParseError:
        raise
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"unrecognised object with keys {sorted(data)}")


def loads(text: str, exact: bool = True):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return from_json(data, exact)
