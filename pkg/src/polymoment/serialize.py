"""Stable JSON-ready views of library results.

Polynomials become lists of ascending coefficient strings, linear maps
become the coefficient list of ``a*z + b``, rationals become ``"p/q"``
strings and number-field elements become
``{"coeffs": [...], "modulus": [...]}``.  Dictionary keys are emitted in
sorted order by :func:`dumps`.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from .moments import Endpoints, MomentCertificate, SolutionClass
from .numeric import FieldElement, NodeAngle
from .poly import LinearMap, Poly

__all__ = ["to_jsonable", "dumps"]


def _scalar(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, FieldElement):
        if x.is_rational():
            return str(x.rep.coeff(0))
        return {
            "coeffs": [str(c) for c in x.coeffs],
            "modulus": [str(c) for c in x.field.min_poly.coeffs],
        }
    raise TypeError(f"not a scalar: {x!r}")


def _key(k) -> str:
    if isinstance(k, tuple):
        return "+".join(str(x) for x in k)
    return str(k)


def _certificate(c: MomentCertificate) -> dict:
    if c.kind == "structural":
        out = {
            "kind": "structural",
            "terms": [{"V": to_jsonable(t.V), "W": to_jsonable(t.W)} for t in c.terms],
        }
        if c.P_tilde is not None:
            out["P_tilde"] = to_jsonable(c.P_tilde)
        return out
    return {
        "kind": "checked",
        "K": c.K,
        "moments": [_scalar(m) for m in c.moments],
        "all_zero": c.all_zero,
    }


def to_jsonable(obj):
    """Convert library values to plain JSON types."""
    if isinstance(obj, Poly):
        return [_scalar(c) for c in obj.coeffs]
    if isinstance(obj, LinearMap):
        return [str(obj.b), str(obj.a)]
    if isinstance(obj, (NodeAngle, Endpoints)):
        return [str(obj.a), str(obj.b)] if isinstance(obj, Endpoints) else str(obj)
    if isinstance(obj, MomentCertificate):
        return _certificate(obj)
    if isinstance(obj, SolutionClass):
        return {
            "case": obj.case if obj.case is not None else obj.status,
            "status": obj.status,
            "witnesses": {k: to_jsonable(v) for k, v in obj.witnesses.items()},
            "endpoints": to_jsonable(obj.endpoints),
            "certificate": to_jsonable(obj.certificate),
        }
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    return _scalar(obj)


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2)
