"""JSON encodings of field data, tropical data, points, and fans.

Rationals travel as strings "a" or "a/b" in base ten; the bottom tropical
element as "-inf".  Rational-function field elements are objects with
degree-to-coefficient maps for numerator and denominator.  Matrices and
vectors are nested arrays.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import TropstabError
from .fields import FieldSpec, FpTElement, QpElement
from .matrices import FieldMatrix
from .tropical import NEG_INF
from .weights import Fan, canonical_weight


class InputError(TropstabError):
    """Malformed external payload."""


def fraction_to_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fraction_from_json(v) -> Fraction:
    if isinstance(v, bool):
        raise InputError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {v!r}") from exc
    raise InputError(f"not a rational: {v!r}")


def trop_to_json(t):
    return "-inf" if t is NEG_INF else fraction_to_str(t)


def trop_from_json(v):
    if v == "-inf":
        return NEG_INF
    return fraction_from_json(v)


def spec_to_json(spec: FieldSpec) -> dict:
    return {"kind": spec.kind, "p": spec.p}


def spec_from_json(data) -> FieldSpec:
    try:
        return FieldSpec(str(data["kind"]), int(data["p"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid field description: {data!r}") from exc


def element_to_json(e):
    if isinstance(e, QpElement):
        return fraction_to_str(e.value)
    if isinstance(e, FpTElement):
        return {
            "num": {str(d): c for d, c in enumerate(e.num) if c},
            "den": {str(d): c for d, c in enumerate(e.den) if c},
        }
    raise InputError(f"not a field element: {e!r}")


def element_from_json(spec: FieldSpec, v):
    if spec.kind == "Qp":
        return spec.element(fraction_from_json(v))
    if isinstance(v, (int, str)):
        return spec.element(fraction_from_json(v))
    if isinstance(v, dict):
        try:
            num = {int(d): int(c) for d, c in v.get("num", {}).items()}
            den = {int(d): int(c) for d, c in v.get("den", {"0": 1}).items()}
        except (TypeError, ValueError) as exc:
            raise InputError(f"invalid rational-function element: {v!r}") from exc
        return spec.polynomial(num) / spec.polynomial(den)
    raise InputError(f"invalid element encoding: {v!r}")


def matrix_to_json(m: FieldMatrix):
    return [[element_to_json(e) for e in row] for row in m.rows]


def matrix_from_json(spec: FieldSpec, data) -> FieldMatrix:
    if not isinstance(data, list) or not data:
        raise InputError("matrix payload must be a nonempty array of rows")
    try:
        rows = [[element_from_json(spec, e) for e in row] for row in data]
    except TypeError as exc:
        raise InputError("matrix payload must be an array of arrays") from exc
    return FieldMatrix(spec, rows)


def point_to_json(coords):
    return [trop_to_json(c) for c in coords]


def point_from_json(data):
    if not isinstance(data, list) or not data:
        raise InputError("point payload must be a nonempty array")
    return [trop_from_json(v) for v in data]


def fan_to_json(fan: Fan) -> dict:
    return {
        "group": fan.group,
        "rank": fan.rank,
        "vertices": [list(canonical_weight(fan.group, fc.vertex))
                     for fc in fan.maximal_cones],
        "cones": [
            {
                "vertex": list(canonical_weight(fan.group, fc.vertex)),
                "inequalities": [list(f) for f in fc.cone.functionals],
            }
            for fc in fan.maximal_cones
        ],
    }
