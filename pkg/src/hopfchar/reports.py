"""File formats and canonical report emission.

All artifacts are UTF-8 JSON with sorted keys and fixed layout, so a rerun
with the same configuration and seed produces byte-identical output.  Exact
rationals travel as strings ("3/4", "-5"), floats as JSON numbers, dual
numbers as two-element arrays.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from importlib import resources
from typing import Mapping, Sequence

from .characters import (DUAL, FLOAT, RATIONAL, TARGETS, TruncatedCharacter,
                         TruncatedInfChar)
from .core import Coeff
from .evolution import TimePoly, TimePolynomialCurve
from .fields import ColouredPolySystem, Poly, PolyMap, PolyVectorField, WordSystem
from .hopf import HopfAlgebra
from .instances import instance_by_name

# ---------------------------------------------------------------- scalars


def encode_rational(x: Coeff) -> str:
    return str(Fraction(x))


def decode_rational(v) -> Fraction:
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, int):
        return Fraction(v)
    raise ValueError(f"expected exact rational encoding, got {v!r}")


def encode_scalar(target, x):
    if target is RATIONAL:
        return encode_rational(x)
    if target is FLOAT:
        return float(x)
    if target is DUAL:
        a, b = x
        return [encode_rational(a) if isinstance(a, (int, Fraction)) else float(a),
                encode_rational(b) if isinstance(b, (int, Fraction)) else float(b)]
    raise ValueError(f"unknown target {target!r}")


def decode_scalar(target, v):
    if target is RATIONAL:
        return decode_rational(v)
    if target is FLOAT:
        return float(v)
    if target is DUAL:
        a, b = v

        def part(u):
            return decode_rational(u) if isinstance(u, (str, int)) else float(u)

        return (part(a), part(b))
    raise ValueError(f"unknown target {target!r}")


# ---------------------------------------------------------------- characters


def character_to_json(phi) -> dict:
    kind = "inf" if isinstance(phi, TruncatedInfChar) else "char"
    values = []
    for g in sorted(phi.values, key=phi.hopf.monomial_text):
        values.append({"generator": phi.hopf.monomial_text(g),
                       "value": encode_scalar(phi.target, phi.values[g])})
    return {"hopf": phi.hopf.name, "N": phi.N, "B": phi.target.name,
            "kind": kind, "values": values}


def character_from_json(doc: Mapping, hopf: HopfAlgebra | None = None):
    H = hopf if hopf is not None else instance_by_name(doc["hopf"])
    if H.name != doc["hopf"]:
        raise ValueError(f"character file is for {doc['hopf']!r}, not {H.name!r}")
    target = TARGETS.get(doc.get("B", "rational"))
    if target is None:
        raise ValueError(f"unknown target algebra {doc.get('B')!r}")
    values = {}
    for row in doc["values"]:
        g = H.generator_from_text(row["generator"])
        values[g] = decode_scalar(target, row["value"])
    cls = TruncatedInfChar if doc.get("kind") == "inf" else TruncatedCharacter
    return cls(H, int(doc["N"]), target, values)


def curve_to_json(curve: TimePolynomialCurve) -> dict:
    values = []
    for g in sorted(curve.polys, key=curve.hopf.monomial_text):
        coeffs = [encode_rational(c) for c in curve.polys[g].coeffs]
        values.append({"generator": curve.hopf.monomial_text(g), "coeffs": coeffs})
    return {"hopf": curve.hopf.name, "N": curve.N, "kind": curve.kind + "-curve",
            "values": values}


def curve_from_json(doc: Mapping, hopf: HopfAlgebra | None = None) -> TimePolynomialCurve:
    H = hopf if hopf is not None else instance_by_name(doc["hopf"])
    if H.name != doc["hopf"]:
        raise ValueError(f"curve file is for {doc['hopf']!r}, not {H.name!r}")
    kind = doc.get("kind", "inf-curve")
    if not kind.endswith("-curve"):
        raise ValueError(f"not a curve file: kind={kind!r}")
    polys = {}
    for row in doc["values"]:
        g = H.generator_from_text(row["generator"])
        polys[g] = TimePoly(tuple(decode_rational(c) for c in row["coeffs"]))
    return TimePolynomialCurve(H, int(doc["N"]), polys, kind=kind[:-len("-curve")])


# ---------------------------------------------------------------- vector fields


def _components_to_json(comps: Sequence[Poly]) -> list:
    out = []
    for p in comps:
        rows = [{"monomial": list(e), "coeff": encode_rational(c)}
                for e, c in sorted(p.terms.items())]
        out.append(rows)
    return out


def _components_from_json(rows: Sequence, nvars: int) -> list:
    comps = []
    for comp in rows:
        terms = {}
        for cell in comp:
            e = tuple(int(k) for k in cell["monomial"])
            if len(e) != nvars:
                raise ValueError(f"monomial {e} should have {nvars} exponents")
            terms[e] = terms.get(e, 0) + decode_rational(cell["coeff"])
        comps.append(Poly(nvars, terms))
    return comps


def field_to_json(f: PolyVectorField) -> dict:
    return {"dim": f.dim, "components": _components_to_json(f.comps)}


def field_from_json(doc: Mapping) -> PolyVectorField:
    dim = int(doc["dim"])
    comps = _components_from_json(doc["components"], dim)
    if len(comps) != dim:
        raise ValueError("component count must equal dim")
    return PolyVectorField(comps)


def coloured_system_from_json(doc: Mapping) -> ColouredPolySystem:
    dim = int(doc["dim"])
    f = PolyMap(2 * dim, _components_from_json(doc["f"], 2 * dim))
    g = PolyMap(2 * dim, _components_from_json(doc["g"], 2 * dim))
    if f.dim != dim or g.dim != dim:
        raise ValueError("each block must have dim components")
    return ColouredPolySystem(f, g)


def word_system_from_json(doc: Mapping) -> WordSystem:
    dim = int(doc["dim"])
    fields = {}
    for letter, rows in doc["letters"].items():
        if len(letter) != 1:
            raise ValueError(f"letters must be single characters, got {letter!r}")
        comps = _components_from_json(rows, dim)
        if len(comps) != dim:
            raise ValueError("each letter field must have dim components")
        fields[letter] = PolyVectorField(comps)
    return WordSystem(fields)


# ---------------------------------------------------------------- reports


def render_report(doc: Mapping) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def render_csv(header: Sequence[str], rows: Sequence[Sequence]) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue().encode("utf-8")


def series_csv(orders: Sequence[int], increments: Sequence[float],
               partials: Sequence[Sequence[float]]) -> bytes:
    rows = []
    for n, inc, part in zip(orders, increments, partials):
        rows.append([n, repr(float(inc)), ";".join(repr(float(v)) for v in part)])
    return render_csv(["order", "increment", "partial_value"], rows)


def load_schema(name: str) -> dict:
    path = resources.files("hopfchar").joinpath("schemas", f"{name}.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))
