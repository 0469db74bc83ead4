"""JSON documents for graphs, fields, polynomials, spectra, symmetric functions and tilings.

Rationals are written as ``"p/q"`` strings (``str(Fraction)``) and parsed
strictly: decimal points, exponents and floats are rejected.
"""

from __future__ import annotations

import json
import re
from collections.abc import Mapping
from fractions import Fraction
from typing import Any

from lapforge.bounds import CutReport
from lapforge.errors import ParseError, PreconditionError
from lapforge.graph import VertexId, WeightedGraph
from lapforge.poly import RatPoly
from lapforge.spectra import Spectrum
from lapforge.symfunc import PSym
from lapforge.tilings import Rect, Tiling

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def dumps(obj: Any) -> str:
    """Compact, key-order-preserving JSON text."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def fraction_str(x: Fraction | int) -> str:
    return str(Fraction(x))


def parse_fraction(text: Any, what: str = "value") -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.match(text):
        raise ParseError(f"{what} must be a 'p/q' string, got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"{what} has zero denominator: {text!r}") from None


def _load(text: str | bytes | Mapping) -> Any:
    if isinstance(text, Mapping):
        return text
    try:
        return json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"malformed JSON: {exc}") from None


def _vertex_id(raw: Any, what: str) -> VertexId:
    if (
        not isinstance(raw, list)
        or not raw
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw)
    ):
        raise ParseError(f"{what} must be a nonempty list of integers, got {raw!r}")
    return tuple(sorted(raw))


def _expect(doc: Any, keys: set[str], what: str) -> None:
    if not isinstance(doc, dict):
        raise ParseError(f"{what} must be an object")
    missing = keys - set(doc)
    extra = set(doc) - keys
    if missing:
        raise ParseError(f"{what} is missing {sorted(missing)}")
    if extra:
        raise ParseError(f"{what} has unexpected keys {sorted(extra)}")


# -- graphs ---------------------------------------------------------------------------


def graph_to_json(G: WeightedGraph) -> dict:
    return {
        "vertices": [{"id": list(v), "weight": fraction_str(w)} for v, w in G.vertex_weights().items()],
        "edges": [{"u": list(e.u), "v": list(e.v), "weight": fraction_str(e.weight)} for e in G.edges],
    }


def dump_graph(G: WeightedGraph) -> str:
    return dumps(graph_to_json(G))


def parse_graph(document: str | bytes | Mapping) -> WeightedGraph:
    """Parse graph-JSON; any schema or content violation is a ``ParseError``."""
    doc = _load(document)
    _expect(doc, {"vertices", "edges"}, "graph document")
    if not isinstance(doc["vertices"], list) or not isinstance(doc["edges"], list):
        raise ParseError("'vertices' and 'edges' must be lists")
    vertices = []
    for i, item in enumerate(doc["vertices"]):
        _expect(item, {"id", "weight"}, f"vertex {i}")
        vertices.append((_vertex_id(item["id"], f"vertex {i} id"), parse_fraction(item["weight"], f"vertex {i} weight")))
    edges = []
    for i, item in enumerate(doc["edges"]):
        _expect(item, {"u", "v", "weight"}, f"edge {i}")
        edges.append(
            (
                _vertex_id(item["u"], f"edge {i} u"),
                _vertex_id(item["v"], f"edge {i} v"),
                parse_fraction(item["weight"], f"edge {i} weight"),
            )
        )
    try:
        return WeightedGraph(vertices, edges)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


# -- fields ---------------------------------------------------------------------------


def vertex_key(v: VertexId) -> str:
    return ",".join(str(x) for x in v)


def scalar_field_to_json(f: Mapping[VertexId, Fraction]) -> dict:
    return {"field": {vertex_key(v): fraction_str(f[v]) for v in sorted(f)}}


def vector_field_to_json(F: Mapping[int, Fraction]) -> dict:
    return {"field": {str(k): fraction_str(F[k]) for k in sorted(F)}}


def parse_scalar_field(document) -> dict[VertexId, Fraction]:
    doc = _load(document)
    _expect(doc, {"field"}, "field document")
    if not isinstance(doc["field"], dict):
        raise ParseError("'field' must be an object")
    out = {}
    for key, value in doc["field"].items():
        try:
            vid = tuple(sorted(int(x) for x in key.split(",")))
        except ValueError:
            raise ParseError(f"bad vertex key {key!r}") from None
        out[vid] = parse_fraction(value, f"field value at {key}")
    return out


def parse_vector_field(document) -> dict[int, Fraction]:
    doc = _load(document)
    _expect(doc, {"field"}, "field document")
    if not isinstance(doc["field"], dict):
        raise ParseError("'field' must be an object")
    out = {}
    for key, value in doc["field"].items():
        if not key.isdigit():
            raise ParseError(f"bad edge key {key!r}")
        out[int(key)] = parse_fraction(value, f"field value at edge {key}")
    return out


# -- polynomials, spectra, symmetric functions, cuts -------------------------------------------


def poly_to_json(p: RatPoly) -> dict:
    return {"coeffs": [fraction_str(c) for c in p.coeffs]}


def parse_poly(document) -> RatPoly:
    doc = _load(document)
    _expect(doc, {"coeffs"}, "polynomial document")
    if not isinstance(doc["coeffs"], list):
        raise ParseError("'coeffs' must be a list")
    return RatPoly(parse_fraction(c, "coefficient") for c in doc["coeffs"])


def spectrum_to_json(s: Spectrum) -> dict:
    return {"eigenvalues": list(s.values), "tol": s.tol}


def psym_to_json(x: PSym) -> dict:
    return {"terms": [{"partition": list(a), "coeff": fraction_str(c)} for a, c in x.sorted_terms()]}


def parse_psym(document) -> PSym:
    doc = _load(document)
    _expect(doc, {"terms"}, "symmetric function document")
    terms = {}
    for i, item in enumerate(doc["terms"]):
        _expect(item, {"partition", "coeff"}, f"term {i}")
        part = item["partition"]
        if not isinstance(part, list) or not all(isinstance(x, int) and x > 0 for x in part):
            raise ParseError(f"term {i} partition must be a list of positive integers")
        terms[tuple(part)] = parse_fraction(item["coeff"], f"term {i} coeff")
    return PSym(terms)


def cut_to_json(c: CutReport) -> dict:
    out = {
        "S": [list(v) for v in c.S],
        "boundary": fraction_str(c.boundary),
        "ratio": fraction_str(c.ratio),
    }
    if c.constant is not None:
        out["constant"] = fraction_str(c.constant)
    return out


# -- tilings ---------------------------------------------------------------------------


def rect_to_json(r: Rect) -> dict:
    return {"x": fraction_str(r.x), "y": fraction_str(r.y), "w": fraction_str(r.w), "h": fraction_str(r.h)}


def tiling_to_json(T: Tiling) -> dict:
    return {"outer": rect_to_json(T.outer), "tiles": [rect_to_json(r) for r in T.tiles]}


def _parse_rect(doc, what: str) -> Rect:
    _expect(doc, {"x", "y", "w", "h"}, what)
    vals = {k: parse_fraction(doc[k], f"{what}.{k}") for k in ("x", "y", "w", "h")}
    try:
        return Rect(**vals)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def parse_tiling(document) -> Tiling:
    doc = _load(document)
    _expect(doc, {"outer", "tiles"}, "tiling document")
    if not isinstance(doc["tiles"], list):
        raise ParseError("'tiles' must be a list")
    outer = _parse_rect(doc["outer"], "outer")
    tiles = tuple(_parse_rect(t, f"tile {i}") for i, t in enumerate(doc["tiles"]))
    try:
        return Tiling(outer, tiles)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None
