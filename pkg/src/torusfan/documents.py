"""JSON documents for multi-fans.

A document looks like::

    {"dim": 2,
     "rays": [{"id": "1", "vector": [1, 0]}, ...],
     "facets": [{"vertices": ["1", "2"], "weight": 1}, ...],
     "metadata": {...}}

``weight`` defaults to 1 and ``metadata`` is optional. Parsing collects every
problem it can find, each prefixed with the JSON path it refers to.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Hashable, Mapping

from .multifan import MultiFan
from .simplicial import SimplicialComplex


class DocumentError(ValueError):
    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


def id_key(x: Hashable):
    """Sort key putting numeric ids in numeric order before other ids."""
    s = str(x)
    return (0, int(s), s) if re.fullmatch(r"-?\d+", s) else (1, 0, s)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def multifan_from_dict(doc: Any) -> MultiFan:
    errors: list[str] = []
    if not isinstance(doc, dict):
        raise DocumentError(["$: expected a JSON object"])
    dim = doc.get("dim")
    if not _is_int(dim) or dim < 1:
        errors.append("dim: expected a positive integer")
        dim = None
    rays: dict[str, tuple[int, ...]] = {}
    raw_rays = doc.get("rays")
    if not isinstance(raw_rays, list) or not raw_rays:
        errors.append("rays: expected a nonempty list")
        raw_rays = []
    for n, r in enumerate(raw_rays):
        path = f"rays[{n}]"
        if not isinstance(r, dict):
            errors.append(f"{path}: expected an object")
            continue
        rid = r.get("id")
        if not isinstance(rid, (str, int)) or isinstance(rid, bool):
            errors.append(f"{path}.id: expected a string")
            continue
        rid = str(rid)
        if rid in rays:
            errors.append(f"{path}.id: duplicate id {rid!r}")
            continue
        vec = r.get("vector")
        if not isinstance(vec, list) or not all(_is_int(x) for x in vec):
            errors.append(f"{path}.vector: expected a list of integers")
            continue
        if dim is not None and len(vec) != dim:
            errors.append(f"{path}.vector: length {len(vec)} does not match dim {dim}")
            continue
        rays[rid] = tuple(vec)
    facets = []
    weights = {}
    raw_facets = doc.get("facets")
    if not isinstance(raw_facets, list) or not raw_facets:
        errors.append("facets: expected a nonempty list")
        raw_facets = []
    for n, fc in enumerate(raw_facets):
        path = f"facets[{n}]"
        if not isinstance(fc, dict):
            errors.append(f"{path}: expected an object")
            continue
        verts = fc.get("vertices")
        if not isinstance(verts, list) or not verts:
            errors.append(f"{path}.vertices: expected a nonempty list of ids")
            continue
        ids = [str(v) for v in verts]
        missing = [v for v in ids if v not in rays]
        if missing:
            errors.append(f"{path}.vertices: unknown ids {missing}")
            continue
        if len(set(ids)) != len(ids):
            errors.append(f"{path}.vertices: repeated id")
            continue
        s = frozenset(ids)
        if s in weights:
            errors.append(f"{path}: duplicate facet")
            continue
        w = fc.get("weight", 1)
        if not _is_int(w) or w < 1:
            errors.append(f"{path}.weight: expected a positive integer")
            continue
        facets.append(s)
        weights[s] = w
    meta = doc.get("metadata", {})
    if not isinstance(meta, dict):
        errors.append("metadata: expected an object")
    if errors:
        raise DocumentError(errors)
    try:
        cx = SimplicialComplex(frozenset(facets))
    except ValueError as exc:
        raise DocumentError([f"facets: {exc}"]) from None
    unused = sorted(set(rays) - cx.vertices, key=id_key)
    if unused:
        raise DocumentError([f"rays: ids {unused} appear in no facet"])
    return MultiFan(dim, cx, rays, weights)


def parse_multifan(text: str) -> MultiFan:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError([f"$: malformed JSON ({exc.msg} at line {exc.lineno})"]) from None
    return multifan_from_dict(doc)


def multifan_to_dict(f: MultiFan, metadata: Mapping | None = None) -> dict:
    """Normalised document: ids as strings, sorted, explicit weights."""
    doc = {
        "dim": f.dim,
        "rays": [{"id": str(k), "vector": list(f.rays[k])} for k in sorted(f.rays, key=id_key)],
        "facets": [
            {"vertices": sorted((str(v) for v in s), key=id_key), "weight": f.weights.get(s, 1)}
            for s in sorted(f.complex.facets, key=lambda s: sorted(id_key(v) for v in s))
        ],
    }
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def serialize_multifan(f: MultiFan, metadata: Mapping | None = None) -> str:
    return json.dumps(multifan_to_dict(f, metadata), indent=2)


def with_string_ids(f: MultiFan) -> MultiFan:
    """Same multi-fan with ids converted to strings (the form documents use)."""
    m = {v: str(v) for v in f.rays}
    return MultiFan(f.dim, f.complex.relabel(m), {m[k]: r for k, r in f.rays.items()},
                    {frozenset(m[v] for v in s): w for s, w in f.weights.items()})


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """``"1,-2,3/4"`` -> rational vector."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"cannot parse vector {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse vector {text!r}") from None


def parse_int_vector(text: str) -> tuple[int, ...]:
    v = parse_vector(text)
    if any(x.denominator != 1 for x in v):
        raise ValueError(f"expected integers in {text!r}")
    return tuple(int(x) for x in v)


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
