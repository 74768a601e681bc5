"""JSON documents for subgroups, generators and reports.

Rationals are written as ``[numerator, denominator]`` pairs; plain integers
and ``"p/q"`` strings are accepted on input.  Floats are refused: only
rational subgroup data is representable.  Integer matrices are serialized
column-major (a list of basis vectors).
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from . import exact_linalg as el
from .fibered import FiberedGenerator, GeneratorSet
from .subgroup import ClosedSubgroup, SubgroupSpec


class SchemaError(ValueError):
    pass


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise SchemaError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(isinstance(t, int) and not isinstance(t, bool) for t in x):
        if x[1] == 0:
            raise SchemaError("zero denominator")
        return Fraction(x[0], x[1])
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"not a rational: {x!r}") from exc
    raise SchemaError(f"not a rational (use [num, den]): {x!r}")


def rational_to_json(x: Fraction) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def parse_vector(v: Any, d: int | None = None) -> tuple[Fraction, ...]:
    if not isinstance(v, (list, tuple)):
        raise SchemaError(f"expected a vector, got {v!r}")
    out = tuple(parse_rational(x) for x in v)
    if d is not None and len(out) != d:
        raise SchemaError(f"vector {v!r} does not have length {d}")
    return out


def _require(doc: Any, key: str):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError(f"missing field {key!r}")
    return doc[key]


def subgroup_from_json(doc: Any) -> SubgroupSpec:
    d = _require(doc, "d")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise SchemaError(f"bad dimension {d!r}")
    discrete = doc.get("discrete", [])
    continuous = doc.get("continuous", [])
    if not isinstance(discrete, list) or not isinstance(continuous, list):
        raise SchemaError("'discrete' and 'continuous' must be lists of vectors")
    return SubgroupSpec(d, tuple(parse_vector(v, d) for v in discrete),
                        tuple(parse_vector(v, d) for v in continuous))


def spec_to_json(spec: SubgroupSpec) -> dict:
    return {
        "d": spec.d,
        "discrete": [[rational_to_json(x) for x in v] for v in spec.discrete],
        "continuous": [[rational_to_json(x) for x in v] for v in spec.continuous],
    }


def int_matrix_to_json(A: el.IntMatrix) -> list[list[int]]:
    return [list(c) for c in el.columns(A)] if A and A[0] else []


def subgroup_to_json(M: ClosedSubgroup) -> dict:
    doc = spec_to_json(M.spec) if M.spec is not None else spec_to_json(M.to_spec())
    doc.update({
        "q": M.q,
        "factors": list(M.a),
        "V": int_matrix_to_json(M.V),
        "W": int_matrix_to_json(M.W),
    })
    return doc


def _int_list(v: Any, what: str) -> list[int]:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise SchemaError(f"{what} must be a list of integers")
    return v


def generator_from_json(doc: Any) -> FiberedGenerator:
    d = _require(doc, "d")
    grid = _int_list(_require(doc, "grid"), "grid")
    tiles_doc = _require(doc, "tiles")
    if not isinstance(tiles_doc, list):
        raise SchemaError("'tiles' must be a list")
    ncells = int(np.prod(grid)) if grid else 0
    tiles = {}
    for t in tiles_doc:
        k = tuple(_int_list(_require(t, "k"), "tile index"))
        re = np.array(_require(t, "re"), dtype=float)
        im = np.array(t.get("im", [0.0] * ncells), dtype=float)
        if re.shape != (ncells,) or im.shape != (ncells,):
            raise SchemaError(f"tile {k} must carry {ncells} values")
        if k in tiles:
            raise SchemaError(f"tile {k} listed twice")
        tiles[k] = (re + 1j * im).reshape(grid)
    frame = doc.get("frame")
    if frame is not None:
        frame = el.from_columns([_int_list(c, "frame column") for c in frame])
    try:
        return FiberedGenerator(d, tuple(grid), tiles, frame)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def generator_to_json(phi: FiberedGenerator) -> dict:
    doc = {"d": phi.d, "grid": list(phi.grid), "tiles": []}
    for k, v in phi.tiles.items():
        flat = v.reshape(-1)
        doc["tiles"].append({"k": list(k), "re": flat.real.tolist(), "im": flat.imag.tolist()})
    if phi.frame != el.identity(phi.d):
        doc["frame"] = int_matrix_to_json(phi.frame)
    return doc


def generator_set_from_json(doc: Any) -> GeneratorSet:
    """Accepts one generator, a list of them, or ``{"generators": [...]}``."""
    if isinstance(doc, dict) and "generators" in doc:
        doc = doc["generators"]
    if isinstance(doc, dict):
        doc = [doc]
    if not isinstance(doc, list) or not doc:
        raise SchemaError("expected one or more generators")
    try:
        return GeneratorSet(tuple(generator_from_json(g) for g in doc))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def generator_set_to_json(Phi: GeneratorSet) -> dict:
    return {"generators": [generator_to_json(g) for g in Phi]}


def load_json(path: str | Path) -> Any:
    text = Path(path).read_text(encoding="utf-8") if str(path) != "-" else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc


def _flat(x: Any) -> bool:
    # scalars and arrays of scalars (one level deep) print on one line
    if isinstance(x, list):
        return all(not isinstance(t, (list, dict)) or
                   (isinstance(t, list) and all(not isinstance(u, (list, dict)) for u in t)) for t in x)
    return not isinstance(x, dict)


def _render(x: Any, indent: int) -> str:
    if _flat(x):
        return json.dumps(x, separators=(", ", ": "))
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(x, list):
        return "[\n" + ",\n".join(inner + _render(t, indent + 2) for t in x) + "\n" + pad + "]"
    if not x:
        return "{}"
    items = (inner + json.dumps(str(k)) + ": " + _render(v, indent + 2) for k, v in x.items())
    return "{\n" + ",\n".join(items) + "\n" + pad + "}"


def dumps(doc: Any) -> str:
    """Indented JSON with short numeric arrays kept on one line."""
    return _render(doc, 0) + "\n"
