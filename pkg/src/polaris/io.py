"""JSON encodings.

Indices i, j and labels are 1-based on the wire and 0-based in memory.
Output is canonical: sorted keys, two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import ComplexDesc
from .hypersimplex import Cell
from .lattice import DownEdge
from .polarization import IsotoneFamily, SyzygyGraph, make_family
from .tableaux import HookTableau


class MalformedInput(ValueError):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def load_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc


def _int_list(raw, what: str) -> tuple[int, ...]:
    if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        raise MalformedInput(f"{what} must be a list of integers, got {raw!r}")
    return tuple(raw)


def exponent_from_json(raw) -> tuple[int, ...]:
    a = _int_list(raw, "exponent")
    if any(x < 0 for x in a):
        raise MalformedInput(f"exponent {raw} has a negative entry")
    return a


# -- edges and graphs ------------------------------------------------------


def edge_to_json(e: DownEdge) -> dict:
    return {"apex": list(e.apex), "i": e.i + 1, "j": e.j + 1}


def edge_from_json(raw) -> DownEdge:
    if not isinstance(raw, dict) or set(raw) != {"apex", "i", "j"}:
        raise MalformedInput(f"an edge needs exactly the keys apex, i, j: {raw!r}")
    apex = exponent_from_json(raw["apex"])
    i, j = raw["i"], raw["j"]
    if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= len(apex)):
        raise MalformedInput(f"edge indices must satisfy 1 <= i < j <= n: {raw!r}")
    if apex[i - 1] < 1 or apex[j - 1] < 1:
        raise MalformedInput(f"edge indices must lie in the support of the apex: {raw!r}")
    return DownEdge(apex, i - 1, j - 1)


def graph_to_json(g: SyzygyGraph) -> list:
    return [edge_to_json(e) for e in sorted(g.edges)]


def graph_from_json(raw) -> SyzygyGraph:
    """A list of edges, or {"n", "d", "edges"} (needed for an empty graph)."""
    n = d = None
    if isinstance(raw, dict):
        n, d, raw = raw.get("n"), raw.get("d"), raw.get("edges")
    if not isinstance(raw, list):
        raise MalformedInput("a graph is a list of edge objects")
    edges = [edge_from_json(e) for e in raw]
    if edges:
        n0, d0 = len(edges[0].apex), sum(edges[0].apex) - 1
        if (n is not None and n != n0) or (d is not None and d != d0):
            raise MalformedInput("declared n, d disagree with the edges")
        n, d = n0, d0
    if n is None or d is None:
        raise MalformedInput("cannot infer n and d from an empty edge list")
    try:
        return SyzygyGraph(n, d, frozenset(edges))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc


# -- families --------------------------------------------------------------


def family_to_json(chi: IsotoneFamily) -> dict:
    out = {
        "n": chi.n,
        "d": chi.d,
        "X": [{"point": list(a), "sets": [sorted(s) for s in chi.tables[a]]} for a in chi.points],
    }
    if chi.u is not None:
        out["u"] = list(chi.u)
    return out


def family_from_json(raw) -> IsotoneFamily:
    from .polarization import FamilyError

    if not isinstance(raw, dict) or not {"n", "d", "X"} <= set(raw):
        raise MalformedInput("a family needs the keys n, d, X")
    n, d = raw["n"], raw["d"]
    if not (isinstance(n, int) and isinstance(d, int) and n >= 1 and d >= 1):
        raise MalformedInput("n and d must be positive integers")
    u = exponent_from_json(raw["u"]) if raw.get("u") is not None else None
    if not isinstance(raw["X"], list):
        raise MalformedInput("X must be a list")
    tables = {}
    for row in raw["X"]:
        if not isinstance(row, dict) or set(row) != {"point", "sets"}:
            raise MalformedInput(f"each X entry needs exactly point and sets: {row!r}")
        a = exponent_from_json(row["point"])
        if not isinstance(row["sets"], list):
            raise MalformedInput(f"sets of {list(a)} must be a list")
        if a in tables:
            raise MalformedInput(f"point {list(a)} listed twice")
        tables[a] = [_int_list(s, "label set") for s in row["sets"]]
    try:
        return make_family(n, d, tables, u)
    except FamilyError as exc:
        raise MalformedInput(str(exc)) from exc


# -- complexes -------------------------------------------------------------


def key_to_json(key) -> Any:
    if key is None:
        return None
    if isinstance(key, Cell):
        return {"base": list(key.base), "J": [j + 1 for j in key.jset]}
    if isinstance(key, HookTableau):
        return {"column": [j + 1 for j in key.col], "row": list(key.row)}
    return key


def coeff_to_json(c) -> Any:
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else str(c)


def complex_to_json(cx: ComplexDesc) -> dict:
    degrees = []
    for k in cx.degrees:
        cells = []
        for key in cx.basis[k]:
            entry = {
                "key": key_to_json(key),
                "boundary": [[key_to_json(t), coeff_to_json(v)] for t, v in sorted(cx.boundary[key].items(), key=lambda kv: repr(kv[0]))],
            }
            if cx.mdeg is not None:
                entry["mdeg"] = list(cx.mdeg[key])
            cells.append(entry)
        degrees.append({"degree": k, "cells": cells})
    return {"degrees": degrees}


def matching_to_json(pairs) -> list:
    return [[key_to_json(hi), key_to_json(lo)] for hi, lo in pairs]


def jsonable(obj) -> Any:
    """Tuples, frozensets, Fractions and the domain types to plain JSON."""
    if isinstance(obj, DownEdge):
        return edge_to_json(obj)
    if isinstance(obj, (Cell, HookTableau)):
        return key_to_json(obj)
    if isinstance(obj, SyzygyGraph):
        return graph_to_json(obj)
    if isinstance(obj, IsotoneFamily):
        return family_to_json(obj)
    if isinstance(obj, Fraction):
        return coeff_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(x) for x in obj)
    return obj
