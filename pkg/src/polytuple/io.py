"""JSON file formats. ``"-"`` as a path means stdin/stdout."""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from .colorings.base import TupleColoring
from .errors import InputError
from .geometry.points import PointSet
from .hypergraph import AbstractHypergraph, DepthTable
from .nets import NetDecomposition
from .search import VerificationReport, Violation


def load_json(path: str | Path) -> Any:
    try:
        if str(path) == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def dump_json(obj: Any, path: str | Path | None) -> None:
    text = json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n"
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _field(doc: Any, key: str, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"missing field {key!r}")
    val = doc[key]
    if kind is int and (not isinstance(val, int) or isinstance(val, bool)):
        raise InputError(f"field {key!r} must be an integer")
    if kind is list and not isinstance(val, list):
        raise InputError(f"field {key!r} must be a list")
    return val


# points


def points_to_json(P: PointSet) -> dict:
    return {"dim": P.dim, "coords": [list(p) for p in P.coords]}


def points_from_json(doc: Any) -> PointSet:
    return PointSet(_field(doc, "coords", list), _field(doc, "dim", int))


# hypergraphs


def hypergraph_to_json(H: AbstractHypergraph, with_generators: bool = False) -> dict:
    out: dict = {"n": H.n, "edges": [list(e) for e in H.edges]}
    if with_generators and H.generators is not None:
        out["generators"] = [list(H.generator_of(e) or ()) for e in H.edges]
    return out


def hypergraph_from_json(doc: Any) -> AbstractHypergraph:
    n = _field(doc, "n", int)
    edges = _field(doc, "edges", list)
    for e in edges:
        if not isinstance(e, list):
            raise InputError("every edge must be a list of vertex indices")
    gens = doc.get("generators")
    return AbstractHypergraph.from_edges(n, edges, gens)


# colorings


def coloring_to_json(C: TupleColoring) -> dict:
    return {"n": C.n, "t": C.t, "k": C.k, "entries": [list(tup) + [c] for tup, c in C.items()]}


def coloring_from_json(doc: Any) -> TupleColoring:
    n, t, k = _field(doc, "n", int), _field(doc, "t", int), _field(doc, "k", int)
    entries = _field(doc, "entries", list)
    for row in entries:
        if not isinstance(row, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
            raise InputError("coloring entries must be integer lists")
    return TupleColoring.from_entries(n, t, k, entries)


# depth tables


def depth_table_to_json(D: DepthTable) -> dict:
    return {"n": D.n, "t": D.t, "entries": [list(tup) + [d] for tup, d in D.items()]}


def depth_table_from_json(doc: Any) -> DepthTable:
    n, t = _field(doc, "n", int), _field(doc, "t", int)
    C = TupleColoring.from_entries(n, t, max(n, 1) + 1, _field(doc, "entries", list))
    return DepthTable(n, t, C.colors)


# verification reports


def report_to_json(rep: VerificationReport) -> dict:
    return {
        "ok": rep.ok,
        "f": rep.f,
        "violations": [{"edge": list(v.edge), "missing_colors": list(v.missing_colors)} for v in rep.violations],
        "stats": {"edges_checked": rep.edges_checked, "nodes": rep.nodes},
    }


def report_from_json(doc: Any) -> VerificationReport:
    stats = _field(doc, "stats")
    viol = [Violation(tuple(v["edge"]), list(v["missing_colors"])) for v in _field(doc, "violations", list)]
    return VerificationReport(bool(_field(doc, "ok")), _field(doc, "f", int), viol, stats["edges_checked"], stats["nodes"])


# net decompositions


def decomposition_to_json(D: NetDecomposition) -> dict:
    eps = float(D.eps)
    return {
        "eps": eps if Fraction(str(eps)) == D.eps else str(D.eps),
        "n": D.coloring.n,
        "t": D.t,
        "k": D.k,
        "classes": [int(c) for c in D.assignment],
    }


def decomposition_from_json(doc: Any) -> NetDecomposition:
    raw = _field(doc, "eps")
    eps = Fraction(str(raw)) if isinstance(raw, float) else Fraction(raw)
    t, k = _field(doc, "t", int), _field(doc, "k", int)
    classes = _field(doc, "classes", list)
    n = doc.get("n")
    if n is None:
        n = next((m for m in range(t, 10**6) if comb(m, t) >= len(classes)), t)
    if comb(n, t) != len(classes):
        raise InputError("class list does not cover every tuple")
    return NetDecomposition(eps, t, k, TupleColoring(n, t, k, np.asarray(classes, dtype=np.int64)))


def write_log_lines(records: Iterable[dict], path: str | Path | None) -> None:
    text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def read_log_lines(path: str | Path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]
