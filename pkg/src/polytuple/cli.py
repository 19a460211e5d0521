"""Command-line interface: ``polytuple <subcommand> [flags]``.

Exit codes: 0 ok, 1 violations found, 2 input error, 3 resource limit,
4 indeterminate search.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import io
from .colorings import (
    LLLParams,
    balls_tuple_coloring,
    combination_coloring,
    combination_vertex_colors,
    cyclic_vertex_coloring,
    depth_threshold_coloring,
    lll_tuple_coloring,
    parity_coloring,
    vc_tuple_coloring,
)
from .colorings.base import VertexColoring
from .colorings.lll import ranges_at_least
from .colorings.threshold import DISK_BASE, guaranteed_size
from .errors import InputError, PolytupleError
from .generators import gen_grid, gen_moment_curve, gen_random_general_position
from .geometry.depth import pair_depth_table_disks
from .geometry.ranges import RangeKind, enumerate_ranges
from .hypergraph import AbstractHypergraph, is_shrinkable, sauer_shelah_check, tuple_depth_table, vc_dimension
from .nets import combination_net_colorer, decompose_into_nets
from .search import SearchBudget, exact_f, exists_polychromatic, verify_polychromatic
from .svg import emit_svg

KINDS = [k.value for k in RangeKind]


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InputError(f"--{name.replace('_', '-')} is required for '{args.cmd}'")


def _budget(args) -> SearchBudget:
    return SearchBudget(
        max_nodes=args.budget_nodes if args.budget_nodes is not None else SearchBudget.max_nodes,
        time_limit=args.budget_seconds if args.budget_seconds is not None else SearchBudget.time_limit,
    )


def _load_instance(path) -> tuple[str, object]:
    doc = io.load_json(path)
    if isinstance(doc, dict) and "coords" in doc:
        return "points", io.points_from_json(doc)
    if isinstance(doc, dict) and "edges" in doc:
        return "hypergraph", io.hypergraph_from_json(doc)
    raise InputError(f"{path} is neither a point file nor a hypergraph file")


def _hypergraph(args, with_generators: bool = False) -> AbstractHypergraph:
    what, obj = _load_instance(args.input)
    if what == "hypergraph":
        return obj
    _require(args, "kind")
    return enumerate_ranges(obj, args.kind, with_generators=with_generators, allow_degenerate=args.allow_degenerate)


def _points(args):
    what, obj = _load_instance(args.input)
    if what != "points":
        raise InputError(f"'{args.cmd}' needs a point file")
    return obj


def cmd_gen(args) -> int:
    if args.points == "grid":
        extents = args.extent or [args.n]
        P = gen_grid(*extents)
    elif args.points == "moment":
        _require(args, "n", "dim")
        P = gen_moment_curve(args.n, args.dim)
    else:
        _require(args, "n", "bbox", "seed")
        P = gen_random_general_position(args.n, args.bbox, args.seed, args.dim or 2)
    io.dump_json(io.points_to_json(P), args.output)
    return 0


def cmd_ranges(args) -> int:
    _require(args, "kind")
    P = _points(args)
    H = enumerate_ranges(P, args.kind, with_generators=True, allow_degenerate=args.allow_degenerate)
    io.dump_json(io.hypergraph_to_json(H, with_generators=True), args.output)
    return 0


def cmd_depth(args) -> int:
    _require(args, "t")
    what, obj = _load_instance(args.input)
    if what == "points" and args.kind == "disks2d" and args.t == 2:
        D = pair_depth_table_disks(obj)
    else:
        D = tuple_depth_table(_hypergraph(args), args.t)
    io.dump_json(io.depth_table_to_json(D), args.output)
    tup, d = D.max_entry()
    print(json.dumps({"max_tuple": list(tup), "max_depth": d}), file=sys.stderr)
    return 0


def _vertex_coloring(args, n: int, x: int, order) -> VertexColoring:
    if args.vertex_coloring:
        C = io.coloring_from_json(io.load_json(args.vertex_coloring))
        if C.t != 1 or C.n != n:
            raise InputError("vertex coloring must be a t=1 coloring of the same ground set")
        return VertexColoring(n, C.k, C.colors)
    return cyclic_vertex_coloring(order, x)


def _line_order(obj) -> list[int]:
    if getattr(obj, "dim", None) == 1:
        return sorted(range(len(obj)), key=lambda i: obj.coords[i])
    return list(range(obj.n if isinstance(obj, AbstractHypergraph) else len(obj)))


def cmd_color(args) -> int:
    _require(args, "method", "k")
    method = args.method
    log = None
    if method == "disks":
        P = _points(args)
        base = args.base if args.base is not None else DISK_BASE
        C = depth_threshold_coloring(pair_depth_table_disks(P), args.k, base)
    elif method == "balls":
        C = balls_tuple_coloring(_points(args), args.k)
    elif method == "vc":
        _require(args, "dim")
        H = _hypergraph(args)
        if args.base is not None:
            C = depth_threshold_coloring(tuple_depth_table(H, args.dim + 1), args.k, args.base)
        else:
            C = vc_tuple_coloring(H, args.dim, args.k)
    elif method == "lll":
        _require(args, "seed")
        P = _points(args)
        shape = {"rects2d": "rects2d", "boxes": "boxes", "balls": "balls"}.get(args.kind or "rects2d")
        if shape is None:
            raise InputError("lll supports --kind rects2d, boxes or balls")
        params = LLLParams(
            k=args.k,
            seed=args.seed,
            t=args.t or 2,
            shape=shape,
            c=args.c if args.c is not None else 126,
            m=args.m,
            max_rounds=args.max_rounds if args.max_rounds is not None else 10**6,
        )
        res = lll_tuple_coloring(P, params)
        C, log = res.coloring, [r.as_dict() for r in res.log]
    elif method in ("combination", "parity"):
        _require(args, "t")
        what, obj = _load_instance(args.input)
        n = obj.n if what == "hypergraph" else len(obj)
        if method == "parity":
            C = parity_coloring(_vertex_coloring(args, n, 2, _line_order(obj)), args.t)
        else:
            x = combination_vertex_colors(args.t, args.k)
            C = combination_coloring(_vertex_coloring(args, n, x, _line_order(obj)), args.t, args.k)
    else:
        raise InputError(f"unknown coloring method {method!r}")
    io.dump_json(io.coloring_to_json(C), args.output)
    if log is not None and args.log:
        io.write_log_lines(log, args.log)
    return 0


def cmd_verify(args) -> int:
    _require(args, "coloring", "f")
    H = _hypergraph(args, with_generators=bool(args.svg))
    C = io.coloring_from_json(io.load_json(args.coloring))
    rep = verify_polychromatic(H, C, args.f)
    io.dump_json(io.report_to_json(rep), args.output)
    if args.svg:
        what, P = _load_instance(args.input)
        if what != "points":
            raise InputError("--svg needs a point file as --input")
        edge = rep.violations[0].edge if rep.violations else None
        gen = H.generator_of(edge) if edge else None
        Path(args.svg).write_text(emit_svg(P, edge, gen, args.kind or "disks2d", C), encoding="utf-8")
    return 0 if rep.ok else 1


def cmd_exactf(args) -> int:
    _require(args, "t", "k")
    H = _hypergraph(args)
    if args.f is not None:
        C = exists_polychromatic(H, args.t, args.k, args.f, _budget(args))
        if C is None:
            io.dump_json({"exists": False, "f": args.f}, args.output)
            return 1
        io.dump_json(io.coloring_to_json(C), args.output)
        return 0
    f = exact_f(H, args.t, args.k, _budget(args))
    io.dump_json({"f": f, "t": args.t, "k": args.k}, args.output)
    return 0


def cmd_nets(args) -> int:
    _require(args, "t", "eps")
    what, obj = _load_instance(args.input)
    H = obj if what == "hypergraph" else enumerate_ranges(obj, args.kind or "intervals1d")
    order = _line_order(obj)
    colorer, threshold = combination_net_colorer(lambda x: cyclic_vertex_coloring(order, x), lambda x: x, args.t)
    D = decompose_into_nets(H, args.t, args.eps, colorer, threshold)
    io.dump_json(io.decomposition_to_json(D), args.output)
    return 0


def cmd_vc(args) -> int:
    H = _hypergraph(args)
    shrink, witness = is_shrinkable(H)
    out = {
        "vc_dimension": vc_dimension(H),
        "edges": len(H),
        "sauer_shelah": sauer_shelah_check(H),
        "shrinkable": shrink,
        "shrink_witness": None if witness is None else {"edge": list(witness[0]), "size": witness[1]},
    }
    io.dump_json(out, args.output)
    return 0


def cmd_bench(args) -> int:
    _require(args, "n", "seed")
    timings = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        val = fn()
        timings[name] = round(time.perf_counter() - t0, 4)
        return val

    P = timed("gen", lambda: gen_random_general_position(args.n, args.bbox or 10_000, args.seed))
    H = timed("disk_ranges", lambda: enumerate_ranges(P, "disks2d"))
    D = timed("pair_depths", lambda: pair_depth_table_disks(P))
    k = args.k or 2
    C = timed("coloring", lambda: depth_threshold_coloring(D, k, DISK_BASE))
    f = args.f or guaranteed_size(DISK_BASE, k)
    rep = timed("verify", lambda: verify_polychromatic(H, C, f))
    timings.update({"n": args.n, "ranges": len(H), "violations": len(rep.violations)})
    if args.m is not None:
        grid = gen_grid(args.m, args.m)
        res = timed("lll_grid", lambda: lll_tuple_coloring(grid, LLLParams(k=k, seed=args.seed)))
        R = ranges_at_least(grid, "rects2d", res.m)
        timed("lll_verify", lambda: verify_polychromatic(R, res.coloring, res.m))
    io.dump_json(timings, args.output)
    return 0


COMMANDS = {
    "gen": cmd_gen,
    "ranges": cmd_ranges,
    "depth": cmd_depth,
    "color": cmd_color,
    "verify": cmd_verify,
    "exactf": cmd_exactf,
    "nets": cmd_nets,
    "vc": cmd_vc,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input")
    common.add_argument("--output")
    common.add_argument("--kind", choices=KINDS)
    common.add_argument("--t", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--f", type=int)
    common.add_argument("--eps", type=float)
    common.add_argument("--base", type=str)
    common.add_argument("--c", type=float)
    common.add_argument("--m", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--max-rounds", type=int)
    common.add_argument("--budget-nodes", type=int)
    common.add_argument("--budget-seconds", type=float)
    common.add_argument("--dim", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--bbox", type=int)
    common.add_argument("--allow-degenerate", action="store_true", help="enumerate disks/balls for non-general-position input")

    parser = argparse.ArgumentParser(prog="polytuple", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)
    g = sub.add_parser("gen", parents=[common], help="generate a point set")
    g.add_argument("--points", choices=["random", "grid", "moment"], default="random")
    g.add_argument("--extent", type=int, nargs="+", help="grid extents, one per axis")
    sub.add_parser("ranges", parents=[common], help="enumerate all ranges of a family")
    sub.add_parser("depth", parents=[common], help="tuple depth table")
    c = sub.add_parser("color", parents=[common], help="build a tuple coloring")
    c.add_argument("--method", choices=["disks", "balls", "vc", "lll", "combination", "parity"])
    c.add_argument("--vertex-coloring", help="t=1 coloring file for combination/parity")
    c.add_argument("--log", help="resample log output (lll)")
    v = sub.add_parser("verify", parents=[common], help="check a coloring against a hypergraph")
    v.add_argument("--coloring", help="coloring file")
    v.add_argument("--svg", help="also draw the instance and the first violation")
    sub.add_parser("exactf", parents=[common], help="exact threshold by backtracking")
    sub.add_parser("nets", parents=[common], help="decompose tuples into eps-t-nets")
    sub.add_parser("vc", parents=[common], help="VC-dimension, shrinkability and Sauer-Shelah check")
    sub.add_parser("bench", parents=[common], help="time the main kernels")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except PolytupleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
