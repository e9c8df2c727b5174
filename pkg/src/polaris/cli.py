"""Command line front end.

Every subcommand prints one JSON report on stdout.  Exit codes: 0 all
verdicts pass, 1 some verdict fails, 2 malformed input, 3 guard exceeded,
4 criteria disagree (a bug).
"""

from __future__ import annotations

import argparse
import hashlib
import os
import random
import sys
import time

from . import io
from .oracle import GuardExceeded
from .polarization import CriterionDisagreement

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_GUARD, EXIT_BUG = 0, 1, 2, 3, 4


def _digest(obj) -> str:
    return hashlib.sha256(io.dumps(io.jsonable(obj)).encode()).hexdigest()


def _vector(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(x < 0 for x in out):
        raise argparse.ArgumentTypeError("entries must be non-negative")
    return out


def _report(command: str, inputs, verdicts: dict, **extra) -> dict:
    out = {"command": command, "inputs": {"digest": _digest(inputs), "args": io.jsonable(inputs)}, "verdicts": verdicts}
    out.update(extra)
    return out


def _bound(args, n: int):
    u = getattr(args, "u", None)
    if u is not None and len(u) != n:
        raise io.MalformedInput(f"--u has {len(u)} entries, expected {n}")
    return u


# -- subcommands -----------------------------------------------------------


def cmd_check(args) -> dict:
    from .polarization import is_polarization, ls_edges, random_family

    if args.family:
        raw = io.load_file(args.family)
        chi = io.family_from_json(raw)
        inputs = raw
    else:
        if args.n is None or args.d is None:
            raise io.MalformedInput("check needs --family or --n and --d")
        chi = random_family(args.n, args.d, random.Random(args.seed), _bound(args, args.n))
        inputs = {"n": args.n, "d": args.d, "u": args.u, "seed": args.seed}
    verdict = is_polarization(chi, cross_check=args.cross_check)
    witness = verdict.pop("failingApex", None)
    graph = ls_edges(chi)
    extra = {"lsEdges": io.graph_to_json(graph), "witnesses": {"failingApex": witness}}
    if not args.family:
        extra["family"] = io.family_to_json(chi)
    return _report("check", inputs, verdict, **extra)


def cmd_infer(args) -> dict:
    from .isotone_infer import InferenceError, check_conditions, infer_family

    raw = io.load_file(args.graph)
    graph = io.graph_from_json(raw)
    diags = check_conditions(graph)
    if diags:
        return _report("infer", raw, {"conditions": False}, diagnostics=[d.as_dict() for d in diags])
    try:
        chi = infer_family(graph, check=False)
    except InferenceError as exc:
        return _report("infer", raw, {"conditions": True, "star": False},
                       diagnostics=[d.as_dict() for d in exc.diagnostics])
    return _report("infer", raw, {"conditions": True, "star": True}, family=io.family_to_json(chi))


def cmd_enumerate(args) -> dict:
    from .oracle import ORACLE_VERSION, enumerate_polarizations

    u = _bound(args, args.n)
    res = enumerate_polarizations(args.n, args.d, u, by_family=args.by_family, verify=not args.no_verify,
                                  jobs=args.jobs, force=args.force)
    items = []
    for k, r in enumerate(res["results"]):
        item = {"index": k, "graph": io.graph_to_json(r["graph"]), "family": io.family_to_json(r["family"]),
                "families": r["families"]}
        if "oracle" in r:
            item["oracle"] = r["oracle"]
        items.append(item)
    manifest = {
        "n": args.n,
        "d": args.d,
        "u": list(u) if u is not None else None,
        "byFamily": args.by_family,
        "count": res["count"],
        "families": res["families"],
        "oracleVersion": ORACLE_VERSION,
        "results": [{"index": it["index"], "hash": _digest(it), "oracle": it.get("oracle")} for it in items],
    }
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for it in items:
            with open(os.path.join(args.out, f"result_{it['index']:04d}.json"), "w", encoding="utf-8") as fh:
                fh.write(io.dumps(it))
        with open(os.path.join(args.out, "manifest.json"), "w", encoding="utf-8") as fh:
            fh.write(io.dumps(manifest))
    verdicts = {"allOracle": all(it.get("oracle", True) for it in items)}
    return _report("enumerate", vars_of(args), verdicts, manifest=manifest)


def cmd_morse(args) -> dict:
    from .hypersimplex import hypersimplex_complex
    from .morse import critical_cells, l_matching, validate_matching, verify_l_isomorphism

    hx = hypersimplex_complex(args.n, args.d)
    pairs = l_matching(args.n, args.d)
    rep = validate_matching(hx, pairs)
    crit = critical_cells(hx, pairs)
    counts = [len(crit[k]) for k in sorted(crit) if k > 0]
    while counts and counts[-1] == 0:
        counts.pop()
    verdicts = {"acyclic": rep["acyclic"], "homogeneous": rep["homogeneous"]}
    if args.check_iso:
        verdicts["isomorphic"] = verify_l_isomorphism(args.n, args.d)["isomorphic"]
    extra = {"criticalCounts": counts, "pairs": len(pairs)}
    if args.pairs:
        extra["matching"] = io.matching_to_json(pairs)
    return _report("morse", vars_of(args), verdicts, **extra)


def cmd_lcomplex(args) -> dict:
    from .homology import is_cellular_resolution
    from .tableaux import build_l_complex

    cx = build_l_complex(args.n, args.d, bound=_bound(args, args.n))
    ok, witness = is_cellular_resolution(cx)
    ranks = [len(cx.basis[k]) for k in sorted(cx.basis) if k > 0]
    verdicts = {"squareZero": cx.square_zero_witness() is None, "exact": ok}
    return _report("lcomplex", vars_of(args), verdicts, ranks=ranks, witness=witness)


def cmd_hypersimplex(args) -> dict:
    from .homology import is_cellular_resolution
    from .hypersimplex import hypersimplex_complex

    cx = hypersimplex_complex(args.n, args.d, bound=_bound(args, args.n))
    ok, witness = is_cellular_resolution(cx)
    counts = {str(k - 1): len(cx.basis[k]) for k in sorted(cx.basis) if k > 0}
    verdicts = {"squareZero": cx.square_zero_witness() is None, "cellularResolution": ok}
    return _report("hypersimplex", vars_of(args), verdicts, cellsByDimension=counts, witness=witness)


def cmd_betti(args) -> dict:
    from .lattice import enumerate_points
    from .oracle import graded_betti, taylor_betti, total_betti

    if args.ideal:
        raw = io.load_file(args.ideal)
        if not isinstance(raw, list) or not raw:
            raise io.MalformedInput("an ideal is a non-empty list of exponent vectors")
        gens = [io.exponent_from_json(g) for g in raw]
        if len({len(g) for g in gens}) != 1:
            raise io.MalformedInput("exponent vectors have different lengths")
        inputs = raw
    else:
        if args.n is None or args.d is None:
            raise io.MalformedInput("betti needs --ideal or --n and --d")
        gens = enumerate_points(args.n, args.d, _bound(args, args.n))
        inputs = vars_of(args)
    table = taylor_betti(gens)
    graded = graded_betti(table)
    return _report("betti", inputs, {}, total=total_betti(table),
                   graded=[[i, deg, b] for (i, deg), b in sorted(graded.items())])


def cmd_restricted(args) -> dict:
    from .homology import is_cellular_resolution
    from .oracle import restricted_ranks, taylor_betti, total_betti
    from .polarization import restricted_power_setup

    u = args.u
    setup = restricted_power_setup(len(u), args.d, u)
    if setup["empty"]:
        return _report("restricted", vars_of(args), {"empty": True})
    hx_ok, hx_w = is_cellular_resolution(setup["hypersimplex"])
    mo_ok, mo_w = is_cellular_resolution(setup["morse"])
    ranks = restricted_ranks(len(u), args.d, u)
    betti = total_betti(taylor_betti(setup["generators"]))
    verdicts = {"hypersimplexAcyclic": hx_ok, "morseAcyclic": mo_ok, "bettiMatchesRanks": betti == ranks}
    return _report("restricted", vars_of(args), verdicts, ranks=ranks, betti=betti,
                   witnesses={"hypersimplex": hx_w, "morse": mo_w})


def cmd_export(args) -> dict | str:
    from .hypersimplex import hypersimplex_complex, skeleton_dot
    from .morse import l_matching, morse_complex
    from .polarization import full_graph, ls_edges
    from .tableaux import build_l_complex

    u = _bound(args, args.n)
    if args.format == "dot":
        solid = None
        if args.family:
            chi = io.family_from_json(io.load_file(args.family))
            if (chi.n, chi.d) != (args.n, args.d):
                raise io.MalformedInput("family does not live over the requested (n, d)")
            solid = ls_edges(chi).edges
        elif args.graph:
            graph = io.graph_from_json(io.load_file(args.graph))
            if (graph.n, graph.d) != (args.n, args.d):
                raise io.MalformedInput("graph does not live over the requested (n, d)")
            solid = graph.edges
        return skeleton_dot(args.n, args.d, solid, u)
    if args.what == "hypersimplex":
        cx = hypersimplex_complex(args.n, args.d, bound=u)
    elif args.what == "lcomplex":
        cx = build_l_complex(args.n, args.d, bound=u)
    elif args.what == "morse":
        cx = morse_complex(hypersimplex_complex(args.n, args.d), l_matching(args.n, args.d), check=False)
    else:
        return io.graph_to_json(full_graph(args.n, args.d, u))
    return io.complex_to_json(cx)


def vars_of(args) -> dict:
    skip = {"func", "timings", "out", "jobs"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polaris", description=__doc__.splitlines()[0])
    p.add_argument("--timings", action="store_true", help="add wall-clock timings to the report")
    sub = p.add_subparsers(dest="command", required=True)

    def nd(sp, required=True):
        sp.add_argument("--n", type=int, required=required)
        sp.add_argument("--d", type=int, required=required)
        sp.add_argument("--u", type=_vector, help="bound vector, e.g. 1,1,1,1")

    sp = sub.add_parser("check", help="decide whether a family is a polarization")
    sp.add_argument("--family")
    nd(sp, required=False)
    sp.add_argument("--seed", type=int, default=0, help="seed for a random family when no file is given")
    sp.add_argument("--cross-check", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("infer", help="isotone maps from a syzygy graph")
    sp.add_argument("--graph", required=True)
    sp.set_defaults(func=cmd_infer)

    sp = sub.add_parser("enumerate", help="all polarizations at small size")
    nd(sp)
    sp.add_argument("--by-family", action="store_true")
    sp.add_argument("--out")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-verify", action="store_true")
    sp.add_argument("--force", action="store_true", help="ignore the size guard")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("morse", help="the L-matching on the hypersimplicial complex")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--check-iso", action="store_true")
    sp.add_argument("--pairs", action="store_true", help="include the matching")
    sp.set_defaults(func=cmd_morse)

    sp = sub.add_parser("lcomplex", help="build and check the L-complex")
    nd(sp)
    sp.set_defaults(func=cmd_lcomplex)

    sp = sub.add_parser("hypersimplex", help="build and check the hypersimplicial complex")
    nd(sp)
    sp.set_defaults(func=cmd_hypersimplex)

    sp = sub.add_parser("betti", help="multigraded Betti numbers by brute force")
    sp.add_argument("--ideal", help="JSON list of exponent vectors")
    nd(sp, required=False)
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("restricted", help="the restricted power m^d(<= u)")
    sp.add_argument("--u", type=_vector, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_restricted)

    sp = sub.add_parser("export", help="complexes as JSON, the skeleton as DOT")
    nd(sp)
    sp.add_argument("--what", choices=["hypersimplex", "lcomplex", "morse", "skeleton"], default="hypersimplex")
    sp.add_argument("--format", choices=["json", "dot"], default="json")
    sp.add_argument("--family", help="draw its linear syzygy edges solid (dot)")
    sp.add_argument("--graph", help="draw these edges solid (dot)")
    sp.set_defaults(func=cmd_export)
    return p


def _passed(report) -> bool:
    if not isinstance(report, dict) or "verdicts" not in report:
        return True
    return all(v is not False for v in report["verdicts"].values())


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        for name in ("n", "d"):
            v = getattr(args, name, None)
            if v is not None and v < 1:
                raise io.MalformedInput(f"--{name} must be positive")
        report = args.func(args)
    except io.MalformedInput as exc:
        out.write(io.dumps({"command": args.command, "error": "malformed input", "message": str(exc)}))
        return EXIT_MALFORMED
    except GuardExceeded as exc:
        out.write(io.dumps({"command": args.command, "error": "guard exceeded", "message": str(exc)}))
        return EXIT_GUARD
    except CriterionDisagreement as exc:
        out.write(io.dumps({"command": args.command, "error": "criteria disagree",
                            "verdict": io.jsonable(exc.verdict)}))
        return EXIT_BUG
    except ValueError as exc:
        out.write(io.dumps({"command": args.command, "error": "invalid request", "message": str(exc)}))
        return EXIT_MALFORMED
    if isinstance(report, str):
        out.write(report)
        return EXIT_OK
    if isinstance(report, dict) and args.timings:
        report["timings"] = {"seconds": round(time.perf_counter() - start, 6)}
    out.write(io.dumps(io.jsonable(report)))
    return EXIT_OK if _passed(report) else EXIT_FAIL


def main() -> None:
    sys.exit(run())
