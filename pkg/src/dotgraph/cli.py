"""Command-line front end.

Exit codes: 0 success or accept, 2 verification reject, 3 refuted,
4 inconclusive, 5 malformed input, 6 instance over a size cap, 7 exact and
float scalars mixed in one model.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .constructors import (
    ArcSet,
    CapSet,
    DiskSet,
    GeometryError,
    arcs_intersection_graph,
    arcs_to_model,
    caps_intersection_graph,
    caps_to_model,
    disks_intersection_graph,
    disks_to_model,
    load_geometry,
    rep_anticycle6,
    rep_bi4wheel,
    rep_claw,
    rep_complete_minus_matching,
    rep_J_3d,
    rep_matching_paper,
)
from .graph import GraphError, InstanceTooLarge, gen_complete_minus_matching, gen_named, load_graph, save_graph
from .model import DEFAULT_BAND, ModeMixError, ModelError, induced_graph, load_model, save_model, verify_model
from .recognition import NotFound, SearchBudget, dot_dimension_at_most_1, refute_2dpr, search_dpr

EXIT_OK = 0
EXIT_REJECT = 2
EXIT_REFUTED = 3
EXIT_INCONCLUSIVE = 4
EXIT_INPUT = 5
EXIT_TOO_LARGE = 6
EXIT_MODE_MIX = 7

class InputError(ValueError):
    pass


def _pair(p) -> str:
    return "(" + ", ".join(p) + ")"


def format_report(rep) -> str:
    fmt = str
    lines = [f"verdict: {rep.verdict}", f"arithmetic: {'exact' if rep.exact else 'float'}"]
    if rep.min_edge_margin is not None:
        lines.append(f"min_edge_margin: {fmt(rep.min_edge_margin)} at {_pair(rep.edge_margin_pair)}")
    if rep.min_nonedge_deficit is not None:
        where = ", ".join(_pair(p) for p in rep.nonedge_deficit_pairs)
        lines.append(f"min_nonedge_deficit: {fmt(rep.min_nonedge_deficit)} at {where}")
    if rep.violations:
        lines.append(f"violations: {len(rep.violations)}")
        for v in rep.violations:
            want = "edge" if v.expected_edge else "non-edge"
            lines.append(f"  {_pair(v.pair)} expected {want}, dot {fmt(v.dot)}")
    if rep.boundary:
        lines.append(f"boundary pairs: {', '.join(_pair(p) for p in rep.boundary)}")
    return "\n".join(lines)


def _report_exit(rep) -> int:
    if rep.accepted:
        return EXIT_OK
    return EXIT_REJECT if rep.verdict == "reject" else EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------------
# subcommands


def _graph_name(spec: list[str]) -> str:
    head, *rest = spec
    head = head.replace("-", "_")
    if not rest:
        return head
    try:
        nums = [int(x) for x in rest]
    except ValueError:
        raise InputError(f"graph parameters must be integers, got {rest}") from None
    return f"{head}({','.join(map(str, nums))})"


def cmd_gen(args) -> int:
    G = gen_named(_graph_name(args.name))
    save_graph(G, args.output)
    print(f"wrote {args.output}: n={G.n} m={G.m}")
    return EXIT_OK


_FIXED_MODELS = {"a6": (rep_anticycle6, "anticycle(3)"), "claw": (rep_claw, "claw"),
                 "bi4wheel": (rep_bi4wheel, "bi4wheel"), "j3d": (rep_J_3d, "J")}
_GEOMETRY = {"caps": CapSet, "arcs": ArcSet, "disks": DiskSet}


def _need_int(values, k, what):
    if len(values) != k:
        raise InputError(f"{what} takes {k} argument(s)")
    try:
        return [int(v) for v in values]
    except ValueError:
        raise InputError(f"{what}: expected integers, got {values}") from None


def cmd_construct(args) -> int:
    kind, rest = args.kind, args.params
    if kind in _FIXED_MODELS:
        _need_int(rest, 0, kind)
        fn, name = _FIXED_MODELS[kind]
        M, G = fn(), gen_named(name)
    elif kind == "matching-paper":
        (m,) = _need_int(rest, 1, kind)
        M, G = rep_matching_paper(m), gen_complete_minus_matching(2 * m, m)
    elif kind == "matching":
        (m,) = _need_int(rest, 1, kind)
        M = rep_complete_minus_matching(m, args.extra)
        G = gen_complete_minus_matching(2 * m + args.extra, m)
    elif kind in ("caps", "arcs", "disks"):
        if len(rest) != 1:
            raise InputError(f"{kind} takes one geometry file")
        geom = load_geometry(rest[0])
        if not isinstance(geom, _GEOMETRY[kind]):
            raise InputError(f"field 'kind': {rest[0]} does not hold {kind}")
        if kind == "caps":
            M, G = caps_to_model(geom), caps_intersection_graph(geom, args.band)
        elif kind == "arcs":
            M, G = arcs_to_model(geom), arcs_intersection_graph(geom, args.band)
        else:
            M, G = disks_to_model(geom, args.band), disks_intersection_graph(geom, args.band)
    else:
        raise InputError(f"unknown construction {kind!r}")
    if args.output:
        save_model(M, args.output)
        print(f"wrote {args.output}")
    rep = verify_model(M, G, args.band)
    print(format_report(rep))
    return _report_exit(rep)


def cmd_induce(args) -> int:
    G = induced_graph(load_model(args.model), args.band)
    save_graph(G, args.output)
    print(f"wrote {args.output}: n={G.n} m={G.m}")
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify_model(load_model(args.model), load_graph(args.graph), args.band)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=1))
    else:
        print(format_report(rep))
    return _report_exit(rep)


def cmd_recognize(args) -> int:
    G = load_graph(args.graph)
    ok, wit = dot_dimension_at_most_1(G)
    if ok:
        print("dimension <= 1: yes")
        for i, part in enumerate(wit.parts, 1):
            print(f"  part {i}: {' '.join(part) if part else '(empty)'}")
        return EXIT_OK
    print(f"dimension <= 1: no ({wit.reason})")
    return EXIT_REJECT


def cmd_search(args) -> int:
    G = load_graph(args.graph)
    budget = SearchBudget(restarts=args.restarts, iterations=args.iters)
    res = search_dpr(G, args.dim, budget, seed=args.seed)
    if isinstance(res, NotFound):
        print(
            f"NOT_FOUND in d={args.dim}: best residual {res.best_residual:.6g} "
            f"after {res.restarts} restarts x {res.iterations} iterations"
        )
        return EXIT_INCONCLUSIVE
    if args.output:
        save_model(res, args.output)
        print(f"wrote {args.output}")
    print(f"FOUND in d={args.dim}")
    print(format_report(verify_model(res, G)))
    return EXIT_OK


def cmd_refute(args) -> int:
    G = load_graph(args.graph)
    gid = args.id or Path(args.graph).stem
    cert = refute_2dpr(G, graph_id=gid, max_n=args.max_n, workers=args.workers, log=args.log)
    if args.output:
        Path(args.output).write_text(cert.to_json(include_log=args.log) + "\n")
    if args.log:
        print(cert.to_json(include_log=True))
    else:
        print(f"{cert.verdict}  graph={gid} n={cert.n}")
        print(f"orderings examined (up to reversal): {cert.orderings_examined}")
        print(f"search nodes: {cert.nodes_visited}, pruned prefixes: {cert.pruned_prefixes}")
        kinds = ", ".join(f"{k}={v}" for k, v in sorted(cert.kind_counts.items()))
        print(f"violations by kind: {kinds or 'none'}")
        print(f"survivors: {len(cert.survivors)}")
        for s in cert.survivors[:10]:
            print("  " + " ".join(s))
        print(f"semantics: {cert.semantics_note}")
    return EXIT_REFUTED if cert.refuted else EXIT_INCONCLUSIVE


def cmd_corpus_check(args) -> int:
    from .corpus import CHECKS, run_checks

    which = sorted(CHECKS) if not args.only else [int(x) for x in args.only.split(",")]
    bad = [k for k in which if k not in CHECKS]
    if bad:
        raise InputError(f"no such criterion: {bad}")
    results = run_checks(which, seed=args.seed, workers=args.workers)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.number}  {r.title}" + (f"  ({r.seconds:.1f} s)" if args.timing else ""))
        for label, ok, detail in r.items:
            if args.verbose or not ok:
                print(f"        {'ok ' if ok else 'BAD'}  {label}" + (f": {detail}" if detail else ""))
    n_pass = sum(r.passed for r in results)
    print(f"{n_pass}/{len(results)} criteria pass")
    return EXIT_OK if n_pass == len(results) else EXIT_REJECT


# ---------------------------------------------------------------------------


def _band_arg(s) -> None:
    s.add_argument(
        "--band", type=float, default=DEFAULT_BAND,
        help="float models: dot products within this distance of t are boundary pairs (default %(default)g)",
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dotgraph", description="Dot product graphs: build, verify, search, refute.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="write a corpus graph")
    s.add_argument("name", nargs="+", help="e.g. J, K, claw, 'anticycle 4', 'grid 3 3', 'complete-minus-matching 6 3'")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("construct", help="build a model and check it against its graph")
    s.add_argument("kind", choices=["matching-paper", "matching", *_FIXED_MODELS, "caps", "arcs", "disks"])
    s.add_argument("params", nargs="*", help="m for matching constructions, a geometry file for caps/arcs/disks")
    s.add_argument("--extra", type=int, default=0, help="vertices adjacent to everything (matching only)")
    s.add_argument("-o", "--output")
    _band_arg(s)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("induce", help="graph induced by a model")
    s.add_argument("model")
    s.add_argument("-o", "--output", required=True)
    _band_arg(s)
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("verify", help="check a model against a graph")
    s.add_argument("model")
    s.add_argument("graph")
    s.add_argument("--json", action="store_true", help="print the report as JSON")
    _band_arg(s)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("recognize", help="dimension test")
    s.add_argument("--dim1", action="store_true", required=True, help="decide dot product dimension <= 1")
    s.add_argument("graph")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("search", help="numerical search for a model")
    s.add_argument("graph")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--restarts", type=int, default=SearchBudget.restarts)
    s.add_argument("--iters", type=int, default=SearchBudget.iterations)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("refute", help="ordering refutation certificate for d=2")
    s.add_argument("graph")
    s.add_argument("--max-n", type=int, default=11)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--log", action="store_true", help="print the full certificate with its per-prefix log")
    s.add_argument("--id", help="graph id recorded in the certificate (default: file stem)")
    s.add_argument("-o", "--output", help="write the certificate as JSON")
    s.set_defaults(func=cmd_refute)

    s = sub.add_parser("corpus-check", help="run the reproduction suite")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--only", help="comma-separated criterion numbers")
    s.add_argument("-v", "--verbose", action="store_true", help="list every item, not only failures")
    s.add_argument("--timing", action="store_true", help="show seconds per criterion")
    s.set_defaults(func=cmd_corpus_check)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    for name in ("workers", "max_n", "restarts", "iters", "band"):
        if getattr(args, name, 1) <= 0:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except ModeMixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODE_MIX
    except (InputError, GraphError, ModelError, GeometryError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
