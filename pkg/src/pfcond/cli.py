"""Command-line front end.

Exit status: 0 on success or PASS, 1 on FAIL, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import fileio
from .embedding import EmbeddingError, PlaneGraph
from .families import generate, parse_family
from .graph import format_weight
from .kasteleyn import MODE_ALIASES, count_via_pfaffian, kasteleyn_orient, verify_admissible
from .matchings import count_matchings, matching_gf
from .pfaffian import MAX_DEFINITION_N, det_skew, pf_by_crossings, pf_definition, pf_eliminate
from .suites import SUITES, report_line, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get("PFCOND_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"PFCOND_SEED must be an integer, got {raw!r}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def load_graph(args, need_embedding: bool = False):
    """Graph and optional embedding from --family or --in/--embedding."""
    if args.family and args.infile:
        raise UsageError("give either --family or --in, not both")
    if args.family:
        seed = args.seed if args.seed is not None else default_seed()
        g, emb = generate(parse_family(args.family, args.weights, seed))
        if getattr(args, "embedding", None):
            emb = fileio.read(args.embedding, fileio.parse_embedding)
    elif args.infile:
        g = fileio.read(args.infile, fileio.parse_graph)
        emb = fileio.read(args.embedding, fileio.parse_embedding) if getattr(args, "embedding", None) else None
    else:
        raise UsageError("one of --family or --in is required")
    if need_embedding and emb is None:
        raise UsageError("this command needs a planar embedding (--embedding, or a planar family)")
    return g, emb


def cmd_gen(args) -> int:
    g, emb = load_graph(args)
    _emit(fileio.format_graph(g), args.out)
    if args.embedding_out:
        if emb is None:
            raise UsageError(f"{args.family} has no planar embedding")
        Path(args.embedding_out).write_text(fileio.format_embedding(g, emb))
    return EXIT_OK


def cmd_count(args) -> int:
    g, emb = load_graph(args, need_embedding=args.method == "pfaffian")
    if args.method == "enumerate":
        print(format_weight(matching_gf(g)))
        print(f"matchings {count_matchings(g)}")
    else:
        print(format_weight(count_via_pfaffian(PlaneGraph(g, emb))))
    return EXIT_OK


PF_METHODS = {"eliminate": pf_eliminate, "definition": pf_definition, "crossings": pf_by_crossings}


def cmd_pf(args) -> int:
    a = fileio.read(args.infile, fileio.parse_skew)
    if args.method != "eliminate" and a.n > MAX_DEFINITION_N:
        raise UsageError(f"--method {args.method} is limited to n <= {MAX_DEFINITION_N}")
    print(format_weight(PF_METHODS[args.method](a)))
    if args.det:
        print(f"det {format_weight(det_skew(a))}")
    return EXIT_OK


def cmd_orient(args) -> int:
    g, emb = load_graph(args, need_embedding=True)
    xi = kasteleyn_orient(PlaneGraph(g, emb))
    _emit(fileio.format_orientation(xi), args.out)
    return EXIT_OK


def cmd_verify_orientation(args) -> int:
    g, emb = load_graph(args, need_embedding=True)
    plane = PlaneGraph(g, emb)
    xi = fileio.read(args.orient, fileio.parse_orientation) if args.orient else kasteleyn_orient(plane)
    try:
        report = verify_admissible(plane, xi, args.mode)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"orientation does not fit the graph: {exc}") from None
    status = "PASS" if report.ok else "FAIL"
    print(f"{status} {report.mode} checked={report.checked} failures={len(report.failures)}")
    for f in report.failures:
        print(f"  {f}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else default_seed()
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    reports = run_suite(args.identity, args.trials, seed, args.size, args.jobs)
    passed = 0
    for t, rep in enumerate(reports):
        print(report_line(rep, seed, t))
        passed += rep.passed
    print(f"SUMMARY {args.identity} {passed}/{len(reports)}")
    return EXIT_OK if passed == len(reports) else EXIT_FAIL


def _graph_source(p: argparse.ArgumentParser, embedding: bool = True) -> None:
    p.add_argument("--family", help="generated family, e.g. grid:4,4 aztec:3 cycle:8 complete:4 path:6")
    p.add_argument("--in", dest="infile", metavar="FILE", help="graph file")
    if embedding:
        p.add_argument("--embedding", metavar="FILE", help="rotation-system file")
    p.add_argument("--weights", default="unit", help="unit or random:lo,hi (family only)")
    p.add_argument("--seed", type=int, default=None, help="seed for random weights (default $PFCOND_SEED or 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pfcond", description="Exact Pfaffians, perfect matchings and condensation identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph (and its embedding)")
    _graph_source(p, embedding=False)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--embedding-out", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", help="perfect matching generating function")
    _graph_source(p)
    p.add_argument("--method", choices=("enumerate", "pfaffian"), default="enumerate")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("pf", help="Pfaffian of a skew array file")
    p.add_argument("--file", "--in", dest="infile", metavar="FILE", required=True)
    p.add_argument("--method", choices=tuple(PF_METHODS), default="eliminate")
    p.add_argument("--det", action="store_true", help="also print the determinant")
    p.set_defaults(func=cmd_pf)

    p = sub.add_parser("orient", help="admissible orientation of a plane graph")
    _graph_source(p)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("verify-orientation", help="check an orientation for admissibility")
    _graph_source(p)
    p.add_argument("--orient", metavar="FILE", help="orientation file (default: construct one)")
    p.add_argument("--mode", choices=tuple(MODE_ALIASES), default="faces")
    p.set_defaults(func=cmd_verify_orientation)

    p = sub.add_parser("verify", help="random exact trials of an identity")
    p.add_argument("--identity", choices=tuple(SUITES), required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=None, help="default $PFCOND_SEED or 0")
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, fileio.FormatError, EmbeddingError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"pfcond: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
