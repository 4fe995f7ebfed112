"""Command-line front end.

Exit status: 0 success, 1 a negative answer (verification failed, no
convergence, no proof), 2 bad usage or unreadable input. Human output uses
1-based vertex labels; files use 0-based indices.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

import mpmath

from . import catalog as cat
from .dimension import DimensionError, bounds, conjecture_report
from .embedding import (DEFAULT_TOLERANCE, Embedding, EmbeddingError, Precision, ToleranceConfig, verify,
                        verify_exact)
from .graph import Graph, GraphError, make_family, parse_family
from .catalog_embeddings import (CONSTANT_IDS, TABLE_NOTES, PolyRootError, constant, default_tolerance,
                               paper_embedding)
from .prover import CertificateError, Contradiction, proof_text, prove
from .solver import ConvergenceError, ProblemError, SolverConfig, durer_problem, free_problem, load_problem, solve
from .svg import RenderError, render_svg


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from None


def resolve_graph(ref: str):
    """Returns (graph, family spec or None, catalog id or None)."""
    if ref.startswith("catalog:"):
        key = cat.check_id(ref.split(":", 1)[1])
        return cat.catalog_get(key), None, key
    if ref.startswith("family:"):
        spec = parse_family(ref.split(":", 1)[1])
        return make_family(spec), spec, None
    return Graph.from_edgelist(_read(ref)), None, None


def resolve_embedding(ref: str, precision: Precision | None = None) -> tuple[Embedding, str | None]:
    if ref.startswith("catalog:"):
        key = cat.check_id(ref.split(":", 1)[1])
        return paper_embedding(key, precision or Precision("float64")), key
    e = Embedding.from_json(_read(ref))
    return e, None


def _label(pair) -> str:
    return f"{pair[0] + 1}-{pair[1] + 1}"


# catalog ---------------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "list":
        for key in cat.CATALOG_IDS:
            g = cat.catalog_get(key)
            dim = 2 if key in cat.PLANAR_IDS else 3 if key in cat.SPATIAL_IDS else "-"
            print(f"{key:16s} n={g.n:<3d} m={g.m:<3d} embedding dim={dim}")
        return 0
    if args.action == "constants":
        for name in CONSTANT_IDS:
            c = constant(name, args.digits)
            print(f"{name:13s} = {mpmath.nstr(c.value, args.digits)}")
            print(f"{'':13s}   {c.definition}")
        return 0
    if not args.id:
        raise UsageError(f"catalog {args.action} needs --id")
    key = cat.check_id(args.id)
    if args.action == "edges":
        _write(args.out, cat.catalog_get(key).to_edgelist())
    elif args.action == "export":
        prec = Precision.parse(args.precision) if args.precision else Precision("float64")
        _write(args.out, paper_embedding(key, prec).to_json())
        if args.graph_out:
            _write(args.graph_out, cat.catalog_get(key).to_edgelist())
    elif args.action == "notes":
        notes = TABLE_NOTES.get(key, [])
        print("\n".join(notes) if notes else "no repairs; coordinates as tabulated")
    return 0


# verify ---------------------------------------------------------------------


def _tolerance(args, default: ToleranceConfig) -> ToleranceConfig:
    tol = default
    try:
        if args.edge_tol is not None:
            tol = replace(tol, edge_tol=args.edge_tol)
        if args.nonedge_band is not None:
            tol = replace(tol, nonedge_band=args.nonedge_band)
        if args.coincidence_tol is not None:
            tol = replace(tol, coincidence_tol=args.coincidence_tol)
    except EmbeddingError as exc:
        raise UsageError(str(exc)) from None
    return tol


def _print_report(report) -> None:
    print(("PASS: " if report.passed else "FAIL: ") + report.summary())
    print(f"max edge error {report.max_edge_error:.3e}")
    for title, items in (("edge off unit length", report.edge_violations),
                         ("non-edge at unit length", report.nonedge_violations),
                         ("coinciding points", report.coincidences)):
        for pair, d in items:
            print(f"  {title}: {_label(pair)} distance {d:.12g}")


def cmd_verify(args) -> int:
    g, _, _ = resolve_graph(args.graph)
    prec = Precision("rational") if args.exact else (Precision.parse(args.precision) if args.precision else None)
    e, key = resolve_embedding(args.embedding, prec)
    if args.exact:
        if e.precision.kind != "rational":
            raise UsageError("--exact needs an embedding with rational coordinates")
        report = verify_exact(g, e)
    else:
        report = verify(g, e, _tolerance(args, default_tolerance(key) if key else DEFAULT_TOLERANCE))
    _print_report(report)
    return 0 if report.passed else 1


# solve ----------------------------------------------------------------------


def cmd_solve(args) -> int:
    if args.problem:
        p, cfg = load_problem(args.problem)
    elif args.preset == "durer":
        p, cfg = durer_problem(), SolverConfig()
    elif args.graph:
        g, _, _ = resolve_graph(args.graph)
        p, cfg = free_problem(g, args.dim), SolverConfig()
    else:
        raise UsageError("solve needs --problem, --preset or --graph")
    overrides = {k: v for k, v in (("seed", args.seed), ("restarts", args.restarts), ("max_iter", args.max_iter),
                                   ("refine_digits", args.digits), ("repulsion", args.repulsion)) if v is not None}
    if args.require_valid:
        overrides["require_valid"] = True
    try:
        cfg = replace(cfg, **overrides)
    except ProblemError as exc:
        raise UsageError(str(exc)) from None
    try:
        sol = solve(p, cfg)
    except ConvergenceError as exc:
        print(f"no convergence: {exc}")
        return 1
    log = sol.log(cfg)
    print(f"converged at restart {sol.restart} (seed {cfg.seed}); residual {sol.residual_norm:.3e}")
    _print_report(sol.report)
    if args.out:
        _write(args.out, sol.embedding.to_json())
    if args.log:
        _write(args.log, json.dumps(log, indent=1) + "\n")
    return 0 if sol.passed else 1


# prove ----------------------------------------------------------------------


def _parse_pair(text: str, n: int):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("--pair takes two 1-based labels like 3,6") from None
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise UsageError(f"--pair labels must be distinct and within 1..{n}")
    return a - 1, b - 1


def cmd_prove(args) -> int:
    g, _, key = resolve_graph(args.graph)
    pair = _parse_pair(args.pair, g.n) if args.pair else cat.PROOF_FOCUS.get(key)
    result = prove(g, pair)
    if not isinstance(result, Contradiction):
        target = f" for vertices {args.pair}" if args.pair else ""
        print(f"inconclusive{target}: {result.relation_count} rhombus relations of rank {result.rank}; "
              "no coincidence is forced")
        return 1
    if args.json:
        _write(args.json, result.certificate.to_json())
    print(proof_text(g, result.certificate))
    return 0


# dims -----------------------------------------------------------------------


def cmd_dims(args) -> int:
    g, family, key = resolve_graph(args.graph)
    e = None
    if args.embedding:
        e, ekey = resolve_embedding(args.embedding)
        tol = default_tolerance(ekey) if ekey else DEFAULT_TOLERANCE
    else:
        tol = DEFAULT_TOLERANCE
    cert = None
    if args.prove:
        r = prove(g)
        if isinstance(r, Contradiction):
            cert = r.certificate
    b = bounds(g, e, cert, family, tol)
    print(b)
    if args.conjecture:
        print(conjecture_report(g, b))
    return 0


# render ---------------------------------------------------------------------


def cmd_render(args) -> int:
    g, _, _ = resolve_graph(args.graph)
    e, _ = resolve_embedding(args.embedding)
    _write(args.out, render_svg(g, e, args.project, labels=not args.no_labels))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="unitdist", description="unit-distance embeddings of small graphs")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="named graphs, their embeddings and constants")
    c.add_argument("action", choices=["list", "export", "edges", "constants", "notes"])
    c.add_argument("--id")
    c.add_argument("--out", "-o", help="output file (default stdout)")
    c.add_argument("--graph-out", help="with export: also write the edge list here")
    c.add_argument("--precision", help="float64 | decimal[:digits] | rational")
    c.add_argument("--digits", type=int, default=30)
    c.set_defaults(func=cmd_catalog)

    graph_help = "catalog:<id>, family:<name>:<params> or an edge-list file"
    v = sub.add_parser("verify", help="check the unit-distance condition")
    v.add_argument("--graph", required=True, help=graph_help)
    v.add_argument("--embedding", required=True, help="catalog:<id> or an embedding JSON file")
    v.add_argument("--edge-tol", type=float)
    v.add_argument("--nonedge-band", type=float)
    v.add_argument("--coincidence-tol", type=float)
    v.add_argument("--precision", help="precision for catalog embeddings")
    v.add_argument("--exact", action="store_true", help="exact rational check")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="search for an embedding")
    s.add_argument("--problem", help="problem JSON file")
    s.add_argument("--preset", choices=["durer"])
    s.add_argument("--graph", help=graph_help)
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--seed", type=int)
    s.add_argument("--restarts", type=int)
    s.add_argument("--max-iter", type=int)
    s.add_argument("--digits", type=int, help="refinement digits")
    s.add_argument("--repulsion", type=float)
    s.add_argument("--require-valid", action="store_true")
    s.add_argument("--out", help="write the embedding JSON here")
    s.add_argument("--log", help="write the run log JSON here")
    s.set_defaults(func=cmd_solve)

    p = sub.add_parser("prove-planar-impossible", help="rhombus argument against planar embeddings")
    p.add_argument("--graph", required=True, help=graph_help)
    p.add_argument("--pair", help="1-based vertex labels to force together, e.g. 3,6")
    p.add_argument("--json", help="write the certificate JSON here")
    p.set_defaults(func=cmd_prove)

    d = sub.add_parser("dims", help="dimension interval")
    d.add_argument("--graph", required=True, help=graph_help)
    d.add_argument("--embedding")
    d.add_argument("--prove", action="store_true")
    d.add_argument("--conjecture", action="store_true")
    d.set_defaults(func=cmd_dims)

    r = sub.add_parser("render", help="draw an embedding as SVG")
    r.add_argument("--graph", required=True, help=graph_help)
    r.add_argument("--embedding", required=True)
    r.add_argument("--out", "-o")
    r.add_argument("--project", choices=["xy", "xz", "yz"], help="projection plane for 3D embeddings")
    r.add_argument("--no-labels", action="store_true")
    r.set_defaults(func=cmd_render)
    return ap


DOMAIN_INPUT_ERRORS = (UsageError, GraphError, EmbeddingError, ProblemError, RenderError, CertificateError,
                       PolyRootError, DimensionError, KeyError, ValueError)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DOMAIN_INPUT_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
