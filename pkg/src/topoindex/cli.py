"""Command-line entry point: ``topoindex {indices,transform,verify,audit,catalog}``.

Exit codes: 0 all comparisons matched, 1 at least one mismatch,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys

from . import formulas, report
from .formulas import FormulaError
from .graph import FAMILY_KINDS, FamilySpec, Graph, GraphError, generate, parse_edge_list, serialize
from .indices import compute_all
from .transforms import transform
from .verify import (
    DEFAULT_FAMILIES,
    DEFAULT_KMAX,
    DEFAULT_SEED,
    ERRATA_NOTES,
    PreconditionError,
    default_suite,
    run_audit,
    single_graph_suite,
    verify_formula,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _add_graph_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--input", metavar="PATH", help="edge-list file")
    g.add_argument("--family", choices=[k for k in FAMILY_KINDS if k != "from_file"])
    p.add_argument("--size", type=int, help="vertex count (leaves for star, first part for complete_bipartite)")
    p.add_argument("--size2", type=int, default=0, help="second part of complete_bipartite")
    p.add_argument("--r", type=int, default=0, help="degree for random_regular")
    p.add_argument("--p", type=float, default=0.0, help="edge probability for erdos_renyi")


def _load_graph(args) -> tuple[Graph, str]:
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from exc
        return parse_edge_list(text), args.input
    if args.size is None:
        raise UsageError("--family needs --size")
    spec = FamilySpec(args.family, a=args.size, b=args.size2, r=args.r, p=args.p,
                      seed=args.seed if args.seed is not None else DEFAULT_SEED)
    return generate(spec), spec.describe()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


def cmd_indices(args) -> int:
    G, desc = _load_graph(args)
    _write(None, report.render_indices(compute_all(G), desc, args.format))
    return EXIT_OK


def cmd_transform(args) -> int:
    G, _ = _load_graph(args)
    if args.k < 0:
        raise UsageError("--k must be >= 0")
    _write(args.output, serialize(transform(G, args.kind, args.k)))
    return EXIT_OK


def cmd_verify(args) -> int:
    fid = formulas.normalize_id(args.formula)
    G, desc = _load_graph(args)
    try:
        rec = verify_formula(fid, G, args.k, desc, allow_below_k_min=args.force)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from exc
    _write(None, report.render_record(rec, args.format))
    return EXIT_OK if rec.match else EXIT_MISMATCH


def cmd_audit(args) -> int:
    ids = formulas.expand_ids(args.formulas)
    if args.kmax < 0:
        raise UsageError("--kmax must be >= 0")
    if args.input or args.family:
        G, desc = _load_graph(args)
        suite = single_graph_suite(G, desc, kmax=args.kmax, formula_ids=ids, kmin=args.kmin)
        suite.include_below_k_min = args.below_k_min
    else:
        fams = [f.strip() for f in args.families.split(",") if f.strip()]
        try:
            suite = default_suite(seed=args.seed if args.seed is not None else DEFAULT_SEED, kmax=args.kmax,
                                  formula_ids=ids, families=fams, include_below_k_min=args.below_k_min)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        suite.kmin = args.kmin
    try:
        rep = run_audit(suite)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = report.report_payload(rep)
    if args.report:
        _write(args.report, report.render_report(payload, args.format))
    elif args.print_report:
        _write(None, report.render_report(payload, args.format))
    if not args.quiet:
        sys.stderr.write(report.summary_table(payload))
        for summ in rep.summary:
            if summ.fails and summ.formula in ERRATA_NOTES:
                sys.stderr.write(f"note {summ.formula}: {ERRATA_NOTES[summ.formula]}\n")
        sys.stderr.write(f"{len(rep.records)} records, {rep.mismatches} mismatches, {len(rep.skipped)} skipped\n")
    return EXIT_OK if rep.all_matched else EXIT_MISMATCH


def cmd_catalog(args) -> int:
    rows = formulas.catalog_table()
    if args.format == "json":
        _write(None, report.dump_json(rows))
    else:
        header = list(rows[0])
        body = [[r[h] for h in header] for r in rows]
        _write(None, report.csv_text([header, *body]) if args.format == "csv" else report.md_table(header, body))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topoindex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_required=True):
        _add_graph_flags(p, required=graph_required)
        p.add_argument("--seed", type=int, default=None, help=f"RNG seed for random families (default {DEFAULT_SEED})")
        p.add_argument("--format", choices=report.FORMATS, default="json")

    p = sub.add_parser("indices", help="compute the seven indices of a graph")
    common(p)
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("transform", help="write S_k(G) or R_k(G) as an edge list")
    common(p)
    p.add_argument("--kind", choices=["sk", "rk"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output", metavar="PATH", help="output file (default stdout)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="check one closed form on one graph and k")
    common(p)
    p.add_argument("--formula", required=True, help="formula id, e.g. T2.14 or CR_REG_6")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--force", action="store_true", help="allow k below the formula's stated range")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="check many formulas over a suite of graphs")
    common(p, graph_required=False)
    p.add_argument("--families", default=",".join(DEFAULT_FAMILIES),
                   help="comma list of suite families (ignored with --input/--family)")
    p.add_argument("--formulas", default="all", help="ids and ranges, e.g. T2.1..T2.13,CR_REG_6")
    p.add_argument("--kmin", type=int, default=None, help="raise the lower k bound above each formula's k_min")
    p.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    p.add_argument("--below-k-min", action="store_true",
                   help="also report k below each formula's k_min (kept out of the summary)")
    p.add_argument("--report", metavar="PATH", help="write the full report here")
    p.add_argument("--print-report", action="store_true", help="print the report to stdout in --format")
    p.add_argument("--quiet", action="store_true", help="suppress the summary table on stderr")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("catalog", help="list all closed forms with metadata")
    p.add_argument("--format", choices=report.FORMATS, default="json")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphError, FormulaError) as exc:
        sys.stderr.write(f"topoindex {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
