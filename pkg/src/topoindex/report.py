"""Lossless JSON / CSV / markdown renderings of index vectors and audits.

Exact numbers are always strings: integers in decimal, SDD values and any
non-integral rational as ``p/q``.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .formulas import get as get_formula
from .indices import ExactNumber, IndexKind, IndexVector, log_value
from .verify import AuditReport, VerificationRecord

FORMATS = ("json", "csv", "markdown")


def fmt(x: ExactNumber, rational: bool = False) -> str:
    x = Fraction(x)
    if rational or x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(x.numerator)


def parse_exact(s: str) -> Fraction:
    return Fraction(s)


def _decimal(x: ExactNumber, digits: int = 12) -> str:
    return f"{float(Fraction(x)):.{digits}g}"


# -- index vectors ------------------------------------------------------------------


def index_payload(vec: IndexVector, descriptor: str) -> dict:
    values = {k.value: fmt(vec[k], rational=k is IndexKind.SDD) for k in IndexKind}
    ln = {}
    for k in (IndexKind.PI1, IndexKind.PI2):
        ln[k.value] = repr(log_value(vec[k])) if vec[k] > 0 else None
    return {
        "graph": descriptor,
        "n": vec.n,
        "m": vec.m,
        "indices": values,
        "SDD_decimal": _decimal(vec.SDD),
        "ln": ln,
    }


def render_indices(vec: IndexVector, descriptor: str, fmt_name: str = "json") -> str:
    p = index_payload(vec, descriptor)
    if fmt_name == "json":
        return json.dumps(p, indent=2) + "\n"
    header = ["graph", "n", "m", *p["indices"], "SDD_decimal", "ln_PI1", "ln_PI2"]
    row = [p["graph"], p["n"], p["m"], *p["indices"].values(), p["SDD_decimal"],
           p["ln"]["PI1"] or "", p["ln"]["PI2"] or ""]
    if fmt_name == "csv":
        return csv_text([header, row])
    return md_table(header, [row])


# -- verification records -----------------------------------------------------------------


def record_payload(rec: VerificationRecord) -> dict:
    sdd = get_formula(rec.formula).kind is IndexKind.SDD
    return {
        "formula": rec.formula,
        "graph": rec.graph,
        "n": rec.n,
        "m": rec.m,
        "k": rec.k,
        "predicted": fmt(rec.predicted, sdd),
        "actual": fmt(rec.actual, sdd),
        "match": rec.match,
        "residual": fmt(rec.residual, sdd),
    }


RECORD_FIELDS = ("formula", "graph", "n", "m", "k", "predicted", "actual", "match", "residual")


def report_payload(report: AuditReport) -> dict:
    summary = []
    for s in report.summary:
        c = s.smallest_counterexample
        summary.append({
            "formula": s.formula,
            "passes": s.passes,
            "fails": s.fails,
            "smallest_counterexample": None if c is None else {"graph": c.graph, "n": c.n, "k": c.k},
        })
    return {
        "suite": report.suite,
        "records": [record_payload(r) for r in report.records],
        "summary": summary,
        "skipped": list(report.skipped),
        "below_k_min": [record_payload(r) for r in report.below_k_min],
    }


def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def render_report(report: AuditReport | dict, fmt_name: str = "json") -> str:
    payload = report if isinstance(report, dict) else report_payload(report)
    if fmt_name == "json":
        return dump_json(payload)
    rows = [[_cell(r[f]) for f in RECORD_FIELDS] for r in payload["records"]]
    if fmt_name == "csv":
        return csv_text([list(RECORD_FIELDS), *rows])
    out = ["## Summary", "", summary_table(payload), "", "## Records", "", md_table(list(RECORD_FIELDS), rows)]
    return "\n".join(out)


def summary_table(payload: dict) -> str:
    rows = []
    for s in payload["summary"]:
        c = s["smallest_counterexample"]
        rows.append([s["formula"], s["passes"], s["fails"], "-" if c is None else f"{c['graph']} k={c['k']}"])
    return md_table(["formula", "passes", "fails", "smallest counterexample"], rows)


def render_record(rec: VerificationRecord, fmt_name: str = "json") -> str:
    p = record_payload(rec)
    if fmt_name == "json":
        return json.dumps(p, indent=2) + "\n"
    rows = [[_cell(p[f]) for f in RECORD_FIELDS]]
    if fmt_name == "csv":
        return csv_text([list(RECORD_FIELDS), *rows])
    return md_table(list(RECORD_FIELDS), rows)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def csv_text(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def md_table(header: list[str], rows: list[list]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"
