"""Run the default audit and print a markdown table of every formula's
verdict, with the smallest counterexample and a note on what is wrong.

    python scripts/errata_table.py [--seed 42] [--kmax 4]
"""
import argparse

from topoindex.formulas import CATALOG, FORMULA_IDS
from topoindex.report import fmt, md_table
from topoindex.verify import ERRATA_NOTES, default_suite, run_audit


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--kmax", type=int, default=4)
    args = ap.parse_args()

    report = run_audit(default_suite(seed=args.seed, kmax=args.kmax))
    by_id = {s.formula: s for s in report.summary}
    rows = []
    for fid in FORMULA_IDS:
        f, s = CATALOG[fid], by_id[fid]
        c = s.smallest_counterexample
        where = "-" if c is None else f"{c.graph}, k={c.k}: {_short(c.predicted)} vs {_short(c.actual)}"
        rows.append([fid, f.kind.value, f.k_min, f.text, s.passes, s.fails, where, ERRATA_NOTES.get(fid, "")])
    print(md_table(["id", "index", "k_min", "as printed", "pass", "fail", "smallest counterexample", "note"], rows))
    print(f"{len(report.records)} comparisons, {report.mismatches} mismatches")


def _short(x):
    s = fmt(x)
    return s if len(s) <= 16 else f"{s[:6]}...({len(s)} chars)"


if __name__ == "__main__":
    main()
