"""Evaluate every formula below its k_min (k=0 for the theorems) to show
which ones also hold at S_0(G) = R_0(G) = G and which do not.

    python scripts/k0_probe.py
"""
from collections import defaultdict

from topoindex.verify import default_suite, run_audit


def main():
    suite = default_suite(kmax=1, include_below_k_min=True)
    report = run_audit(suite)
    tally = defaultdict(lambda: [0, 0, None])
    for r in report.below_k_min:
        t = tally[(r.formula, r.k)]
        t[0 if r.match else 1] += 1
        if not r.match and t[2] is None:
            t[2] = r.graph
    for (fid, k), (ok, bad, first) in sorted(tally.items()):
        print(f"{fid:10} k={k}: {ok:3} match, {bad:3} mismatch" + (f"  (first: {first})" if first else ""))


if __name__ == "__main__":
    main()
