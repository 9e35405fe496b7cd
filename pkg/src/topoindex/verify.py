"""Audit closed forms against direct computation on constructed graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import formulas
from .formulas import FormulaContext, FormulaError
from .graph import (
    FamilySpec,
    Graph,
    complete_bipartite_graph,
    complete_graph,
    connected_erdos_renyi,
    cycle_graph,
    generate,
    is_connected,
    path_graph,
    regular_degree,
    star_graph,
)
from .indices import ExactNumber, IndexVector, compute_all, compute_index
from .transforms import transform

DEFAULT_SEED = 42
DEFAULT_KMAX = 4
ER_RETRIES = 50


# Hand-derived right-hand sides for formulas the audit refutes.  Reported
# alongside failures; never substituted for the printed forms.
ERRATA_NOTES = {
    "T2_12": "4^(km) (k+1)^(2m(k+1)) PI2(G)^(k+1); printed form has PI1(G), equal only when every degree is 1 or 2",
    "T2_14": "SDD(G) + (1/2)k(k+1)M1(G) + 2kn/(k+1); each original vertex has k*d(v) new neighbours",
    "CR_REC_5": "4^m (k+1)^(2m(k+1)) k^(-2mk) PI2(G) PI2(R_{k-1}(G))",
    "CR_REC_6": "coefficient of HM(G) is (2k+1), not (2k-1)",
    "CR_REC_7": "SDD(R_{k-1}(G)) + kM1(G) + 2n/(k(k+1))",
    "CR_REG_3": "n r^3 (k+1)^3 + 4nkr",
    "CR_REG_4": "2^(knr) r^(2n) (k+1)^(2n)",
    "CR_REG_6": "first term is 2n r^3 (k+1)^2 (= (k+1)^2 HM(G)); agrees with the printed 4n r^2 (k+1)^2 only for r=2",
    "CR_REG_7": "nr + (1/2)k(k+1)n r^2 + 2kn/(k+1)",
}


class PreconditionError(ValueError):
    """The (formula, graph, k) triple is outside the formula's stated scope."""


@dataclass(frozen=True)
class VerificationRecord:
    formula: str
    graph: str
    n: int
    m: int
    k: int
    predicted: ExactNumber
    actual: ExactNumber
    family_rank: int = 0

    @property
    def residual(self) -> ExactNumber:
        d = Fraction(self.actual) - Fraction(self.predicted)
        return int(d) if d.denominator == 1 else d

    @property
    def match(self) -> bool:
        return self.predicted == self.actual

    def sort_key(self) -> tuple:
        return (formulas.formula_position(self.formula), self.family_rank, self.n, self.graph, self.k)


@dataclass(frozen=True)
class SuiteGraph:
    descriptor: str
    family_rank: int
    graph: Graph


@dataclass
class Suite:
    """What to audit.  ``graphs`` holds already-built members in family order."""

    graphs: list[SuiteGraph]
    kmax: int = DEFAULT_KMAX
    formula_ids: list[str] = field(default_factory=lambda: list(formulas.FORMULA_IDS))
    seed: int | None = DEFAULT_SEED
    include_below_k_min: bool = False
    kmin: int | None = None
    skipped: list[str] = field(default_factory=list)
    families: list[str] = field(default_factory=list)

    def describe(self) -> dict:
        return {
            "families": list(self.families),
            "graphs": [g.descriptor for g in self.graphs],
            "kmin": self.kmin,
            "kmax": self.kmax,
            "seed": self.seed,
            "formulas": list(self.formula_ids),
            "include_below_k_min": self.include_below_k_min,
        }


@dataclass
class FormulaSummary:
    formula: str
    passes: int = 0
    fails: int = 0
    smallest_counterexample: VerificationRecord | None = None


@dataclass
class AuditReport:
    suite: dict
    records: list[VerificationRecord]
    summary: list[FormulaSummary]
    skipped: list[str] = field(default_factory=list)
    below_k_min: list[VerificationRecord] = field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return sum(s.fails for s in self.summary)

    @property
    def all_matched(self) -> bool:
        return self.mismatches == 0


# -- suite construction -----------------------------------------------------------

DEFAULT_FAMILIES = ("path", "cycle", "complete", "star", "complete_bipartite", "random_regular", "erdos_renyi")


def default_suite(
    seed: int = DEFAULT_SEED,
    kmax: int = DEFAULT_KMAX,
    formula_ids: list[str] | None = None,
    families: tuple[str, ...] | list[str] = DEFAULT_FAMILIES,
    include_below_k_min: bool = False,
) -> Suite:
    unknown = set(families) - set(DEFAULT_FAMILIES)
    if unknown:
        raise ValueError(f"unknown families {sorted(unknown)}; expected some of {', '.join(DEFAULT_FAMILIES)}")
    members: list[SuiteGraph] = []
    skipped: list[str] = []
    order = [f for f in DEFAULT_FAMILIES if f in families]
    for rank, fam in enumerate(order):
        if fam == "path":
            members += [SuiteGraph(f"path({a})", rank, path_graph(a)) for a in range(2, 9)]
        elif fam == "cycle":
            members += [SuiteGraph(f"cycle({a})", rank, cycle_graph(a)) for a in range(3, 9)]
        elif fam == "complete":
            members += [SuiteGraph(f"complete({a})", rank, complete_graph(a)) for a in range(2, 7)]
        elif fam == "star":
            members += [SuiteGraph(f"star({a})", rank, star_graph(a)) for a in range(2, 7)]
        elif fam == "complete_bipartite":
            members.append(SuiteGraph("complete_bipartite(2,3)", rank, complete_bipartite_graph(2, 3)))
        elif fam == "random_regular":
            spec = FamilySpec("random_regular", a=8, r=3, seed=seed)
            members.append(SuiteGraph(spec.describe(), rank, generate(spec)))
        elif fam == "erdos_renyi":
            G, attempts = connected_erdos_renyi(8, 0.5, seed, retries=ER_RETRIES)
            desc = f"erdos_renyi(n=8,p=0.5,seed={seed})"
            if G is None:
                skipped.append(f"{desc}: disconnected after {attempts} draws")
            else:
                members.append(SuiteGraph(f"{desc}#draw{attempts}", rank, G))
    return Suite(
        graphs=members,
        kmax=kmax,
        formula_ids=list(formula_ids) if formula_ids is not None else list(formulas.FORMULA_IDS),
        seed=seed,
        include_below_k_min=include_below_k_min,
        skipped=skipped,
        families=order,
    )


def single_graph_suite(G: Graph, descriptor: str, kmax: int = DEFAULT_KMAX,
                       formula_ids: list[str] | None = None, kmin: int | None = None) -> Suite:
    return Suite(
        graphs=[SuiteGraph(descriptor, 0, G)],
        kmax=kmax,
        kmin=kmin,
        formula_ids=list(formula_ids) if formula_ids is not None else list(formulas.FORMULA_IDS),
        seed=None,
        families=[descriptor],
    )


# -- core -------------------------------------------------------------------------


class _Oracle:
    """Caches derived graphs and their index vectors across formulas."""

    def __init__(self):
        self._vectors: dict[tuple[int, str, int], IndexVector] = {}

    def indices(self, key: int, G: Graph, kind: str, k: int) -> IndexVector:
        slot = (key, kind, k)
        if slot not in self._vectors:
            self._vectors[slot] = compute_all(transform(G, kind, k))
        return self._vectors[slot]


def _check(f: formulas.Formula, G: Graph, k: int, allow_below_k_min: bool) -> int | None:
    if k < 0:
        raise PreconditionError(f"k must be >= 0, got {k}")
    if k < f.k_min and not allow_below_k_min:
        raise PreconditionError(f"{f.id} is stated for k >= {f.k_min}")
    if G.m == 0 or not is_connected(G):
        raise PreconditionError("graph must be connected with at least one edge")
    if f.inputs == formulas.REGULAR:
        r = regular_degree(G)
        if r is None:
            raise PreconditionError(f"{f.id} needs a regular graph")
        return r
    return None


def _verify(f: formulas.Formula, G: Graph, k: int, descriptor: str, rank: int,
            oracle: _Oracle, key: int, allow_below_k_min: bool) -> VerificationRecord:
    r = _check(f, G, k, allow_below_k_min)
    base = oracle.indices(key, G, f.transform, 0)
    prev = oracle.indices(key, G, f.transform, k - 1) if f.inputs == formulas.BASE_PREV and k >= 1 else None
    ctx = FormulaContext(base=base, k=k, r=r, prev=prev)
    try:
        predicted = formulas.evaluate_formula(f.id, ctx, enforce_k_min=not allow_below_k_min)
    except FormulaError as exc:
        raise PreconditionError(str(exc)) from exc
    actual = oracle.indices(key, G, f.transform, k)[f.kind]
    return VerificationRecord(f.id, descriptor, G.n, G.m, k, predicted, actual, rank)


def verify_formula(fid: str, G: Graph, k: int, descriptor: str = "graph",
                   allow_below_k_min: bool = False) -> VerificationRecord:
    """Compare one closed form with direct computation on the built graph.

    Raises :class:`PreconditionError` when ``k`` is below the formula's range,
    ``G`` is disconnected, or a regular-graph formula meets a non-regular ``G``.
    """
    f = formulas.get(fid)
    rec = _verify(f, G, k, descriptor, 0, _Oracle(), 0, allow_below_k_min)
    # single-shot path: take "actual" straight from the per-kind summation
    actual = compute_index(transform(G, f.transform, k), f.kind)
    return VerificationRecord(f.id, descriptor, G.n, G.m, k, rec.predicted, actual)


def run_audit(suite: Suite) -> AuditReport:
    if not suite.graphs or not suite.formula_ids:
        raise ValueError("empty suite: no graphs or no formulas")
    oracle = _Oracle()
    records: list[VerificationRecord] = []
    below: list[VerificationRecord] = []
    skipped = list(suite.skipped)
    for fid in suite.formula_ids:
        f = formulas.get(fid)
        for key, member in enumerate(suite.graphs):
            G = member.graph
            if f.inputs == formulas.REGULAR and regular_degree(G) is None:
                continue
            if not is_connected(G) or G.m == 0:
                skipped.append(f"{f.id} on {member.descriptor}: graph is disconnected or edgeless")
                continue
            lo = f.k_min if suite.kmin is None else max(suite.kmin, f.k_min)
            if suite.include_below_k_min:
                for k in range(0, min(f.k_min, suite.kmax + 1)):
                    try:
                        below.append(_verify(f, G, k, member.descriptor, member.family_rank, oracle, key, True))
                    except PreconditionError as exc:
                        skipped.append(f"{f.id} on {member.descriptor} k={k}: {exc}")
            for k in range(lo, suite.kmax + 1):
                try:
                    records.append(_verify(f, G, k, member.descriptor, member.family_rank, oracle, key, False))
                except PreconditionError as exc:
                    skipped.append(f"{f.id} on {member.descriptor} k={k}: {exc}")
    records.sort(key=VerificationRecord.sort_key)
    below.sort(key=VerificationRecord.sort_key)
    return AuditReport(
        suite=suite.describe(),
        records=records,
        summary=summarize(records, suite.formula_ids),
        skipped=skipped,
        below_k_min=below,
    )


def summarize(records: list[VerificationRecord], formula_ids: list[str]) -> list[FormulaSummary]:
    by_id = {fid: FormulaSummary(fid) for fid in formula_ids}
    for rec in records:
        s = by_id[rec.formula]
        if rec.match:
            s.passes += 1
        else:
            s.fails += 1
    for s in by_id.values():
        s.smallest_counterexample = _smallest([r for r in records if r.formula == s.formula])
    return list(by_id.values())


def _smallest(records: list[VerificationRecord]) -> VerificationRecord | None:
    failing = [r for r in records if not r.match]
    if not failing:
        return None
    return min(failing, key=lambda r: (r.n, r.k, r.family_rank, r.graph))


def smallest_counterexample(report: AuditReport, fid: str) -> VerificationRecord | None:
    fid = formulas.normalize_id(fid)
    if fid not in report.suite["formulas"]:
        raise FormulaError(f"{fid} was not part of this audit")
    return _smallest([r for r in report.records if r.formula == fid])
