"""Exact topological indices of k-th subdivision and semi-total point graphs,
with an auditor for published closed forms."""
from .formulas import CATALOG, FORMULA_IDS, FormulaContext, evaluate_formula, formula_metadata
from .graph import FamilySpec, Graph, degree_sequence, generate, parse_edge_list, serialize, validate
from .indices import IndexKind, IndexVector, compute_all, compute_index, log_value
from .transforms import DerivedSpec, semi_total_k, subdivide_k
from .verify import (
    AuditReport,
    VerificationRecord,
    default_suite,
    run_audit,
    smallest_counterexample,
    verify_formula,
)

__all__ = [
    "CATALOG", "FORMULA_IDS", "FormulaContext", "evaluate_formula", "formula_metadata",
    "FamilySpec", "Graph", "degree_sequence", "generate", "parse_edge_list", "serialize", "validate",
    "IndexKind", "IndexVector", "compute_all", "compute_index", "log_value",
    "DerivedSpec", "semi_total_k", "subdivide_k",
    "AuditReport", "VerificationRecord", "default_suite", "run_audit", "smallest_counterexample", "verify_formula",
]
