"""Catalog of published closed forms for indices of S_k(G) and R_k(G).

Each entry is evaluated exactly as printed, including the ones that turn out
to be wrong; deciding truth is the job of :mod:`topoindex.verify`.

Ids:
    T2_1 .. T2_7    theorems for S_k(G) (M1, M2, F, PI1, PI2, HM, SDD)
    T2_8 .. T2_14   theorems for R_k(G) (same index order)
    CS_REC_i        recurrences S_k from S_{k-1}
    CS_REG_i        S_k(G) for r-regular G
    CR_REC_i        recurrences R_k from R_{k-1}
    CR_REG_i        R_k(G) for r-regular G
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .indices import ExactNumber, IndexKind, IndexVector

SUBDIVISION = "subdivision_k"
SEMI_TOTAL = "semi_total_k"

BASE = "base"
BASE_PREV = "base+prev"
REGULAR = "regular"

_ORDER = (IndexKind.M1, IndexKind.M2, IndexKind.F, IndexKind.PI1, IndexKind.PI2, IndexKind.HM, IndexKind.SDD)


class FormulaError(ValueError):
    """Raised when a formula cannot be evaluated in the given context."""


@dataclass(frozen=True)
class FormulaContext:
    base: IndexVector
    k: int
    r: int | None = None
    prev: IndexVector | None = None

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m


@dataclass(frozen=True)
class Formula:
    id: str
    transform: str
    kind: IndexKind
    k_min: int
    inputs: str
    text: str
    fn: Callable[..., ExactNumber]
    divides_by_k: bool = False

    @property
    def label(self) -> str:
        return self.id.replace("T2_", "T2.")

    def metadata(self) -> dict:
        return {
            "id": self.id,
            "transform": self.transform,
            "kind": self.kind.value,
            "k_min": self.k_min,
            "inputs": self.inputs,
            "formula": self.text,
        }


Q = Fraction


def _t(i, transform, kind, k_min, text, fn):
    return Formula(f"T2_{i}", transform, kind, k_min, BASE, text, fn)


# Lambdas take (g, k, n, m) with g the base index vector.
_THEOREMS = [
    _t(1, SUBDIVISION, IndexKind.M1, 0, "M1(G) + 4km",
       lambda g, k, n, m: g.M1 + 4 * k * m),
    _t(2, SUBDIVISION, IndexKind.M2, 1, "2M1(G) + 4(k-1)m",
       lambda g, k, n, m: 2 * g.M1 + 4 * (k - 1) * m),
    _t(3, SUBDIVISION, IndexKind.F, 0, "F(G) + 8km",
       lambda g, k, n, m: g.F + 8 * k * m),
    _t(4, SUBDIVISION, IndexKind.PI1, 0, "4^(km) PI1(G)",
       lambda g, k, n, m: 4 ** (k * m) * g.PI1),
    _t(5, SUBDIVISION, IndexKind.PI2, 0, "4^(km) PI2(G)",
       lambda g, k, n, m: 4 ** (k * m) * g.PI2),
    _t(6, SUBDIVISION, IndexKind.HM, 1, "F(G) + 4M1(G) + 16km - 8m",
       lambda g, k, n, m: g.F + 4 * g.M1 + 16 * k * m - 8 * m),
    _t(7, SUBDIVISION, IndexKind.SDD, 1, "(1/2)M1(G) + 2(k-1)m + 2n",
       lambda g, k, n, m: Q(g.M1, 2) + 2 * (k - 1) * m + 2 * n),
    _t(8, SEMI_TOTAL, IndexKind.M1, 0, "(k+1)^2 M1(G) + 4km",
       lambda g, k, n, m: (k + 1) ** 2 * g.M1 + 4 * k * m),
    _t(9, SEMI_TOTAL, IndexKind.M2, 0, "2k(k+1)M1(G) + (k+1)^2 M2(G)",
       lambda g, k, n, m: 2 * k * (k + 1) * g.M1 + (k + 1) ** 2 * g.M2),
    _t(10, SEMI_TOTAL, IndexKind.F, 0, "(k+1)^3 F(G) + 8km",
       lambda g, k, n, m: (k + 1) ** 3 * g.F + 8 * k * m),
    _t(11, SEMI_TOTAL, IndexKind.PI1, 0, "4^(km) (k+1)^(2n) PI1(G)",
       lambda g, k, n, m: 4 ** (k * m) * (k + 1) ** (2 * n) * g.PI1),
    _t(12, SEMI_TOTAL, IndexKind.PI2, 1, "4^(km) {(k+1)^(2m) PI1(G)}^(k+1)",
       lambda g, k, n, m: 4 ** (k * m) * ((k + 1) ** (2 * m) * g.PI1) ** (k + 1)),
    _t(13, SEMI_TOTAL, IndexKind.HM, 0, "(k+1)^2 HM(G) + k(k+1)^2 F(G) + 4k(k+1)M1(G) + 8km",
       lambda g, k, n, m: (k + 1) ** 2 * g.HM + k * (k + 1) ** 2 * g.F + 4 * k * (k + 1) * g.M1 + 8 * k * m),
    _t(14, SEMI_TOTAL, IndexKind.SDD, 1, "SDD(G) + (1/2)(k+1)M1(G) + 2n/(k+1)",
       lambda g, k, n, m: g.SDD + Q((k + 1) * g.M1, 2) + Q(2 * n, k + 1)),
]

# Lambdas take (p, g, k, n, m) with p the (k-1)-level index vector.
_CS_REC = [
    ("M1(S_{k-1}(G)) + 4m", lambda p, g, k, n, m: p.M1 + 4 * m),
    ("M2(S_{k-1}(G)) + 4m", lambda p, g, k, n, m: p.M2 + 4 * m),
    ("F(S_{k-1}(G)) + 8m", lambda p, g, k, n, m: p.F + 8 * m),
    ("4^m PI1(S_{k-1}(G))", lambda p, g, k, n, m: 4**m * p.PI1),
    ("4^m PI2(S_{k-1}(G))", lambda p, g, k, n, m: 4**m * p.PI2),
    ("HM(S_{k-1}(G)) + 16m", lambda p, g, k, n, m: p.HM + 16 * m),
    ("SDD(S_{k-1}(G)) + 2m", lambda p, g, k, n, m: p.SDD + 2 * m),
]

_CR_REC = [
    ("M1(R_{k-1}(G)) + (2k+1)M1(G) + 4m",
     lambda p, g, k, n, m: p.M1 + (2 * k + 1) * g.M1 + 4 * m),
    ("M2(R_{k-1}(G)) + 4kM1(G) + (2k+1)M2(G)",
     lambda p, g, k, n, m: p.M2 + 4 * k * g.M1 + (2 * k + 1) * g.M2),
    ("F(R_{k-1}(G)) + (3k(k+1)+1)F(G) + 8m",
     lambda p, g, k, n, m: p.F + (3 * k * (k + 1) + 1) * g.F + 8 * m),
    ("4^m (1 + 1/k)^(2n) PI1(R_{k-1}(G))",
     lambda p, g, k, n, m: 4**m * (1 + Q(1, k)) ** (2 * n) * p.PI1),
    ("k^(m-n) (k+1)^(n(k+1)) PI2(G) PI2(R_{k-1}(G))",
     lambda p, g, k, n, m: Q(k) ** (m - n) * (k + 1) ** (n * (k + 1)) * g.PI2 * p.PI2),
    ("HM(R_{k-1}(G)) + (2k-1)HM(G) + k(3k+1)F(G) + 8kM1(G) + 8m",
     lambda p, g, k, n, m: p.HM + (2 * k - 1) * g.HM + k * (3 * k + 1) * g.F + 8 * k * g.M1 + 8 * m),
    ("SDD(R_{k-1}(G)) + (1/2)M1(G) - 2n/(k(k+1))",
     lambda p, g, k, n, m: p.SDD + Q(g.M1, 2) - Q(2 * n, k * (k + 1))),
]

# Lambdas take (k, n, r).
_CS_REG = [
    ("n r^2 + 2nkr", lambda k, n, r: n * r**2 + 2 * n * k * r),
    ("2nr(r + k - 1)", lambda k, n, r: 2 * n * r * (r + k - 1)),
    ("n r^3 + 4nkr", lambda k, n, r: n * r**3 + 4 * n * k * r),
    ("2^(knr) r^(2n)", lambda k, n, r: 2 ** (k * n * r) * r ** (2 * n)),
    ("2^(nkr) r^(nr)", lambda k, n, r: 2 ** (n * k * r) * r ** (n * r)),
    ("nr(r^2 + 4r + 8k - 4)", lambda k, n, r: n * r * (r**2 + 4 * r + 8 * k - 4)),
    ("(1/2)n r^2 + nr(k-1) + 2n", lambda k, n, r: Q(n * r**2, 2) + n * r * (k - 1) + 2 * n),
]

_CR_REG = [
    ("n r^2 (k+1)^2 + 2nkr",
     lambda k, n, r: n * r**2 * (k + 1) ** 2 + 2 * n * k * r),
    ("2k(k+1) n r^2 + (n r^3 / 2)(k+1)^2",
     lambda k, n, r: 2 * k * (k + 1) * n * r**2 + Q(n * r**3, 2) * (k + 1) ** 2),
    ("n r^3 (k+1) + 4nkr",
     lambda k, n, r: n * r**3 * (k + 1) + 4 * n * k * r),
    ("2^(knr) r^n (k+1)^(2n)",
     lambda k, n, r: 2 ** (k * n * r) * r**n * (k + 1) ** (2 * n)),
    ("2^(knr) {r(k+1)}^(nr(k+1))",
     lambda k, n, r: 2 ** (k * n * r) * (r * (k + 1)) ** (n * r * (k + 1))),
    ("4n r^2 (k+1)^2 + n r^3 k(k+1)^2 + 4n r^2 k(k+1) + 4nrk",
     lambda k, n, r: 4 * n * r**2 * (k + 1) ** 2 + n * r**3 * k * (k + 1) ** 2
     + 4 * n * r**2 * k * (k + 1) + 4 * n * r * k),
    ("(1/2)n r^2 - 2n/(k(k+1)) + 2",
     lambda k, n, r: Q(n * r**2, 2) - Q(2 * n, k * (k + 1)) + 2),
]

# Recurrences S_k <- S_{k-1} for M2, HM and SDD only hold once both levels
# are at least 1, since the parent theorems need k >= 1.
_CS_REC_KMIN = (1, 2, 1, 1, 1, 2, 2)
_CR_DIVIDES = {4, 5, 7}


def _build() -> dict[str, Formula]:
    out: dict[str, Formula] = {f.id: f for f in _THEOREMS}
    s_parents, r_parents = _THEOREMS[:7], _THEOREMS[7:]
    for i, kind in enumerate(_ORDER, 1):
        text, fn = _CS_REC[i - 1]
        out[f"CS_REC_{i}"] = Formula(f"CS_REC_{i}", SUBDIVISION, kind, _CS_REC_KMIN[i - 1], BASE_PREV, text, fn)
        text, fn = _CS_REG[i - 1]
        out[f"CS_REG_{i}"] = Formula(f"CS_REG_{i}", SUBDIVISION, kind, s_parents[i - 1].k_min, REGULAR, text, fn)
        text, fn = _CR_REC[i - 1]
        out[f"CR_REC_{i}"] = Formula(f"CR_REC_{i}", SEMI_TOTAL, kind, 1, BASE_PREV, text, fn,
                                     divides_by_k=i in _CR_DIVIDES)
        text, fn = _CR_REG[i - 1]
        out[f"CR_REG_{i}"] = Formula(f"CR_REG_{i}", SEMI_TOTAL, kind, r_parents[i - 1].k_min, REGULAR, text, fn,
                                     divides_by_k=i == 7)
    return out


CATALOG: dict[str, Formula] = _build()

# Canonical report order: theorems, then the four corollary blocks.
FORMULA_IDS: tuple[str, ...] = (
    tuple(f"T2_{i}" for i in range(1, 15))
    + tuple(f"CS_REC_{i}" for i in range(1, 8))
    + tuple(f"CS_REG_{i}" for i in range(1, 8))
    + tuple(f"CR_REC_{i}" for i in range(1, 8))
    + tuple(f"CR_REG_{i}" for i in range(1, 8))
)
_POSITION = {fid: i for i, fid in enumerate(FORMULA_IDS)}

_ROMAN = {"i": 1, "ii": 2, "iii": 3, "iv": 4, "v": 5, "vi": 6, "vii": 7}


def normalize_id(name: str) -> str:
    """Map user spellings (``T2.14``, ``t2_14``, ``cr-reg-iii``) to a catalog id."""
    key = re.sub(r"[.\-\s]", "_", name.strip()).upper()
    m = re.fullmatch(r"(C[SR]_RE[CG])_([IVX]+)", key)
    if m and m.group(2).lower() in _ROMAN:
        key = f"{m.group(1)}_{_ROMAN[m.group(2).lower()]}"
    if key not in CATALOG:
        raise FormulaError(f"unknown formula id {name!r}; valid ids: {', '.join(FORMULA_IDS)}")
    return key


def expand_ids(spec: str) -> list[str]:
    """Parse a comma list of ids and ``A..B`` ranges into catalog order."""
    chosen: set[str] = set()
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if part.lower() == "all":
            chosen.update(FORMULA_IDS)
        elif ".." in part:
            lo, hi = (normalize_id(x) for x in part.split("..", 1))
            a, b = _POSITION[lo], _POSITION[hi]
            if a > b:
                raise FormulaError(f"empty range {part!r}")
            chosen.update(FORMULA_IDS[a : b + 1])
        else:
            chosen.add(normalize_id(part))
    if not chosen:
        raise FormulaError("no formulas selected")
    return sorted(chosen, key=_POSITION.__getitem__)


def formula_position(fid: str) -> int:
    return _POSITION[fid]


def get(fid: str) -> Formula:
    return CATALOG[normalize_id(fid)]


def formula_metadata(fid: str) -> dict:
    return get(fid).metadata()


def catalog_table() -> list[dict]:
    return [CATALOG[fid].metadata() for fid in FORMULA_IDS]


def evaluate_formula(fid: str, ctx: FormulaContext, *, enforce_k_min: bool = True) -> ExactNumber:
    """Right-hand side of ``fid`` evaluated exactly in ``ctx``.

    With ``enforce_k_min=False`` the formula may be evaluated below its
    stated range (used for exploratory k=0 rows); division by k is still
    refused.
    """
    f = get(fid)
    k, n, m = ctx.k, ctx.n, ctx.m
    if k < 0:
        raise FormulaError(f"k must be >= 0, got {k}")
    if enforce_k_min and k < f.k_min:
        raise FormulaError(f"{f.id} is stated for k >= {f.k_min}, got k={k}")
    if f.divides_by_k and k == 0:
        raise FormulaError(f"{f.id} divides by k and is undefined at k=0")
    if f.inputs == BASE_PREV:
        if ctx.prev is None:
            raise FormulaError(f"{f.id} needs the index vector of the (k-1)-level graph")
        if k < 1:
            raise FormulaError(f"{f.id} relates levels k and k-1, so needs k >= 1")
        value = f.fn(ctx.prev, ctx.base, k, n, m)
    elif f.inputs == REGULAR:
        r = ctx.r
        if r is None:
            raise FormulaError(f"{f.id} needs the regular degree r")
        if 2 * m != n * r:
            raise FormulaError(f"{f.id}: m={m} is inconsistent with n={n}, r={r}")
        value = f.fn(k, n, r)
    else:
        value = f.fn(ctx.base, k, n, m)
    return _normalize(value)


def _normalize(x) -> ExactNumber:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x
