"""Direct, exact computation of seven degree-based topological indices.

Everything here sums or multiplies over the vertices and edges of an explicit
graph; it is the reference the closed forms are checked against.  Integer
indices come back as ``int``; SDD is a normalized :class:`fractions.Fraction`.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .graph import Graph, degree_sequence

ExactNumber = Union[int, Fraction]


class IndexKind(str, enum.Enum):
    M1 = "M1"
    M2 = "M2"
    F = "F"
    PI1 = "PI1"
    PI2 = "PI2"
    HM = "HM"
    SDD = "SDD"

    @classmethod
    def parse(cls, name: str) -> "IndexKind":
        key = name.strip().upper().replace("Π", "PI")
        if key == "SSD":
            key = "SDD"
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown index {name!r}; expected one of {', '.join(k.value for k in cls)}") from None


class DegenerateProductWarning(UserWarning):
    """A multiplicative index collapsed to 0 because of an isolated vertex."""


@dataclass(frozen=True)
class IndexVector:
    n: int
    m: int
    M1: int
    M2: int
    F: int
    PI1: int
    PI2: int
    HM: int
    SDD: Fraction

    def __getitem__(self, kind: IndexKind | str) -> ExactNumber:
        if not isinstance(kind, IndexKind):
            kind = IndexKind.parse(kind)
        return getattr(self, kind.value)

    def as_dict(self) -> dict[str, ExactNumber]:
        return {k.value: self[k] for k in IndexKind}


def _warn_isolated(deg: list[int]) -> None:
    if 0 in deg:
        warnings.warn("graph has an isolated vertex; PI1 is 0", DegenerateProductWarning, stacklevel=3)


def compute_index(G: Graph, kind: IndexKind | str) -> ExactNumber:
    if not isinstance(kind, IndexKind):
        kind = IndexKind.parse(kind)
    deg = degree_sequence(G)
    if kind is IndexKind.M1:
        return sum(d * d for d in deg)
    if kind is IndexKind.F:
        return sum(d**3 for d in deg)
    if kind is IndexKind.PI1:
        _warn_isolated(deg)
        return math.prod(d * d for d in deg)
    if kind is IndexKind.M2:
        return sum(deg[u] * deg[v] for u, v in G.edges)
    if kind is IndexKind.PI2:
        return math.prod(deg[u] * deg[v] for u, v in G.edges)
    if kind is IndexKind.HM:
        return sum((deg[u] + deg[v]) ** 2 for u, v in G.edges)
    # (a^2 + b^2) / (ab) == max/min + min/max
    return sum((Fraction(deg[u] ** 2 + deg[v] ** 2, deg[u] * deg[v]) for u, v in G.edges), Fraction(0))


def compute_all(G: Graph) -> IndexVector:
    deg = degree_sequence(G)
    _warn_isolated(deg)
    m1 = f = 0
    pi1 = 1
    for d in deg:
        sq = d * d
        m1 += sq
        f += sq * d
        pi1 *= sq
    m2 = hm = 0
    pi2 = 1
    sdd = Fraction(0)
    for u, v in G.edges:
        a, b = deg[u], deg[v]
        m2 += a * b
        pi2 *= a * b
        hm += (a + b) ** 2
        sdd += Fraction(a * a + b * b, a * b)
    return IndexVector(n=G.n, m=G.m, M1=m1, M2=m2, F=f, PI1=pi1, PI2=pi2, HM=hm, SDD=sdd)


def log_value(x: ExactNumber) -> float:
    """Natural log of a positive exact number, without overflowing to inf."""
    if x <= 0:
        raise ValueError(f"log of non-positive value {x}")
    x = Fraction(x)
    if x.denominator == 1:
        return math.log(x.numerator)
    # a single float division avoids cancellation when x is close to 1
    try:
        q = x.numerator / x.denominator
    except OverflowError:
        q = math.inf
    if 0.0 < q < math.inf:
        return math.log(q)
    return math.log(x.numerator) - math.log(x.denominator)
