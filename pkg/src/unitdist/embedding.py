"""Point assignments and the strict unit-distance check.

A graph is realized by an embedding when edges, and only edges, have unit
length and no two vertices share a point. The check runs at the
embedding's own precision: machine floats, mpmath numbers with a fixed
number of digits, or exact fractions.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Sequence

import mpmath

from .graph import Graph


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class Precision:
    kind: str  # "float64" | "decimal" | "rational"
    digits: int = 0

    def __post_init__(self):
        if self.kind not in ("float64", "decimal", "rational"):
            raise EmbeddingError(f"unknown precision kind {self.kind!r}")
        if self.kind == "decimal" and self.digits < 1:
            raise EmbeddingError("decimal precision needs a positive digit count")

    def __str__(self):
        return f"decimal:{self.digits}" if self.kind == "decimal" else self.kind

    @classmethod
    def parse(cls, text: str) -> "Precision":
        text = text.strip().lower()
        if text in ("float", "float64"):
            return FLOAT64
        if text in ("rational", "exact"):
            return RATIONAL
        if text.startswith("decimal"):
            _, _, digits = text.partition(":")
            return decimal(int(digits) if digits else DEFAULT_DIGITS)
        raise EmbeddingError(f"unknown precision {text!r}")


DEFAULT_DIGITS = 50
FLOAT64 = Precision("float64")
RATIONAL = Precision("rational")


def decimal(digits: int = DEFAULT_DIGITS) -> Precision:
    return Precision("decimal", digits)


@dataclass(frozen=True)
class Embedding:
    dim: int
    points: tuple[tuple[Any, ...], ...]
    precision: Precision = FLOAT64

    def __init__(self, points: Sequence[Sequence[Any]], precision: Precision = FLOAT64, dim: int | None = None):
        pts = tuple(tuple(p) for p in points)
        if dim is None:
            dim = len(pts[0]) if pts else 0
        if dim < 1:
            raise EmbeddingError("embedding dimension must be at least 1")
        for i, p in enumerate(pts):
            if len(p) != dim:
                raise EmbeddingError(f"vertex {i} has {len(p)} coordinates, expected {dim}")
        pts = tuple(tuple(_coerce(x, precision) for x in p) for p in pts)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "precision", precision)

    def __len__(self):
        return len(self.points)

    def to_float(self) -> "Embedding":
        return Embedding([[float(x) for x in p] for p in self.points], FLOAT64, self.dim)

    def to_decimal(self, digits: int = DEFAULT_DIGITS) -> "Embedding":
        with mpmath.workdps(digits):
            pts = [[_to_mpf(x) for x in p] for p in self.points]
            return Embedding(pts, decimal(digits), self.dim)

    def relabel(self, perm: Sequence[int]) -> "Embedding":
        """Move the point of vertex ``v`` to index ``perm[v]``."""
        out = [None] * len(self.points)
        for v, p in enumerate(self.points):
            out[perm[v]] = p
        return Embedding(out, self.precision, self.dim)

    def to_json(self) -> str:
        def enc(x):
            if self.precision.kind == "rational":
                return f"{x.numerator}/{x.denominator}"
            if self.precision.kind == "decimal":
                return mpmath.nstr(x, self.precision.digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
            return float(x)

        data = {
            "dim": self.dim,
            "precision": str(self.precision),
            "coords": [[enc(x) for x in p] for p in self.points],
        }
        return json.dumps(data, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Embedding":
        try:
            data = json.loads(text)
            prec = Precision.parse(data.get("precision", "float64"))
            coords = data["coords"]
            dim = int(data.get("dim", len(coords[0]) if coords else 0))
        except (ValueError, KeyError, TypeError, IndexError) as exc:
            raise EmbeddingError(f"malformed embedding file: {exc}") from None
        if prec.kind == "decimal":
            with mpmath.workdps(prec.digits):
                return cls([[mpmath.mpf(str(x)) for x in p] for p in coords], prec, dim)
        return cls(coords, prec, dim)


def _coerce(x, precision: Precision):
    if precision.kind == "rational":
        if isinstance(x, float):
            raise EmbeddingError("rational embeddings need exact coordinates, got a float")
        try:
            return Fraction(x)
        except (TypeError, ValueError):
            raise EmbeddingError(f"not an exact rational coordinate: {x!r}") from None
    if precision.kind == "decimal":
        with mpmath.workdps(precision.digits):
            return _to_mpf(x)
    return float(x)


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, str):
        if "/" in x:
            return _to_mpf(Fraction(x))
        return mpmath.mpf(x)
    return mpmath.mpf(x)


@dataclass(frozen=True)
class ToleranceConfig:
    edge_tol: float = 1e-9
    nonedge_band: float = 1e-6
    coincidence_tol: float = 1e-6

    def __post_init__(self):
        if not (0 < self.edge_tol < self.nonedge_band):
            raise EmbeddingError("need 0 < edge_tol < nonedge_band")
        if self.coincidence_tol <= 0:
            raise EmbeddingError("coincidence_tol must be positive")


DEFAULT_TOLERANCE = ToleranceConfig()
# 10-digit transcribed coordinates
TRANSCRIBED_TOLERANCE = ToleranceConfig(edge_tol=1e-7)


@dataclass
class VerificationReport:
    passed: bool
    edge_violations: list[tuple[tuple[int, int], float]] = field(default_factory=list)
    nonedge_violations: list[tuple[tuple[int, int], float]] = field(default_factory=list)
    coincidences: list[tuple[tuple[int, int], float]] = field(default_factory=list)
    max_edge_error: float = 0.0
    edge_count: int = 0

    def summary(self) -> str:
        ok = self.edge_count - len(self.edge_violations)
        parts = [f"{ok}/{self.edge_count} edges OK"]
        parts.append("non-edges clear" if not self.nonedge_violations
                     else f"{len(self.nonedge_violations)} non-edges at unit distance")
        parts.append("injective" if not self.coincidences
                     else f"{len(self.coincidences)} coinciding pairs")
        return "; ".join(parts)


def _check_cover(g: Graph, e: Embedding) -> None:
    if e.dim < 1:
        raise EmbeddingError("embedding dimension must be at least 1")
    if len(e.points) < g.n:
        raise EmbeddingError(f"embedding has {len(e.points)} points but the graph has {g.n} vertices")


def _distance_fn(e: Embedding):
    kind = e.precision.kind
    if kind == "float64":
        return math.dist
    if kind == "decimal":
        def dist(p, q):
            return mpmath.sqrt(mpmath.fsum((a - b) ** 2 for a, b in zip(p, q)))
        return dist

    def dist(p, q):
        d2 = sum((a - b) ** 2 for a, b in zip(p, q))
        if d2 == 1:
            return mpmath.mpf(1)
        return mpmath.sqrt(mpmath.mpf(d2.numerator) / d2.denominator)
    return dist


def verify(g: Graph, e: Embedding, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> VerificationReport:
    """Check that edges have length 1, non-edges do not, and points are distinct."""
    _check_cover(g, e)
    digits = e.precision.digits if e.precision.kind == "decimal" else DEFAULT_DIGITS
    dist = _distance_fn(e)
    edges = g.edge_set()
    report = VerificationReport(passed=True, edge_count=g.m)
    with mpmath.workdps(digits):
        for i, j in combinations(range(g.n), 2):
            d = dist(e.points[i], e.points[j])
            err = abs(d - 1)
            if (i, j) in edges:
                report.max_edge_error = max(report.max_edge_error, float(err))
                if err > tol.edge_tol:
                    report.edge_violations.append(((i, j), float(d)))
            elif err < tol.nonedge_band:
                report.nonedge_violations.append(((i, j), float(d)))
            if d < tol.coincidence_tol:
                report.coincidences.append(((i, j), float(d)))
    report.passed = not (report.edge_violations or report.nonedge_violations or report.coincidences)
    return report


def verify_exact(g: Graph, e: Embedding) -> VerificationReport:
    """Exact check on squared distances; requires a rational embedding."""
    if e.precision.kind != "rational":
        raise EmbeddingError("verify_exact needs an embedding with rational precision")
    _check_cover(g, e)
    edges = g.edge_set()
    report = VerificationReport(passed=True, edge_count=g.m)
    for i, j in combinations(range(g.n), 2):
        d2 = sum((a - b) ** 2 for a, b in zip(e.points[i], e.points[j]))
        if (i, j) in edges:
            if d2 != 1:
                report.edge_violations.append(((i, j), math.sqrt(d2)))
                report.max_edge_error = max(report.max_edge_error, abs(math.sqrt(d2) - 1))
        elif d2 == 1:
            report.nonedge_violations.append(((i, j), 1.0))
        if d2 == 0:
            report.coincidences.append(((i, j), 0.0))
    report.passed = not (report.edge_violations or report.nonedge_violations or report.coincidences)
    return report
