"""Dimension intervals from family formulas, structure, embeddings and certificates."""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import DEFAULT_TOLERANCE, Embedding, ToleranceConfig, verify
from .graph import (Complete, CompleteBipartite, CompleteTripartite, FamilySpec, Graph, JoinOfCycles, Wheel,
                    chromatic_number, make_family)
from .prover import CertificateError, RhombusCertificate, verify_certificate


class DimensionError(ValueError):
    pass


def known_dimension(spec: FamilySpec) -> int | None:
    """Euclidean dimension of a family member when a closed form is known, else None."""
    match spec:
        case Complete(n) if n >= 1:
            return n - 1
        case CompleteBipartite(m, n) if min(m, n) >= 1:
            m, n = sorted((m, n))
            if m == 1:
                return 1 if n == 1 else 2
            if m == 2:
                return 2 if n == 2 else 3
            return 4
        case CompleteTripartite(m, n, p) if min(m, n, p) >= 3:
            return 6
        case Wheel(n) if n >= 3:
            return 2 if n == 6 else 3
        case JoinOfCycles(m, n) if min(m, n) >= 3:
            if m == n and m in (4, 5):
                return 4
            if m == n == 6:
                return 6
            return 5
    return None


@dataclass(frozen=True)
class DimensionBounds:
    lo: int
    hi: int
    lo_reason: str
    hi_reason: str

    def __str__(self):
        if self.lo == self.hi:
            return f"dim = {self.lo}  (lower: {self.lo_reason}; upper: {self.hi_reason})"
        return f"{self.lo} <= dim <= {self.hi}  (lower: {self.lo_reason}; upper: {self.hi_reason})"


# structural lower bounds never exceed what the plane-exclusion argument gives
STRUCTURAL_CAP = 3


def bounds(g: Graph, embedding: Embedding | None = None, certificate: RhombusCertificate | None = None,
           family: FamilySpec | None = None, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> DimensionBounds:
    """Combine every available rule; each bound keeps the reason that set it."""
    lo, lo_reason = 0, "structural: no edges"
    if g.m:
        lo, lo_reason = 1, "structural: has an edge"
    if g.max_degree() >= 3:
        lo, lo_reason = 2, "structural: a vertex of degree >= 3 does not fit on a line"
    elif g.has_cycle():
        lo, lo_reason = 2, "structural: a cycle does not fit on a line"
    if certificate is not None:
        try:
            ok = verify_certificate(g, certificate)
        except CertificateError as exc:
            raise DimensionError(f"the supplied certificate does not fit this graph: {exc}") from None
        if not ok:
            raise DimensionError("the supplied certificate does not verify")
        i, j = certificate.pair
        if lo < STRUCTURAL_CAP:
            lo, lo_reason = 3, f"certificate: rhombi force vertices {i + 1} and {j + 1} together in the plane"

    if g.m:
        hi, hi_reason = 2 * g.max_degree(), f"MaeharaRodl: 2 * max degree = {2 * g.max_degree()}"
    else:
        hi = 0 if g.n <= 1 else 1
        hi_reason = "structural: isolated points fit on a line"
    if embedding is not None:
        report = verify(g, embedding, tol)
        if not report.passed:
            raise DimensionError(f"the supplied embedding does not verify: {report.summary()}")
        if embedding.dim < hi:
            hi, hi_reason = embedding.dim, f"embedding: verified in dimension {embedding.dim}"
    if family is not None:
        if make_family(family) != g:
            raise DimensionError(f"graph is not the standard {family!r}")
        d = known_dimension(family)
        if d is not None:
            if d < hi:
                hi, hi_reason = d, f"formula: {family!r}"
            if d > lo:
                lo, lo_reason = d, f"formula: {family!r}"
    if lo > hi:
        raise DimensionError(f"inconsistent evidence: lower bound {lo} ({lo_reason}) exceeds upper bound "
                             f"{hi} ({hi_reason})")
    return DimensionBounds(lo, hi, lo_reason, hi_reason)


@dataclass(frozen=True)
class ConjectureReport:
    chi: int
    two_chi: int
    two_delta: int
    bounds: DimensionBounds
    consistent: bool          # lo <= 2 chi
    settled: bool             # hi <= 2 chi
    improves_on_degree: bool  # 2 chi < 2 Delta

    def __str__(self):
        lines = [f"chromatic number {self.chi}: 2*chi = {self.two_chi}, 2*max degree = {self.two_delta}",
                 f"bounds {self.bounds.lo}..{self.bounds.hi}",
                 "dim <= 2*chi: " + ("confirmed" if self.settled else
                                     "consistent (lower bound within reach)" if self.consistent else "VIOLATED"),
                 "2*chi beats the degree bound: " + ("yes" if self.improves_on_degree else "no")]
        return "\n".join(lines)


def conjecture_report(g: Graph, b: DimensionBounds) -> ConjectureReport:
    chi = chromatic_number(g)
    return ConjectureReport(chi, 2 * chi, 2 * g.max_degree(), b, b.lo <= 2 * chi, b.hi <= 2 * chi,
                            2 * chi < 2 * g.max_degree())
