"""Parallelogram argument against planar unit-distance embeddings.

Why the relations hold: let v0 v1 v2 v3 be a 4-cycle with unit sides in an
injective planar embedding, and write a = p1 - p0, b = p2 - p1,
c = p3 - p2, d = p0 - p3. Then a + b = -(c + d). If a + b = 0 then p2 = p0.
Otherwise, two unit vectors in the plane are fixed up to order by their
sum, so {a, b} = {-c, -d}. The choice a = -d gives p1 = p3, which
injectivity rules out. That leaves a = -c, i.e. p0 + p2 = p1 + p3.

Every coordinate obeys the same linear relations. If some e_i - e_j is a
rational combination of them, vertices i and j must coincide, so no planar
embedding exists. All arithmetic here is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .graph import Graph, four_cycles


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class RhombusRelation:
    cycle: tuple[int, int, int, int]

    def vector(self, n: int) -> list[int]:
        v0, v1, v2, v3 = self.cycle
        row = [0] * n
        row[v0] += 1
        row[v2] += 1
        row[v1] -= 1
        row[v3] -= 1
        return row

    def __str__(self):
        a, b, c, d = (x + 1 for x in self.cycle)
        return f"A{a} + A{c} = A{b} + A{d}"


def relations(g: Graph) -> list[RhombusRelation]:
    """One relation per 4-cycle, in the canonical order of four_cycles."""
    return [RhombusRelation(c) for c in four_cycles(g)]


@dataclass(frozen=True)
class RhombusCertificate:
    """sum(coefficients[k] * relation[indices[k]]) == e_i - e_j."""

    pair: tuple[int, int]
    indices: tuple[int, ...]
    cycles: tuple[tuple[int, int, int, int], ...]
    coefficients: tuple[Fraction, ...]

    def to_json(self) -> str:
        data = {
            "pair": list(self.pair),
            "relations": [
                {"index": k, "cycle": list(c), "coefficient": f"{q.numerator}/{q.denominator}"}
                for k, c, q in zip(self.indices, self.cycles, self.coefficients)
            ],
        }
        return json.dumps(data, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RhombusCertificate":
        try:
            d = json.loads(text)
            rels = d["relations"]
            return cls(tuple(d["pair"]), tuple(int(r["index"]) for r in rels),
                       tuple(tuple(r["cycle"]) for r in rels),
                       tuple(Fraction(r["coefficient"]) for r in rels))
        except (ValueError, KeyError, TypeError) as exc:
            raise CertificateError(f"malformed certificate: {exc}") from None


@dataclass(frozen=True)
class Contradiction:
    certificate: RhombusCertificate
    forced_pairs: tuple[tuple[int, int], ...]
    rank: int
    relation_count: int


@dataclass(frozen=True)
class Inconclusive:
    rank: int
    relation_count: int
    forced_pairs: tuple = ()


ProverResult = Contradiction | Inconclusive


class _RowSpace:
    """Reduced row echelon basis of the relation rows, tracking how each basis
    row combines the original relations."""

    def __init__(self, rows: Sequence[Sequence[int]], n: int):
        m = len(rows)
        aug = [[Fraction(x) for x in r] + [Fraction(int(i == k)) for k in range(m)] for i, r in enumerate(rows)]
        pivots = []
        r = 0
        for col in range(n):
            piv = next((i for i in range(r, m) if aug[i][col] != 0), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = 1 / aug[r][col]
            aug[r] = [x * inv for x in aug[r]]
            for i in range(m):
                if i != r and aug[i][col] != 0:
                    f = aug[i][col]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
            pivots.append(col)
            r += 1
        self.n, self.m = n, m
        self.pivots = pivots
        self.basis = aug[:r]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def express(self, target: Sequence[int]):
        """Coefficients on the original relations giving ``target``, or None."""
        t = [Fraction(x) for x in target]
        coeffs = [Fraction(0)] * self.m
        for row, col in zip(self.basis, self.pivots):
            f = t[col]
            if f:
                t = [a - f * b for a, b in zip(t, row[:self.n])]
                coeffs = [c + f * b for c, b in zip(coeffs, row[self.n:])]
        if any(t):
            return None
        return coeffs


def _diff(n: int, i: int, j: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    v[j] = -1
    return v


def forced_pairs(g: Graph) -> tuple[tuple[int, int], ...]:
    rels = relations(g)
    space = _RowSpace([r.vector(g.n) for r in rels], g.n)
    return tuple(p for p in combinations(range(g.n), 2) if space.express(_diff(g.n, *p)) is not None)


SMALL_SUPPORT = 3
SMALL_SEARCH_LIMIT = 5000


def _irredundant(g: Graph, rels, coeffs, target):
    """A short support for the certificate.

    Supports of up to SMALL_SUPPORT relations are searched exhaustively (in
    lexicographic order) while that stays cheap; otherwise relations are
    dropped one at a time while the target stays expressible.
    """
    vecs = [r.vector(g.n) for r in rels]
    for size in range(1, SMALL_SUPPORT + 1):
        if comb(len(rels), size) > SMALL_SEARCH_LIMIT:
            break
        for subset in combinations(range(len(rels)), size):
            c = _RowSpace([vecs[s] for s in subset], g.n).express(target)
            if c is not None and all(c):
                return list(zip(subset, c))
    support = [k for k, c in enumerate(coeffs) if c]
    for k in sorted(support, reverse=True):
        trial = [s for s in support if s != k]
        sub = _RowSpace([rels[s].vector(g.n) for s in trial], g.n)
        if sub.express(target) is not None:
            support = trial
    sub = _RowSpace([rels[s].vector(g.n) for s in support], g.n)
    c = sub.express(target)
    return [(s, q) for s, q in zip(support, c) if q]


def prove(g: Graph, pair: tuple[int, int] | None = None) -> ProverResult:
    """Look for a vertex pair the rhombus relations force together.

    Pairs are tried in lexicographic order unless ``pair`` names one. A
    Contradiction always carries a certificate that passed
    verify_certificate; Inconclusive says nothing about planarity.
    """
    rels = relations(g)
    space = _RowSpace([r.vector(g.n) for r in rels], g.n)
    forced = tuple(p for p in combinations(range(g.n), 2) if space.express(_diff(g.n, *p)) is not None)
    if pair is not None:
        i, j = sorted(pair)
        if i == j or not (0 <= i and j < g.n):
            raise CertificateError(f"bad vertex pair {pair}")
        candidates = [(i, j)] if (i, j) in forced else []
    else:
        candidates = list(forced[:1])
    if not candidates:
        return Inconclusive(space.rank, len(rels), forced)
    i, j = candidates[0]
    target = _diff(g.n, i, j)
    terms = _irredundant(g, rels, space.express(target), target)
    cert = RhombusCertificate((i, j), tuple(k for k, _ in terms), tuple(rels[k].cycle for k, _ in terms),
                              tuple(q for _, q in terms))
    if not verify_certificate(g, cert):
        raise AssertionError("internal error: certificate failed its own check")
    return Contradiction(cert, forced, space.rank, len(rels))


def verify_certificate(g: Graph, c: RhombusCertificate) -> bool:
    """Exact check that the weighted relations sum to e_i - e_j with i != j."""
    rels = relations(g)
    for k in c.indices:
        if not 0 <= k < len(rels):
            raise CertificateError(f"relation index {k} out of range (graph has {len(rels)})")
    i, j = c.pair
    if i == j or not (0 <= i < g.n and 0 <= j < g.n):
        return False
    if len(c.indices) != len(c.coefficients) or len(c.cycles) != len(c.indices):
        return False
    if not any(c.coefficients):
        return False
    total = [Fraction(0)] * g.n
    for k, cyc, q in zip(c.indices, c.cycles, c.coefficients):
        if tuple(cyc) != rels[k].cycle:
            return False
        for v, x in enumerate(rels[k].vector(g.n)):
            total[v] += q * x
    return total == [Fraction(x) for x in _diff(g.n, i, j)]


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def proof_text(g: Graph, c: RhombusCertificate) -> str:
    """Human-readable proof with 1-based vertex labels."""
    lines = ["Suppose the graph has a unit-distance embedding in the plane.",
             "Each quadrilateral below has four unit sides, so it is a rhombus",
             "and its diagonal sums agree:"]
    for cyc, q in zip(c.cycles, c.coefficients):
        label = "".join(str(v + 1) for v in cyc) if g.n < 10 else "-".join(str(v + 1) for v in cyc)
        lines.append(f"  rhombus {label}: {RhombusRelation(cyc)}    (weight {_fmt(q)})")
    i, j = c.pair
    lines.append(f"The weighted sum of these identities is A{i + 1} - A{j + 1} = 0.")
    lines.append(f"Hence vertices {i + 1} and {j + 1} coincide")
    return "\n".join(lines)
