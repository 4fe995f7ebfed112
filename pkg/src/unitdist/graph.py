"""Simple undirected graphs, parametric families, joins and structural queries."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(ValueError):
    pass


class InvalidSpecError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """A graph on vertices ``0..n-1`` with a canonical sorted edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise GraphError(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set()

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        es = self.edge_set()
        for pair in combinations(range(self.n), 2):
            if pair not in es:
                yield pair

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm must be a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def has_cycle(self) -> bool:
        # a forest has exactly n - components edges
        return self.m > self.n - self.component_count()

    def component_count(self) -> int:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.n
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count -= 1
        return count

    def is_triangle_free(self) -> bool:
        adj = self.adjacency()
        return not any(adj[u] & adj[v] for u, v in self.edges)

    def to_edgelist(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> "Graph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows or len(rows[0]) != 2:
            raise GraphError("edge list must start with a 'n m' header line")
        try:
            n, m = int(rows[0][0]), int(rows[0][1])
            edges = [(int(a), int(b)) for a, b in rows[1:]]
        except ValueError as exc:
            raise GraphError(f"malformed edge list: {exc}") from None
        if len(edges) != m:
            raise GraphError(f"header declares {m} edges, found {len(edges)}")
        return cls(n, edges)


# Family specs ---------------------------------------------------------------


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    m: int
    n: int


@dataclass(frozen=True)
class CompleteTripartite:
    m: int
    n: int
    p: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Empty:
    n: int


@dataclass(frozen=True)
class Wheel:
    """W_{1,n}: an n-cycle plus one hub."""

    n: int


@dataclass(frozen=True)
class GeneralizedWheel:
    """W_{m,n}: m independent hubs joined to an n-cycle."""

    m: int
    n: int


@dataclass(frozen=True)
class MobiusLadder:
    n: int


@dataclass(frozen=True)
class JoinOfCycles:
    m: int
    n: int


FamilySpec = (
    Complete | CompleteBipartite | CompleteTripartite | Cycle | Path | Empty
    | Wheel | GeneralizedWheel | MobiusLadder | JoinOfCycles
)

_FAMILY_NAMES = {
    "complete": Complete,
    "bipartite": CompleteBipartite,
    "tripartite": CompleteTripartite,
    "cycle": Cycle,
    "path": Path,
    "empty": Empty,
    "wheel": Wheel,
    "gwheel": GeneralizedWheel,
    "mobius": MobiusLadder,
    "cycles_join": JoinOfCycles,
}


def parse_family(text: str) -> FamilySpec:
    """Parse ``wheel:6``, ``bipartite:2,3`` style family references."""
    name, _, args = text.partition(":")
    cls = _FAMILY_NAMES.get(name.strip().lower())
    if cls is None:
        raise InvalidSpecError(f"unknown family {name!r}; known: {', '.join(sorted(_FAMILY_NAMES))}")
    try:
        params = [int(a) for a in args.split(",") if a.strip()]
        return cls(*params)
    except (TypeError, ValueError) as exc:
        raise InvalidSpecError(f"bad parameters for {name}: {exc}") from None


def _complete_multipartite(sizes) -> Graph:
    g = Graph(0)
    for s in sizes:
        g = join(g, Graph(s))
    return g


def _cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_family(spec: FamilySpec) -> Graph:
    """Build the standard graph of a family.

    Numbering: cycles run 0..n-1 in cyclic order; a wheel has its rim first
    and the hub last; generalized wheels put the m hubs after the rim; the
    Mobius ladder is the rim 0..n-1 plus chords i -- i+n/2; multipartite
    graphs list their parts consecutively.
    """
    match spec:
        case Complete(n):
            _need(n >= 1, spec)
            return Graph(n, combinations(range(n), 2))
        case CompleteBipartite(m, n):
            _need(m >= 1 and n >= 1, spec)
            return _complete_multipartite([m, n])
        case CompleteTripartite(m, n, p):
            _need(min(m, n, p) >= 1, spec)
            return _complete_multipartite([m, n, p])
        case Cycle(n):
            _need(n >= 3, spec)
            return _cycle(n)
        case Path(n):
            _need(n >= 1, spec)
            return Graph(n, [(i, i + 1) for i in range(n - 1)])
        case Empty(n):
            _need(n >= 0, spec)
            return Graph(n)
        case Wheel(n):
            _need(n >= 3, spec)
            return join(_cycle(n), Graph(1))
        case GeneralizedWheel(m, n):
            _need(m >= 1 and n >= 3, spec)
            return join(_cycle(n), Graph(m))
        case MobiusLadder(n):
            _need(n >= 6 and n % 2 == 0, spec)
            half = n // 2
            return Graph(n, list(_cycle(n).edges) + [(i, i + half) for i in range(half)])
        case JoinOfCycles(m, n):
            _need(m >= 3 and n >= 3, spec)
            return join(_cycle(m), _cycle(n))
    raise InvalidSpecError(f"not a family spec: {spec!r}")


def _need(ok: bool, spec) -> None:
    if not ok:
        raise InvalidSpecError(f"parameters out of range: {spec!r}")


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; g2 is shifted by g1.n."""
    k = g1.n
    edges = list(g1.edges)
    edges += [(u + k, v + k) for u, v in g2.edges]
    edges += [(u, k + v) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, edges)


# Structural queries ---------------------------------------------------------


def _canonical_cycle(c: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    rots = [c[i:] + c[:i] for i in range(4)]
    rots += [tuple(reversed(r)) for r in rots]
    return min(rots)


def four_cycles(g: Graph) -> list[tuple[int, int, int, int]]:
    """All 4-cycles, each once, as the lexicographically smallest rotation/reflection.

    In canonical form the smallest vertex comes first and its smaller cycle
    neighbour second. Chords are allowed.
    """
    adj = g.adjacency()
    found = set()
    # a 4-cycle a-b-c-d is two paths a-b-c and a-d-c through distinct middles
    for a in range(g.n):
        for c in range(a + 1, g.n):
            mids = sorted(w for w in adj[a] & adj[c] if w > a)
            for b, d in combinations(mids, 2):
                found.add(_canonical_cycle((a, b, c, d)))
    return sorted(found)


def triangle_count(g: Graph) -> int:
    adj = g.adjacency()
    return sum(len(adj[u] & adj[v]) for u, v in g.edges) // 3


def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR greedy colouring; gives an upper bound on the chromatic number."""
    adj = g.adjacency()
    colors = [-1] * g.n
    seen: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        u = max((v for v in range(g.n) if colors[v] < 0), key=lambda v: (len(seen[v]), len(adj[v]), -v))
        c = 0
        while c in seen[u]:
            c += 1
        colors[u] = c
        for w in adj[u]:
            seen[w].add(c)
    return colors


def greedy_clique(g: Graph) -> list[int]:
    adj = g.adjacency()
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(cand, key=lambda w: (len(adj[w] & cand), -w))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


CHROMATIC_LIMIT = 24


def chromatic_number(g: Graph, limit: int = CHROMATIC_LIMIT) -> int:
    """Exact chromatic number by DSATUR-ordered backtracking.

    The search is bracketed between a greedy clique (lower) and a DSATUR
    colouring (upper) and tries to improve on the upper bound one colour at
    a time.
    """
    if g.n > limit:
        raise GraphError(f"chromatic_number limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    lo = len(greedy_clique(g))
    hi = max(greedy_coloring(g)) + 1
    adj = g.adjacency()
    while hi > lo and _colorable(g.n, adj, hi - 1):
        hi -= 1
    return hi


def _colorable(n: int, adj: list[set[int]], k: int) -> bool:
    colors = [-1] * n

    def pick():
        best, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                sat = len({colors[w] for w in adj[v] if colors[w] >= 0})
                kv = (sat, len(adj[v]))
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        forbidden = {colors[w] for w in adj[v]}
        # a fresh colour is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c not in forbidden:
                colors[v] = c
                if rec(done + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
        return False

    return rec(0, 0)
