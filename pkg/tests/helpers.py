"""Brute-force oracles shared by the tests."""

from itertools import combinations, permutations

import networkx as nx

from unitdist.graph import Graph


def atlas_graphs(max_n=7):
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= max_n:
            yield Graph(h.number_of_nodes(), h.edges())


def brute_four_cycles(g):
    """Every ordered 4-tuple that closes a cycle, folded to a frozenset of its edge set."""
    found = set()
    for quad in permutations(range(g.n), 4):
        if all(g.has_edge(quad[i], quad[(i + 1) % 4]) for i in range(4)):
            found.add(frozenset(frozenset((quad[i], quad[(i + 1) % 4])) for i in range(4)))
    return found


def cycles_as_edge_sets(cycles):
    return {frozenset(frozenset((c[i], c[(i + 1) % 4])) for i in range(4)) for c in cycles}


def line_embeddable(g):
    """Exhaustive search for an injective unit-distance map to the line.

    Each component is laid out by +-1 steps along a BFS tree (every sign
    pattern is tried); components are then spread far apart at non-integer
    offsets, so they never interact.
    """
    adj = g.adjacency()
    seen = set()
    for root in range(g.n):
        if root in seen:
            continue
        order, parent = [root], {root: None}
        for u in order:
            for w in sorted(adj[u]):
                if w not in parent:
                    parent[w] = u
                    order.append(w)
        seen.update(order)
        if not _component_fits(g, order, parent):
            return False
    return True


def _component_fits(g, order, parent):
    steps = order[1:]
    for signs in range(2 ** len(steps)):
        pos = {order[0]: 0}
        for k, v in enumerate(steps):
            pos[v] = pos[parent[v]] + (1 if signs >> k & 1 else -1)
        ok = len(set(pos.values())) == len(pos)
        if ok:
            for a, b in combinations(order, 2):
                if (abs(pos[a] - pos[b]) == 1) != g.has_edge(a, b):
                    ok = False
                    break
        if ok:
            return True
    return False
