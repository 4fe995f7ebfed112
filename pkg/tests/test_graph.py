import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import random_graph
from helpers import atlas_graphs, brute_four_cycles, cycles_as_edge_sets
from unitdist.catalog import CATALOG_IDS, catalog_get
from unitdist.graph import (Complete, CompleteBipartite, CompleteTripartite, Cycle, Empty, GeneralizedWheel,
                            Graph, GraphError, InvalidSpecError, JoinOfCycles, MobiusLadder, Path, Wheel,
                            chromatic_number, four_cycles, join, make_family, parse_family)


def test_graph_rejects_loops_duplicates_and_range():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])


def test_edges_are_canonical():
    g = Graph(4, [(3, 1), (2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))


def test_edgelist_round_trip():
    g = catalog_get("durer")
    text = g.to_edgelist()
    assert text.splitlines()[0] == "12 18"
    assert Graph.from_edgelist(text) == g


def test_edgelist_header_mismatch():
    with pytest.raises(GraphError):
        Graph.from_edgelist("3 2\n0 1\n")


def test_complete_4():
    g = make_family(Complete(4))
    assert (g.n, g.m) == (4, 6)
    assert set(g.degrees()) == {3}


def test_wheel_6():
    g = make_family(Wheel(6))
    assert (g.n, g.m) == (7, 12)
    assert g.degrees()[6] == 6  # hub is last


def test_mobius_ladder_6():
    g = make_family(MobiusLadder(6))
    assert (g.n, g.m) == (6, 9)
    assert {(0, 3), (1, 4), (2, 5)} <= g.edge_set()
    assert g == catalog_get("mobius6")


@pytest.mark.parametrize("spec", [Cycle(2), Wheel(2), MobiusLadder(7), MobiusLadder(4), Complete(0),
                                  CompleteBipartite(0, 3), JoinOfCycles(2, 5)])
def test_family_out_of_range(spec):
    with pytest.raises(InvalidSpecError):
        make_family(spec)


def test_parse_family():
    assert parse_family("wheel:6") == Wheel(6)
    assert parse_family("tripartite:3,3,4") == CompleteTripartite(3, 3, 4)
    with pytest.raises(InvalidSpecError):
        parse_family("hypercube:3")
    with pytest.raises(InvalidSpecError):
        parse_family("wheel:a")


def test_join_k1_cycle_is_wheel_under_numbering():
    # hub first in the join, last in the wheel
    w = join(make_family(Empty(1)), make_family(Cycle(6)))
    perm = [6] + list(range(6))
    assert w.relabel(perm) == make_family(Wheel(6))
    assert join(make_family(Cycle(6)), make_family(Empty(1))) == make_family(Wheel(6))


def test_join_empty_2_3_is_k23():
    g = join(Graph(2), Graph(3))
    assert g.m == 6
    assert g == make_family(CompleteBipartite(2, 3))


def test_join_c4_c4():
    g = join(make_family(Cycle(4)), make_family(Cycle(4)))
    assert (g.n, g.m) == (8, 24)


@given(st.integers(0, 7), st.integers(0, 7), st.floats(0, 1), st.floats(0, 1), st.integers(0, 2 ** 32))
def test_join_edge_count(n1, n2, p1, p2, seed):
    rng = random.Random(seed)
    g1, g2 = random_graph(n1, p1, rng), random_graph(n2, p2, rng)
    j = join(g1, g2)
    assert j.n == n1 + n2
    assert j.m == g1.m + g2.m + n1 * n2


def test_family_numbering_matches_networkx():
    ref = nx.cycle_graph(5)
    ref.add_edges_from((h, r) for h in (5, 6) for r in range(5))
    assert nx.is_isomorphic(nx.Graph(make_family(GeneralizedWheel(2, 5)).edges), ref)
    assert nx.is_isomorphic(nx.Graph(make_family(CompleteTripartite(1, 2, 3)).edges),
                            nx.complete_multipartite_graph(1, 2, 3))
    assert make_family(Path(4)).edges == ((0, 1), (1, 2), (2, 3))


# four_cycles -------------------------------------------------------------


def test_four_cycles_c4():
    assert four_cycles(make_family(Cycle(4))) == [(0, 1, 2, 3)]


def test_four_cycles_k4():
    assert len(four_cycles(make_family(Complete(4)))) == 3


def test_four_cycles_mobius6_contains_the_ladder_rhombi():
    cyc = four_cycles(catalog_get("mobius6"))
    # the 6-vertex Mobius ladder is K_{3,3}, which has nine 4-cycles
    assert len(cyc) == 9
    assert {(0, 1, 4, 3), (1, 2, 5, 4), (0, 3, 2, 5)} <= set(cyc)


def test_four_cycles_canonical_form():
    for c in four_cycles(catalog_get("goldner_harary")):
        assert c[0] == min(c)
        assert c[1] < c[3]


def test_four_cycles_match_brute_force_on_atlas():
    for g in atlas_graphs(7):
        cyc = four_cycles(g)
        assert len(cyc) == len(set(cyc))
        assert cycles_as_edge_sets(cyc) == brute_four_cycles(g)


@pytest.mark.parametrize("n", [8, 9, 10])
def test_four_cycles_match_brute_force_random(n):
    rng = random.Random(n)
    for _ in range(12):
        g = random_graph(n, rng.choice([0.2, 0.4, 0.6]), rng)
        assert cycles_as_edge_sets(four_cycles(g)) == brute_four_cycles(g)
        assert len(four_cycles(g)) == len(brute_four_cycles(g))


@pytest.mark.parametrize("key", CATALOG_IDS)
def test_four_cycles_match_brute_force_catalog(key):
    g = catalog_get(key)
    assert cycles_as_edge_sets(four_cycles(g)) == brute_four_cycles(g)


# chromatic number ----------------------------------------------------------


def test_chromatic_small():
    assert chromatic_number(make_family(Complete(4))) == 4
    assert chromatic_number(make_family(Cycle(5))) == 3
    assert chromatic_number(make_family(Cycle(6))) == 2
    assert chromatic_number(Graph(3)) == 1
    assert chromatic_number(Graph(0)) == 0


def test_chromatic_grotzsch():
    assert chromatic_number(catalog_get("grotzsch")) == 4


def test_chromatic_limit():
    with pytest.raises(GraphError):
        chromatic_number(make_family(Cycle(30)))


def _brute_chi(g):
    from itertools import product
    for k in range(1, g.n + 1):
        for c in product(range(k), repeat=g.n):
            if all(c[u] != c[v] for u, v in g.edges):
                return k
    return 0


def test_chromatic_matches_brute_force_on_atlas_n6():
    for g in atlas_graphs(6):
        assert chromatic_number(g) == _brute_chi(g)


def test_brooks_on_atlas():
    for g in atlas_graphs(7):
        if g.m == 0:
            continue
        chi, delta = chromatic_number(g), g.max_degree()
        assert chi <= delta + 1
        is_complete = g.m == g.n * (g.n - 1) // 2
        is_odd_cycle = g.n % 2 == 1 and g.m == g.n and set(g.degrees()) == {2}
        if g.is_connected() and not is_complete and not is_odd_cycle:
            assert chi <= delta


def test_structure_queries():
    g = make_family(Path(4))
    assert not g.has_cycle() and g.is_connected()
    assert make_family(Cycle(5)).has_cycle()
    assert catalog_get("grotzsch").is_triangle_free()
    assert not make_family(Complete(3)).is_triangle_free()
    assert Graph(4, [(0, 1)]).component_count() == 3
