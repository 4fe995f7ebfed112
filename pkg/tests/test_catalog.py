import networkx as nx
import pytest

from unitdist.catalog import CATALOG_IDS, PLANAR_IDS, UnknownCatalogId, catalog_get, check_id
from unitdist.graph import chromatic_number, triangle_count

# (n, m, sorted distinct degrees), read off the drawings
SHAPES = {
    "durer": (12, 18, [3]),
    "franklin": (12, 18, [3]),
    "desargues": (20, 30, [3]),
    "heawood": (14, 21, [3]),
    "tietze": (12, 24, [3, 4, 5]),
    "chvatal": (12, 24, [4]),
    "goldner_harary": (11, 27, [3, 6, 8]),
    "herschel": (11, 18, [3, 4]),
    "fritsch": (9, 21, [4, 5]),
    "grotzsch": (11, 20, [3, 4, 5]),
    "hoffman": (16, 32, [4]),
    "soifer": (9, 20, [4, 5]),
    "mobius6": (6, 9, [3]),
}

# exact chromatic numbers, checked once by exhaustive colouring
CHI = {"durer": 3, "franklin": 2, "desargues": 2, "heawood": 2, "tietze": 3, "chvatal": 4,
       "goldner_harary": 4, "herschel": 2, "fritsch": 4, "grotzsch": 4, "hoffman": 2, "soifer": 4, "mobius6": 2}


@pytest.mark.parametrize("key", CATALOG_IDS)
def test_shape(key):
    g = catalog_get(key)
    n, m, degs = SHAPES[key]
    assert (g.n, g.m) == (n, m)
    assert sorted(set(g.degrees())) == degs
    assert g.is_connected()


@pytest.mark.parametrize("key", CATALOG_IDS)
def test_chromatic(key):
    g = catalog_get(key)
    assert chromatic_number(g) == CHI[key]
    assert (CHI[key] == 2) == nx.is_bipartite(nx.Graph(g.edges))


def test_planar_catalog_is_cubic_except_tietze_drawing():
    for key in PLANAR_IDS:
        degs = set(catalog_get(key).degrees())
        assert degs == {3} or key == "tietze"


def test_heawood_girth_six():
    h = nx.Graph(catalog_get("heawood").edges)
    assert nx.girth(h) == 6
    assert nx.is_isomorphic(h, nx.heawood_graph())


def test_named_graphs_match_networkx():
    assert nx.is_isomorphic(nx.Graph(catalog_get("desargues").edges), nx.desargues_graph())
    assert nx.is_isomorphic(nx.Graph(catalog_get("franklin").edges), nx.LCF_graph(12, [5, -5], 6))
    assert nx.is_isomorphic(nx.Graph(catalog_get("chvatal").edges), nx.chvatal_graph())
    gp62 = nx.Graph()
    for i in range(6):
        gp62.add_edges_from([(i, (i + 1) % 6), (i, i + 6), (i + 6, (i + 2) % 6 + 6)])
    assert nx.is_isomorphic(nx.Graph(catalog_get("durer").edges), gp62)


def test_grotzsch_is_mycielskian_of_c5():
    g = nx.Graph(catalog_get("grotzsch").edges)
    assert nx.is_isomorphic(g, nx.mycielski_graph(4))
    assert triangle_count(catalog_get("grotzsch")) == 0


def test_unknown_id():
    with pytest.raises(UnknownCatalogId):
        catalog_get("petersen")
    assert check_id("Goldner-Harary") == "goldner_harary"
