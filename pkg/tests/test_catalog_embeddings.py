from fractions import Fraction

import mpmath
import pytest
from mpmath import mpf, sqrt

from unitdist.catalog import PAPER_IDS, PLANAR_IDS, catalog_get
from unitdist.embedding import FLOAT64, RATIONAL, EmbeddingError, decimal, verify, verify_exact
from unitdist.catalog_embeddings import (CONSTANT_IDS, SOIFER_CAPTION_POLY, SOIFER_POLY, TABLE_NOTES, PolyRootError,
                                       constant, default_tolerance, paper_embedding, polyroot)

# frozen reference values (50-digit mpmath evaluations of the closed forms)
ORACLE = {
    "chvatal_a": "1.0823922002923939687994464107327788401221",
    "chvatal_b": "4.6376666446222546247",
    "chvatal_c": "0.94566117132411554723",
    "grotzsch_b": "0.16245984811645316308",
    "grotzsch_c": "0.9457416090031758133",
    "hoffman_s": "8.5446749800284002645",
    "soifer_alpha": "0.052090101172080915155",
}


@pytest.mark.parametrize("key", PAPER_IDS)
def test_every_embedding_verifies(key):
    e = paper_embedding(key)
    assert e.dim == (2 if key in PLANAR_IDS else 3)
    assert verify(catalog_get(key), e, default_tolerance(key)).passed


@pytest.mark.parametrize("key", PAPER_IDS)
def test_verdict_stable_from_50_to_100_digits(key):
    g, tol = catalog_get(key), default_tolerance(key)
    assert verify(g, paper_embedding(key, decimal(50)), tol).passed
    assert verify(g, paper_embedding(key, decimal(100)), tol).passed


@pytest.mark.parametrize("key", [k for k in PAPER_IDS if k != "heawood"])
def test_closed_forms_are_unit_to_40_digits(key):
    r = verify(catalog_get(key), paper_embedding(key, decimal(50)))
    assert r.max_edge_error < 1e-40


def test_heawood_needs_transcription_tolerance():
    r = verify(catalog_get("heawood"), paper_embedding("heawood"))
    assert not r.passed
    assert 1e-12 < r.max_edge_error < 1e-7


def test_durer_a7():
    with mpmath.workdps(50):
        e = paper_embedding("durer", decimal(50))
        a7 = e.points[6]
        assert abs(a7[0] - sqrt(3) / 6) < mpf(10) ** -45
        assert abs(a7[1] - sqrt(33) / 6) < mpf(10) ** -45
        d2 = (e.points[0][0] - a7[0]) ** 2 + (e.points[0][1] - a7[1]) ** 2
        assert abs(d2 - 1) < mpf(10) ** -45


def test_heawood_table_entries():
    e = paper_embedding("heawood")
    assert e.points[2] == (1.094164572, 0.8043434978)
    assert e.points[10] == pytest.approx((0.3, 2 * 6 ** 0.5 / 5), abs=1e-15)
    assert e.points[11][0] == -0.5 and e.points[12][0] == 0.5


def test_herschel_rational_only():
    assert verify_exact(catalog_get("herschel"), paper_embedding("herschel", RATIONAL)).passed
    assert paper_embedding("herschel", RATIONAL).points[1] == (Fraction(-9, 25), Fraction(12, 25), Fraction(4, 5))
    with pytest.raises(EmbeddingError):
        paper_embedding("durer", RATIONAL)


def test_mobius6_has_no_published_embedding():
    with pytest.raises(EmbeddingError):
        paper_embedding("mobius6")


def test_hoffman_vertex_1_x():
    s = constant("hoffman_s").value
    with mpmath.workdps(50):
        x = -4 * (s ** 2 - 1) / (5 * (s ** 2 + 1))
    assert abs(float(x) - (-0.7783817294)) < 1e-8
    assert abs(paper_embedding("hoffman").points[1][0] - (-0.7783817294)) < 1e-8


def test_grotzsch_b_matches_drawing():
    b = float(constant("grotzsch_b").value)
    assert abs(-2 * b - (-0.3249196964)) < 1e-9
    assert paper_embedding("grotzsch").points[4][0] == pytest.approx(-0.3249196964, abs=1e-9)


@pytest.mark.parametrize("name", CONSTANT_IDS)
def test_constants_match_oracle_and_relation(name):
    c = constant(name, 50)
    with mpmath.workdps(50):
        ref = mpf(ORACLE[name])
        assert abs(c.value - ref) < mpf(10) ** -(len(ORACLE[name]) - 4)
    assert c.residual() < mpf(10) ** -45


def test_soifer_alpha_five_figures():
    assert mpmath.nstr(constant("soifer_alpha").value, 4) == "0.05209"


def test_unknown_constant():
    with pytest.raises(KeyError):
        constant("pi")


def test_polyroot_sqrt2():
    r = polyroot([1, 0, -2], (1, 2), 50)
    with mpmath.workdps(50):
        assert abs(r - sqrt(2)) < mpf(10) ** -49
    assert mpmath.nstr(r, 11) == "1.4142135624"


def test_polyroot_printed_quartic_roots():
    # the quartic as printed has roots 0.0557... and 0.6752... on (0, 1)
    small = polyroot(SOIFER_CAPTION_POLY, (0, Fraction(1, 10)), 50)
    big = polyroot(SOIFER_CAPTION_POLY, (Fraction(1, 2), 1), 50)
    assert abs(float(small) - 0.0557432501734962) < 1e-15
    assert abs(float(big) - 0.675228753237714) < 1e-15
    with mpmath.workdps(50):
        for z in (small, big):
            assert abs(27 * z ** 4 + 18 * z ** 3 - 18 * z + 1) < mpf(10) ** -45


def test_polyroot_deterministic_and_bracket_error():
    assert polyroot(SOIFER_POLY, (0, 0.1), 60) == polyroot(SOIFER_POLY, (0, 0.1), 60)
    with pytest.raises(PolyRootError):
        polyroot([1, 0, 1], (-1, 1), 30)


def test_soifer_constraints_at_50_digits():
    g = catalog_get("soifer")
    e = paper_embedding("soifer", decimal(50))
    with mpmath.workdps(50):
        for u, v in g.edges:
            d2 = mpmath.fsum((a - b) ** 2 for a, b in zip(e.points[u], e.points[v]))
            assert abs(d2 - 1) < mpf(10) ** -40


def test_table_notes_cover_every_id():
    assert set(TABLE_NOTES) == set(PAPER_IDS)
    assert TABLE_NOTES["soifer"] and TABLE_NOTES["heawood"]


def test_float_precision_default():
    assert paper_embedding("durer").precision == FLOAT64
