import json
import math
import random

import mpmath
import numpy as np
import pytest

from conftest import random_graph
from unitdist.catalog import catalog_get
from unitdist.embedding import verify
from unitdist.graph import Cycle, Graph, make_family
from unitdist.solver import (ConvergenceError, Point, Problem, ProblemError, SolverConfig, chain_problem,
                             check_gradient, durer_problem, eval_expr, free_problem, jacobian, load_problem,
                             problem_from_dict, refine, residual_norm_of, residuals, solve, symmetric_problem)
from unitdist.symmetry import ChainSpec, SymmetrySpec

K2 = Graph(2, [(0, 1)])
A7 = (math.sqrt(3) / 6, math.sqrt(33) / 6)


def test_k2_on_the_line():
    p = free_problem(K2, 1)
    assert p.n_params == 1
    assert list(residuals(p, [1.0])) == [0.0]


def test_durer_residuals_at_a7():
    p = durer_problem()
    assert p.n_params == 2 and len(p.residual_edges) == 18
    hp = residuals(p, ["sqrt(3)/6", "sqrt(33)/6"], digits=40)
    assert np.max(np.abs(hp)) < 1e-15
    assert np.max(np.abs(residuals(p, A7))) < 4e-15


def test_durer_residuals_off_solution():
    p = durer_problem()
    r = residuals(p, [0.0, 1.0])
    a1a7 = p.residual_edges.index((0, 6))
    assert abs(r[a1a7] - 1 / 3) < 1e-12
    assert np.linalg.norm(r) > 0.01


def test_residual_length_mismatch():
    with pytest.raises(ProblemError):
        residuals(durer_problem(), [0.0])


def test_durer_solve_seed_42():
    sol = solve(durer_problem(), SolverConfig(seed=42, restarts=100))
    assert sol.residual_norm < 1e-12
    assert sol.passed
    x, y = (float(v) for v in sol.embedding.points[6])
    assert abs(x - A7[0]) < 1e-9 and abs(abs(y) - A7[1]) < 1e-9


def test_solve_is_deterministic():
    cfg = SolverConfig(seed=3, restarts=20)
    p = free_problem(make_family(Cycle(5)), 2)
    a, b = solve(p, cfg), solve(p, cfg)
    assert a.params == b.params and a.restart == b.restart
    assert a.embedding.to_json() == b.embedding.to_json()


def test_cycle4_free_solutions_are_unit_rhombi():
    p = free_problem(make_family(Cycle(4)), 2)
    for seed in range(5):
        sol = solve(p, SolverConfig(seed=seed, restarts=20))
        assert not sol.report.edge_violations
    sol = solve(p, SolverConfig(seed=0, restarts=50, require_valid=True))
    assert sol.passed


def test_mobius6_plane_never_verifies():
    p = free_problem(catalog_get("mobius6"), 2)
    try:
        sol = solve(p, SolverConfig(seed=0, restarts=1000, require_valid=True))
    except ConvergenceError:
        return
    assert not sol.passed
    assert sol.report.coincidences or sol.report.nonedge_violations


def test_non_convergence_reports_best():
    # a triangle has no unit-distance embedding on the line
    p = free_problem(make_family(Cycle(3)), 1)
    with pytest.raises(ConvergenceError) as info:
        solve(p, SolverConfig(seed=1, restarts=3, max_iter=30))
    assert info.value.best_residual > 0.1


def test_passing_solution_agrees_with_verifier():
    sol = solve(free_problem(make_family(Cycle(6)), 2), SolverConfig(seed=2, restarts=50, require_valid=True))
    assert sol.passed
    assert verify(make_family(Cycle(6)), sol.embedding).passed
    assert verify(make_family(Cycle(6)), sol.embedding.to_float()).passed


def test_stored_residual_matches_recomputation():
    p = durer_problem()
    sol = solve(p, SolverConfig(seed=42))
    again = residual_norm_of(p, sol.embedding)
    assert again == pytest.approx(sol.residual_norm, rel=1e-14, abs=1e-60)


def test_refinement_is_monotone():
    p = free_problem(catalog_get("tietze"), 2)
    rng = np.random.default_rng(0)
    for _ in range(3):
        _, _, hist = refine(p, rng.uniform(-2, 2, p.n_params), digits=30, target=1e-25, max_iter=15)
        assert all(b < a for a, b in zip(hist, hist[1:]))


def test_tietze_chain_problem_solves():
    with open("problems/tietze_chain.json") as fh:
        p, cfg = problem_from_dict(json.load(fh))
    assert p.label == "chain" and len(p.chain_edges) == 3
    assert len(p.residual_edges) == 21
    sol = solve(p, cfg)
    assert sol.passed


def test_problem_file_durer():
    p, cfg = load_problem("problems/durer_c6.json")
    assert cfg.seed == 42 and p.n_params == 2
    assert solve(p, cfg).passed


def test_problem_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"graph": "catalog:durer", "parametrization": "weird"}')
    with pytest.raises(ProblemError):
        load_problem(bad)
    with pytest.raises(ProblemError):
        load_problem(tmp_path / "missing.json")


def test_eval_expr_is_restricted():
    with mpmath.workdps(30):
        assert abs(eval_expr("sqrt(3)/3") - mpmath.sqrt(3) / 3) < 1e-29
        assert abs(eval_expr("cos(pi/5)") - mpmath.cos(mpmath.pi / 5)) < 1e-29
    for text in ("__import__('os')", "open('x')", "a + 1", "sqrt(2, 3)"):
        with pytest.raises(ProblemError):
            eval_expr(text)


def test_translation_leaves_residuals_unchanged():
    g = catalog_get("franklin")
    dim = 2
    rules = tuple(Point((dim * v, dim * v + 1)) for v in range(g.n))
    p = Problem(g, dim, rules, dim * g.n)
    rng = np.random.default_rng(4)
    x = rng.uniform(-2, 2, p.n_params)
    shift = np.tile(rng.uniform(-5, 5, dim), g.n)
    assert np.max(np.abs(residuals(p, x) - residuals(p, x + shift))) < 1e-12


def _random_problems():
    rng = random.Random(11)
    out = []
    for i in range(12):
        g = random_graph(rng.randint(3, 8), 0.5, rng)
        out.append(free_problem(g, 2 + i % 2))
    out.append(durer_problem())
    out.append(symmetric_problem(catalog_get("desargues"), SymmetrySpec(10, [list(range(0, 20, 2)),
                                                                             list(range(1, 20, 2))]), 2))
    out.append(symmetric_problem(catalog_get("hoffman"),
                                 SymmetrySpec(1, [[0], [1, 7], [2, 6], [3, 5], [4], [8, 11], [9, 10], [12], [13],
                                                  [14, 15]], mirror=True), 3))
    for i in range(3):
        out.append(chain_problem(catalog_get("tietze"), ChainSpec({0: ("0", "0")}, [(0, 1), (1, 2), (1, 3)])))
    out.append(chain_problem(catalog_get("soifer"), ChainSpec({0: ("0", "0", "0")}, [(0, 1), (0, 2)])))
    out.append(free_problem(K2, 1))
    return out


def test_gradient_check_on_20_problems():
    problems = _random_problems()
    assert len(problems) == 20
    rng = np.random.default_rng(8)
    for p in problems:
        x = rng.uniform(-2, 2, p.n_params)
        assert check_gradient(p, x) < 1e-6


def test_gradient_at_k2_solution():
    p = free_problem(K2, 1)
    assert residuals(p, [1.0])[0] == 0
    assert np.any(jacobian(p, [1.0]) != 0)
    assert check_gradient(p, [1.0]) < 1e-6


def test_config_validation():
    with pytest.raises(ProblemError):
        SolverConfig(restarts=0)
    with pytest.raises(ProblemError):
        SolverConfig(damping=-1.0)


def test_bad_rules_rejected():
    with pytest.raises(ProblemError):
        Problem(K2, 2, (Point(("0", "0")), Point((0,))), 1)
    with pytest.raises(ProblemError):
        Problem(K2, 2, (Point(("0", "0")), Point((0, 2))), 2)
