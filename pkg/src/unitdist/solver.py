"""Search for unit-distance embeddings by least squares.

A problem assigns every vertex a rule: a pinned point whose coordinates are
constants or free parameters, a unit step from a parent vertex, or the image
of another vertex under a rotation/mirror power. Residuals are
``|p_u - p_v|^2 - 1`` over the edges that are not unit by construction.

The search is multi-start Levenberg-Marquardt in float64, then damped Newton
refinement in mpmath, then the usual verification of the result.
"""

from __future__ import annotations

import ast
import json
import math
import operator
from dataclasses import dataclass, field, replace
from itertools import combinations
from pathlib import Path
from typing import Sequence

import mpmath
import numpy as np

from .catalog import catalog_get
from .embedding import DEFAULT_TOLERANCE, Embedding, ToleranceConfig, VerificationReport, decimal, verify
from .graph import Graph, GraphError
from .symmetry import (ChainSpec, SymmetryError, SymmetrySpec, half_angle, half_angle_grad, sphere_point,
                       sphere_point_grad, transform_matrix)


class ProblemError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, best_residual: float, restarts: int):
        super().__init__(message)
        self.best_residual = best_residual
        self.restarts = restarts


# Constant expressions --------------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_FUNCS = {"sqrt": mpmath.sqrt, "cbrt": mpmath.cbrt, "cos": mpmath.cos, "sin": mpmath.sin,
          "tan": mpmath.tan, "cot": mpmath.cot}


def eval_expr(text) -> mpmath.mpf:
    """Evaluate a constant like ``sqrt(3)/3`` or ``cos(pi/5)`` at the working precision.

    Only numbers, pi, + - * / **, and sqrt/cbrt/cos/sin/tan/cot are accepted.
    """
    if isinstance(text, (int, float)):
        return mpmath.mpf(text)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return mpmath.mpf(node.value) if isinstance(node.value, int) else mpmath.mpf(repr(node.value))
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Name) and node.id == "pi":
            return +mpmath.pi
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS \
                and len(node.args) == 1 and not node.keywords:
            return _FUNCS[node.func.id](ev(node.args[0]))
        raise ProblemError(f"unsupported expression element in {text!r}")

    try:
        tree = ast.parse(str(text), mode="eval")
    except SyntaxError:
        raise ProblemError(f"cannot parse constant {text!r}") from None
    return ev(tree)


# Vertex rules ----------------------------------------------------------------


@dataclass(frozen=True)
class Point:
    """Coordinates are either constant expressions (str) or parameter indices (int)."""

    slots: tuple


@dataclass(frozen=True)
class Step:
    parent: int
    params: tuple[int, ...]  # one index in the plane, two in space


@dataclass(frozen=True)
class Image:
    source: int
    power: int
    mirrored: bool = False


@dataclass(frozen=True)
class Problem:
    graph: Graph
    dim: int
    rules: tuple
    n_params: int
    angle_params: frozenset = frozenset()
    rotation_order: int = 1
    chain_edges: frozenset = frozenset()
    label: str = "free"

    def __post_init__(self):
        if len(self.rules) != self.graph.n:
            raise ProblemError(f"{len(self.rules)} vertex rules for {self.graph.n} vertices")
        if self.dim < 1:
            raise ProblemError("dimension must be at least 1")
        used = set()
        for v, r in enumerate(self.rules):
            if isinstance(r, Point):
                if len(r.slots) != self.dim:
                    raise ProblemError(f"vertex {v}: point has {len(r.slots)} slots, dim is {self.dim}")
                used.update(s for s in r.slots if isinstance(s, int))
            elif isinstance(r, Step):
                if len(r.params) != (1 if self.dim == 2 else 2) or self.dim not in (2, 3):
                    raise ProblemError(f"vertex {v}: unit steps need dim 2 (one parameter) or 3 (two)")
                used.update(r.params)
            elif isinstance(r, Image):
                if self.dim not in (2, 3):
                    raise ProblemError("symmetry images need dim 2 or 3")
            else:
                raise ProblemError(f"vertex {v}: unknown rule {r!r}")
        if used != set(range(self.n_params)):
            raise ProblemError("parameter indices must be exactly 0..n_params-1")
        for u, v in self.chain_edges:
            if not self.graph.has_edge(u, v):
                raise ProblemError(f"chain step {u}-{v} is not an edge")
        object.__setattr__(self, "_order", self._topo_order())

    def _topo_order(self):
        deps = {}
        for v, r in enumerate(self.rules):
            deps[v] = r.parent if isinstance(r, Step) else r.source if isinstance(r, Image) else None
        order, state = [], {}

        def visit(v):
            if state.get(v) == 2:
                return
            if state.get(v) == 1:
                raise ProblemError("vertex rules depend on each other in a cycle")
            state[v] = 1
            if deps[v] is not None:
                visit(deps[v])
            state[v] = 2
            order.append(v)

        for v in range(self.graph.n):
            visit(v)
        return order

    @property
    def residual_edges(self) -> list[tuple[int, int]]:
        return [e for e in self.graph.edges if e not in self.chain_edges]


def _chain_edge(a, b):
    return (a, b) if a < b else (b, a)


# Builders ------------------------------------------------------------------


def free_problem(g: Graph, dim: int) -> Problem:
    """Every vertex free, with the gauge: vertex 0 at the origin, vertex 1 on the
    first axis, vertex 2 (in space) in the first coordinate plane."""
    rules, k = [], 0
    for v in range(g.n):
        slots = []
        for c in range(dim):
            if c >= v:
                slots.append("0")
            else:
                slots.append(k)
                k += 1
        rules.append(Point(tuple(slots)))
    return Problem(g, dim, tuple(rules), k, label="free")


def symmetric_problem(g: Graph, spec: SymmetrySpec, dim: int, pinned: dict | None = None) -> Problem:
    """One free point per orbit representative, the rest generated by the group.

    A single-vertex orbit sits on the rotation axis; an orbit of length k under
    a group with a mirror has its representative on the mirror. ``pinned``
    maps representatives to constant coordinate expressions.
    """
    if spec.n != g.n:
        raise ProblemError(f"symmetry covers {spec.n} vertices, graph has {g.n}")
    if dim not in (2, 3):
        raise ProblemError("symmetric problems need dim 2 or 3")
    pinned = {int(v): p for v, p in (pinned or {}).items()}
    k = spec.rotation_order
    rules: list = [None] * g.n
    idx = 0
    for orbit in spec.orbits:
        rep = orbit[0]
        if rep in pinned:
            pts = tuple(str(x) for x in pinned[rep])
            if len(pts) != dim:
                raise ProblemError(f"pinned point for {rep} has the wrong dimension")
            rules[rep] = Point(pts)
        else:
            on_axis = len(orbit) == 1 and k > 1
            on_mirror = spec.mirror and len(orbit) < 2 * k
            slots = []
            for c in range(dim):
                fixed = (on_axis and c < 2) or (on_mirror and c == 0)
                if fixed:
                    slots.append("0")
                else:
                    slots.append(idx)
                    idx += 1
            rules[rep] = Point(tuple(slots))
        for v, r, power, mirrored in spec.placements():
            if r == rep and v != rep:
                rules[v] = Image(rep, power, mirrored)
    for v in pinned:
        if v not in spec.representatives:
            raise ProblemError(f"only orbit representatives can be pinned, not {v}")
    return Problem(g, dim, tuple(rules), idx, rotation_order=k, label=f"symmetric(c{k}{'+m' if spec.mirror else ''})")


def chain_problem(g: Graph, chain: ChainSpec, dim: int | None = None) -> Problem:
    """Chain vertices from unit steps; everything else free (no gauge beyond the base)."""
    dim = dim or chain.dim
    order = chain.order()
    rules: list = [None] * g.n
    for v, p in chain.base:
        if len(p) != dim:
            raise ProblemError("base point dimension mismatch")
        rules[v] = Point(tuple(str(x) for x in p))
    idx = 0
    angles = set()
    chain_edges = set()
    per = 1 if dim == 2 else 2
    step_params = {}
    for i in order:
        a, b = chain.steps[i]
        ps = tuple(range(idx, idx + per))
        idx += per
        step_params[i] = ps
        angles.update(ps)
        rules[b] = Step(a, ps)
        chain_edges.add(_chain_edge(a, b))
    for v in range(g.n):
        if rules[v] is None:
            rules[v] = Point(tuple(range(idx, idx + dim)))
            idx += dim
    return Problem(g, dim, tuple(rules), idx, frozenset(angles), chain_edges=frozenset(chain_edges), label="chain")


DURER_SYMMETRY = SymmetrySpec(6, [[0, 3, 1, 4, 2, 5], [6, 7, 8, 9, 10, 11]])


def durer_problem() -> Problem:
    """Dürer graph under 6-fold rotation: A1 pinned at (sqrt(3)/3, 0), A7 free."""
    return symmetric_problem(catalog_get("durer"), DURER_SYMMETRY, 2, {0: ("sqrt(3)/3", "0")})


# Evaluation ----------------------------------------------------------------


def _evaluate(p: Problem, x, hp: bool):
    """Positions (n, dim) and their parameter Jacobian (n, dim, P)."""
    P, dim = p.n_params, p.dim
    if hp:
        zero, one = mpmath.mpf(0), mpmath.mpf(1)
        pos = np.full((p.graph.n, dim), zero, dtype=object)
        jac = np.full((p.graph.n, dim, P), zero, dtype=object)
        const = lambda s: eval_expr(s)
        kind = "mp"
    else:
        one = 1.0
        pos = np.zeros((p.graph.n, dim))
        jac = np.zeros((p.graph.n, dim, P))
        const = lambda s: float(eval_expr(s))
        kind = "float"
    mats = {}
    for v in p._order:
        r = p.rules[v]
        if isinstance(r, Point):
            for c, s in enumerate(r.slots):
                if isinstance(s, int):
                    pos[v, c] = x[s]
                    jac[v, c, s] = one
                else:
                    pos[v, c] = const(s)
        elif isinstance(r, Step):
            if dim == 2:
                (i,) = r.params
                d = half_angle(x[i])
                dd = half_angle_grad(x[i])
                pos[v] = pos[r.parent] + np.array(d, dtype=pos.dtype)
                jac[v] = jac[r.parent]
                jac[v, :, i] += np.array(dd, dtype=pos.dtype)
            else:
                i, j = r.params
                d = sphere_point(x[i], x[j])
                du, dv = sphere_point_grad(x[i], x[j])
                pos[v] = pos[r.parent] + np.array(d, dtype=pos.dtype)
                jac[v] = jac[r.parent]
                jac[v, :, i] += np.array(du, dtype=pos.dtype)
                jac[v, :, j] += np.array(dv, dtype=pos.dtype)
        else:
            key = (r.power, r.mirrored)
            if key not in mats:
                mats[key] = np.array(transform_matrix(dim, p.rotation_order, r.power, r.mirrored, kind),
                                     dtype=pos.dtype)
            m = mats[key]
            pos[v] = m @ pos[r.source]
            jac[v] = m @ jac[r.source]
    return pos, jac


def _res_jac(p: Problem, x, hp: bool):
    pos, jac = _evaluate(p, x, hp)
    edges = p.residual_edges
    if not edges:
        z = np.zeros(0, dtype=pos.dtype)
        return z, np.zeros((0, p.n_params), dtype=pos.dtype), pos
    u = np.array([a for a, _ in edges])
    w = np.array([b for _, b in edges])
    diff = pos[u] - pos[w]
    r = (diff * diff).sum(axis=1) - 1
    J = 2 * np.einsum("ec,ecp->ep", diff, jac[u] - jac[w]) if not hp else \
        2 * np.array([[sum(diff[e, c] * (jac[u[e], c, k] - jac[w[e], c, k]) for c in range(p.dim))
                        for k in range(p.n_params)] for e in range(len(edges))], dtype=object).reshape(
            len(edges), p.n_params)
    return r, J, pos


def _check_params(p: Problem, params):
    if len(params) != p.n_params:
        raise ProblemError(f"expected {p.n_params} parameters, got {len(params)}")


def residuals(p: Problem, params, digits: int | None = None) -> np.ndarray:
    """Edge residuals at float64, or evaluated with ``digits`` digits when given
    (params may then be mpmath numbers or expression strings)."""
    _check_params(p, params)
    if digits is None:
        r, _, _ = _res_jac(p, np.asarray(params, dtype=float), False)
        return r
    with mpmath.workdps(digits):
        x = np.array([eval_expr(v) if isinstance(v, str) else mpmath.mpf(v) for v in params], dtype=object)
        r, _, _ = _res_jac(p, x, True)
        return np.array([float(v) for v in r])


def jacobian(p: Problem, params) -> np.ndarray:
    _check_params(p, params)
    _, J, _ = _res_jac(p, np.asarray(params, dtype=float), False)
    return J


def positions(p: Problem, params) -> np.ndarray:
    _check_params(p, params)
    return _evaluate(p, np.asarray(params, dtype=float), False)[0]


def check_gradient(p: Problem, params, step: float = 1e-6) -> float:
    """Largest gap between the analytic Jacobian and central differences."""
    x = np.asarray(params, dtype=float)
    J = jacobian(p, x)
    worst = 0.0
    for k in range(p.n_params):
        e = np.zeros_like(x)
        e[k] = step
        fd = (residuals(p, x + e) - residuals(p, x - e)) / (2 * step)
        if len(fd):
            worst = max(worst, float(np.max(np.abs(fd - J[:, k]))))
    return worst


# Solving -------------------------------------------------------------------


@dataclass(frozen=True)
class SolverConfig:
    restarts: int = 100
    max_iter: int = 200
    damping: float = 1e-3
    target: float = 1e-12
    seed: int = 0
    coord_range: float = 2.0
    angle_range: float = 5.0
    refine_digits: int = 50
    refine_target: float = 1e-40
    require_valid: bool = False
    repulsion: float = 0.0
    tolerance: ToleranceConfig = DEFAULT_TOLERANCE

    def __post_init__(self):
        for name in ("restarts", "max_iter", "refine_digits"):
            if getattr(self, name) < 1:
                raise ProblemError(f"{name} must be positive")
        for name in ("damping", "target", "coord_range", "angle_range", "refine_target"):
            if not getattr(self, name) > 0:
                raise ProblemError(f"{name} must be positive")
        if self.repulsion < 0:
            raise ProblemError("repulsion must be non-negative")


@dataclass
class Solution:
    params: tuple
    embedding: Embedding
    residual_norm: float
    restart: int
    report: VerificationReport
    float_residual: float = 0.0
    refine_history: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.report.passed

    def log(self, cfg: SolverConfig) -> dict:
        return {"seed": cfg.seed, "restart": self.restart, "restarts_used": self.restart + 1,
                "residual_norm": self.residual_norm, "float_residual": self.float_residual,
                "refine_digits": cfg.refine_digits, "passed": self.passed, "summary": self.report.summary()}


def sample(p: Problem, cfg: SolverConfig, rng: np.random.Generator) -> np.ndarray:
    x = rng.uniform(-cfg.coord_range, cfg.coord_range, p.n_params)
    if p.angle_params:
        idx = np.array(sorted(p.angle_params))
        x[idx] = rng.uniform(-cfg.angle_range, cfg.angle_range, len(idx))
    return x


def _repulsion_terms(p: Problem, x, weight):
    pos, jac = _evaluate(p, x, False)
    pairs = list(p.graph.non_edges())
    if not pairs:
        return np.zeros(0), np.zeros((0, p.n_params))
    u = np.array([a for a, _ in pairs])
    w = np.array([b for _, b in pairs])
    diff = pos[u] - pos[w]
    d2 = (diff * diff).sum(axis=1)
    # a soft bump that pushes coincident or near-unit non-edges apart
    s = 0.05
    val = weight * (np.exp(-d2 / s) + np.exp(-((d2 - 1) ** 2) / s))
    dval = weight * (-np.exp(-d2 / s) / s - 2 * (d2 - 1) * np.exp(-((d2 - 1) ** 2) / s) / s)
    J = (2 * dval)[:, None] * np.einsum("ec,ecp->ep", diff, jac[u] - jac[w])
    return val, J


def levenberg_marquardt(p: Problem, x0, cfg: SolverConfig, repulsion: float = 0.0):
    """Float64 LM with multiplicative damping updates. Returns (x, residual norm)."""
    x = np.array(x0, dtype=float)

    def system(x):
        r, J, _ = _res_jac(p, x, False)
        if repulsion:
            rr, JJ = _repulsion_terms(p, x, repulsion)
            r, J = np.concatenate([r, rr]), np.vstack([J, JJ])
        return r, J

    r, J = system(x)
    cost = float(r @ r)
    lam = cfg.damping
    eye = np.eye(p.n_params)
    for _ in range(cfg.max_iter):
        if cost < (0.1 * cfg.target) ** 2:
            break
        A = J.T @ J
        g = J.T @ r
        scale = max(1.0, float(np.max(np.diag(A))) if len(A) else 1.0)
        try:
            dx = np.linalg.solve(A + lam * scale * eye, -g)
        except np.linalg.LinAlgError:
            lam *= 10
            continue
        xn = x + dx
        rn, Jn = system(xn)
        cn = float(rn @ rn)
        if np.isfinite(cn) and cn < cost:
            x, r, J, cost = xn, rn, Jn, cn
            lam = max(lam / 3, 1e-15)
        else:
            lam *= 4
            if lam > 1e12:
                break
    if repulsion:
        r = _res_jac(p, x, False)[0]
        cost = float(r @ r)
    return x, math.sqrt(cost)


def refine(p: Problem, x0, digits: int = 50, target: float = 1e-40, max_iter: int = 60):
    """Damped Newton on the normal equations in mpmath.

    Steps are accepted only if they lower the residual norm, so the norm
    never increases. Returns (params as mpf, norm, history of norms).
    """
    with mpmath.workdps(digits + 10):
        x = np.array([mpmath.mpf(float(v)) for v in x0], dtype=object)
        r, J, _ = _res_jac(p, x, True)
        norm = mpmath.sqrt(mpmath.fsum(v * v for v in r))
        history = [norm]
        mu_scale = mpmath.mpf(1)
        P = p.n_params
        for _ in range(max_iter):
            if norm < target or P == 0:
                break
            Jm = mpmath.matrix(J.tolist()) if len(r) else mpmath.zeros(0, P)
            rv = mpmath.matrix([v for v in r])
            A = Jm.T * Jm
            g = Jm.T * rv
            mu = mu_scale * norm
            for i in range(P):
                A[i, i] += mu
            try:
                dx = mpmath.lu_solve(A, -g)
            except ZeroDivisionError:
                mu_scale *= 10
                continue
            xn = x + np.array([dx[i] for i in range(P)], dtype=object)
            rn, Jn, _ = _res_jac(p, xn, True)
            nn = mpmath.sqrt(mpmath.fsum(v * v for v in rn))
            if nn < norm:
                x, r, J, norm = xn, rn, Jn, nn
                history.append(norm)
                mu_scale = max(mu_scale / 10, mpmath.mpf(10) ** -10)
            else:
                mu_scale *= 10
                if mu_scale > 10 ** 20:
                    break
        return x, norm, history


def embedding_of(p: Problem, x, digits: int) -> Embedding:
    with mpmath.workdps(digits + 10):
        pos, _ = _evaluate(p, x, True)
    with mpmath.workdps(digits):
        return Embedding(pos.tolist(), decimal(digits), p.dim)


def residual_norm_of(p: Problem, e: Embedding) -> float:
    """Residual norm recomputed from an embedding at its own precision."""
    digits = e.precision.digits or 17
    with mpmath.workdps(digits + 10):
        total = mpmath.mpf(0)
        for u, v in p.residual_edges:
            d2 = mpmath.fsum((mpmath.mpf(a) - mpmath.mpf(b)) ** 2 for a, b in zip(e.points[u], e.points[v]))
            total += (d2 - 1) ** 2
        return float(mpmath.sqrt(total))


def solve(p: Problem, cfg: SolverConfig = SolverConfig()) -> Solution:
    """Multi-start search. The lowest restart index that reaches the target wins.

    With ``require_valid`` a converged candidate that fails screening does
    not stop the search; if no restart verifies, the first converged
    candidate is returned with ``passed`` false.
    """
    best = math.inf
    candidate = None
    for i in range(cfg.restarts):
        rng = np.random.default_rng([cfg.seed, i])
        x0 = sample(p, cfg, rng)
        if cfg.repulsion:
            x0, _ = levenberg_marquardt(p, x0, cfg, cfg.repulsion)
        x, fnorm = levenberg_marquardt(p, x0, cfg)
        best = min(best, fnorm)
        if not fnorm < 1e-8:
            continue
        xh, hnorm, hist = refine(p, x, cfg.refine_digits, cfg.refine_target)
        if not float(hnorm) < cfg.target:
            continue
        e = embedding_of(p, xh, cfg.refine_digits)
        report = verify(p.graph, e, cfg.tolerance)
        sol = Solution(tuple(float(v) for v in xh), e, residual_norm_of(p, e), i, report, fnorm,
                       [float(h) for h in hist])
        if report.passed or not cfg.require_valid:
            return sol
        if candidate is None:
            candidate = sol
    if candidate is not None:
        return candidate
    raise ConvergenceError(f"no restart reached residual {cfg.target:g} in {cfg.restarts} restarts "
                           f"(best {best:.3g})", best, cfg.restarts)


# Problem files --------------------------------------------------------------


def _graph_from(ref) -> Graph:
    if isinstance(ref, str):
        if ref.startswith("catalog:"):
            return catalog_get(ref.split(":", 1)[1])
        raise ProblemError(f"graph reference {ref!r} must be catalog:<id> or an inline object")
    if isinstance(ref, dict):
        return Graph(int(ref["n"]), [tuple(e) for e in ref["edges"]])
    raise ProblemError("graph must be catalog:<id> or {\"n\": .., \"edges\": [..]}")


def problem_from_dict(d: dict) -> tuple[Problem, SolverConfig]:
    try:
        g = _graph_from(d["graph"])
        dim = int(d.get("dim", 2))
        par = d.get("parametrization", "free")
        if par == "free":
            p = free_problem(g, dim)
        elif isinstance(par, dict) and "symmetric" in par:
            spec = SymmetrySpec.from_dict(par["symmetric"])
            p = symmetric_problem(g, spec, dim, par.get("pinned"))
        elif isinstance(par, dict) and "chain" in par:
            c = par["chain"]
            chain = ChainSpec({int(v): [str(x) for x in pt] for v, pt in c["base"].items()}, c["steps"])
            p = chain_problem(g, chain, dim)
        else:
            raise ProblemError(f"unknown parametrization {par!r}")
        cfg_d = dict(d.get("config", {}))
        tol = cfg_d.pop("tolerance", None)
        cfg = SolverConfig(**cfg_d)
        if tol:
            cfg = replace(cfg, tolerance=ToleranceConfig(**tol))
    except (KeyError, TypeError, GraphError, SymmetryError) as exc:
        raise ProblemError(f"malformed problem: {exc}") from None
    return p, cfg


def load_problem(path) -> tuple[Problem, SolverConfig]:
    try:
        d = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise ProblemError(f"cannot read problem file {path}: {exc}") from None
    return problem_from_dict(d)


def pairwise_gaps(e: Embedding) -> float:
    """Smallest pairwise distance, handy for spotting collapsed candidates."""
    pts = [tuple(float(x) for x in p) for p in e.points]
    return min((math.dist(a, b) for a, b in combinations(pts, 2)), default=math.inf)
