"""Rational unit-vector charts, unit-step chains and rotation/mirror orbits.

Rotations turn by 2*pi/k about the origin in the plane and about the z-axis
in space. The mirror is the reflection x -> -x (the yz-plane in space).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import mpmath

from .embedding import FLOAT64, Embedding, Precision, decimal


class SymmetryError(ValueError):
    pass


def _exact(u):
    return Fraction(u) if isinstance(u, int) else u


def half_angle(u):
    """((u^2-1)/(u^2+1), 2u/(u^2+1)), a rational chart of the unit circle.

    Every direction except (1, 0) is reached; (1, 0) would need u = infinity.
    Integers and Fractions give exact results.
    """
    u = _exact(u)
    d = u * u + 1
    return ((u * u - 1) / d, 2 * u / d)


def half_angle_grad(u):
    """Derivative of half_angle with respect to u."""
    d = u * u + 1
    return (4 * u / (d * d), 2 * (1 - u * u) / (d * d))


def sphere_point(u, v):
    """Unit 3-vector (c1*c2, c1*s2, s1) from two half-angle parameters.

    (c1, s1) = half_angle(u) fixes the elevation, (c2, s2) = half_angle(v)
    the azimuth.
    """
    c1, s1 = half_angle(u)
    c2, s2 = half_angle(v)
    return (c1 * c2, c1 * s2, s1)


def sphere_point_grad(u, v):
    """(d/du, d/dv) of sphere_point, each a 3-tuple."""
    c1, s1 = half_angle(u)
    c2, s2 = half_angle(v)
    dc1, ds1 = half_angle_grad(u)
    dc2, ds2 = half_angle_grad(v)
    return (dc1 * c2, dc1 * s2, ds1), (c1 * dc2, c1 * ds2, 0 * ds2)


def unit_step(params):
    if len(params) == 1:
        return half_angle(params[0])
    if len(params) == 2:
        return sphere_point(*params)
    raise SymmetryError(f"a unit step takes 1 (plane) or 2 (space) parameters, got {len(params)}")


# Orbits ---------------------------------------------------------------------


def _trig(k: int, power: int, exact_kind: str):
    """cos and sin of 2*pi*power/k as float or mpf."""
    if exact_kind == "float":
        import math
        t = 2 * math.pi * power / k
        # snap the quarter turns so identity powers stay exact
        if (4 * power) % k == 0:
            q = (4 * power // k) % 4
            return [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)][q]
        return math.cos(t), math.sin(t)
    t = 2 * mpmath.pi * power / k
    return mpmath.cos(t), mpmath.sin(t)


def transform_matrix(dim: int, k: int, power: int, mirrored: bool, kind: str = "float"):
    """Matrix of x -> M^mirrored R^power x as nested lists."""
    c, s = _trig(k, power, kind)
    one = 1.0 if kind == "float" else mpmath.mpf(1)
    zero = 0 * one
    if dim == 2:
        m = [[c, -s], [s, c]]
    elif dim == 3:
        m = [[c, -s, zero], [s, c, zero], [zero, zero, one]]
    else:
        raise SymmetryError(f"rotations are defined in dimension 2 or 3, not {dim}")
    if mirrored:
        m[0] = [-x for x in m[0]]
    return m


@dataclass(frozen=True)
class SymmetrySpec:
    """A k-fold rotation group, optionally with the x -> -x mirror, and its orbits.

    Orbit position i < k is R^i applied to the representative (the first
    listed vertex); position k + i is the mirror image of position i.
    """

    rotation_order: int
    orbits: tuple[tuple[int, ...], ...]
    mirror: bool = False

    def __init__(self, rotation_order: int, orbits: Sequence[Sequence[int]], mirror: bool = False):
        object.__setattr__(self, "rotation_order", int(rotation_order))
        object.__setattr__(self, "orbits", tuple(tuple(int(v) for v in o) for o in orbits))
        object.__setattr__(self, "mirror", bool(mirror))
        self._check()

    def _check(self):
        k = self.rotation_order
        if k < 1:
            raise SymmetryError("rotation order must be at least 1")
        seen = set()
        for orbit in self.orbits:
            if not orbit:
                raise SymmetryError("empty orbit")
            L = len(orbit)
            ok = L == 1 or L == k or (self.mirror and L == 2 * k)
            if not ok:
                raise SymmetryError(
                    f"orbit {list(orbit)} has length {L}; expected 1, {k}" + (f" or {2 * k}" if self.mirror else ""))
            for v in orbit:
                if v in seen:
                    raise SymmetryError(f"vertex {v} lies in two orbits")
                seen.add(v)
        if seen != set(range(len(seen))):
            raise SymmetryError("orbits must partition the vertices 0..n-1")

    @property
    def n(self) -> int:
        return sum(len(o) for o in self.orbits)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(o[0] for o in self.orbits)

    def placements(self):
        """Yield (vertex, representative, rotation power, mirrored)."""
        k = self.rotation_order
        for orbit in self.orbits:
            for i, v in enumerate(orbit):
                yield v, orbit[0], i % k, i >= k

    def to_dict(self) -> dict:
        return {"rotation_order": self.rotation_order, "mirror": self.mirror,
                "orbits": [list(o) for o in self.orbits]}

    @classmethod
    def from_dict(cls, d: Mapping) -> "SymmetrySpec":
        return cls(d["rotation_order"], d["orbits"], d.get("mirror", False))


def _apply(m, p):
    return tuple(sum(m[r][c] * p[c] for c in range(len(p))) for r in range(len(m)))


def expand_orbit(spec: SymmetrySpec, rep_points: Mapping[int, Sequence], precision: Precision | None = None) -> Embedding:
    """Fill every orbit from its representative's point.

    Float inputs give a Float64 embedding; mpmath inputs give a decimal one
    at the current working precision unless ``precision`` says otherwise.
    """
    reps = set(spec.representatives)
    if set(rep_points) != reps:
        raise SymmetryError(f"need points for representatives {sorted(reps)}, got {sorted(rep_points)}")
    dims = {len(p) for p in rep_points.values()}
    if len(dims) != 1:
        raise SymmetryError("representative points differ in dimension")
    dim = dims.pop()
    if precision is None:
        hp = any(isinstance(x, mpmath.mpf) for p in rep_points.values() for x in p)
        precision = decimal(mpmath.mp.dps) if hp else FLOAT64
    kind = "float" if precision.kind == "float64" else "mp"
    out = [None] * spec.n
    with mpmath.workdps(precision.digits or mpmath.mp.dps):
        for v, rep, power, mirrored in spec.placements():
            p = rep_points[rep]
            if kind == "mp":
                p = [mpmath.mpf(x) if not isinstance(x, Fraction) else mpmath.mpf(x.numerator) / x.denominator
                     for x in p]
            if dim == 1:
                if power or mirrored:
                    raise SymmetryError("no rotations on the line")
                out[v] = tuple(p)
                continue
            out[v] = _apply(transform_matrix(dim, spec.rotation_order, power, mirrored, kind), p)
        return Embedding(out, precision, dim)


# Chains ---------------------------------------------------------------------


@dataclass(frozen=True)
class ChainSpec:
    """Base points plus unit steps (parent, child); each step is one parameter slot."""

    base: tuple[tuple[int, tuple], ...]
    steps: tuple[tuple[int, int], ...]

    def __init__(self, base: Mapping[int, Sequence], steps: Sequence[Sequence[int]]):
        object.__setattr__(self, "base", tuple((int(v), tuple(p)) for v, p in sorted(base.items())))
        object.__setattr__(self, "steps", tuple((int(a), int(b)) for a, b in steps))

    @property
    def dim(self) -> int:
        return len(self.base[0][1]) if self.base else 2

    def order(self) -> list[int]:
        """Step indices in an order where every parent is placed first.

        Raises if the steps do not form a forest hanging from the base.
        """
        placed = {v for v, _ in self.base}
        children = [b for _, b in self.steps]
        if len(set(children)) != len(children) or placed & set(children):
            raise SymmetryError("chain steps must place each vertex once and never move a base vertex")
        pending = list(range(len(self.steps)))
        order = []
        while pending:
            ready = [i for i in pending if self.steps[i][0] in placed]
            if not ready:
                raise SymmetryError("chain steps contain a cycle or start from an unplaced vertex")
            for i in ready:
                order.append(i)
                placed.add(self.steps[i][1])
            pending = [i for i in pending if i not in ready]
        return order

    def to_dict(self) -> dict:
        return {"base": {str(v): list(p) for v, p in self.base}, "steps": [list(s) for s in self.steps]}


def chain_build(spec: ChainSpec, params: Sequence) -> dict[int, tuple]:
    """Place base vertices and walk the steps; params holds one chart value per step
    in the plane and a (u, v) pair per step in space."""
    per = 1 if spec.dim == 2 else 2
    if len(params) != len(spec.steps):
        raise SymmetryError(f"expected {len(spec.steps)} step parameters, got {len(params)}")
    pts = {v: tuple(p) for v, p in spec.base}
    for i in spec.order():
        a, b = spec.steps[i]
        q = params[i] if per == 2 else (params[i],)
        if per == 2 and len(q) != 2:
            raise SymmetryError("spatial steps need (u, v) pairs")
        d = unit_step(q)
        pts[b] = tuple(x + y for x, y in zip(pts[a], d))
    return pts
