"""Lattice-point sets, their convex hulls, vertices and separating directions.

The exponent vectors of a flat tropical polynomial all carry the same
coefficient, so its Newton polytope is simply the convex hull of the
exponent set: vertices are the essential monomials and every other lattice
point of the set is quasi-essential.  All decisions are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .lp import OPTIMAL, maximize

Point = tuple[int, ...]

_INT64_SAFE = 2**62
_RANDOM_RANGE = 1000
_SEED_DIRECTIONS_PER_DIM = 32


class NoSeparationError(ValueError):
    """The point lies in the convex hull of the set."""


@dataclass(frozen=True)
class ConfigSet:
    dim: int
    points: tuple[Point, ...]

    def __post_init__(self):
        if not self.points:
            raise ValueError("a configuration set must be nonempty")
        if any(len(p) != self.dim for p in self.points):
            raise ValueError("point of the wrong dimension")

    @classmethod
    def of(cls, points: Iterable[Sequence[int]], dim: int | None = None) -> ConfigSet:
        pts = tuple(sorted({tuple(p) for p in points}))
        if dim is None:
            if not pts:
                raise ValueError("a configuration set must be nonempty")
            dim = len(pts[0])
        return cls(dim, pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class VertexReport:
    vertices: tuple[Point, ...]
    quasi: tuple[Point, ...]

    def is_vertex(self, p: Point) -> bool:
        return tuple(p) in set(self.vertices)


@dataclass(frozen=True)
class Separation:
    direction: tuple[Fraction, ...]
    margin: Fraction


def _dot(x: Sequence, p: Sequence) -> Fraction | int:
    return sum(a * b for a, b in zip(x, p) if a and b)


def _varying_coords(points: Sequence[Point]) -> list[int]:
    first = points[0]
    return [k for k in range(len(first)) if any(p[k] != first[k] for p in points)]


def _project(points: Iterable[Point], coords: list[int]) -> list[Point]:
    return [tuple(p[k] for k in coords) for p in points]


def _membership(p: Point, pool: Sequence[Point]):
    """Exact test ``p in conv(pool)``; returns the LP result."""
    d = len(p)
    A_eq = [[q[k] for q in pool] for k in range(d)] + [[1] * len(pool)]
    b_eq = list(p) + [1]
    return maximize([0] * len(pool), A_eq=A_eq, b_eq=b_eq)


def in_hull(p: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    pool = [tuple(q) for q in points]
    if not pool:
        return False
    coords = _varying_coords(pool + [tuple(p)])
    if not coords:
        return True
    return _membership(tuple(p[k] for k in coords), _project(pool, coords)).status == OPTIMAL


def _integral(direction: Sequence) -> list[int]:
    """Positive multiple of a rational direction with integer entries."""
    den = lcm(*(Fraction(v).denominator for v in direction))
    return [int(v * den) for v in direction]


class _Extremes:
    """Lexicographically largest maximiser of a linear functional.

    Dot products run in numpy ``int64`` when the bound on their size allows
    it, and in Python integers otherwise; both are exact.
    """

    def __init__(self, points: Sequence[Point]):
        self.points = list(points)
        self.array = np.array(self.points, dtype=np.int64)
        self.norm1 = max(sum(abs(c) for c in p) for p in self.points)

    def __call__(self, direction: Sequence) -> Point:
        x = _integral(direction)
        if max(abs(v) for v in x) * self.norm1 < _INT64_SAFE:
            dots = self.array @ np.array(x, dtype=np.int64)
            top = np.flatnonzero(dots == dots.max())
            return max(self.points[k] for k in top)
        return max(self.points, key=lambda q: (_dot(x, q), q))

    def sample(self, count: int) -> set[Point]:
        """Maximisers of ``count`` pseudo-random integer functionals (fixed seed)."""
        d = self.array.shape[1]
        if _RANDOM_RANGE * self.norm1 >= _INT64_SAFE:
            rng = random.Random(0)
            return {self([rng.randint(-_RANDOM_RANGE, _RANDOM_RANGE) for _ in range(d)]) for _ in range(count)}
        gen = np.random.default_rng(0)
        dirs = gen.integers(-_RANDOM_RANGE, _RANDOM_RANGE, size=(d, count), endpoint=True)
        dots = self.array @ dirs
        top = dots.max(axis=0)
        hits = dots == top
        out = set()
        unique = hits.sum(axis=0) == 1
        for k in np.flatnonzero(unique):
            out.add(self.points[int(np.argmax(hits[:, k]))])
        for k in np.flatnonzero(~unique):
            out.add(max(self.points[i] for i in np.flatnonzero(hits[:, k])))
        return out


def _midpoints(points: list[Point]) -> set[Point]:
    """Points of the list that are the midpoint of two other members."""
    arr = np.array(points, dtype=np.int64)
    lo = arr.min(axis=0)
    arr = arr - lo
    radix = int(2 * arr.max()) + 1 if arr.size else 1
    d = arr.shape[1]
    if radix ** d >= _INT64_SAFE:
        pool = set(points)
        return {
            p for p in points
            if any(tuple(2 * a - b for a, b in zip(p, q)) in pool for q in points if q != p)
        }
    weights = np.array([radix**k for k in range(d)], dtype=np.int64)
    keys = arr @ weights
    parity = (arr & 1) @ np.array([1 << k for k in range(d)], dtype=np.int64)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    hit = np.zeros(len(points), dtype=bool)
    for a in range(len(points)):
        others = np.arange(a + 1, len(points))
        others = others[parity[others] == parity[a]]
        if not len(others):
            continue
        mids = (keys[others] + keys[a]) // 2
        pos = np.searchsorted(sorted_keys, mids)
        pos = np.minimum(pos, len(points) - 1)
        found = sorted_keys[pos] == mids
        hit[order[pos[found]]] = True
    return {points[k] for k in np.flatnonzero(hit)}


def vertices(omega: ConfigSet | Iterable[Sequence[int]]) -> VertexReport:
    """Split a point set into hull vertices and the remaining (quasi) points.

    Vertices are found as lexicographic maximisers of linear functionals;
    every other point is settled either as the midpoint of two members or
    by an exact LP against the vertices found so far, whose infeasibility
    certificate supplies the next functional.
    """
    pts = list(omega.points) if isinstance(omega, ConfigSet) else sorted({tuple(p) for p in omega})
    if len(pts) <= 2:
        return VertexReport(tuple(pts), ())
    coords = _varying_coords(pts)
    proj = _project(pts, coords)
    back = dict(zip(proj, pts))
    d = len(coords)
    extreme = _Extremes(proj)

    found = extreme.sample(_SEED_DIRECTIONS_PER_DIM * d)
    found.add(max(proj))
    found.add(min(proj))

    quasi = _midpoints(proj)
    for p in proj:
        if p in found or p in quasi:
            continue
        while True:
            res = _membership(p, sorted(found))
            if res.status == OPTIMAL:
                quasi.add(p)
                break
            v = extreme([-y for y in res.farkas[:d]])
            found.add(v)
            if v == p:
                break
    return VertexReport(
        tuple(sorted(back[p] for p in found)),
        tuple(sorted(back[p] for p in quasi)),
    )


def hull_equal(omega1: ConfigSet, omega2: ConfigSet) -> bool:
    if omega1.dim != omega2.dim:
        raise ValueError(f"dimension mismatch: {omega1.dim} vs {omega2.dim}")
    return vertices(omega1).vertices == vertices(omega2).vertices


def max_margin_separation(p: Sequence[int], points: Sequence[Sequence[int]]) -> Separation | None:
    """Direction ``x`` in ``[-1, 1]^d`` maximising ``min_q <p - q, x>``.

    Returns None when the best margin is not positive, i.e. ``p`` lies in the
    convex hull of ``points``.
    """
    p = tuple(p)
    pool = [tuple(q) for q in points]
    d = len(p)
    # variables: y = x + 1 in [0, 2]^d, then t >= 0
    A_ub, b_ub = [], []
    for q in pool:
        diff = [q[k] - p[k] for k in range(d)]
        A_ub.append(diff + [1])
        b_ub.append(sum(diff))
    for k in range(d):
        row = [0] * (d + 1)
        row[k] = 1
        A_ub.append(row)
        b_ub.append(2)
    res = maximize([0] * d + [1], A_ub, b_ub)
    if res.status != OPTIMAL or res.value <= 0:
        return None
    x = tuple(y - 1 for y in res.x[:d])
    margin = min(_dot(x, p) - _dot(x, q) for q in pool)
    return Separation(x, Fraction(margin))


def separating_witness(p: Sequence[int], omega: ConfigSet | Sequence[Sequence[int]]) -> Separation:
    """Exact direction ``x`` with ``<p, x> > <q, x>`` for every ``q`` in the set."""
    pool = list(omega.points) if isinstance(omega, ConfigSet) else [tuple(q) for q in omega]
    sep = max_margin_separation(p, pool)
    if sep is None:
        raise NoSeparationError(f"{tuple(p)} lies in the convex hull of the set")
    px = _dot(sep.direction, p)
    if not all(px > _dot(sep.direction, q) for q in pool):
        raise AssertionError("separating direction failed re-verification")
    return sep


def supporting_vertices(p: Sequence[int], omega: ConfigSet) -> tuple[Point, ...]:
    """Vertices of the smallest face of the hull that contains ``p``.

    A vertex belongs to that face iff it can carry positive weight in some
    convex combination equal to ``p``.
    """
    verts = list(vertices(omega).vertices)
    p = tuple(p)
    if p in verts:
        return (p,)
    d = len(p)
    A_eq = [[v[k] for v in verts] for k in range(d)] + [[1] * len(verts)]
    b_eq = list(p) + [1]
    out = []
    for idx, v in enumerate(verts):
        c = [0] * len(verts)
        c[idx] = 1
        res = maximize(c, A_eq=A_eq, b_eq=b_eq)
        if res.status != OPTIMAL:
            raise NoSeparationError(f"{p} is not in the hull")
        if res.value > 0:
            out.append(v)
    return tuple(out)


def dump_config_set(omega: ConfigSet, notes: dict[Point, str] | None = None) -> str:
    """Debug dump: a ``dim <d> count <k>`` header, then one point per line."""
    lines = [f"dim {omega.dim} count {len(omega.points)}"]
    for p in omega.points:
        line = " ".join(str(c) for c in p)
        if notes and p in notes:
            line += f" # {notes[p]}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_config_dump(text: str) -> ConfigSet:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    head = lines[0].split()
    if len(head) != 4 or head[0] != "dim" or head[2] != "count":
        raise ValueError("expected header 'dim <d> count <k>'")
    dim, count = int(head[1]), int(head[3])
    pts = [tuple(int(c) for c in ln.split()) for ln in lines[1:]]
    if len(pts) != count:
        raise ValueError(f"header announces {count} points, found {len(pts)}")
    return ConfigSet.of(pts, dim)
