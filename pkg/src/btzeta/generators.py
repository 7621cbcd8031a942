"""Generators for desk-scale test complexes.

Three families:

* apartment torus quotients -- the triangular tiling of the plane (vertex
  ``(i, j)`` has type ``(i - j) mod 3``) divided by a finite-index lattice of
  type-preserving translations;
* building balls -- the combinatorial ball of radius r around a vertex of the
  affine building attached to a rank-3 local lattice chain structure, built
  from explicit chains of subspaces/sublattices (no group theory involved);
* cycle complexes -- a single typed n-cycle, the minimal carrier of one
  closed positive geodesic.

All generators are deterministic: identical specs produce identical complexes
(and byte-identical files after :func:`btzeta.complexes.save_complex`).
Generator geometry (plane coordinates, lattice-chain labels) is returned
separately and is not part of the complex itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .complexes import TypedComplex

__all__ = [
    "ApartmentSpec",
    "BallSpec",
    "GenerationError",
    "gen_apartment_torus",
    "gen_building_ball",
    "gen_cycle_complex",
    "RADIUS_BOUND",
    "POSITIVE_DIRECTIONS",
    "plane_type",
]

RADIUS_BOUND = 3

# unit steps of the triangular tiling that raise the vertex type by one
POSITIVE_DIRECTIONS = ((1, 0), (0, -1), (-1, 1))
_ALL_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


class GenerationError(ValueError):
    """Raised when a generator spec is degenerate or the quotient is unusable."""


def plane_type(i: int, j: int) -> int:
    """Type of the tiling vertex (i, j)."""
    return (i - j) % 3


# ---------------------------------------------------------------------------
# apartment torus
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ApartmentSpec:
    """2x2 integer matrix whose columns span the quotient translation lattice.

    Columns are vectors in the vertex coordinates of the triangular tiling
    and must preserve the type function, i.e. each column (a, b) needs
    a - b == 0 mod 3.
    """

    basis: tuple[tuple[int, int], tuple[int, int]]

    def __init__(self, basis):  # noqa: D107
        rows = tuple(tuple(int(x) for x in row) for row in basis)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise GenerationError("basis must be a 2x2 integer matrix")
        object.__setattr__(self, "basis", rows)

    @property
    def columns(self) -> tuple[tuple[int, int], tuple[int, int]]:
        b = self.basis
        return ((b[0][0], b[1][0]), (b[0][1], b[1][1]))

    @property
    def det(self) -> int:
        b = self.basis
        return b[0][0] * b[1][1] - b[0][1] * b[1][0]


def _column_hnf(c1: tuple[int, int], c2: tuple[int, int]) -> tuple[int, int, int]:
    """Lower-triangular form (a, b, c) with columns (a, b), (0, c), a, c > 0."""
    (x1, y1), (x2, y2) = c1, c2
    while x2 != 0:
        q = x1 // x2
        x1, y1, x2, y2 = x2, y2, x1 - q * x2, y1 - q * y2
    if x1 < 0:
        x1, y1 = -x1, -y1
    if y2 < 0:
        y2 = -y2
    if x1 == 0 or y2 == 0:
        raise GenerationError("degenerate basis")
    return x1, y1 % y2, y2


def _word_ball(radius: int) -> set[tuple[int, int]]:
    ball = {(0, 0)}
    frontier = {(0, 0)}
    for _ in range(radius):
        frontier = {(x + dx, y + dy) for x, y in frontier for dx, dy in _ALL_STEPS}
        ball |= frontier
    return ball


def gen_apartment_torus(spec: ApartmentSpec, with_geometry: bool = False):
    """Triangulated torus quotient of the plane tiling.

    The quotient must be large enough that no two simplices of a closed star
    are identified and every directed positive edge keeps a unique straight
    continuation; otherwise a ``quotient too small`` error is raised.
    """
    if spec.det == 0:
        raise GenerationError("degenerate basis (determinant 0)")
    for a, b in spec.columns:
        if (a - b) % 3 != 0:
            raise GenerationError(
                f"quotient too small: basis column ({a},{b}) does not preserve "
                "vertex types (type classes collapse)")

    hx, hy, hz = _column_hnf(*spec.columns)

    def reduce(v: tuple[int, int]) -> tuple[int, int]:
        x, y = v
        k = x // hx
        x, y = x - k * hx, y - k * hy
        y -= (y // hz) * hz
        return x, y

    # nonzero lattice vectors inside the combinatorial 2-ball identify
    # simplices of a common star
    for w in _word_ball(2):
        if w != (0, 0) and reduce(w) == (0, 0):
            raise GenerationError(
                f"quotient too small: lattice vector {w} identifies star simplices")

    reps = sorted((x, y) for x in range(hx) for y in range(hz))
    vid = {v: i for i, v in enumerate(reps)}
    vertices = [(vid[v], plane_type(*v)) for v in reps]
    edges = set()
    for v in reps:
        for d in POSITIVE_DIRECTIONS:
            w = reduce((v[0] + d[0], v[1] + d[1]))
            edges.add(tuple(sorted((vid[v], vid[w]))))
    chambers = set()
    cells = []
    for v in reps:
        x, y = v
        up = ((x, y), (x + 1, y), (x, y + 1))
        down = ((x + 1, y), (x, y + 1), (x + 1, y + 1))
        for kind, cell in (("up", up), ("down", down)):
            tri = tuple(sorted(vid[reduce(p)] for p in cell))
            chambers.add(tri)
            cells.append({"kind": kind, "base": [x, y], "chamber": list(tri)})
    cx = TypedComplex(vertices, edges, chambers)

    _check_torus_local_structure(cx)

    if not with_geometry:
        return cx
    geometry = {
        "version": 1,
        "kind": "torus",
        "basis": [list(row) for row in spec.basis],
        "vertex_coords": [list(v) for v in reps],
        "cells": cells,
    }
    return cx, geometry


def _check_torus_local_structure(cx: TypedComplex) -> None:
    from .operators import directed_edges, edge_successors

    n0, n1, n2 = len(cx.vertices), len(cx.edges), len(cx.chambers)
    chambers_at: dict[int, int] = {v: 0 for v, _ in cx.vertices}
    edge_chambers: dict[tuple[int, int], int] = {e: 0 for e in cx.edges}
    for a, b, c in cx.chambers:
        for v in (a, b, c):
            chambers_at[v] += 1
        for e in ((a, b), (a, c), (b, c)):
            edge_chambers[e] += 1
    degree: dict[int, int] = {v: 0 for v, _ in cx.vertices}
    for a, b in cx.edges:
        degree[a] += 1
        degree[b] += 1
    ok = (
        n1 == 3 * n0 and n2 == 2 * n0
        and all(d == 6 for d in degree.values())
        and all(k == 6 for k in chambers_at.values())
        and all(k == 2 for k in edge_chambers.values())
        and all(len(edge_successors(cx, e)) == 1 for e in directed_edges(cx))
    )
    if not ok:
        raise GenerationError("quotient too small: local tiling structure broken")


# ---------------------------------------------------------------------------
# finite fields for the radius-1 subspace model
# ---------------------------------------------------------------------------


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise GenerationError(f"unsupported q={q}: must be a prime power >= 2")
    p = 2
    n = q
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            if n != 1:
                raise GenerationError(f"unsupported q={q}: not a prime power")
            return p, k
        p += 1
    return n, 1


class _GF:
    """Tiny arithmetic for GF(p^k); elements are tuples of length k mod p."""

    def __init__(self, p: int, k: int):
        self.p, self.k = p, k
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self.modulus = self._find_irreducible() if k > 1 else (0, 1)
        self.elements = [tuple(c) for c in product(range(p), repeat=k)]

    def _polmod(self, coeffs: list[int], mod: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        coeffs = [c % p for c in coeffs]
        deg_m = len(mod) - 1
        while len(coeffs) > deg_m:
            lead = coeffs[-1]
            if lead:
                shift = len(coeffs) - 1 - deg_m
                for i, m in enumerate(mod):
                    coeffs[shift + i] = (coeffs[shift + i] - lead * m) % p
            coeffs.pop()
        coeffs += [0] * (deg_m - len(coeffs))
        return tuple(coeffs)

    def _find_irreducible(self) -> tuple[int, ...]:
        p, k = self.p, self.k
        lower = [
            tail + (1,)
            for d in range(1, k // 2 + 1)
            for tail in product(range(p), repeat=d)
        ]
        for tail in product(range(p), repeat=k):
            cand = tail + (1,)
            if all(not self._poly_divides(g, cand) for g in lower):
                return cand
        raise RuntimeError("no irreducible polynomial found")  # unreachable

    def _poly_divides(self, g: tuple[int, ...], f: tuple[int, ...]) -> bool:
        p = self.p
        rem = list(f)
        ginv = pow(g[-1], p - 2, p)
        while len(rem) >= len(g) and any(rem):
            lead = rem[-1]
            if lead:
                factor = (lead * ginv) % p
                shift = len(rem) - len(g)
                for i, c in enumerate(g):
                    rem[shift + i] = (rem[shift + i] - factor * c) % p
            rem.pop()
        return not any(rem)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        out = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._polmod(out, self.modulus)


def _projective_points(gf: _GF) -> list[tuple]:
    """Normalized representatives of the q^2+q+1 projective points of GF(q)^3."""
    pts = []
    for b in gf.elements:
        for c in gf.elements:
            pts.append((gf.one, b, c))
    for c in gf.elements:
        pts.append((gf.zero, gf.one, c))
    pts.append((gf.zero, gf.zero, gf.one))
    return pts


def _incident(gf: _GF, point: tuple, covector: tuple) -> bool:
    acc = gf.zero
    for x, y in zip(point, covector):
        acc = gf.add(acc, gf.mul(x, y))
    return acc == gf.zero


# ---------------------------------------------------------------------------
# building balls
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BallSpec:
    """Ball parameters: residue cardinality q, radius, and center type."""

    q: int
    radius: int
    center_type: int = 0

    def __post_init__(self):
        _factor_prime_power(self.q)
        if self.radius < 0:
            raise GenerationError("radius must be nonnegative")
        if self.center_type not in (0, 1, 2):
            raise GenerationError("center_type must be 0, 1 or 2")


def gen_building_ball(spec: BallSpec, with_geometry: bool = False,
                      radius_bound: int = RADIUS_BOUND):
    """Radius-r combinatorial ball of the rank-3 affine building.

    Vertices are homothety classes of sublattices of a fixed rank-3 lattice;
    two classes are joined when representatives can be nested with colength
    one or two, and chambers are the pairwise-nested triples.  Every vertex
    at distance exactly r is marked as boundary.  Interior vertices have
    exactly q^2+q+1 neighbors of each of the two other types.
    """
    p, k = _factor_prime_power(spec.q)
    if spec.radius > radius_bound:
        raise GenerationError(
            f"radius {spec.radius} beyond bound {radius_bound}")
    if spec.radius == 0:
        cx = TypedComplex([(0, spec.center_type)], q=spec.q, boundary=[0])
        geometry = {"version": 1, "kind": "ball", "q": spec.q,
                    "radius": 0, "center_type": spec.center_type,
                    "labels": [{"center": True}]}
        return (cx, geometry) if with_geometry else cx
    if spec.radius == 1:
        result = _ball_radius_one(spec)
    else:
        if k != 1:
            raise GenerationError(
                f"radius >= 2 supports prime q only (got q={spec.q}); "
                "radius-1 balls support any prime power")
        result = _ball_from_lattice_chains(spec, p)
    cx, geometry = result
    return (cx, geometry) if with_geometry else cx


def _ball_radius_one(spec: BallSpec) -> tuple[TypedComplex, dict]:
    p, k = _factor_prime_power(spec.q)
    gf = _GF(p, k)
    points = _projective_points(gf)   # colength-2 classes
    lines = _projective_points(gf)    # covectors; kernels are colength-1 classes
    t0 = spec.center_type
    vertices = [(0, t0)]
    labels: list[dict] = [{"center": True}]
    line_id = {}
    for w in lines:
        line_id[w] = len(vertices)
        vertices.append((len(vertices), (t0 + 1) % 3))
        labels.append({"class": "colength1", "covector": [list(x) for x in w]})
    point_id = {}
    for pt in points:
        point_id[pt] = len(vertices)
        vertices.append((len(vertices), (t0 + 2) % 3))
        labels.append({"class": "colength2", "vector": [list(x) for x in pt]})
    edges = [(0, i) for i in range(1, len(vertices))]
    chambers = []
    for pt in points:
        for w in lines:
            if _incident(gf, pt, w):
                edges.append(tuple(sorted((point_id[pt], line_id[w]))))
                chambers.append(tuple(sorted((0, point_id[pt], line_id[w]))))
    boundary = list(range(1, len(vertices)))
    cx = TypedComplex(vertices, edges, chambers, q=spec.q, boundary=boundary)
    geometry = {"version": 1, "kind": "ball", "q": spec.q, "radius": 1,
                "center_type": spec.center_type, "labels": labels}
    return cx, geometry


def _vp(n: int, p: int) -> int:
    if n == 0:
        return 1 << 30
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _snf_p_exponents(m: list[list[int]], p: int) -> tuple[int, int, int]:
    """p-adic valuations (e1 <= e2 <= e3) of the elementary divisors of m."""
    g1 = math.gcd(*(abs(x) for row in m for x in row))
    minors = []
    for rows in ((0, 1), (0, 2), (1, 2)):
        for cols in ((0, 1), (0, 2), (1, 2)):
            a, b = rows
            c, d = cols
            minors.append(m[a][c] * m[b][d] - m[a][d] * m[b][c])
    g2 = math.gcd(*(abs(x) for x in minors))
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    e1 = _vp(g1, p)
    e12 = _vp(g2, p)
    e123 = _vp(abs(det), p)
    return e1, e12 - e1, e123 - e12


def _adjugate(m: list[list[int]]) -> list[list[int]]:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]


def _matmul3(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def _lattice_distance(x: list[list[int]], y: list[list[int]], p: int) -> int:
    """Gallery-free 1-skeleton distance between homothety classes [x], [y]."""
    rel = _matmul3(_adjugate(x), y)
    e = _snf_p_exponents(rel, p)
    return e[2] - e[0]


def _ball_from_lattice_chains(spec: BallSpec, p: int) -> tuple[TypedComplex, dict]:
    r = spec.radius
    lattices: list[tuple[int, list[list[int]]]] = []
    for a1, a2, a3 in product(range(r + 1), repeat=3):
        d1, d2, d3 = p ** a1, p ** a2, p ** a3
        for b12, b13, b23 in product(range(d1), range(d1), range(d2)):
            h = [[d1, b12, b13], [0, d2, b23], [0, 0, d3]]
            if all(x % p == 0 for row in h for x in row):
                continue  # not primitive: a homothety-smaller representative exists
            e = _snf_p_exponents(h, p)
            dist = e[2]
            if dist > r:
                continue
            lattices.append((dist, h))
    lattices.sort(key=lambda item: (item[0], item[1]))
    t0 = spec.center_type
    vertices = []
    labels = []
    for i, (dist, h) in enumerate(lattices):
        colength = _vp(h[0][0] * h[1][1] * h[2][2], p)
        vertices.append((i, (t0 + colength) % 3))
        labels.append({"hnf": h, "distance": dist})
    n = len(lattices)
    adjacency: dict[int, set[int]] = {i: set() for i in range(n)}
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if _lattice_distance(lattices[i][1], lattices[j][1], p) == 1:
                edges.append((i, j))
                adjacency[i].add(j)
                adjacency[j].add(i)
    chambers = []
    for i, j in edges:
        for m in sorted(adjacency[i] & adjacency[j]):
            if m > j:
                chambers.append((i, j, m))
    boundary = [i for i, (dist, _) in enumerate(lattices) if dist == r]
    cx = TypedComplex(vertices, edges, chambers, q=spec.q, boundary=boundary)
    geometry = {"version": 1, "kind": "ball", "q": spec.q, "radius": r,
                "center_type": spec.center_type, "labels": labels}
    return cx, geometry


# ---------------------------------------------------------------------------
# cycle complexes
# ---------------------------------------------------------------------------


def gen_cycle_complex(n: int) -> TypedComplex:
    """Typed n-cycle (n a positive multiple of 3): one closed positive geodesic."""
    if n < 3 or n % 3 != 0:
        raise GenerationError(f"cycle length must be a positive multiple of 3, got {n}")
    vertices = [(i, i % 3) for i in range(n)]
    edges = [(i, (i + 1) % n) for i in range(n)]
    return TypedComplex(vertices, edges)
