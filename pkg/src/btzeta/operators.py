"""Transfer operators on directed positive edges and pointed chambers.

Positive direction: a directed edge tail->head is *positive* when
``type(head) == type(tail) + 1 (mod 3)``; every undirected edge carries
exactly one positive direction.

Edge rule (straight-line continuation).  A composable pair ``e, e2`` is a
positive step when the head of ``e2`` differs from the tail of ``e`` and the
three vertices involved do not span a chamber.  On the triangular tiling this
keeps exactly the straight continuation of a lattice line; on a complex with
local parameter q it keeps q^2 of the q^2+q+1 type-correct continuations
(the q+1 rejected ones are exactly those closing a chamber flag).

Gallery rule (straight strip crossing).  A pointed chamber ``(C, p)`` stands
for "a straight line is inside C and exits across the edge p" (p carries its
positive orientation).  The line then enters the chamber C2 on the far side
of p, and leaves C2 across the edge joining the vertex of C2 opposite to p
with the tail of p, again positively oriented:

    (C1, p1) -> (C2, p2)   iff   p1 is a common edge of C1 != C2 and
                                  p2 = (opposite vertex of C2 over p1) -> tail(p1)

This was calibrated against exact rational line-marching in the plane tiling
and against lattice-chain balls: each pointed chamber of a closed complex has
exactly q successors (one on the torus), and the traces of the operator count
straight strip crossings.

Both operators refuse complexes with a marked boundary: their determinant
identities concern closed complexes only, and silently truncating at the
boundary would corrupt the counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import TypedComplex

__all__ = [
    "DirectedEdge",
    "PointedChamber",
    "SparseIntMatrix",
    "directed_edges",
    "pointed_chambers",
    "positive_step",
    "gallery_step",
    "edge_successors",
    "gallery_successors",
    "build_edge_operator",
    "build_chamber_operator",
]


@dataclass(frozen=True, order=True)
class DirectedEdge:
    """Edge traversed in the positive (type-increasing) direction."""

    tail: int
    head: int


@dataclass(frozen=True, order=True)
class PointedChamber:
    """Chamber plus the positively oriented edge across which it is exited."""

    chamber: tuple[int, int, int]
    pointer: DirectedEdge


@dataclass(frozen=True)
class SparseIntMatrix:
    """Integer matrix stored as (row, col) -> value over a canonical index set."""

    dim: int
    entries: tuple[tuple[int, int, int], ...]  # sorted (row, col, value) triplets

    def __init__(self, dim: int, entries):  # noqa: D107
        trip = tuple(sorted((int(r), int(c), int(v)) for r, c, v in entries if v))
        for r, c, _ in trip:
            if not (0 <= r < dim and 0 <= c < dim):
                raise ValueError("matrix entry out of range")
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "entries", trip)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=object)
        for r, c, v in self.entries:
            out[r, c] += v
        return out

    def trace_powers(self, max_power: int) -> list[int]:
        """Exact [tr M, tr M^2, ..., tr M^max_power] via integer matmuls."""
        dense = [[int(x) for x in row] for row in self.to_dense()]
        n = self.dim
        traces = []
        power = dense
        for _ in range(max_power):
            traces.append(sum(power[i][i] for i in range(n)))
            power = [
                [sum(power[i][k] * dense[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
        return traces

    def to_json_dict(self) -> dict:
        return {"dim": self.dim, "triplets": [list(t) for t in self.entries]}


def _check_closed(c: TypedComplex, what: str) -> None:
    if c.boundary:
        raise ValueError(
            f"{what} is undefined on complexes with marked boundary "
            f"({len(c.boundary)} boundary vertices); operators need closed complexes")


def directed_edges(c: TypedComplex) -> list[DirectedEdge]:
    """All positive directed edges, sorted by (tail, head)."""
    out = []
    for a, b in c.edges:
        ta, tb = c.type_of[a], c.type_of[b]
        if (ta + 1) % 3 == tb:
            out.append(DirectedEdge(a, b))
        elif (tb + 1) % 3 == ta:
            out.append(DirectedEdge(b, a))
        # equal types are rejected by validation; skip silently here
    return sorted(out)


def pointed_chambers(c: TypedComplex) -> list[PointedChamber]:
    """All pointed chambers (three per chamber), canonically sorted."""
    out = []
    for tri in c.chambers:
        by_type = {c.type_of[v]: v for v in tri}
        if len(by_type) != 3:
            raise ValueError(f"chamber {tri} is not typed by all three types")
        for t in (0, 1, 2):
            out.append(PointedChamber(tri, DirectedEdge(by_type[t], by_type[(t + 1) % 3])))
    return sorted(out, key=lambda pc: (pc.chamber, pc.pointer))


def positive_step(c: TypedComplex, e: DirectedEdge, e2: DirectedEdge) -> bool:
    """True when e2 continues e along a straight positive path."""
    if e.head != e2.tail:
        raise ValueError(f"edges {e} and {e2} are not composable")
    if e2.head == e.tail:
        return False
    return not c.has_chamber(e.tail, e.head, e2.head)


def edge_successors(c: TypedComplex, e: DirectedEdge) -> list[DirectedEdge]:
    """Positive continuations of e, in canonical order."""
    want = (c.type_of[e.head] + 1) % 3
    out = []
    for w in sorted(c.neighbors(e.head)):
        if c.type_of[w] != want or w == e.tail:
            continue
        if not c.has_chamber(e.tail, e.head, w):
            out.append(DirectedEdge(e.head, w))
    return out


def gallery_step(c: TypedComplex, pc1: PointedChamber, pc2: PointedChamber) -> bool:
    """True when pc2 continues pc1 along a straight gallery crossing."""
    if pc1.chamber == pc2.chamber:
        return False
    f = tuple(sorted((pc1.pointer.tail, pc1.pointer.head)))
    if not set(f) <= set(pc2.chamber):
        return False
    opposite = next(v for v in pc2.chamber if v not in f)
    return pc2.pointer == DirectedEdge(opposite, pc1.pointer.tail)


def gallery_successors(c: TypedComplex, pc: PointedChamber,
                       chambers_of_edge: dict | None = None) -> list[PointedChamber]:
    """Gallery continuations of pc, in canonical order."""
    if chambers_of_edge is None:
        chambers_of_edge = _chambers_of_edge(c)
    f = tuple(sorted((pc.pointer.tail, pc.pointer.head)))
    out = []
    for tri in chambers_of_edge.get(f, ()):
        if tri == pc.chamber:
            continue
        opposite = next(v for v in tri if v not in f)
        out.append(PointedChamber(tri, DirectedEdge(opposite, pc.pointer.tail)))
    return sorted(out, key=lambda x: (x.chamber, x.pointer))


def _chambers_of_edge(c: TypedComplex) -> dict[tuple[int, int], list]:
    table: dict[tuple[int, int], list] = {}
    for tri in c.chambers:
        a, b, d = tri
        for e in ((a, b), (a, d), (b, d)):
            table.setdefault(e, []).append(tri)
    return table


def build_edge_operator(c: TypedComplex) -> SparseIntMatrix:
    """0/1 transfer matrix T with T[e2, e] = 1 iff e2 positively continues e.

    Index set: positive directed edges sorted by (tail, head).  Requires a
    closed complex with a nonempty edge set.
    """
    _check_closed(c, "edge operator")
    edges = directed_edges(c)
    if not edges:
        raise ValueError("edge operator needs a nonempty edge set")
    index = {e: i for i, e in enumerate(edges)}
    entries = []
    for e in edges:
        for e2 in edge_successors(c, e):
            entries.append((index[e2], index[e], 1))
    return SparseIntMatrix(len(edges), entries)


def build_chamber_operator(c: TypedComplex) -> SparseIntMatrix:
    """0/1 transfer matrix on pointed chambers for straight gallery crossings.

    Index set: pointed chambers sorted by (chamber, pointer).  An empty
    chamber set gives the 0x0 matrix (its zeta polynomial is 1).
    """
    _check_closed(c, "chamber operator")
    pcs = pointed_chambers(c)
    index = {pc: i for i, pc in enumerate(pcs)}
    table = _chambers_of_edge(c)
    entries = []
    for pc in pcs:
        for nxt in gallery_successors(c, pc, table):
            entries.append((index[nxt], index[pc], 1))
    return SparseIntMatrix(len(pcs), entries)
