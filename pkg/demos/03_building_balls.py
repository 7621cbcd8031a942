"""Local structure of the rank-3 affine building over residue cardinality q.

A radius-1 ball around a vertex is the cone over the incidence graph of the
projective plane PG(2, q): q^2+q+1 neighbors of each of the two other types,
q+1 chambers through every edge at the center, and exactly q^2 of the
q^2+q+1 type-correct continuations of an edge are straight (the other q+1
close a chamber flag).  Radius-2 balls are built from explicit sublattice
chains and expose complete links around every radius-1 vertex.
"""

from btzeta import BallSpec, euler_characteristic, gen_building_ball, simplex_counts
from btzeta.operators import (
    directed_edges,
    edge_successors,
    gallery_successors,
    pointed_chambers,
)

for q in (2, 3):
    ball = gen_building_ball(BallSpec(q=q, radius=1))
    counts = simplex_counts(ball)
    print(f"radius-1 ball, q = {q}:")
    print(f"  (N0, N1, N2) = ({counts.N0}, {counts.N1}, {counts.N2}), "
          f"chi = {euler_characteristic(ball)}")
    print(f"  center degree = {len(ball.neighbors(0))} = 2(q^2+q+1)")
    into_center = [e for e in directed_edges(ball) if e.head == 0]
    degrees = {len(edge_successors(ball, e)) for e in into_center}
    print(f"  straight continuations per edge into the center: {degrees} = q^2")
    print()

print("radius-2 ball, q = 2 (lattice-chain construction):")
ball2 = gen_building_ball(BallSpec(q=2, radius=2))
counts = simplex_counts(ball2)
interior = {v for v, _ in ball2.vertices} - ball2.boundary
print(f"  (N0, N1, N2) = ({counts.N0}, {counts.N1}, {counts.N2}), "
      f"{len(interior)} interior vertices")

out_degrees = {
    len(gallery_successors(ball2, pc))
    for pc in pointed_chambers(ball2)
    if pc.pointer.tail in interior or pc.pointer.head in interior
}
print(f"  gallery out-degree at interior pointers: {out_degrees} = q")
print("  (each straight strip crossing has exactly q continuations,")
print("   which is what makes the chamber zeta a polynomial)")
