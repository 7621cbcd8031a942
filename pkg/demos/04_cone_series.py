"""Lattice points of sharp rational cones and their closed-form series.

The open cone cut out by r independent integer functionals decomposes its
lattice points uniquely as a fundamental point plus nonnegative multiples of
the edge generators.  The weighted point series therefore collapses to a
finite sum over the fundamental set divided by r geometric pole factors,
which we verify against direct partial sums.
"""

from fractions import Fraction

from btzeta import (
    CharacterData,
    ConeDecomposition,
    LatticeCone,
    assemble_multivariable_S,
    cone_generators,
    cone_series_closed_form,
    decompose,
    evaluate_partial_sum,
    fundamental_domain,
)

print("The coordinate cone x > 0, y > 0 over Z^2:")
cone = LatticeCone(((1, 0), (0, 1)))
gens = cone_generators(cone)
fset = fundamental_domain(cone, gens)
deco = ConeDecomposition(gens, fset)
print("  edge generators:", gens)
print("  fundamental set:", fset)
closed = cone_series_closed_form(cone, deco)
print("  series = u1 u2 / ((1-u1)(1-u2)); at (1/2, 1/2) it sums to",
      closed.evaluate((Fraction(1, 2), Fraction(1, 2))))

print()
print("A skew cone: x > 0 and 2y - x > 0.")
skew = LatticeCone(((1, 0), (-1, 2)))
sgens = cone_generators(skew)
sfset = fundamental_domain(skew, sgens)
sdeco = ConeDecomposition(sgens, sfset)
print("  edge generators:", sgens)
print("  fundamental set:", sfset, "(lattice index 2)")
print("  decompose (4,3):", decompose(skew, sdeco, (4, 3)))
print("  decompose (0,5):", decompose(skew, sdeco, (0, 5)), "(boundary is excluded)")

value = float(cone_series_closed_form(skew, sdeco).evaluate((0.3, 0.3)))
oracle = evaluate_partial_sum(skew, None, (0.3, 0.3), 60)
print(f"  closed form at (0.3, 0.3): {value:.12f}")
print(f"  partial sum to bound 60  : {oracle:.12f}")
print(f"  relative error           : {abs(value - oracle) / abs(value):.2e}")

print()
print("Characters weight each lattice point by a product of multipliers:")
character = CharacterData((Fraction(1, 2), Fraction(1, 3)))
weighted = cone_series_closed_form(cone, deco, character)
print("  weighted closed form at (1/2, 1/2):",
      weighted.evaluate((Fraction(1, 2), Fraction(1, 2))))

print()
print("Weighted length ledgers expand into multivariable series:")
series = assemble_multivariable_S([{"l": (3,), "weight": 3}], 12, rank=1)
print("  single primitive class of length 3, weight 3:", series)
