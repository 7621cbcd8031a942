"""Zeta polynomials of the two transfer operators and their ratio.

``zeta_edge`` and ``zeta_chamber`` are the reverse characteristic polynomials
det(I - u T) of the edge and chamber operators; both are products of
(1 - u^length) over the primitive closed positive geodesics resp. galleries,
which is what the duality tests in the suite check coefficient by
coefficient.  ``ratio`` forms the normalized rational function
chamber(-u) / edge(u^2) (sign convention switchable).
"""

from __future__ import annotations

from .complexes import TypedComplex
from .operators import build_chamber_operator, build_edge_operator
from .polynomials import IntPolynomial, RationalFn, char_poly_reverse

__all__ = ["zeta_edge", "zeta_chamber", "ratio"]


def zeta_edge(c: TypedComplex) -> IntPolynomial:
    """det(I - u T) for the positive-edge transfer operator T."""
    return char_poly_reverse(build_edge_operator(c))


def zeta_chamber(c: TypedComplex) -> IntPolynomial:
    """det(I - u L) for the pointed-chamber transfer operator L.

    A complex without chambers yields the constant polynomial 1.
    """
    if not c.chambers:
        if c.boundary:
            raise ValueError("chamber zeta is undefined on complexes with boundary")
        return IntPolynomial.one()
    return char_poly_reverse(build_chamber_operator(c))


def ratio(c: TypedComplex, negate_u: bool = True) -> RationalFn:
    """Normalized ratio zeta_chamber(-u) / zeta_edge(u^2).

    With ``negate_u=False`` the chamber polynomial is taken at +u instead;
    both sign conventions are exposed so downstream comparisons can record
    which one matches the primitive-geodesic product on a given input.
    """
    z2 = zeta_chamber(c)
    z1 = zeta_edge(c)
    num = z2.subst_neg_u() if negate_u else z2
    return RationalFn(num, z1.subst_u_power(2))
