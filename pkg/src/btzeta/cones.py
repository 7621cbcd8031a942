"""Lattice points of rational simplicial cones and their generating series.

An open sharp cone with r sides is cut out of R^r by r linearly independent
integer functionals alpha_1..alpha_r (strict inequalities alpha_j(v) > 0).
Its intersection with a full-rank sublattice Sigma of Z^r decomposes uniquely
as v = v0 + k_1 a_1 + ... + k_r a_r with v0 from a finite fundamental set F
and k_j >= 0, where a_j is the minimal Sigma-point of the j-th edge ray.
This turns the weighted lattice-point series into a finite sum of geometric
series with closed form

    sum_{v0 in F} chi(v0) u_1^{alpha_1(v0)} ... u_r^{alpha_r(v0)}
        * prod_j 1 / (1 - chi(a_j) u_j^{alpha_j(a_j)})

which this module constructs exactly (Fractions for rational characters) and
cross-checks against direct partial sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

__all__ = [
    "LatticeCone",
    "ConeDecomposition",
    "CharacterData",
    "ConeClosedForm",
    "cone_generators",
    "fundamental_domain",
    "decompose",
    "cone_series_closed_form",
    "evaluate_partial_sum",
    "assemble_multivariable_S",
]


def _mat_vec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def _identity(r: int):
    return tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))


def _det(m) -> Fraction:
    m = [list(map(Fraction, row)) for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] * inv
            if f:
                for j in range(col, n):
                    m[i][j] -= f * m[col][j]
    return det


def _inverse(m):
    n = len(m)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class LatticeCone:
    """Rank, lattice basis (columns span Sigma inside Z^r), and functionals.

    The functionals must be linearly independent so the closed cone contains
    no line; the lattice basis must be nonsingular.
    """

    rank: int
    lattice_basis: tuple[tuple[int, ...], ...]  # rows of the basis matrix
    functionals: tuple[tuple[int, ...], ...]    # one integer covector per side

    def __init__(self, functionals, lattice_basis=None, rank=None):  # noqa: D107
        funcs = tuple(tuple(int(x) for x in f) for f in functionals)
        r = rank if rank is not None else len(funcs)
        if len(funcs) != r or any(len(f) != r for f in funcs):
            raise ValueError("need exactly r functionals of length r")
        basis = tuple(tuple(int(x) for x in row) for row in (lattice_basis or _identity(r)))
        if len(basis) != r or any(len(row) != r for row in basis):
            raise ValueError("lattice basis must be an r x r integer matrix")
        if _det(basis) == 0:
            raise ValueError("lattice basis is singular")
        if _det(funcs) == 0:
            raise ValueError("functionals are linearly dependent (cone is not sharp)")
        object.__setattr__(self, "rank", r)
        object.__setattr__(self, "lattice_basis", basis)
        object.__setattr__(self, "functionals", funcs)

    @property
    def basis_columns(self) -> tuple[tuple[int, ...], ...]:
        r = self.rank
        return tuple(tuple(self.lattice_basis[i][j] for i in range(r)) for j in range(r))

    def alpha(self, j: int, v) -> int:
        return sum(self.functionals[j][i] * v[i] for i in range(self.rank))

    def alphas(self, v) -> tuple[int, ...]:
        return tuple(self.alpha(j, v) for j in range(self.rank))

    def contains(self, v) -> bool:
        """Open-cone membership: every functional strictly positive."""
        return all(a > 0 for a in self.alphas(v))

    def in_lattice(self, v) -> bool:
        x = _mat_vec(_inverse(self.lattice_basis), v)
        return all(f.denominator == 1 for f in x)


@dataclass(frozen=True)
class ConeDecomposition:
    """Edge generators a_1..a_r and the fundamental set F."""

    generators: tuple[tuple[int, ...], ...]
    fundamental_set: tuple[tuple[int, ...], ...]


def _primitive_kernel_vector(rows) -> tuple[int, ...]:
    """Primitive integer vector spanning the 1-dim kernel of the given rows."""
    n = len(rows[0]) if rows else 1
    mat = [list(map(Fraction, row)) for row in rows]
    # fraction-free row echelon over Q
    pivots = []
    col = 0
    row = 0
    while row < len(mat) and col < n:
        piv = next((i for i in range(row, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for i in range(len(mat)):
            if i != row and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[row])]
        pivots.append(col)
        row += 1
        col += 1
    free = [j for j in range(n) if j not in pivots]
    if len(free) != 1:
        raise ValueError("functionals are degenerate: kernel is not a line")
    j = free[0]
    vec = [Fraction(0)] * n
    vec[j] = Fraction(1)
    for i, pc in enumerate(pivots):
        vec[pc] = -mat[i][j]
    denom = math.lcm(*(f.denominator for f in vec))
    ints = [int(f * denom) for f in vec]
    g = math.gcd(*(abs(x) for x in ints))
    return tuple(x // g for x in ints)


def cone_generators(cone: LatticeCone) -> tuple[tuple[int, ...], ...]:
    """Minimal lattice point a_j on each edge ray of the cone.

    a_j spans the line where all functionals except alpha_j vanish, lies in
    the lattice, is primitive there, and has alpha_j(a_j) > 0 minimal.
    """
    r = cone.rank
    gens = []
    for j in range(r):
        rows = [
            _mat_vec_row(cone.functionals[i], cone.basis_columns)
            for i in range(r) if i != j
        ]
        if r == 1:
            x = (1,)
        else:
            x = _primitive_kernel_vector(rows)
        # back to ambient coordinates through the lattice basis
        cand = _mat_vec(cone.lattice_basis, x)
        val = cone.alpha(j, cand)
        if val == 0:
            raise ValueError("degenerate functionals: edge ray lies in a wall")
        if val < 0:
            cand = tuple(-t for t in cand)
        gens.append(cand)
    return tuple(gens)


def _mat_vec_row(functional, basis_columns):
    """Row of the functional matrix expressed in lattice coordinates."""
    return tuple(sum(functional[i] * col[i] for i in range(len(col))) for col in basis_columns)


def fundamental_domain(cone: LatticeCone,
                       generators: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Lattice points of the half-open parallelepiped spanned by the generators.

    These are exactly the coset representatives v0 of Sigma modulo the
    sublattice generated by a_1..a_r that lie in the open cone while every
    v0 - a_j falls outside it.  The scan is exact: the half-open condition
    0 < t_j <= 1 on barycentric coordinates is tested with integer
    arithmetic only.
    """
    r = cone.rank
    a_mat = [[generators[j][i] for j in range(r)] for i in range(r)]  # generators as columns
    det_a = _det(a_mat)
    sign = 1 if det_a > 0 else -1
    # sign * adjugate(A): 0 < t <= 1 becomes 0 < (sign adj A) v <= |det A|
    m = np.array([[int(sign * det_a * x) for x in row] for row in _inverse(a_mat)],
                 dtype=np.int64)
    d = abs(int(det_a))
    b = np.array([list(row) for row in cone.lattice_basis], dtype=np.int64)
    b_inv = _inverse(cone.lattice_basis)
    # bound the parallelepiped in lattice coordinates x = B^-1 A t, t in [0,1]^r
    corners = [
        _mat_vec(b_inv, _mat_vec_col_comb(generators, bits))
        for bits in product((0, 1), repeat=r)
    ]
    lo = [math.floor(min(c[i] for c in corners)) for i in range(r)]
    hi = [math.ceil(max(c[i] for c in corners)) for i in range(r)]
    out: list[tuple[int, ...]] = []
    tail_axes = [np.arange(lo[i], hi[i] + 1, dtype=np.int64) for i in range(1, r)]
    for x0 in range(lo[0], hi[0] + 1):
        grids = np.meshgrid(np.array([x0], dtype=np.int64), *tail_axes, indexing="ij")
        x = np.stack([g.ravel() for g in grids])
        v = b @ x
        w = m @ v
        keep = (w > 0).all(axis=0) & (w <= d).all(axis=0)
        out.extend(map(tuple, v[:, keep].T.tolist()))
    expected = abs(int(det_a / _det(cone.lattice_basis)))
    if len(out) != expected:
        raise AssertionError(
            f"fundamental set size {len(out)} != lattice index {expected}")
    return tuple(sorted(out))


def _mat_vec_col_comb(generators, bits):
    r = len(generators)
    return tuple(sum(bits[j] * generators[j][i] for j in range(r)) for i in range(r))


def decompose(cone: LatticeCone, decomposition: ConeDecomposition, v):
    """Unique expression v = v0 + sum k_j a_j, or None when v is outside the cone.

    Raises ValueError when v is not a lattice point at all.
    """
    v = tuple(int(x) for x in v)
    if not cone.in_lattice(v):
        raise ValueError(f"{v} is not in the lattice")
    if not cone.contains(v):
        return None
    a_cols = tuple(tuple(g[i] for g in decomposition.generators) for i in range(cone.rank))
    t = _mat_vec(_inverse(a_cols), v)
    ks = tuple(math.ceil(tc) - 1 for tc in t)
    v0 = tuple(
        v[i] - sum(k * g[i] for k, g in zip(ks, decomposition.generators))
        for i in range(cone.rank)
    )
    if v0 not in decomposition.fundamental_set or any(k < 0 for k in ks):
        raise AssertionError(f"decomposition failed for {v}")
    return v0, ks


@dataclass(frozen=True)
class CharacterData:
    """Multiplier vector m: the character acts by v -> prod m_i ** v_i."""

    multipliers: tuple

    def __init__(self, multipliers):  # noqa: D107
        object.__setattr__(self, "multipliers", tuple(multipliers))

    def value(self, v):
        acc = Fraction(1) if all(isinstance(m, (int, Fraction)) for m in self.multipliers) else 1.0
        for m, e in zip(self.multipliers, v):
            if isinstance(m, (int, Fraction)):
                m = Fraction(m)
            acc = acc * m ** int(e)
        return acc

    @staticmethod
    def trivial(rank: int) -> "CharacterData":
        return CharacterData((Fraction(1),) * rank)


@dataclass(frozen=True)
class ConeClosedForm:
    """Finite-sum-over-poles closed form of the cone lattice-point series.

    ``terms`` lists (coefficient, exponent vector) for the fundamental-set
    numerator; ``pole_factors`` lists (coefficient, k_j) for the factors
    1/(1 - coeff * u_j^k_j), one per cone side.
    """

    terms: tuple
    pole_factors: tuple

    def evaluate(self, u):
        num = 0
        for coeff, exps in self.terms:
            mono = coeff
            for uj, e in zip(u, exps):
                mono *= uj ** e
            num += mono
        den = 1
        for j, (coeff, k) in enumerate(self.pole_factors):
            den *= 1 - coeff * u[j] ** k
        return num / den

    def converges_at(self, u) -> bool:
        return all(abs(complex(c) * complex(uj) ** k) < 1
                   for (c, k), uj in zip(self.pole_factors, u))

    def to_json_dict(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return {"num": str(x.numerator), "den": str(x.denominator)}
            if isinstance(x, complex):
                return {"re": x.real, "im": x.imag}
            return x
        return {
            "terms": [{"coeff": enc(c), "exponents": list(e)} for c, e in self.terms],
            "pole_factors": [{"coeff": enc(c), "power": k} for c, k in self.pole_factors],
        }


def cone_series_closed_form(cone: LatticeCone, decomposition: ConeDecomposition,
                            character: CharacterData | None = None) -> ConeClosedForm:
    """Exact closed form of sum over cone lattice points of chi(v) u^alpha(v).

    The exponent of u_j at v is the integer alpha_j(v); splitting v into
    fundamental point plus generator multiples factors the series into a
    finite numerator and r geometric pole factors.
    """
    if character is None:
        character = CharacterData.trivial(cone.rank)
    terms = tuple(
        (character.value(v0), cone.alphas(v0))
        for v0 in decomposition.fundamental_set
    )
    poles = tuple(
        (character.value(a), cone.alpha(j, a))
        for j, a in enumerate(decomposition.generators)
    )
    return ConeClosedForm(terms=terms, pole_factors=poles)


def truncated_cone_points(cone: LatticeCone, bound: int):
    """Exponent vectors w = alpha(v) and points v of the truncated cone.

    A lattice point v corresponds one-to-one to its integer exponent vector
    w = (alpha_1(v), ..., alpha_r(v)); the truncation alpha_j(v) <= bound is
    exactly the image-lattice part of the box (0, bound]^r.  Returns a pair
    of integer arrays of shape (r, n): the exponent vectors and the points.
    """
    r = cone.rank
    if bound < 1:
        return (np.zeros((r, 0), dtype=np.int64),) * 2
    g = [list(_mat_vec_row(cone.functionals[j], cone.basis_columns)) for j in range(r)]
    det_g = _det(g)
    det = int(det_g)
    adj = np.array([[int(det_g * x) for x in row] for row in _inverse(g)], dtype=np.int64)
    grids = np.meshgrid(*([np.arange(1, bound + 1, dtype=np.int64)] * r), indexing="ij")
    w_all = np.stack([a.ravel() for a in grids])
    x_scaled = adj @ w_all
    keep = (x_scaled % det == 0).all(axis=0)
    w = w_all[:, keep]
    x = x_scaled[:, keep] // det
    basis = np.array([list(row) for row in cone.lattice_basis], dtype=np.int64)
    return w, basis @ x


def evaluate_partial_sum(cone: LatticeCone, character: CharacterData | None,
                         u, bound: int):
    """Direct sum of chi(v) u^alpha(v) over lattice points with alpha_j(v) <= bound.

    Enumerates the truncated cone directly (no use of the decomposition);
    this is the numeric oracle the closed form is checked against.
    """
    if character is None:
        character = CharacterData.trivial(cone.rank)
    w, v = truncated_cone_points(cone, bound)
    if w.shape[1] == 0:
        return 0.0
    is_complex = any(isinstance(m, complex) for m in character.multipliers) \
        or any(isinstance(x, complex) for x in u)
    dtype = complex if is_complex else float
    terms = np.ones(w.shape[1], dtype=dtype)
    for j, uj in enumerate(u):
        terms *= np.power(dtype(uj), w[j])
    for i, m in enumerate(character.multipliers):
        m = dtype(float(m)) if isinstance(m, (int, Fraction)) else dtype(m)
        if m != 1:
            terms *= np.power(m, v[i])
    total = terms.sum()
    return float(total) if dtype is float else complex(total)


def assemble_multivariable_S(ledger, truncation: int, rank: int,
                             expand_powers: bool = True) -> dict:
    """Weighted multivariable length series from a class ledger.

    ``ledger`` entries are mappings with an ``l`` exponent vector (length =
    rank, nonnegative integers) and a ``weight``.  With ``expand_powers``
    each entry also contributes its n-fold multiples (constant weight), which
    reproduces the one-variable series of enumerated geodesic classes in the
    rank-one regular case.  Returns a dict mapping exponent tuples to exact
    coefficients, truncated componentwise at the given order.
    """
    series: dict[tuple[int, ...], Fraction] = {}
    for entry in ledger:
        l = tuple(int(x) for x in entry["l"])
        if len(l) != rank:
            raise ValueError(f"exponent vector {l} does not have rank {rank}")
        if any(x < 0 for x in l):
            raise ValueError(f"negative exponent in {l}")
        if all(x == 0 for x in l):
            raise ValueError("zero exponent vector is not a geodesic length")
        weight = entry.get("weight", 1)
        weight = Fraction(weight) if isinstance(weight, (int, Fraction)) else weight
        reps = range(1, truncation // max(l) + 1) if expand_powers else (1,)
        for n in reps:
            exps = tuple(n * x for x in l)
            if max(exps) > truncation:
                continue
            series[exps] = series.get(exps, Fraction(0)) + weight
    return {k: v for k, v in sorted(series.items()) if v != 0}
