"""Exact integer polynomial and power-series layer.

Everything here is exact: coefficients are Python ints (or Fractions in
intermediate steps), never floats.  Reverse characteristic polynomials
``det(I - u*M)`` of integer matrices are computed by a modular Hessenberg
reduction with Chinese-remainder reconstruction, certified by a Hadamard-style
coefficient bound, so the result is provably exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "IntPolynomial",
    "RationalFn",
    "PowerSeriesPrefix",
    "char_poly_reverse",
    "log_derivative_series",
    "series_exp_neg_integral",
    "series_inverse",
    "series_product",
]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``u**k``; trailing zeros are stripped
    so the representation is canonical.  The zero polynomial has empty
    coefficients and degree -1 (sentinel).
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):  # noqa: D107
        object.__setattr__(self, "coeffs", _strip(int(c) for c in coeffs))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def monomial(k: int, c: int = 1) -> "IntPolynomial":
        return IntPolynomial([0] * k + [c])

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(c * a for a in self.coeffs)

    def pow(self, n: int) -> "IntPolynomial":
        result = IntPolynomial.one()
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitutions and evaluation ---------------------------------------

    def subst_neg_u(self) -> "IntPolynomial":
        """Return p(-u)."""
        return IntPolynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def subst_u_power(self, m: int) -> "IntPolynomial":
        """Return p(u**m)."""
        if m < 1:
            raise ValueError("power substitution needs m >= 1")
        out = [0] * (m * len(self.coeffs))
        for k, c in enumerate(self.coeffs):
            out[m * k] = c
        return IntPolynomial(out)

    def eval(self, x):
        """Horner evaluation; works for int, Fraction, float and complex x."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k >= 1)

    # -- exact division and gcd ---------------------------------------------

    def content(self) -> int:
        return math.gcd(*(abs(c) for c in self.coeffs)) if self.coeffs else 0

    def primitive_part(self) -> "IntPolynomial":
        c = self.content()
        if c in (0, 1):
            return self
        sign = 1 if self.coeffs[-1] > 0 else -1
        return IntPolynomial(a // (sign * c) for a in self.coeffs)

    def divmod_exact(self, d: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Polynomial division over Q, returned as (quotient, remainder).

        Raises ValueError if the quotient or remainder is not integral.
        """
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < d.degree:
            return IntPolynomial(), self
        rem = [Fraction(c) for c in self.coeffs]
        dc = [Fraction(c) for c in d.coeffs]
        q = [Fraction(0)] * max(0, len(rem) - len(dc) + 1)
        for k in range(len(rem) - len(dc), -1, -1):
            factor = rem[k + len(dc) - 1] / dc[-1]
            q[k] = factor
            if factor:
                for j, c in enumerate(dc):
                    rem[k + j] -= factor * c
        if any(f.denominator != 1 for f in q) or any(r.denominator != 1 for r in rem):
            raise ValueError("division is not integral")
        return IntPolynomial(int(f) for f in q), IntPolynomial(int(r) for r in rem)

    def divide_exact(self, d: "IntPolynomial") -> "IntPolynomial | None":
        """Return self / d when the division is exact over Z, else None."""
        try:
            q, r = self.divmod_exact(d)
        except ValueError:
            return None
        return q if r.is_zero() else None

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*u" if abs(c) != 1 else ("u" if c > 0 else "-u"))
            else:
                parts.append(f"{c}*u^{k}" if abs(c) != 1 else (f"u^{k}" if c > 0 else f"-u^{k}"))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd of two integer polynomials (positive leading coefficient).

    Uses the primitive pseudo-remainder sequence, which keeps intermediate
    coefficients bounded, and returns the primitive gcd over Z.
    """
    if a.is_zero():
        return b.primitive_part()
    if b.is_zero():
        return a.primitive_part()
    p, q = a.primitive_part(), b.primitive_part()
    if p.degree < q.degree:
        p, q = q, p
    while not q.is_zero():
        # pseudo-remainder: lc(q)^(deg p - deg q + 1) * p mod q is integral
        shift = p.degree - q.degree + 1
        rem = p.scale(q.coeffs[-1] ** shift)
        rem = rem.divmod_exact(q)[1]
        p, q = q, rem.primitive_part()
    return p.primitive_part()


@dataclass(frozen=True)
class RationalFn:
    """Quotient of integer polynomials in normalized form.

    Normalization: the polynomial gcd is removed, the pair has joint integer
    content 1, and the lowest-order nonzero denominator coefficient is
    positive (so zeta-shaped denominators read 1 - ... as usual).
    """

    num: IntPolynomial
    den: IntPolynomial

    def __init__(self, num: IntPolynomial, den: IntPolynomial):  # noqa: D107
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g.degree >= 1 or abs(g[0]) != 1:
            if not num.is_zero():
                num = num.divmod_exact(g)[0]
            den = den.divmod_exact(g)[0]
        c = math.gcd(num.content(), den.content())
        if c > 1:
            num = IntPolynomial(a // c for a in num.coeffs)
            den = IntPolynomial(a // c for a in den.coeffs)
        if next(x for x in den.coeffs if x != 0) < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def eval(self, x):
        return Fraction(self.num.eval(x), self.den.eval(x)) if isinstance(x, (int, Fraction)) \
            else self.num.eval(x) / self.den.eval(x)

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


@dataclass(frozen=True)
class PowerSeriesPrefix:
    """Truncated power series: exact coefficients c_1..c_M (index = exponent).

    ``coeffs[m]`` holds c_m for 1 <= m <= order; coeffs[0] is the constant
    term and is kept for convenience.  All arithmetic in this module keeps
    coefficients exact (ints, or Fractions in intermediate computations).
    """

    coeffs: tuple
    order: int

    def __init__(self, coeffs: Sequence, order: int | None = None):  # noqa: D107
        coeffs = tuple(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) != order + 1:
            raise ValueError("series prefix must carry exactly order+1 coefficients")
        object.__setattr__(self, "coeffs", tuple(_normalize_number(c) for c in coeffs))
        object.__setattr__(self, "order", order)

    def __getitem__(self, m: int):
        return self.coeffs[m]

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeriesPrefix) and self.order == other.order \
            and self.coeffs == other.coeffs


def _normalize_number(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# ---------------------------------------------------------------------------
# reverse characteristic polynomial det(I - u M)
# ---------------------------------------------------------------------------


def _small_primes(bound: int = 1 << 15) -> list[int]:
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(bound) if sieve[i]]


_TRIAL_PRIMES = _small_primes()


def _primes_below_2_30(count: int) -> list[int]:
    """Deterministic list of primes just below 2**30 (int64-safe products)."""
    primes: list[int] = []
    n = (1 << 30) - 1
    while len(primes) < count:
        is_p = True
        for p in _TRIAL_PRIMES:
            if p * p > n:
                break
            if n % p == 0:
                is_p = False
                break
        if is_p:
            primes.append(n)
        n -= 2
    return primes


def _charpoly_mod(mat: np.ndarray, p: int) -> np.ndarray:
    """Coefficients of det(x I - M) mod p, degree-ascending, via Hessenberg."""
    h = np.mod(mat.astype(object), p).astype(np.int64) % p
    n = h.shape[0]
    # reduce to upper Hessenberg form with row/column operations mod p
    for k in range(n - 2):
        piv = None
        for i in range(k + 1, n):
            if h[i, k] % p:
                piv = i
                break
        if piv is None:
            continue
        if piv != k + 1:
            h[[k + 1, piv], :] = h[[piv, k + 1], :]
            h[:, [k + 1, piv]] = h[:, [piv, k + 1]]
        inv = pow(int(h[k + 1, k]), p - 2, p)
        for i in range(k + 2, n):
            if h[i, k] % p == 0:
                continue
            f = (int(h[i, k]) * inv) % p
            h[i, :] = (h[i, :] - f * h[k + 1, :]) % p
            h[:, k + 1] = (h[:, k + 1] + f * h[:, i]) % p
    # leading-principal-minor recurrence for det(xI - H)
    polys: list[np.ndarray] = [np.array([1], dtype=np.int64)]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        cur = np.zeros(k + 1, dtype=np.int64)
        cur[1:] = prev
        cur[:-1] = (cur[:-1] - int(h[k - 1, k - 1]) * prev) % p
        beta = 1
        for i in range(k - 1, 0, -1):
            beta = (beta * int(h[i, i - 1])) % p
            term = (beta * int(h[i - 1, k - 1])) % p
            if term:
                cur[: i] = (cur[: i] - term * polys[i - 1]) % p
        polys.append(cur % p)
    return polys[n]


def _coeff_bound_bits(mat: np.ndarray) -> int:
    n = mat.shape[0]
    if n == 0:
        return 2
    row_norms = np.sqrt((mat.astype(float) ** 2).sum(axis=1))
    m = max(1.0, float(row_norms.max()))
    # |e_k(eigenvalues)| <= C(n,k) * m^k <= 2^n * m^n
    return int(n + n * math.log2(m)) + 4


def char_poly_reverse(mat) -> IntPolynomial:
    """Exact det(I - u*M) for a square integer matrix.

    Accepts a dense integer array-like or anything with a ``to_dense``
    method.  Result coefficients are exact arbitrary-precision integers:
    the modular computation uses enough 30-bit primes to cover a Hadamard
    bound on the coefficients, so the CRT reconstruction is certified.
    """
    if hasattr(mat, "to_dense"):
        mat = mat.to_dense()
    arr = np.asarray(mat, dtype=object)
    if arr.ndim == 0 or arr.size == 0:
        return IntPolynomial.one()
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("matrix must be square")
    n = arr.shape[0]
    bits = _coeff_bound_bits(arr)
    primes = _primes_below_2_30(bits // 29 + 1)
    residues = [_charpoly_mod(arr, p) for p in primes]

    # CRT with balanced (symmetric) lift
    modulus = 1
    combined = [0] * (n + 1)
    for p, res in zip(primes, residues):
        if modulus == 1:
            combined = [int(r) for r in res]
            modulus = p
            continue
        inv = pow(modulus % p, p - 2, p)
        for k in range(n + 1):
            delta = ((int(res[k]) - combined[k]) * inv) % p
            combined[k] += modulus * delta
        modulus *= p
    half = modulus // 2
    charpoly = [c - modulus if c > half else c for c in combined]  # degree-ascending in x

    # det(I - uM) = u^n * charpoly_M(1/u): reverse the coefficient order
    return IntPolynomial(reversed(charpoly))


def berkowitz_char_poly_reverse(mat) -> IntPolynomial:
    """Division-free Berkowitz computation of det(I - u*M); small dims only.

    Kept as an independent exact route for cross-checking the modular path.
    """
    if hasattr(mat, "to_dense"):
        mat = mat.to_dense()
    rows = [[int(x) for x in row] for row in np.asarray(mat, dtype=object)]
    n = len(rows)
    if n == 0:
        return IntPolynomial.one()
    # vectors[k] holds coefficients of det(xI - M_k) for leading k x k block
    vec = [1, -rows[0][0]]
    for k in range(1, n):
        a = rows[k][k]
        row = rows[k][:k]
        col = [rows[i][k] for i in range(k)]
        # Toeplitz coefficients: 1, -a, -(R col), -(R M col), ...
        toep = [1, -a]
        cur = col
        for _ in range(k):
            toep.append(-sum(r * c for r, c in zip(row, cur)))
            cur = [sum(rows[i][j] * cur[j] for j in range(k)) for i in range(k)]
        new = [0] * (k + 2)
        for i, t in enumerate(toep):
            if t == 0:
                continue
            for j, v in enumerate(vec):
                if i + j <= k + 1:
                    new[i + j] += t * v
        vec = new
    # vec holds det(xI - M) with leading coefficient first, which is exactly
    # the ascending-u coefficient list of det(I - uM)
    return IntPolynomial(vec)


# ---------------------------------------------------------------------------
# logarithmic derivative and series helpers
# ---------------------------------------------------------------------------


def _log_deriv_of_poly(p: IntPolynomial, order: int) -> list[Fraction]:
    """Coefficients c_1..c_order of -u p'(u)/p(u); requires p(0) != 0."""
    if p.is_zero() or p[0] == 0:
        raise ValueError("logarithmic derivative needs a nonzero constant term")
    a0 = Fraction(p[0])
    c: list[Fraction] = [Fraction(0)] * (order + 1)
    for m in range(1, order + 1):
        acc = Fraction(m * p[m])
        for j in range(1, m):
            acc += c[j] * p[m - j]
        c[m] = -acc / a0
    return c


def log_derivative_series(f, order: int) -> PowerSeriesPrefix:
    """Coefficients of -u * d/du log f(u) up to the given order.

    ``f`` may be an IntPolynomial or a RationalFn with nonzero value at 0.
    For f = det(I - u*T) the coefficient of u^m equals trace(T^m); in all
    such cases the result is integral and returned as exact ints.
    """
    if isinstance(f, RationalFn):
        cn = _log_deriv_of_poly(f.num, order)
        cd = _log_deriv_of_poly(f.den, order)
        coeffs = [cn[m] - cd[m] for m in range(order + 1)]
    else:
        coeffs = _log_deriv_of_poly(f, order)
    coeffs[0] = Fraction(0)
    return PowerSeriesPrefix(coeffs, order)


def series_inverse(p: IntPolynomial, order: int) -> PowerSeriesPrefix:
    """Power-series inverse of p up to the given order; requires p(0) = +-1."""
    if p[0] not in (1, -1):
        raise ValueError("series inverse needs constant term +-1")
    inv = [Fraction(0)] * (order + 1)
    inv[0] = Fraction(1, p[0])
    for m in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            acc += p[j] * inv[m - j]
        inv[m] = -acc / p[0]
    return PowerSeriesPrefix(inv, order)


def series_product(a: PowerSeriesPrefix, b: PowerSeriesPrefix) -> PowerSeriesPrefix:
    order = min(a.order, b.order)
    out = [sum((a[j] * b[m - j] for j in range(m + 1)), Fraction(0)) for m in range(order + 1)]
    return PowerSeriesPrefix(out, order)


def series_exp_neg_integral(counts: Sequence, order: int) -> PowerSeriesPrefix:
    """exp(-sum_m counts[m] u^m / m) as an exact truncated series.

    ``counts[m]`` is indexed by exponent (counts[0] ignored).  This is the
    standard exponential of the termwise-integrated series: the formal
    inverse of the logarithmic-derivative map, used to rebuild a zeta
    polynomial from closed-path counts.
    """
    a = [Fraction(0)] * (order + 1)
    for m in range(1, order + 1):
        a[m] = -Fraction(counts[m], m) if m < len(counts) else Fraction(0)
    e = [Fraction(0)] * (order + 1)
    e[0] = Fraction(1)
    for m in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, m + 1):
            acc += k * a[k] * e[m - k]
        e[m] = acc / m
    return PowerSeriesPrefix(e, order)
