"""Exact rational dense linear algebra.

Matrices are immutable with arbitrary-precision Fraction entries; every
operation here is pure and exact (no floating point).  The symplectic form
is always the standard block form [[0, I_n], [-I_n, 0]]; arbitrary Gram
matrices for the symplectic structure are not accepted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionError, FormError

Scalar = int | str | Fraction
Vector = tuple[Fraction, ...]


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vector(entries: Iterable[Scalar]) -> Vector:
    """Coerce an iterable of ints/strings/Fractions to an exact vector."""
    return tuple(_frac(x) for x in entries)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix with exact rational entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "RationalMatrix":
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise DimensionError("ragged rows")
        return cls(data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        zero = Fraction(0)
        return cls(tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Scalar]]) -> "RationalMatrix":
        return cls.from_rows(cols).transpose() if cols else cls(())

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.entries))) if self.entries else self

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return RationalMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def scale(self, c: Scalar) -> "RationalMatrix":
        f = _frac(c)
        return RationalMatrix(tuple(tuple(f * x for x in row) for row in self.entries))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().entries
        return RationalMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries)
        )

    def matvec(self, v: Sequence[Fraction]) -> Vector:
        if self.cols != len(v):
            raise DimensionError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def to_floats(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self.entries]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)


@dataclass(frozen=True)
class SignaturePair:
    """Inertia indices (p, q) of a symmetric form."""

    p: int
    q: int

    @property
    def rank(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class SymplecticSpace:
    """R^{2n} with the standard symplectic form [[0, I_n], [-I_n, 0]]."""

    half_dim: int

    def __post_init__(self) -> None:
        if self.half_dim < 0:
            raise ValueError("half_dim must be nonnegative")

    @property
    def dim(self) -> int:
        return 2 * self.half_dim

    @property
    def omega(self) -> RationalMatrix:
        return standard_omega(self.half_dim)


@lru_cache(maxsize=64)
def standard_omega(n: int) -> RationalMatrix:
    rows = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = Fraction(1)
        rows[n + i][i] = Fraction(-1)
    return RationalMatrix.from_rows(rows)


# ----------------------------------------------------------------------
# rank / inverse / nullspace

def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    # Scaling a row by a positive integer does not change the rank.
    out = []
    for row in m.entries:
        lcm = 1
        for x in row:
            d = x.denominator
            lcm = lcm * d // _gcd(lcm, d)
        out.append([int(x * lcm) for x in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@lru_cache(maxsize=8192)
def rank(m: RationalMatrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = _integer_rows(m)
    nr, nc = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == nr:
            break
    return r


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan elimination."""
    if not m.is_square():
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    a = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(m.entries)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        d = a[c][c]
        a[c] = [x / d for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return RationalMatrix.from_rows([row[n:] for row in a])


def nullspace(m: RationalMatrix) -> list[Vector]:
    """Basis of the right kernel, as exact column vectors."""
    nr, nc = m.rows, m.cols
    a = [list(row) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        d = a[r][c]
        a[r] = [x / d for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * nc
        v[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -a[i][fcol]
        basis.append(tuple(v))
    return basis


# ----------------------------------------------------------------------
# polynomials (dense, low-to-high coefficients) for the semisimplicity test

Poly = tuple[Fraction, ...]


def _poly_trim(p: Sequence[Fraction]) -> Poly:
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return tuple(p[:i])


def _poly_monic(p: Poly) -> Poly:
    if not p:
        return p
    lead = p[-1]
    return tuple(x / lead for x in p)


def _poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_mod(a: Poly, b: Poly) -> Poly:
    rem = list(a)
    db, lead = len(b) - 1, b[-1]
    while len(rem) - 1 >= db and any(x != 0 for x in rem):
        rem = _list_trim(rem)
        if len(rem) - 1 < db:
            break
        f = rem[-1] / lead
        shift = len(rem) - 1 - db
        for i, y in enumerate(b):
            rem[shift + i] -= f * y
        rem.pop()
    return _poly_trim(rem)


def _list_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_mod(a, b)
    return _poly_monic(a)


def _poly_deriv(p: Poly) -> Poly:
    return _poly_trim(tuple(i * x for i, x in enumerate(p)))[1:] if len(p) > 1 else ()


def _poly_divexact(a: Poly, b: Poly) -> Poly:
    # a must be divisible by b
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = list(a)
    db, lead = len(b) - 1, b[-1]
    for shift in range(len(quo) - 1, -1, -1):
        f = rem[shift + db] / lead
        quo[shift] = f
        if f:
            for i, y in enumerate(b):
                rem[shift + i] -= f * y
    return _poly_trim(quo)


def _poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a:
        return _poly_monic(b)
    if not b:
        return _poly_monic(a)
    g = _poly_gcd(a, b)
    return _poly_monic(_poly_mul(a, _poly_divexact(b, g)))


def minimal_polynomial(m: RationalMatrix) -> Poly:
    """Monic minimal polynomial, as the lcm of Krylov annihilators of e_i."""
    if not m.is_square():
        raise DimensionError("minimal polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return (Fraction(1),)
    minpoly: Poly = ()
    for start in range(n):
        v = tuple(Fraction(1 if i == start else 0) for i in range(n))
        if minpoly:
            # Skip vectors already annihilated by the current lcm.
            img = v
            acc = [minpoly[0] * x for x in v]
            for coef in minpoly[1:]:
                img = m.matvec(img)
                acc = [a + coef * x for a, x in zip(acc, img)]
            if all(x == 0 for x in acc):
                continue
        ann = _krylov_annihilator(m, v)
        minpoly = _poly_lcm(minpoly, ann) if minpoly else ann
        if len(minpoly) == n + 1:
            break
    return minpoly


def _krylov_annihilator(m: RationalMatrix, v: Vector) -> Poly:
    # Reduced row basis of Krylov iterates, each carrying its coordinates
    # in terms of v, Mv, M^2 v, ...
    n = len(v)
    basis: list[tuple[list[Fraction], list[Fraction]]] = []
    vec = list(v)
    power = 0
    while True:
        coords = [Fraction(0)] * (n + 1)
        coords[power] = Fraction(1)
        w = list(vec)
        for bvec, bcoords in basis:
            piv = next((i for i, x in enumerate(bvec) if x != 0))
            if w[piv] != 0:
                f = w[piv] / bvec[piv]
                w = [x - f * y for x, y in zip(w, bvec)]
                coords = [c - f * d for c, d in zip(coords, bcoords)]
        if all(x == 0 for x in w):
            return _poly_monic(_poly_trim(coords))
        basis.append((w, coords))
        vec = list(m.matvec(vec))
        power += 1


@lru_cache(maxsize=8192)
def is_semisimple(m: RationalMatrix) -> bool:
    """True iff the minimal polynomial of m is squarefree."""
    if not m.is_square():
        raise DimensionError("semisimplicity of a non-square matrix")
    p = minimal_polynomial(m)
    if len(p) <= 1:
        return True
    g = _poly_gcd(p, _poly_deriv(p))
    return len(g) <= 1


def char_poly(m: RationalMatrix) -> Poly:
    """Characteristic polynomial det(xI - m) by Faddeev-LeVerrier."""
    if not m.is_square():
        raise DimensionError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    acc = RationalMatrix.zeros(n, n)
    ident = RationalMatrix.identity(n)
    c = Fraction(1)
    for k in range(1, n + 1):
        acc = m @ (acc + ident.scale(c))
        c = -sum(acc.entries[i][i] for i in range(n)) / k
        coeffs[n - k] = c
    return tuple(coeffs)


# ----------------------------------------------------------------------
# symmetric forms

@lru_cache(maxsize=8192)
def gram_of(a: RationalMatrix, space: SymplecticSpace) -> RationalMatrix:
    """Symmetric Gram matrix (v, w) -> <A v, w> of an element of sp."""
    if a.shape != (space.dim, space.dim):
        raise DimensionError(f"expected a {space.dim}x{space.dim} matrix")
    omega = space.omega
    g = a.transpose() @ omega
    if not g.is_symmetric():
        raise FormError("not infinitesimally symplectic")
    return g


@lru_cache(maxsize=8192)
def signature(g: RationalMatrix) -> SignaturePair:
    """Inertia of a symmetric matrix by exact congruence diagonalization.

    Nonzero diagonal entries are used as pivots; when the remaining diagonal
    is identically zero, a nonzero off-diagonal entry gives a hyperbolic
    2x2 block contributing (1, 1).
    """
    if not g.is_symmetric():
        raise FormError("signature of a non-symmetric matrix")
    n = g.rows
    a = [list(row) for row in g.entries]
    active = list(range(n))
    p = q = 0
    while active:
        i = next((k for k in active if a[k][k] != 0), None)
        if i is not None:
            d = a[i][i]
            if d > 0:
                p += 1
            else:
                q += 1
            active.remove(i)
            for k in active:
                if a[k][i] != 0:
                    f = a[k][i] / d
                    for l in active:
                        a[k][l] -= f * a[i][l]
            continue
        pair = next(
            ((k, l) for ki, k in enumerate(active) for l in active[ki + 1 :] if a[k][l] != 0),
            None,
        )
        if pair is None:
            break  # remaining block is zero
        i, j = pair
        b = a[i][j]
        active.remove(i)
        active.remove(j)
        # v_k' = v_k - alpha_k v_i - beta_k v_j kills column i and j; since the
        # whole active diagonal vanishes here the residual correction reduces to
        # a'[k][l] = a[k][l] - b*(alpha_k*beta_l + alpha_l*beta_k).
        alpha = {k: a[k][j] / b for k in active}
        beta = {k: a[k][i] / b for k in active}
        for k in active:
            for l in active:
                a[k][l] -= b * (alpha[k] * beta[l] + alpha[l] * beta[k])
        p += 1
        q += 1
    return SignaturePair(p, q)


def restrict_gram(g: RationalMatrix, basis: Sequence[Sequence[Scalar]]) -> RationalMatrix:
    """Gram matrix of a symmetric form restricted to span(basis), in order."""
    if not basis:
        return RationalMatrix(())
    cols = [vector(v) for v in basis]
    if any(len(v) != g.rows for v in cols):
        raise DimensionError("basis vectors must have the ambient dimension")
    b = RationalMatrix.from_columns(cols)
    return b.transpose() @ g @ b


def random_symplectic(n: int, seed: int) -> RationalMatrix:
    """Seed-deterministic exact symplectic matrix.

    Product of symplectic transvections x -> x + c*omega(x, v)*v with
    small-integer v and c; the empty product (seeds drawing zero factors)
    is the identity.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    dim = 2 * n
    omega = standard_omega(n)
    g = RationalMatrix.identity(dim)
    for _ in range(rng.randint(0, 5)):
        v = [Fraction(rng.randint(-2, 2)) for _ in range(dim)]
        if all(x == 0 for x in v):
            v[rng.randrange(dim)] = Fraction(1)
        c = Fraction(rng.choice([-2, -1, 1, 2]))
        vt_omega = omega.transpose().matvec(v)  # row vector v^T Omega
        t = RationalMatrix.from_rows(
            [
                [
                    (Fraction(1) if i == j else Fraction(0)) - c * v[i] * vt_omega[j]
                    for j in range(dim)
                ]
                for i in range(dim)
            ]
        )
        g = g @ t
    return g
