"""Moment-map membership criteria and constructive witnesses.

Sp side: an infinitesimally symplectic A built from canonical 2- and 4-dim
blocks, its symmetric Gram form, the signature criterion
max{p, q} <= 2n - 2m, and exact rational witness subspaces.

GL side: companion-block matrices with prescribed characteristic polynomial
whose bottom-right m x m block vanishes, plus the rank bound
rank <= 2n - 2m.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, FormError, PreconditionError
from .exactlin import (
    RationalMatrix,
    Scalar,
    SignaturePair,
    SymplecticSpace,
    Vector,
    gram_of,
    is_semisimple,
    rank,
    restrict_gram,
    signature,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Elliptic2:
    """2-dim block with eigenvalues +-|a| sqrt(-1); form signature (2,0) or (0,2)."""

    a: Fraction

    def __post_init__(self) -> None:
        if self.a == 0:
            raise ValueError("Elliptic2 parameter must be nonzero")

    half_dim = 1


@dataclass(frozen=True)
class Hyperbolic2:
    """2-dim block with real eigenvalues +-c; form signature (1,1)."""

    c: Fraction

    def __post_init__(self) -> None:
        if self.c == 0:
            raise ValueError("Hyperbolic2 parameter must be nonzero")

    half_dim = 1


@dataclass(frozen=True)
class Quad4:
    """Indecomposable 4-dim block with eigenvalues +-p +- q sqrt(-1), q != 0.

    Form signature is always (2,2).
    """

    p: Fraction
    q: Fraction

    def __post_init__(self) -> None:
        if self.q == 0:
            raise ValueError("Quad4 requires a nonzero imaginary part")

    half_dim = 2


@dataclass(frozen=True)
class Zero2:
    """2-dim kernel block."""

    half_dim = 1


Block = Elliptic2 | Hyperbolic2 | Quad4 | Zero2


@dataclass(frozen=True)
class BlockSpec:
    """Ordered list of pairwise symplectically-orthogonal canonical blocks."""

    blocks: tuple[Block, ...]

    @classmethod
    def of(cls, *blocks: Block) -> "BlockSpec":
        return cls(tuple(blocks))

    @property
    def half_dim(self) -> int:
        return sum(b.half_dim for b in self.blocks)

    def to_json_obj(self) -> list[dict]:
        out = []
        for b in self.blocks:
            if isinstance(b, Elliptic2):
                out.append({"kind": "ell2", "a": str(b.a)})
            elif isinstance(b, Hyperbolic2):
                out.append({"kind": "hyp2", "c": str(b.c)})
            elif isinstance(b, Quad4):
                out.append({"kind": "quad4", "p": str(b.p), "q": str(b.q)})
            else:
                out.append({"kind": "zero2"})
        return out

    @classmethod
    def from_json_obj(cls, data: list[dict]) -> "BlockSpec":
        blocks: list[Block] = []
        for item in data:
            kind = item.get("kind")
            if kind == "ell2":
                blocks.append(Elliptic2(Fraction(item["a"])))
            elif kind == "hyp2":
                blocks.append(Hyperbolic2(Fraction(item["c"])))
            elif kind == "quad4":
                blocks.append(Quad4(Fraction(item["p"]), Fraction(item["q"])))
            elif kind == "zero2":
                blocks.append(Zero2())
            else:
                raise ValueError(f"unknown block kind {kind!r}")
        return cls(tuple(blocks))

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "BlockSpec":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class Witness:
    """Rational basis of a symplectic 2m-dim subspace where the Gram form vanishes."""

    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _pair_slots(spec: BlockSpec) -> list[tuple[Block, tuple[int, ...]]]:
    """Assign each block its coordinate pair indices, in listed order."""
    out = []
    nxt = 0
    for b in spec.blocks:
        out.append((b, tuple(range(nxt, nxt + b.half_dim))))
        nxt += b.half_dim
    return out


def realize(spec: BlockSpec) -> tuple[RationalMatrix, SymplecticSpace]:
    """Canonical semisimple matrix of a BlockSpec in the standard basis.

    Coordinate pair i is (e_i, f_i) = (index i, index n+i).  Per block:

    - Elliptic2(a):  A e = -c f, A f = d e with (c, d) = (sgn(a) a^2, sgn(a)),
      so the Gram form restricted to the pair is diag(c, d).  Splitting
      (a^2, 1) instead of (a, a) keeps all witness constructions rational.
    - Hyperbolic2(c): A e = c e, A f = -c f; Gram [[0, c], [c, 0]].
    - Quad4(p, q): on two pairs, e-span carries [[p, q], [-q, p]] and the
      f-span its negative transpose; Gram is the split form [[0,B^T],[B,0]].
    - Zero2: zero.
    """
    n = spec.half_dim
    rows = [[_ZERO] * (2 * n) for _ in range(2 * n)]
    for block, slots in _pair_slots(spec):
        if isinstance(block, Elliptic2):
            (i,) = slots
            sgn = 1 if block.a > 0 else -1
            c = sgn * block.a * block.a
            d = Fraction(sgn)
            rows[n + i][i] = -c
            rows[i][n + i] = d
        elif isinstance(block, Hyperbolic2):
            (i,) = slots
            rows[i][i] = block.c
            rows[n + i][n + i] = -block.c
        elif isinstance(block, Quad4):
            i, j = slots
            p, q = block.p, block.q
            rows[i][i], rows[i][j] = p, q
            rows[j][i], rows[j][j] = -q, p
            rows[n + i][n + i], rows[n + i][n + j] = -p, q
            rows[n + j][n + i], rows[n + j][n + j] = -q, -p
    return RationalMatrix.from_rows(rows), SymplecticSpace(n)


def block_signature(spec: BlockSpec) -> SignaturePair:
    """Signature of the realized Gram form, summed blockwise."""
    p = q = 0
    for b in spec.blocks:
        if isinstance(b, Elliptic2):
            if b.a > 0:
                p += 2
            else:
                q += 2
        elif isinstance(b, Hyperbolic2):
            p += 1
            q += 1
        elif isinstance(b, Quad4):
            p += 2
            q += 2
    return SignaturePair(p, q)


def sp_membership(a: RationalMatrix, space: SymplecticSpace, m: int) -> bool:
    """Signature criterion for the moment-map image of Sp(2n,R)/Sp(2m,R).

    For semisimple A the orbit of A meets the conormal directions iff
    max{p, q} <= 2n - 2m where (p, q) is the signature of the Gram form.
    """
    n = space.half_dim
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    g = gram_of(a, space)
    if not is_semisimple(a):
        raise PreconditionError("criterion applies to semisimple elements only")
    sig = signature(g)
    return max(sig.p, sig.q) <= 2 * n - 2 * m


def sp_complex_membership(a: RationalMatrix, n: int, m: int) -> bool:
    """Complexified criterion: rank A <= 4n - 4m."""
    if a.shape != (2 * n, 2 * n):
        raise DimensionError("expected a 2n x 2n matrix")
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    space = SymplecticSpace(n)
    gram_of(a, space)  # validates membership in sp
    if not is_semisimple(a):
        raise PreconditionError("criterion applies to semisimple elements only")
    return rank(a) <= 4 * n - 4 * m


def _witness_pieces(spec: BlockSpec) -> list[tuple[Vector, Vector]]:
    """2-dim witness pieces in greedy order: Zero2, Quad4, Hyperbolic2 pairs,
    opposite-sign Elliptic2 pairs.

    Each piece (w1, w2) spans a symplectically nondegenerate plane on which
    the Gram form of the realized matrix vanishes identically; pieces use
    pairwise disjoint blocks, so any union keeps both properties.
    """
    n = spec.half_dim
    slots = _pair_slots(spec)

    def unit(idx: int) -> list[Fraction]:
        v = [_ZERO] * (2 * n)
        v[idx] = _ONE
        return v

    def combo(*terms: tuple[Fraction, int]) -> Vector:
        v = [_ZERO] * (2 * n)
        for coef, idx in terms:
            v[idx] += coef
        return tuple(v)

    pieces: list[tuple[Vector, Vector]] = []

    for block, sl in slots:
        if isinstance(block, Zero2):
            (i,) = sl
            pieces.append((tuple(unit(i)), tuple(unit(n + i))))
    for block, sl in slots:
        if isinstance(block, Quad4):
            i, j = sl
            # Gram kills f_i + (p/q) f_j against e_i and itself.
            pieces.append(
                (tuple(unit(i)), combo((_ONE, n + i), (block.p / block.q, n + j)))
            )
    hypers = [(b, sl) for b, sl in slots if isinstance(b, Hyperbolic2)]
    for (b1, sl1), (b2, sl2) in zip(hypers[0::2], hypers[1::2]):
        (i,), (j,) = sl1, sl2
        c1, c2 = b1.c, b2.c
        if c1 != c2:
            # (e_i + e_j, f_i - (c1/c2) f_j): symplectic pairing 1 - c1/c2 != 0.
            pieces.append(
                (
                    combo((_ONE, i), (_ONE, j)),
                    combo((_ONE, n + i), (-c1 / c2, n + j)),
                )
            )
        else:
            # equal parameters: cross e with f, pairing becomes 2.
            pieces.append(
                (
                    combo((_ONE, i), (_ONE, n + j)),
                    combo((_ONE, n + i), (-_ONE, j)),
                )
            )
    pos = [(b, sl) for b, sl in slots if isinstance(b, Elliptic2) and b.a > 0]
    neg = [(b, sl) for b, sl in slots if isinstance(b, Elliptic2) and b.a < 0]
    for (bp, slp), (bn, sln) in zip(pos, neg):
        (i,), (j,) = slp, sln
        ratio = bp.a / abs(bn.a)
        # Gram diag(a^2, 1) vs diag(-a'^2, -1): both combinations are isotropic.
        pieces.append(
            (
                combo((_ONE, i), (ratio, j)),
                combo((_ONE, n + i), (_ONE, n + j)),
            )
        )
    return pieces


def sp_witness(spec: BlockSpec, m: int) -> Witness | None:
    """Witness basis for the membership criterion, or None when it fails.

    Returns a 2m-vector rational basis assembled greedily from block pieces
    whenever max{p, q} <= 2n - 2m; the result always passes verify_witness.
    """
    n = spec.half_dim
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    sig = block_signature(spec)
    if max(sig.p, sig.q) > 2 * n - 2 * m:
        return None
    if m == 0:
        return Witness(())
    pieces = _witness_pieces(spec)
    assert len(pieces) >= m, "piece capacity must cover every admissible m"
    chosen = pieces[:m]
    return Witness(tuple(v for piece in chosen for v in piece))


def verify_witness(
    a: RationalMatrix, space: SymplecticSpace, witness: Witness, m: int
) -> bool:
    """Exact check: rank 2m, nondegenerate symplectic restriction, zero Gram."""
    basis = witness.basis
    if len(basis) != 2 * m:
        return False
    if m == 0:
        return True
    if any(len(v) != space.dim for v in basis):
        return False
    b = RationalMatrix.from_columns(basis)
    if rank(b) != 2 * m:
        return False
    omega_r = restrict_gram(space.omega, basis)
    if rank(omega_r) != 2 * m:
        return False
    try:
        g = gram_of(a, space)
    except FormError:
        return False
    return restrict_gram(g, basis).is_zero()


# ----------------------------------------------------------------------
# GL family

def gl_companion(
    pairs: Sequence[tuple[Scalar, Scalar]],
    singles: Sequence[Scalar],
    n: int,
    m: int,
) -> RationalMatrix:
    """n x n matrix with prescribed eigenvalues and zero bottom-right m x m block.

    Each pair is given as (sum, product) of two eigenvalues - both real, or a
    conjugate pair - so entries stay rational; it contributes a companion
    block with characteristic polynomial x^2 - sum*x + product.  Real single
    eigenvalues sit on the diagonal.  Layout: pair rows first (diagonal of
    sums), then the middle band of singles and zero padding, then the unit
    rows closing the companion blocks; this keeps the bottom-right m x m
    block identically zero.  Nonzero singles that would otherwise land in
    that block are merged two at a time into companion blocks.
    """
    pair_data = [(Fraction(s), Fraction(prod)) for s, prod in pairs]
    single_data = [Fraction(x) for x in singles]
    if 2 * len(pair_data) + len(single_data) > n:
        raise ValueError("too many prescribed eigenvalues")
    if 2 * m > n:
        raise ValueError("need 2m <= n")

    def middle_capacity(npairs: int) -> int:
        # diagonal slots outside both the companion structure and the
        # protected bottom-right block
        return max(0, min(n - npairs, n - m) - npairs)

    while (
        sum(1 for x in single_data if x != 0) > middle_capacity(len(pair_data))
        and len([x for x in single_data if x != 0]) >= 2
    ):
        nz = [i for i, x in enumerate(single_data) if x != 0]
        x1 = single_data.pop(nz[1])
        x0 = single_data.pop(nz[0])
        pair_data.append((x0 + x1, x0 * x1))
    if sum(1 for x in single_data if x != 0) > middle_capacity(len(pair_data)):
        raise ValueError("nonzero single eigenvalues do not fit outside the zero block")

    p = len(pair_data)
    rows = [[_ZERO] * n for _ in range(n)]
    for i, (s, prod) in enumerate(pair_data):
        rows[i][i] = s
        rows[i][n - p + i] = -prod  # b = -product
        rows[n - p + i][i] = _ONE
    # middle band: nonzero singles first (all its slots avoid the zero block),
    # then zero singles anywhere that remains
    band = list(range(p, n - p))
    safe = [idx for idx in band if idx < n - m]
    unsafe = [idx for idx in band if idx >= n - m]
    nonzero = [x for x in single_data if x != 0]
    zero_singles = [x for x in single_data if x == 0]
    for x, idx in zip(nonzero, safe):
        rows[idx][idx] = x
    remaining = safe[len(nonzero) :] + unsafe
    for x, idx in zip(zero_singles, remaining):
        rows[idx][idx] = x
    return RationalMatrix.from_rows(rows)


def gl_rank_bound(a: RationalMatrix, n: int, m: int) -> bool:
    """rank A <= 2n - 2m."""
    if a.shape != (n, n):
        raise DimensionError("expected an n x n matrix")
    return rank(a) <= 2 * n - 2 * m


def elliptic_element(values: Sequence[Scalar]) -> BlockSpec:
    """BlockSpec of compact 2-dim blocks, one per nonzero parameter."""
    fracs = [Fraction(v) for v in values]
    if any(v == 0 for v in fracs):
        raise ValueError("elliptic parameters must be nonzero")
    return BlockSpec(tuple(Elliptic2(v) for v in fracs))
