"""Classical root systems A_{n-1} (for gl(n)) and C_n (for sp(2n)).

Everything is expressed in epsilon-coordinates.  Weights carry separate
exact rational real and imaginary parts; the Weyl group is the symmetric
group for family A and the signed permutations for family C and is never
materialized beyond rank 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapabilityError, DimensionError
from .exactlin import Scalar, Vector, vector

FAMILY_A = "A"
FAMILY_C = "C"


@dataclass(frozen=True)
class RootSystemSpec:
    """family "A" with rank_param n means gl(n); "C" means sp(2n)."""

    family: str
    rank_param: int

    def __post_init__(self) -> None:
        if self.family not in (FAMILY_A, FAMILY_C):
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank_param < 1:
            raise ValueError("rank_param must be >= 1")

    @property
    def n(self) -> int:
        return self.rank_param


@dataclass(frozen=True)
class Weight:
    """Vector re + sqrt(-1)*im in epsilon-coordinates."""

    re: Vector
    im: Vector

    def __post_init__(self) -> None:
        if len(self.re) != len(self.im):
            raise DimensionError("re and im parts must have equal length")

    @classmethod
    def of(cls, re: Iterable[Scalar] | None = None, im: Iterable[Scalar] | None = None,
           rank: int | None = None) -> "Weight":
        rv = vector(re) if re is not None else None
        iv = vector(im) if im is not None else None
        if rv is None and iv is None:
            if rank is None:
                raise ValueError("need re, im or rank")
            rv = iv = tuple(Fraction(0) for _ in range(rank))
        if rv is None:
            rv = tuple(Fraction(0) for _ in iv)  # type: ignore[union-attr]
        if iv is None:
            iv = tuple(Fraction(0) for _ in rv)
        return cls(rv, iv)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls.of(rank=rank)

    @property
    def rank(self) -> int:
        return len(self.re)

    def __add__(self, other: "Weight") -> "Weight":
        if self.rank != other.rank:
            raise DimensionError("rank mismatch")
        return Weight(
            tuple(a + b for a, b in zip(self.re, other.re)),
            tuple(a + b for a, b in zip(self.im, other.im)),
        )

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.re), tuple(-x for x in self.im))

    def coord(self, i: int) -> tuple[Fraction, Fraction]:
        return (self.re[i], self.im[i])

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.re) and all(x == 0 for x in self.im)


# root kinds
DIFF = "diff"   # eps_i - eps_j, i < j
SUM = "sum"     # eps_i + eps_j, i < j (family C only)
LONG = "long"   # 2 eps_i (family C only)


@dataclass(frozen=True)
class Root:
    """sign * (base root); indices are 0-based, i < j for two-index kinds."""

    kind: str
    i: int
    j: int | None
    sign: int

    def __post_init__(self) -> None:
        if self.kind not in (DIFF, SUM, LONG):
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.kind == LONG:
            if self.j is not None:
                raise ValueError("long roots take a single index")
        elif self.j is None or self.i >= self.j:
            raise ValueError("need i < j")

    def __neg__(self) -> "Root":
        return Root(self.kind, self.i, self.j, -self.sign)

    def to_vector(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        if self.kind == DIFF:
            v[self.i], v[self.j] = 1, -1
        elif self.kind == SUM:
            v[self.i], v[self.j] = 1, 1
        else:
            v[self.i] = 2
        return tuple(self.sign * x for x in v)

    def __str__(self) -> str:
        i1 = self.i + 1
        if self.kind == LONG:
            return f"2e{i1}" if self.sign == 1 else f"-2e{i1}"
        j1 = self.j + 1  # type: ignore[operator]
        if self.kind == DIFF:
            return f"e{i1}-e{j1}" if self.sign == 1 else f"-e{i1}+e{j1}"
        return f"e{i1}+e{j1}" if self.sign == 1 else f"-e{i1}-e{j1}"


def roots(spec: RootSystemSpec) -> list[Root]:
    """All roots; n(n-1) for family A, 2n^2 for family C."""
    n = spec.n
    out: list[Root] = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append(Root(DIFF, i, j, 1))
            out.append(Root(DIFF, i, j, -1))
    if spec.family == FAMILY_C:
        for i in range(n):
            for j in range(i + 1, n):
                out.append(Root(SUM, i, j, 1))
                out.append(Root(SUM, i, j, -1))
        for i in range(n):
            out.append(Root(LONG, i, None, 1))
            out.append(Root(LONG, i, None, -1))
    return out


def positive_roots(spec: RootSystemSpec) -> list[Root]:
    return [a for a in roots(spec) if a.sign == 1]


def pairing(lam: Weight, alpha: Root) -> tuple[Fraction, Fraction]:
    """<lam, alpha^vee> as an exact (re, im) pair.

    (eps_i - eps_j)^vee picks lam_i - lam_j, (eps_i + eps_j)^vee picks
    lam_i + lam_j and (2 eps_i)^vee picks lam_i, on re and im separately.
    """
    if alpha.i >= lam.rank or (alpha.j is not None and alpha.j >= lam.rank):
        raise DimensionError("root index out of range for this weight")

    def part(coords: Vector) -> Fraction:
        if alpha.kind == DIFF:
            val = coords[alpha.i] - coords[alpha.j]
        elif alpha.kind == SUM:
            val = coords[alpha.i] + coords[alpha.j]
        else:
            val = coords[alpha.i]
        return alpha.sign * val

    return (part(lam.re), part(lam.im))


def weyl_canonical(spec: RootSystemSpec, lam: Weight) -> Weight:
    """Canonical Weyl-orbit representative.

    Family A sorts the coordinates descending; family C first flips each
    coordinate to its lexicographically nonnegative sign, then sorts.  Two
    weights are W-conjugate iff their canonical forms are equal.  Mixed
    (re, im) coordinates compare lexicographically.
    """
    if lam.rank != spec.n:
        raise DimensionError("weight rank does not match the root system")
    coords = list(zip(lam.re, lam.im))
    if spec.family == FAMILY_C:
        coords = [c if c >= (-c[0], -c[1]) else (-c[0], -c[1]) for c in coords]
    coords.sort(reverse=True)
    return Weight(tuple(c[0] for c in coords), tuple(c[1] for c in coords))


@dataclass(frozen=True)
class AffinePattern:
    """shift + {v : v zero at forced_zero coordinates, free elsewhere}."""

    shift: Weight
    forced_zero: frozenset[int]

    def __post_init__(self) -> None:
        if any(p < 0 or p >= self.shift.rank for p in self.forced_zero):
            raise DimensionError("forced coordinate out of range")

    @classmethod
    def whole_space(cls, rank: int) -> "AffinePattern":
        return cls(Weight.zero(rank), frozenset())


MAX_WEYL_RANK = 8


def weyl_orbit_intersects_affine(spec: RootSystemSpec, xi: Weight, pattern: AffinePattern) -> bool:
    """True iff some w*xi lies in the affine pattern, w in the Weyl group.

    Equivalent to enumerating W: a signed permutation placing xi in the
    pattern exists iff the forced positions can be filled injectively with
    coordinates matching the shift values (with a sign choice for family C);
    leftover coordinates always fit the free positions.
    """
    n = spec.n
    if n > MAX_WEYL_RANK:
        raise CapabilityError(f"rank {n} exceeds the Weyl enumeration bound {MAX_WEYL_RANK}")
    if xi.rank != n or pattern.shift.rank != n:
        raise DimensionError("rank mismatch")
    slots = sorted(pattern.forced_zero)
    targets = [pattern.shift.coord(p) for p in slots]
    coords = [xi.coord(i) for i in range(n)]
    signed = spec.family == FAMILY_C

    def fill(slot: int, used: int) -> bool:
        if slot == len(slots):
            return True
        t = targets[slot]
        tneg = (-t[0], -t[1])
        for i, c in enumerate(coords):
            if used >> i & 1:
                continue
            if c == t or (signed and c == tneg):
                if fill(slot + 1, used | (1 << i)):
                    return True
        return False

    return fill(0, 0)


def rho(levi) -> Weight:
    """Half-sum of the positive roots of a Levi (see levi.LeviDescriptor)."""
    spec = levi.spec
    n = spec.n
    acc = [Fraction(0)] * n
    for alpha in positive_roots(spec):
        if levi.contains_root(alpha):
            for idx, c in enumerate(alpha.to_vector(n)):
                acc[idx] += Fraction(c, 2)
    return Weight(tuple(acc), tuple(Fraction(0) for _ in range(n)))
