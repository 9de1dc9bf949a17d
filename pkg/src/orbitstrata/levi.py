"""Levi descriptors, real forms, regularity, good range and polarizations.

Only Levis of the shape "abelian coordinates followed by one classical tail
block" are representable: gl(1)^r + gl(n-r) for family A and
gl(1)^r + sp(2(n-r)) for family C.  These are the shapes the two
homogeneous-space families produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, SupportError
from .rootsys import (
    FAMILY_C,
    Root,
    RootSystemSpec,
    Weight,
    pairing,
    rho,
    roots,
)


@dataclass(frozen=True)
class LeviDescriptor:
    """abelian_count leading gl(1) coordinates; the rest is one tail block."""

    spec: RootSystemSpec
    abelian: int

    def __post_init__(self) -> None:
        if not 0 <= self.abelian <= self.spec.n:
            raise ValueError("abelian coordinate count out of range")

    @property
    def tail(self) -> int:
        return self.spec.n - self.abelian

    @classmethod
    def cartan(cls, spec: RootSystemSpec) -> "LeviDescriptor":
        return cls(spec, spec.n)

    @classmethod
    def full(cls, spec: RootSystemSpec) -> "LeviDescriptor":
        return cls(spec, 0)

    def contains_root(self, alpha: Root) -> bool:
        """Roots of the Levi are exactly those supported inside the tail."""
        lo = self.abelian
        if alpha.i < lo:
            return False
        return alpha.j is None or alpha.j >= lo

    def off_levi_roots(self) -> list[Root]:
        return [a for a in roots(self.spec) if not self.contains_root(a)]

    def check_center_support(self, lam: Weight) -> None:
        """lam must be a functional on the center of the Levi.

        Family C: zero on the tail (the symplectic tail has trivial center).
        Family A: constant on the tail coordinates (scalar block).
        """
        if lam.rank != self.spec.n:
            raise SupportError("weight rank does not match the Levi")
        lo = self.spec.n - self.tail
        if self.tail == 0:
            return
        if self.spec.family == FAMILY_C:
            if any(lam.re[t] != 0 or lam.im[t] != 0 for t in range(lo, self.spec.n)):
                raise SupportError("tail coordinates must vanish for family C")
        else:
            if any(
                lam.re[t] != lam.re[lo] or lam.im[t] != lam.im[lo]
                for t in range(lo + 1, self.spec.n)
            ):
                raise SupportError("tail coordinates must be equal for family A")


@dataclass(frozen=True)
class RealFormDescriptor:
    """Real form parameters of a Levi.

    Family C: U(1)^s x GL(1,C)^t x GL(1,R)^u x Sp-tail with s+2t+u = r.
    Family A: GL(1,C)^s x GL(1,R)^(r-2s) x GL-tail; only s is free.
    """

    s: int
    t: int = 0
    u: int = 0

    def __post_init__(self) -> None:
        if min(self.s, self.t, self.u) < 0:
            raise ValueError("real form parameters must be nonnegative")

    @property
    def abelian(self) -> int:
        return self.s + 2 * self.t + self.u


def is_center_regular(lam: Weight, levi: LeviDescriptor) -> bool:
    """True iff every coroot pairing outside the Levi is nonzero."""
    levi.check_center_support(lam)
    for alpha in levi.off_levi_roots():
        re, im = pairing(lam, alpha)
        if re == 0 and im == 0:
            return False
    return True


def good_range(lam: Weight, levi: LeviDescriptor) -> bool:
    """Real-positive pairings must stay positive after the rho shift."""
    levi.check_center_support(lam)
    shift = rho(levi)
    for alpha in roots(levi.spec):
        re, im = pairing(lam, alpha)
        if im == 0 and re > 0:
            sre, _ = pairing(shift, alpha)
            if re + sre <= 0:
                return False
    return True


def near_root_wall(xi: Weight, levi: LeviDescriptor, d: Fraction | int | str) -> bool:
    """True iff |<xi, alpha^vee>| < d for some root outside the Levi.

    |z| < d is evaluated as re(z)^2 + im(z)^2 < d^2, exactly.
    """
    bound = Fraction(d)
    if bound <= 0:
        raise ValueError("d must be positive")
    d2 = bound * bound
    for alpha in levi.off_levi_roots():
        re, im = pairing(xi, alpha)
        if re * re + im * im < d2:
            return True
    return False


@dataclass(frozen=True)
class PolarizationClass:
    """Partition of the off-Levi roots into a nilradical side and its negative."""

    levi: LeviDescriptor
    in_n: frozenset[Root]

    def side(self, alpha: Root) -> str:
        if alpha in self.in_n:
            return "in_n"
        if -alpha in self.in_n:
            return "in_minus_n"
        raise ValueError("root belongs to the Levi")


def polarization_class(lam: Weight, levi: LeviDescriptor) -> PolarizationClass:
    """Assign each off-Levi root by the sign rule on <lam, alpha^vee>.

    alpha goes to the nilradical side iff Im > 0, or Im = 0 and Re > 0.
    Total exactly on center-regular lam; otherwise PreconditionError.
    """
    if not is_center_regular(lam, levi):
        raise PreconditionError("polarization requires a center-regular weight")
    chosen = []
    for alpha in levi.off_levi_roots():
        re, im = pairing(lam, alpha)
        if im > 0 or (im == 0 and re > 0):
            chosen.append(alpha)
    return PolarizationClass(levi, frozenset(chosen))
