"""Support strata, discrete-series verdicts and parameter enumerations
for the two homogeneous-space families

    GL(n,R) / (GL(m,R) x GL(k,Z))      family "gl"
    Sp(2n,R) / (Sp(2m,R) x Sp(2k,Z))   family "sp"

The discrete factor k only annotates reports; it changes neither the moment
Levi nor the strata.
"""

from __future__ import annotations

import itertools
import json
import re as _re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapabilityError, PreconditionError
from .exactlin import SignaturePair
from .levi import LeviDescriptor, RealFormDescriptor
from .momentmap import elliptic_element, realize, sp_membership
from .rootsys import (
    DIFF,
    FAMILY_A,
    FAMILY_C,
    LONG,
    SUM,
    AffinePattern,
    Root,
    RootSystemSpec,
    Weight,
    rho,
    weyl_orbit_intersects_affine,
)

GL = "gl"
SP = "sp"


@dataclass(frozen=True)
class SpaceSpec:
    """The homogeneous space under study."""

    family: str
    n: int
    m: int
    k: int = 0

    def __post_init__(self) -> None:
        if self.family not in (GL, SP):
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.m < 0 or self.k < 0 or self.m + self.k > self.n:
            raise ValueError("need m, k >= 0 and m + k <= n")

    @property
    def root_system(self) -> RootSystemSpec:
        return RootSystemSpec(FAMILY_C if self.family == SP else FAMILY_A, self.n)

    @property
    def degenerate(self) -> bool:
        """Isotropy equals the whole group."""
        return self.m == self.n and self.k == 0


def moment_levi(space: SpaceSpec) -> LeviDescriptor:
    """Complex Levi attached to the closure of the moment-map image.

    Cartan when 2m <= n; otherwise 2(n-m) abelian coordinates and a tail
    block of size 2m-n.
    """
    n, m = space.n, space.m
    abelian = n if 2 * m <= n else 2 * (n - m)
    return LeviDescriptor(space.root_system, abelian)


def real_forms(space: SpaceSpec) -> list[RealFormDescriptor]:
    """All real forms of the moment Levi, in a fixed deterministic order.

    Sp: every (s, t, u) with s + 2t + u = r.  GL: s complex pairs with
    2s <= r (the remaining abelian coordinates are split factors).
    """
    r = moment_levi(space).abelian
    if space.family == SP:
        out = []
        for s in range(r, -1, -1):
            for t in range((r - s) // 2, -1, -1):
                out.append(RealFormDescriptor(s=s, t=t, u=r - s - 2 * t))
        return out
    return [RealFormDescriptor(s=s) for s in range(r // 2 + 1)]


# ----------------------------------------------------------------------
# strata

@dataclass(frozen=True)
class SpCartanRange:
    """Admitted counts of positive compact parameters on a Cartan form."""

    s1_values: tuple[int, ...]


@dataclass(frozen=True)
class SpBalanced:
    """Exactly half of the compact parameters positive."""

    s1: int


@dataclass(frozen=True)
class EmptyRegion:
    """No parameter on this form lies in the asymptotic support."""


@dataclass(frozen=True)
class GLFull:
    """The whole regular parameter space of the form."""


@dataclass(frozen=True)
class GLRankCut:
    """Abelian coordinates free, tail scalar coordinate pinned to zero."""

    scalar_block_zero: bool = True


Region = SpCartanRange | SpBalanced | EmptyRegion | GLFull | GLRankCut


@dataclass(frozen=True)
class SupportStratum:
    form: RealFormDescriptor
    region: Region


def admitted_s1(stratum: SupportStratum) -> frozenset[int] | None:
    """Admitted s1 set for Sp regions; None for GL regions."""
    region = stratum.region
    if isinstance(region, SpCartanRange):
        return frozenset(region.s1_values)
    if isinstance(region, SpBalanced):
        return frozenset({region.s1})
    if isinstance(region, EmptyRegion):
        return frozenset()
    return None


def support_strata(space: SpaceSpec, form: RealFormDescriptor) -> SupportStratum:
    """Stratum of the asymptotic support carried by one real form.

    Sp with 2m <= n: integers s1 with (2m-n+s)/2 <= s1 <= (n-2m+s)/2.
    Sp with 2m > n: balanced s1 = s/2 when s is even, empty otherwise.
    GL: the full space when 2m <= n, the rank cut otherwise.
    """
    if form not in real_forms(space):
        raise PreconditionError("form does not belong to this space's moment Levi")
    n, m = space.n, space.m
    if space.family == GL:
        return SupportStratum(form, GLFull() if 2 * m <= n else GLRankCut())
    s = form.s
    if 2 * m <= n:
        lo = max(0, -((n - 2 * m - s) // 2))        # ceil((2m-n+s)/2)
        hi = min(s, (n - 2 * m + s) // 2)
        return SupportStratum(form, SpCartanRange(tuple(range(lo, hi + 1))))
    if s % 2 == 0:
        return SupportStratum(form, SpBalanced(s // 2))
    return SupportStratum(form, EmptyRegion())


def stratum_signature(form: RealFormDescriptor, s1: int) -> SignaturePair:
    """Signature (2 s1 + 2t + u, 2 s2 + 2t + u) of a stratum representative."""
    if not 0 <= s1 <= form.s:
        raise ValueError("need 0 <= s1 <= s")
    s2 = form.s - s1
    return SignaturePair(2 * s1 + 2 * form.t + form.u, 2 * s2 + 2 * form.t + form.u)


# ----------------------------------------------------------------------
# discrete series

DS_EXISTS = "exists"
DS_NOT_DETERMINED = "not_determined"
DS_DEGENERATE = "degenerate"


@dataclass(frozen=True)
class DSVerdict:
    kind: str
    reason: str
    witness_count: int = 0


def discrete_series_verdict(space: SpaceSpec) -> DSVerdict:
    """Existence of discrete series in L^2 of the space.

    Sp spaces always carry discrete series unless the isotropy is the whole
    group; the witness is a nonempty Harish-Chandra family (2m <= n) or a
    nonempty family of theta-stable parabolics (n < 2m).  No criterion is
    available for the GL family.
    """
    if space.family == GL:
        return DSVerdict(DS_NOT_DETERMINED, "no criterion covers the GL family", 0)
    if space.degenerate:
        return DSVerdict(DS_DEGENERATE, "isotropy equals the whole group", 0)
    n, m = space.n, space.m
    if 2 * m <= n:
        count = len(harish_chandra_params(space, n + 1))
        return DSVerdict(
            DS_EXISTS, f"{count} Harish-Chandra parameters up to bound {n + 1}", count
        )
    count = len(list(theta_parabolic_index_sets(space)))
    return DSVerdict(DS_EXISTS, f"{count} theta-stable parabolic families", count)


# ----------------------------------------------------------------------
# Harish-Chandra parameters

@dataclass(frozen=True)
class HCParam:
    """Discrete-series parameter: integers with |a_1| > ... > |a_n| > 0."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v == 0 for v in self.values):
            raise ValueError("entries must be nonzero")
        mags = [abs(v) for v in self.values]
        if any(a <= b for a, b in zip(mags, mags[1:])):
            raise ValueError("absolute values must strictly decrease")


def harish_chandra_params(space: SpaceSpec, bound: int) -> list[HCParam]:
    """All admissible parameters with |a_1| <= bound, in sorted order.

    Sign-pattern admissibility is decided by the matrix criterion on the
    realized compact element, not by counting rules.
    """
    if space.family != SP or 2 * space.m > space.n:
        raise PreconditionError("enumeration applies to Sp spaces with 2m <= n")
    n, m = space.n, space.m
    out = []
    for mags in itertools.combinations(range(1, bound + 1), n):
        desc = tuple(reversed(mags))
        for signs in itertools.product((1, -1), repeat=n):
            vals = tuple(s * v for s, v in zip(signs, desc))
            a, v = realize(elliptic_element(vals))
            if sp_membership(a, v, m):
                out.append(HCParam(vals))
    out.sort(key=lambda h: h.values)
    return out


# ----------------------------------------------------------------------
# theta-stable parabolics

def theta_parabolic_index_sets(space: SpaceSpec) -> Iterable[tuple[int, ...]]:
    """All valid 1-based index sets S for theta-stable parabolics."""
    if space.family != SP or space.n >= 2 * space.m:
        raise PreconditionError("parabolic families require Sp with n < 2m")
    r = 2 * (space.n - space.m)
    return itertools.combinations(range(1, r + 1), space.n - space.m)


def theta_parabolic_roots(space: SpaceSpec, s_set: Iterable[int]) -> list[Root]:
    """Nilradical roots of the parabolic attached to a 1-based index set S.

    For i in S: eps_i +- eps_j (all j > i) and 2 eps_i; for i in the
    complement S' inside {1..2(n-m)}: the negatives -eps_i +- eps_j, -2 eps_i.
    """
    if space.family != SP or space.n >= 2 * space.m:
        raise PreconditionError("parabolic families require Sp with n < 2m")
    n, m = space.n, space.m
    r = 2 * (n - m)
    s_sorted = sorted(set(s_set))
    if len(s_sorted) != n - m or any(not 1 <= i <= r for i in s_sorted):
        raise ValueError(f"S must be {n - m} distinct indices within 1..{r}")
    s_zero = [i - 1 for i in s_sorted]
    comp = [i for i in range(r) if i not in s_zero]
    out: list[Root] = []
    for i in s_zero:
        for j in range(i + 1, n):
            out.append(Root(DIFF, i, j, 1))
            out.append(Root(SUM, i, j, 1))
        out.append(Root(LONG, i, None, 1))
    for i in comp:
        for j in range(i + 1, n):
            out.append(Root(DIFF, i, j, -1))
            out.append(Root(SUM, i, j, -1))
        out.append(Root(LONG, i, None, -1))
    return out


# ----------------------------------------------------------------------
# infinitesimal characters

def infinitesimal_character(lam: Weight, levi: LeviDescriptor) -> Weight:
    """lam + rho of the Levi."""
    levi.check_center_support(lam)
    return lam + rho(levi)


def support_pattern(space: SpaceSpec) -> AffinePattern:
    """Affine pattern every supported infinitesimal character must meet.

    Whole space when 2m <= n; otherwise the rho-shift of the moment Levi
    with the tail coordinates pinned.
    """
    levi = moment_levi(space)
    if 2 * space.m <= space.n:
        return AffinePattern.whole_space(space.n)
    forced = frozenset(range(levi.abelian, space.n))
    return AffinePattern(rho(levi), forced)


def inf_char_consistent(xi: Weight, space: SpaceSpec) -> bool:
    """Whether xi can be the infinitesimal character of a supported representation."""
    if space.n > 8:
        raise CapabilityError("Weyl enumeration is limited to n <= 8")
    return weyl_orbit_intersects_affine(space.root_system, xi, support_pattern(space))


# ----------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class SupportReport:
    space: SpaceSpec
    levi: LeviDescriptor
    strata: tuple[SupportStratum, ...]
    ds: DSVerdict
    hc_params: tuple[HCParam, ...] | None
    parabolics: tuple[tuple[tuple[int, ...], tuple[Root, ...]], ...] | None

    def to_dict(self) -> dict:
        d: dict = {
            "space": {
                "family": self.space.family,
                "n": self.space.n,
                "m": self.space.m,
                "k": self.space.k,
            },
            "levi": {
                "family": self.levi.spec.family,
                "rank": self.levi.spec.rank_param,
                "abelian": self.levi.abelian,
                "tail": self.levi.tail,
            },
            "strata": [
                {"form": _form_dict(self.space, st.form), "region": _region_dict(st.region)}
                for st in self.strata
            ],
            "ds": self.ds.kind,
        }
        if self.hc_params is not None:
            d["hc_params"] = [list(h.values) for h in self.hc_params]
        if self.parabolics is not None:
            d["parabolics"] = [
                {"S": list(s), "roots": [str(r) for r in roots]}
                for s, roots in self.parabolics
            ]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "SupportReport":
        space = SpaceSpec(d["space"]["family"], d["space"]["n"], d["space"]["m"], d["space"]["k"])
        levi = LeviDescriptor(
            RootSystemSpec(d["levi"]["family"], d["levi"]["rank"]), d["levi"]["abelian"]
        )
        if levi.tail != d["levi"]["tail"]:
            raise ValueError("inconsistent levi block sizes")
        strata = tuple(
            SupportStratum(_form_from_dict(space, item["form"]), _region_from_dict(item["region"]))
            for item in d["strata"]
        )
        ds = DSVerdict(d["ds"], "", 0)
        hc = (
            tuple(HCParam(tuple(vals)) for vals in d["hc_params"])
            if "hc_params" in d
            else None
        )
        parab = (
            tuple(
                (tuple(item["S"]), tuple(root_from_str(s) for s in item["roots"]))
                for item in d["parabolics"]
            )
            if "parabolics" in d
            else None
        )
        return cls(space, levi, strata, ds, hc, parab)

    @classmethod
    def from_json(cls, text: str) -> "SupportReport":
        return cls.from_dict(json.loads(text))


def _form_dict(space: SpaceSpec, form: RealFormDescriptor) -> dict:
    if space.family == SP:
        return {"s": form.s, "t": form.t, "u": form.u}
    return {"s": form.s}


def _form_from_dict(space: SpaceSpec, d: dict) -> RealFormDescriptor:
    if space.family == SP:
        return RealFormDescriptor(s=d["s"], t=d["t"], u=d["u"])
    return RealFormDescriptor(s=d["s"])


def _region_dict(region: Region) -> dict:
    if isinstance(region, SpCartanRange):
        return {"kind": "sp_cartan_range", "s1": list(region.s1_values)}
    if isinstance(region, SpBalanced):
        return {"kind": "sp_balanced", "s1": region.s1}
    if isinstance(region, EmptyRegion):
        return {"kind": "empty"}
    if isinstance(region, GLFull):
        return {"kind": "gl_full"}
    return {"kind": "gl_rank_cut", "scalar_block_zero": True}


def _region_from_dict(d: dict) -> Region:
    kind = d["kind"]
    if kind == "sp_cartan_range":
        return SpCartanRange(tuple(d["s1"]))
    if kind == "sp_balanced":
        return SpBalanced(d["s1"])
    if kind == "empty":
        return EmptyRegion()
    if kind == "gl_full":
        return GLFull()
    if kind == "gl_rank_cut":
        return GLRankCut()
    raise ValueError(f"unknown region kind {kind!r}")


_ROOT_RE = _re.compile(r"^(-?)(?:2e(\d+)|e(\d+)(-|\+)e(\d+))$")


def root_from_str(s: str) -> Root:
    m = _ROOT_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse root {s!r}")
    neg, long_i, i, op, j = m.groups()
    if long_i is not None:
        return Root(LONG, int(long_i) - 1, None, -1 if neg else 1)
    i0, j0 = int(i) - 1, int(j) - 1
    kind = DIFF if ((op == "-") == (not neg)) else SUM
    sign = -1 if neg else 1
    return Root(kind, i0, j0, sign)


def build_report(space: SpaceSpec, bound: int | None = None) -> SupportReport:
    """Aggregate Levi, forms, strata, verdict and parameter enumerations."""
    levi = moment_levi(space)
    strata = tuple(support_strata(space, f) for f in real_forms(space))
    ds = discrete_series_verdict(space)
    hc = None
    parab = None
    if space.family == SP and 2 * space.m <= space.n:
        hc = tuple(harish_chandra_params(space, bound if bound is not None else space.n + 1))
    if space.family == SP and space.n < 2 * space.m:
        parab = tuple(
            (s, tuple(theta_parabolic_roots(space, s)))
            for s in theta_parabolic_index_sets(space)
        )
    return SupportReport(space, levi, strata, ds, hc, parab)


def format_report(report: SupportReport) -> str:
    """Human-readable rendering of a report."""
    sp = report.space
    name = (
        f"Sp({2*sp.n},R)/(Sp({2*sp.m},R) x Sp({2*sp.k},Z))"
        if sp.family == SP
        else f"GL({sp.n},R)/(GL({sp.m},R) x GL({sp.k},Z))"
    )
    lines = [f"space: {name}"]
    lines.append(
        f"moment levi: {report.levi.abelian} abelian coordinate(s), tail block of size {report.levi.tail}"
    )
    lines.append("strata:")
    for st in report.strata:
        if sp.family == SP:
            form = f"(s,t,u)=({st.form.s},{st.form.t},{st.form.u})"
        else:
            form = f"s={st.form.s}"
        region = st.region
        if isinstance(region, SpCartanRange):
            desc = f"s1 in {list(region.s1_values)}"
        elif isinstance(region, SpBalanced):
            desc = f"balanced, s1 = {region.s1}"
        elif isinstance(region, EmptyRegion):
            desc = "empty"
        elif isinstance(region, GLFull):
            desc = "full parameter space"
        else:
            desc = "rank cut: tail scalar coordinate zero"
        lines.append(f"  {form}: {desc}")
    lines.append(f"discrete series: {report.ds.kind} ({report.ds.reason})")
    if report.hc_params is not None:
        lines.append(f"harish-chandra parameters ({len(report.hc_params)}):")
        for h in report.hc_params:
            lines.append("  " + " ".join(str(v) for v in h.values))
    if report.parabolics is not None:
        lines.append(f"theta-stable parabolics ({len(report.parabolics)}):")
        for s, roots in report.parabolics:
            lines.append(
                "  S={" + ",".join(str(i) for i in s) + "}: " + ", ".join(str(r) for r in roots)
            )
    return "\n".join(lines) + "\n"
