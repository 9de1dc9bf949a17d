"""Independent brute-force and floating-point verifiers.

Everything here re-derives answers by sweep, search or numerics so the
symbolic routes elsewhere in the package can be cross-checked on small
instances.  All randomness is seed-deterministic through OracleConfig.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import CapabilityError, PreconditionError
from .exactlin import (
    RationalMatrix,
    SignaturePair,
    SymplecticSpace,
    Vector,
    gram_of,
    nullspace,
    rank,
    signature,
)
from .levi import RealFormDescriptor
from .momentmap import (
    BlockSpec,
    Elliptic2,
    Hyperbolic2,
    Quad4,
    Witness,
    Zero2,
    realize,
    sp_membership,
    verify_witness,
)
from .plancherel import (
    SP,
    SpaceSpec,
    SpCartanRange,
    SupportStratum,
    admitted_s1,
    real_forms,
    support_strata,
)
from .rootsys import (
    FAMILY_C,
    AffinePattern,
    RootSystemSpec,
    Weight,
    weyl_orbit_intersects_affine,
)


@dataclass(frozen=True)
class OracleConfig:
    seed: int = 0
    trials: int = 1000
    grid_radius: int = 10
    float_tolerance: float = 1e-8

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.float_tolerance <= 0:
            raise ValueError("tolerance must be positive")


def strata_bruteforce(
    space: SpaceSpec, form: RealFormDescriptor, cfg: OracleConfig
) -> SupportStratum:
    """Admitted sign patterns of a form by sweeping grid representatives.

    Every sign assignment of the compact parameters is realized as a block
    matrix with distinct small-integer data and run through the membership
    criterion; the admitted pattern set is returned as a stratum.
    """
    if space.family != SP:
        raise PreconditionError("brute-force strata are implemented for the Sp family")
    if space.n > 5:
        raise CapabilityError("brute-force strata are limited to n <= 5")
    if form not in real_forms(space):
        raise PreconditionError("form does not belong to this space's moment Levi")
    s, t, u = form.s, form.t, form.u
    tail = space.n - form.abelian
    if s + u + t > cfg.grid_radius:
        raise CapabilityError("grid radius too small for distinct representatives")
    compact_mags = list(range(1, s + 1))
    hyper_vals = list(range(s + 1, s + u + 1))
    quad_vals = list(range(s + u + 1, s + u + t + 1))
    assert len(set(compact_mags + hyper_vals + quad_vals)) == s + u + t

    verdict_by_s1: dict[int, bool] = {}
    for signs in itertools.product((1, -1), repeat=s):
        blocks: list = [
            Elliptic2(Fraction(sg * mag)) for sg, mag in zip(signs, compact_mags)
        ]
        blocks += [Quad4(Fraction(v), Fraction(v)) for v in quad_vals]
        blocks += [Hyperbolic2(Fraction(v)) for v in hyper_vals]
        blocks += [Zero2() for _ in range(tail)]
        a, v = realize(BlockSpec(tuple(blocks)))
        ok = sp_membership(a, v, space.m)
        s1 = sum(1 for sg in signs if sg > 0)
        if s1 in verdict_by_s1 and verdict_by_s1[s1] != ok:
            raise AssertionError("membership depended on more than the sign count")
        verdict_by_s1[s1] = ok
    admitted = tuple(sorted(s1 for s1, ok in verdict_by_s1.items() if ok))
    return SupportStratum(form, SpCartanRange(admitted))


def strata_agree(symbolic: SupportStratum, brute: SupportStratum) -> bool:
    """Compare the admitted pattern sets of two Sp strata."""
    a, b = admitted_s1(symbolic), admitted_s1(brute)
    return a is not None and b is not None and a == b


def numeric_signature(a: RationalMatrix, tol: float) -> SignaturePair:
    """Inertia by floating eigenvalues; |eig| < tol counts as zero."""
    if not a.is_symmetric():
        raise PreconditionError("numeric signature expects a symmetric matrix")
    if a.rows == 0:
        return SignaturePair(0, 0)
    eigs = np.linalg.eigvalsh(np.array(a.to_floats(), dtype=float))
    p = int(np.sum(eigs > tol))
    q = int(np.sum(eigs < -tol))
    return SignaturePair(p, q)


def randomized_witness_search(
    a: RationalMatrix, space: SymplecticSpace, m: int, cfg: OracleConfig
) -> Witness | None:
    """Randomized exact search for a membership witness.

    Builds candidate bases greedily inside the exact null space of the
    accumulated Gram constraints, seeding from the kernel of the form.  Any
    returned witness passes verify_witness; None is inconclusive.
    """
    if space.dim > 8:
        raise CapabilityError("randomized search is limited to 2n <= 8")
    if not 0 <= m <= space.half_dim:
        raise ValueError("need 0 <= m <= n")
    if m == 0:
        return Witness(())
    g = gram_of(a, space)
    rng = random.Random(cfg.seed)
    dim = space.dim
    kernel = nullspace(g)

    def gram_val(x: Vector, y: Vector) -> Fraction:
        return sum(xi * yi for xi, yi in zip(g.matvec(x), y))

    for _ in range(cfg.trials):
        basis: list[Vector] = []
        for _step in range(2 * m):
            if basis:
                constraints = RationalMatrix.from_rows([g.matvec(w) for w in basis])
                free = nullspace(constraints)
            else:
                free = [
                    tuple(Fraction(1 if i == j else 0) for j in range(dim))
                    for i in range(dim)
                ]
            if not free:
                break
            found = None
            pool = [v for v in kernel] + [None] * 30
            rng.shuffle(pool)
            for cand in pool:
                if cand is None:
                    coeffs = [rng.randint(-2, 2) for _ in free]
                    cand = tuple(
                        sum(c * v[i] for c, v in zip(coeffs, free)) for i in range(dim)
                    )
                if all(x == 0 for x in cand):
                    continue
                if gram_val(cand, cand) != 0:
                    continue
                if basis and any(gram_val(cand, w) != 0 for w in basis):
                    continue
                trial_basis = basis + [cand]
                if rank(RationalMatrix.from_columns(trial_basis)) != len(trial_basis):
                    continue
                found = cand
                break
            if found is None:
                break
            basis.append(found)
        if len(basis) == 2 * m:
            w = Witness(tuple(basis))
            if verify_witness(a, space, w, m):
                return w
    return None


def ac_sample(points: Sequence[Sequence[Fraction | float | int]], cfg: OracleConfig) -> list[tuple[float, ...]]:
    """Estimate asymptotic directions of a point set.

    Points with norm at least cfg.grid_radius are normalized and clustered
    by squared chord distance max(cfg.float_tolerance, 1e-9); cluster
    representatives are returned in first-seen order.  A bounded cloud
    (all norms below the threshold) yields no directions.
    """
    if not points:
        raise ValueError("need at least one point")
    tol = max(cfg.float_tolerance, 1e-9)
    reps: list[tuple[float, ...]] = []
    for pt in points:
        vec = [float(x) for x in pt]
        norm = math.sqrt(sum(x * x for x in vec))
        if norm < cfg.grid_radius:
            continue
        d = tuple(x / norm for x in vec)
        if not any(sum((a - b) ** 2 for a, b in zip(d, r)) <= tol for r in reps):
            reps.append(d)
    return reps


def random_weight(rng: random.Random, n: int, radius: int, imaginary: bool = False) -> Weight:
    re = [0 if imaginary else rng.randint(-radius, radius) for _ in range(n)]
    im = [rng.randint(-radius, radius) for _ in range(n)]
    return Weight.of(re=re, im=im)


def random_pattern(rng: random.Random, spec: RootSystemSpec, xi: Weight, radius: int) -> AffinePattern:
    """Random forced-coordinate pattern; half the time the shift is drawn
    from the orbit of xi so positive cases occur."""
    n = spec.n
    forced = frozenset(i for i in range(n) if rng.random() < 0.5)
    if rng.random() < 0.5:
        perm = list(range(n))
        rng.shuffle(perm)
        signs = [rng.choice((1, -1)) if spec.family == FAMILY_C else 1 for _ in range(n)]
        shift = Weight(
            tuple(signs[i] * xi.re[perm[i]] for i in range(n)),
            tuple(signs[i] * xi.im[perm[i]] for i in range(n)),
        )
    else:
        shift = random_weight(rng, n, radius)
    return AffinePattern(shift, forced)


def run_suite(suite: str, cfg: OracleConfig) -> dict:
    """Agreement sweep between symbolic answers and their brute-force twins.

    Suites: "strata" (Sp spaces, n <= 3), "weyl" (random pattern pairs per
    rank <= 4), "signature" (exact vs floating inertia on a realized Gram
    corpus), or "all".  Returns {"agree": bool, "mismatches": [...]}.
    """
    suites = ("strata", "weyl", "signature") if suite == "all" else (suite,)
    if any(s not in ("strata", "weyl", "signature") for s in suites):
        raise ValueError(f"unknown suite {suite!r}")
    mismatches: list[dict] = []
    rng = random.Random(cfg.seed)
    if "strata" in suites:
        for n in range(1, 4):
            for m in range(n + 1):
                space = SpaceSpec(SP, n, m, 0)
                for form in real_forms(space):
                    sym = support_strata(space, form)
                    brute = strata_bruteforce(space, form, cfg)
                    if not strata_agree(sym, brute):
                        mismatches.append(
                            {
                                "suite": "strata",
                                "space": [n, m],
                                "form": [form.s, form.t, form.u],
                                "symbolic": sorted(admitted_s1(sym) or ()),
                                "brute": sorted(admitted_s1(brute) or ()),
                            }
                        )
    if "weyl" in suites:
        per_rank = max(1, min(cfg.trials, 200))
        for family in ("A", "C"):
            for n in range(1, 5):
                spec = RootSystemSpec(family, n)
                for _ in range(per_rank):
                    xi = random_weight(rng, n, 4)
                    pattern = random_pattern(rng, spec, xi, 4)
                    fast = weyl_orbit_intersects_affine(spec, xi, pattern)
                    slow = weyl_bruteforce_intersect(spec, xi, pattern)
                    if fast != slow:
                        mismatches.append(
                            {
                                "suite": "weyl",
                                "family": family,
                                "rank": n,
                                "xi": [str(x) for x in xi.re + xi.im],
                                "fast": fast,
                                "brute": slow,
                            }
                        )
    if "signature" in suites:
        corpus = _gram_corpus(rng, cfg)
        for label, g in corpus:
            exact = signature(g)
            numeric = numeric_signature(g, cfg.float_tolerance)
            if exact != numeric:
                mismatches.append(
                    {
                        "suite": "signature",
                        "matrix": label,
                        "exact": [exact.p, exact.q],
                        "numeric": [numeric.p, numeric.q],
                    }
                )
    return {"agree": not mismatches, "mismatches": mismatches}


def _gram_corpus(rng: random.Random, cfg: OracleConfig) -> list[tuple[str, RationalMatrix]]:
    """Gram matrices of realized block specs plus random symmetric matrices."""
    corpus: list[tuple[str, RationalMatrix]] = []
    kinds: list = [Elliptic2(Fraction(1)), Elliptic2(Fraction(-2)), Hyperbolic2(Fraction(3)), Zero2()]
    for combo in itertools.combinations_with_replacement(kinds, 3):
        spec = BlockSpec(tuple(combo))
        a, v = realize(spec)
        corpus.append((repr(spec.blocks), gram_of(a, v)))
    a, v = realize(BlockSpec((Quad4(Fraction(1), Fraction(2)), Hyperbolic2(Fraction(1)))))
    corpus.append(("quad+hyp", gram_of(a, v)))
    for idx in range(max(1, min(cfg.trials, 50))):
        n = rng.randint(1, 5)
        m = RationalMatrix.from_rows(
            [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        )
        corpus.append((f"random-{idx}", m + m.transpose()))
    return corpus


def weyl_bruteforce_intersect(
    spec: RootSystemSpec, xi: Weight, pattern: AffinePattern
) -> bool:
    """Literal sweep of the Weyl group against an affine pattern.

    Enumerates all coordinate permutations; for family C the per-coordinate
    sign choices are explored slot by slot (signs on free coordinates act
    trivially on the membership test).
    """
    n = spec.n
    if n > 6:
        raise CapabilityError("literal Weyl enumeration is limited to n <= 6")
    if xi.rank != n or pattern.shift.rank != n:
        raise ValueError("rank mismatch")
    slots = sorted(pattern.forced_zero)
    if not slots:
        return True
    targets = [pattern.shift.coord(p) for p in slots]
    coords = [xi.coord(i) for i in range(n)]
    signed = spec.family == FAMILY_C
    for perm in itertools.permutations(range(n)):
        ok = True
        for slot, t in zip(slots, targets):
            c = coords[perm[slot]]
            if c == t:
                continue
            if signed and (-c[0], -c[1]) == t:
                continue
            ok = False
            break
        if ok:
            return True
    return False
