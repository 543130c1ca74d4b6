"""Affine equidistants of a union of two rosettes.

Parameters of the two curves are split at multiples of pi into parallel
arcs; a maximal glueing scheme pairs one cyclic run of arcs from each curve
and traces exactly one smooth branch of the equidistant of the pair.  With
rotation numbers m1, m2 there are 2*gcd(m1, m2) branches at affine ratio
1/2 and 4*gcd(m1, m2) otherwise, each of period 2*pi*lcm(m1, m2) and
rotation number lcm(m1, m2).  Branch supports are assembled by exact
coefficient arithmetic on the common period:

    family one   lam*p1(t) + (-1)^k (1-lam)*p2(t + k*pi)
    family two   (1-lam)*p1(t) + (-1)^k lam*p2(t + (k - 2*gcd)*pi)

(at lam = 1/2 only family one exists and both weights are 1/2).

The two input supports are taken in one shared frame; no angular
re-registration is attempted, and accidental coincidence of two branch
coefficient vectors is flagged as non-generic rather than merged.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from ._series import series_sum
from .core import FourierSupport, HarmonicTerm, as_series
from .cusps import (
    REGULAR_REVERSED,
    ROSETTE,
    SINGULAR,
    CuspReport,
    classify_branch,
    find_cusps,
)
from .fronts import BranchDescriptor, FrontKind, FrontSupport
from .measures import EQUALITY_TOL, IdentityReport, base_length, length_closed

__all__ = [
    "SchemeFamily",
    "ParallelArcSet",
    "GlueingScheme",
    "PairBranch",
    "PairBranchReport",
    "PairInventory",
    "parallel_arc_set",
    "maximal_glueing_schemes",
    "pair_branch",
    "pair_inventory",
]


class SchemeFamily(enum.Enum):
    WIGNER_PAIR = "halfway"
    LAMBDA_FIRST = "weights-as-given"
    LAMBDA_SECOND = "weights-swapped"


@dataclass(frozen=True)
class ParallelArcSet:
    """Index tuples of the parallel arcs of both curves.

    Each curve's parameter circle splits at multiples of pi into 2*m arcs;
    the second curve's point indices are offset by 2*m1 (primed indices).
    """

    m1: int
    m2: int
    entries: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GlueingScheme:
    """Two cyclic rows of parallel point indices traced in lockstep.

    Rows hold 2*lcm(m1, m2) + 1 point indices (so 2*lcm arcs); the scheme
    closes up, i.e. the first column equals the last.
    """

    upper: tuple[int, ...]
    lower: tuple[int, ...]
    family: SchemeFamily
    k: int

    @property
    def arc_count(self) -> int:
        return len(self.upper) - 1


@dataclass(frozen=True)
class PairBranch:
    support: FrontSupport
    family: SchemeFamily
    k: int
    lam: float
    sources: tuple[FourierSupport, FourierSupport]


def parallel_arc_set(m1: int, m2: int) -> ParallelArcSet:
    """The 2*m1 + 2*m2 parallel arcs of a two-rosette union."""
    if m1 < 1 or m2 < 1:
        raise ValueError("rotation numbers must be positive")
    first = [(i, (i + 1) % (2 * m1)) for i in range(2 * m1)]
    shift = 2 * m1
    second = [(i + shift, (i + 1) % (2 * m2) + shift) for i in range(2 * m2)]
    return ParallelArcSet(m1, m2, tuple(first + second))


def _cyclic_row(start: int, n_points: int, n_arcs: int, offset: int = 0) -> tuple[int, ...]:
    return tuple((start + i) % n_points + offset for i in range(n_arcs + 1))


def maximal_glueing_schemes(m1: int, m2: int, lam: float) -> list[GlueingScheme]:
    """Every maximal glueing scheme of the pair equidistant at ratio lam.

    2*gcd schemes at lam = 1/2, 4*gcd otherwise (the second half swaps the
    roles of the two curves).  Each scheme repeats one curve's full index
    cycle lcm/m times against the other's, so it always closes after
    2*lcm arcs.
    """
    if lam in (0.0, 1.0):
        raise ValueError("affine ratio 0 or 1 reproduces the curves themselves")
    g = math.gcd(m1, m2)
    lcm = math.lcm(m1, m2)
    arcs = 2 * lcm
    schemes = []
    first_family = SchemeFamily.WIGNER_PAIR if lam == 0.5 else SchemeFamily.LAMBDA_FIRST
    for k in range(2 * g):
        schemes.append(
            GlueingScheme(
                _cyclic_row(0, 2 * m1, arcs),
                _cyclic_row(k, 2 * m2, arcs, offset=2 * m1),
                first_family,
                k,
            )
        )
    if lam != 0.5:
        for k in range(2 * g):
            schemes.append(
                GlueingScheme(
                    _cyclic_row(k, 2 * m2, arcs, offset=2 * m1),
                    _cyclic_row(0, 2 * m1, arcs),
                    SchemeFamily.LAMBDA_SECOND,
                    2 * g + k,
                )
            )
    return schemes


def _branch_weights(lam: float, k: int, g: int) -> tuple[float, float, int, SchemeFamily]:
    """Weights (w1, w2), the parameter shift of the second curve, and family."""
    if k < 2 * g:
        sign = -1.0 if k % 2 else 1.0
        family = SchemeFamily.WIGNER_PAIR if lam == 0.5 else SchemeFamily.LAMBDA_FIRST
        return lam, sign * (1.0 - lam), k, family
    kk = k - 2 * g
    sign = -1.0 if kk % 2 else 1.0
    return (1.0 - lam), sign * lam, kk, SchemeFamily.LAMBDA_SECOND


def pair_branch(p1: FourierSupport, p2: FourierSupport, lam: float, k: int) -> PairBranch:
    """Branch k of the equidistant of the pair, on the period 2*pi*lcm."""
    if lam in (0.0, 1.0):
        raise ValueError("affine ratio 0 or 1 reproduces the curves themselves")
    g = math.gcd(p1.m, p2.m)
    k_max = 2 * g if lam == 0.5 else 4 * g
    if not 0 <= k < k_max:
        raise ValueError(f"branch index {k} outside 0..{k_max - 1} for lam={lam}")
    lcm = math.lcm(p1.m, p2.m)
    w1, w2, shift, family = _branch_weights(lam, k, g)
    s1 = as_series(p1).lifted(lcm // p1.m)
    s2 = as_series(p2).shifted_half_turns(shift).lifted(lcm // p2.m)
    s = series_sum([(w1, s1), (w2, s2)])
    terms = tuple(HarmonicTerm(n, a, b) for n, a, b in zip(s.ns, s.ca, s.cb))
    desc = BranchDescriptor(FrontKind.EQUIDISTANT, (p1, p2), lam=lam, k=k)
    support = FrontSupport(lcm, s.c0, terms, 1, desc)
    return PairBranch(support, family, k, lam, (p1, p2))


@dataclass(frozen=True)
class PairBranchReport:
    branch: PairBranch
    length: float
    length_report: IdentityReport
    rotation: Fraction
    cusps: CuspReport
    classification: str
    curved_same_side: bool
    predicted_regular: bool


@dataclass(frozen=True)
class PairInventory:
    """Every branch of one pair equidistant, measured and classified."""

    lam: float
    gcd: int
    lcm: int
    branch_count: int
    reports: tuple[PairBranchReport, ...]
    rosette_count: int
    regular_count: int
    failures: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def _length_rule(branch: PairBranch, g: int) -> IdentityReport:
    """Branch length against the weighted lengths of the two curves.

    Weights of one sign make the radius series sign-constant, so the length
    is exactly |w1|*R1 + |w2|*R2 with R_i the curve length stretched to the
    common period; mixed signs give that value as an upper bound.  The sign
    pattern reproduces the printed case split (equality for even offsets at
    interior ratios and odd offsets at exterior ratios).
    """
    p1, p2 = branch.sources
    lcm = branch.support.M
    w1, w2, _, _ = _branch_weights(branch.lam, branch.k, g)
    r1 = (lcm / p1.m) * base_length(p1)
    r2 = (lcm / p2.m) * base_length(p2)
    bound = abs(w1) * r1 + abs(w2) * r2
    lhs = length_closed(branch.support)
    terms = {
        "k": float(branch.k),
        "lam": float(branch.lam),
        "w1": w1,
        "w2": w2,
        "stretched_length_1": r1,
        "stretched_length_2": r2,
    }
    equality = w1 * w2 > 0.0
    terms["printed_case_is_equality"] = 1.0 if equality else 0.0
    if equality:
        res = abs(lhs - bound) / max(1.0, abs(lhs))
        return IdentityReport(
            "pair-branch-length:equality", lhs, bound, res, terms, res <= EQUALITY_TOL
        )
    terms["slack"] = bound - lhs
    res = max(0.0, lhs - bound) / max(1.0, abs(lhs))
    return IdentityReport(
        "pair-branch-length:bound",
        lhs,
        bound,
        res,
        terms,
        terms["slack"] >= -EQUALITY_TOL,
    )


def pair_inventory(p1: FourierSupport, p2: FourierSupport, lam: float) -> PairInventory:
    """Construct, measure and classify every branch of a pair equidistant.

    Checks branch counts (2*gcd at lam = 1/2, 4*gcd otherwise), rotation
    numbers (lcm), even cusp parities, the length rules, and the
    curved-in-same-side prediction: even offsets pair points whose
    curvature centers lie on the same side, making the branch regular for
    interior ratios; odd offsets do so for exterior ratios.  Failed counts
    are reported, not raised; coefficient-coincident branches are flagged
    non-generic.
    """
    g = math.gcd(p1.m, p2.m)
    lcm = math.lcm(p1.m, p2.m)
    count = 2 * g if lam == 0.5 else 4 * g
    reports = []
    failures: list[str] = []
    warnings: list[str] = []
    for k in range(count):
        br = pair_branch(p1, p2, lam, k)
        cusps = find_cusps(br.support)
        kind = classify_branch(br.support)
        rule = _length_rule(br, g)
        w1, w2, _, _ = _branch_weights(lam, k, g)
        same_side = k % 2 == 0 if k < 2 * g else (k - 2 * g) % 2 == 0
        predicted = same_side if 0.0 < lam < 1.0 else not same_side
        reports.append(
            PairBranchReport(
                br,
                rule.lhs,
                rule,
                Fraction(lcm, 1),
                cusps,
                kind,
                same_side,
                predicted,
            )
        )
        warnings.extend(f"k={k}:{w}" for w in cusps.warnings)
        if not cusps.point_degenerate and not cusps.parity_even:
            failures.append(f"k={k}: odd cusp count {cusps.count}")
        if predicted and kind == SINGULAR:
            failures.append(f"k={k}: predicted regular by side rule but singular")
        if not rule.verdict:
            failures.append(f"k={k}: length rule violated ({rule.identity_id})")

    rosette_count = sum(1 for r in reports if r.classification == ROSETTE)
    regular_count = sum(1 for r in reports if r.classification != SINGULAR)
    need = g if lam == 0.5 else 2 * g
    if regular_count < need:
        failures.append(f"expected >= {need} regular branches, found {regular_count}")

    # accidental extra symmetry: coefficient-coincident branch supports
    scale = max(p1.scale, p2.scale, 1e-300)
    for i in range(len(reports)):
        for j in range(i + 1, len(reports)):
            if _coefficients_close(reports[i].branch.support, reports[j].branch.support, scale):
                warnings.append(f"non-generic: branches {i} and {j} coincide")

    return PairInventory(
        lam,
        g,
        lcm,
        count,
        tuple(reports),
        rosette_count,
        regular_count,
        tuple(failures),
        tuple(warnings),
    )


def _coefficients_close(a: FrontSupport, b: FrontSupport, scale: float) -> bool:
    tol = 1e-12 * scale
    if abs(a.c0 - b.c0) > tol:
        return False
    coef = {t.n: (t.a, t.b) for t in a.terms}
    for t in b.terms:
        ca, cb = coef.pop(t.n, (0.0, 0.0))
        if abs(ca - t.a) > tol or abs(cb - t.b) > tol:
            return False
    return all(abs(ca) <= tol and abs(cb) <= tol for ca, cb in coef.values())
