"""Cusps, antipodal pairs, rotation numbers, and branch classification.

A front is singular exactly where its radius series h + h'' crosses zero;
generic fronts have transverse crossings only, each a cusp.  Cusps of the
half-way equidistant branches of a rosette sit at parameters where the
curvature radii of the two paired points agree, which makes them antipodal
pairs of the curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._series import isolate_zeros, series_sum
from .core import FourierSupport, PlanePoint, as_series, point_at
from .fronts import FrontSupport, equidistant_branch, front_series

__all__ = [
    "CuspReport",
    "AntipodalPair",
    "AntipodalReport",
    "BranchClassification",
    "BranchSummary",
    "find_cusps",
    "antipodal_pairs",
    "rotation_number",
    "sampled_winding",
    "classify_branches",
]


@dataclass(frozen=True)
class CuspReport:
    """Cusp parameters of a front over one covering of its point set."""

    locations: tuple[float, ...]
    count: int
    parity_even: bool
    warnings: tuple[str, ...] = ()
    point_degenerate: bool = False


@dataclass(frozen=True)
class AntipodalPair:
    """A parallel pair with equal curvature radii.

    theta solves rho(theta) = rho(theta + k*pi) for the odd offset k; the
    pair holds the two curve points.  Each odd offset k in 1..2m-1 reports
    its solutions separately (offsets k and 2m-k describe the same geometric
    pairing read from either end; both are counted, matching the per-branch
    cusp bookkeeping).  For k = m the solutions come in parameter pairs
    theta, theta + m*pi describing one pair, which is reported once.
    """

    theta: float
    k: int
    pair: tuple[PlanePoint, PlanePoint]


@dataclass(frozen=True)
class AntipodalReport:
    pairs: tuple[AntipodalPair, ...]
    warnings: tuple[str, ...] = ()

    @property
    def count(self) -> int:
        return len(self.pairs)


def find_cusps(h: FrontSupport) -> CuspReport:
    """Transverse zeros of the radius series over one covering period.

    Multiplicity-2 fronts report each geometric cusp once (zeros in the
    second covering half repeat the first).  Tangential or near-tangential
    zeros are flagged as warnings; a point-degenerate front yields an empty
    report with the point flag set.
    """
    if h.is_point:
        return CuspReport((), 0, True, (), True)
    r = front_series(h).rho()
    scan = isolate_zeros(r, scale=max(h.scale, 1e-300))
    if scan.identically_zero:
        return CuspReport((), 0, True, ("identically-zero",), True)
    cover = h.covering_period
    locs = tuple(float(t) for t in scan.roots if t < cover)
    return CuspReport(
        locs, len(locs), len(locs) % 2 == 0, tuple(scan.warnings), False
    )


def antipodal_pairs(p: FourierSupport) -> AntipodalReport:
    """All antipodal pairs of a rosette, reported per odd parameter offset.

    For each odd k in 1..2m-1 the transverse zeros of
    rho(theta) - rho(theta + k*pi) on [0, 2*m*pi) each give one pair; for
    k = m the zeros pair up (theta and theta + m*pi solve together) and
    only the representative in [0, m*pi) is kept.  Degenerate inputs whose
    difference vanishes identically (extra symmetry, e.g. a circle or a
    centrally symmetric oval) are flagged and contribute no isolated pairs.
    """
    rho = as_series(p).rho()
    scale = max(p.scale, 1e-300)
    pairs: list[AntipodalPair] = []
    warnings: list[str] = []
    for k in range(1, 2 * p.m, 2):
        diff = series_sum([(1.0, rho), (-1.0, rho.shifted_half_turns(k))])
        scan = isolate_zeros(diff, scale=scale)
        for w in scan.warnings:
            warnings.append(f"offset-{k}:{w}")
        if scan.identically_zero:
            continue
        roots = scan.roots
        if k == p.m:
            # solutions pair as theta, theta + m*pi; keep one representative
            roots = roots[roots < math.pi * p.m]
        for t in roots:
            t = float(t)
            pairs.append(
                AntipodalPair(
                    t,
                    k,
                    (point_at(p, t), point_at(p, t + k * math.pi)),
                )
            )
    return AntipodalReport(tuple(pairs), tuple(warnings))


def rotation_number(h: FrontSupport, check_samples: int = 4096) -> Fraction | None:
    """Winding of the coorienting normal over one traversal of the set.

    Equals M / multiplicity exactly for a support-function front; the value
    is cross-checked against normal-angle increments accumulated on samples
    and must agree to a quarter turn before rounding.  Point-degenerate
    fronts have no rotation number (None).
    """
    if h.is_point:
        return None
    exact = Fraction(h.M, h.multiplicity)
    if check_samples:
        winding = sampled_winding(h, check_samples)
        if winding is None or abs(winding - float(exact)) > 0.25:
            raise ArithmeticError(
                f"sampled winding {winding} disagrees with {exact}"
            )
    return exact


def sampled_winding(h: FrontSupport, N: int = 4096) -> float | None:
    """Accumulated turning of the normal field over one covering, in turns."""
    if h.is_point:
        return None
    theta = np.linspace(0.0, h.covering_period, N + 1)
    nx, ny = -np.cos(theta), -np.sin(theta)
    ang = np.arctan2(ny, nx)
    steps = np.diff(ang)
    steps = (steps + math.pi) % (2.0 * math.pi) - math.pi
    return float(steps.sum() / (2.0 * math.pi))


ROSETTE = "rosette"
REGULAR_REVERSED = "regular-reversed-coorientation"
SINGULAR = "singular"


@dataclass(frozen=True)
class BranchClassification:
    k: int
    kind: str
    cusps: CuspReport
    rotation: Fraction | None


@dataclass(frozen=True)
class BranchSummary:
    """Classification of every equidistant branch at one affine ratio."""

    lam: float
    branches: tuple[BranchClassification, ...]
    rosette_count: int
    regular_count: int
    expected: str
    failures: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def classify_branch(h: FrontSupport) -> str:
    """rosette: radius series positive; regular-reversed: negative; else singular."""
    r = front_series(h).rho()
    scan = isolate_zeros(r, scale=max(h.scale, 1e-300))
    if scan.identically_zero or scan.roots.size or scan.tangential:
        return SINGULAR
    return ROSETTE if r.eval(0.0) > 0.0 else REGULAR_REVERSED


def classify_branches(p: FourierSupport, lam: float) -> BranchSummary:
    """Classify every branch of the lam-equidistant and check the counts.

    lam = 1/2: exactly floor(m/2) branches (the even offsets) must be
    rosettes and the remaining branches must carry at least two cusps in
    total.  lam inside (0,1): at least m-1 rosette branches.  lam outside
    [0,1]: at least m branches regular (positively or negatively
    cooriented).  Count failures are reported, never raised, since they can
    only occur on inputs already flagged as non-generic.
    """
    k_max = p.m if lam == 0.5 else 2 * p.m - 1
    branches = []
    warnings: list[str] = []
    for k in range(1, k_max + 1):
        br = equidistant_branch(p, lam, k)
        cusps = find_cusps(br)
        kind = classify_branch(br)
        rot = rotation_number(br, check_samples=0)
        branches.append(BranchClassification(k, kind, cusps, rot))
        warnings.extend(f"k={k}:{w}" for w in cusps.warnings)

    rosette_count = sum(1 for b in branches if b.kind == ROSETTE)
    regular_count = sum(1 for b in branches if b.kind != SINGULAR)
    failures: list[str] = []
    if lam == 0.5:
        expected = f"exactly {p.m // 2} rosette branches, >= 2 cusps on the rest"
        if rosette_count != p.m // 2:
            failures.append(
                f"expected exactly {p.m // 2} rosette branches, found {rosette_count}"
            )
        total_cusps = sum(b.cusps.count for b in branches if b.kind == SINGULAR)
        if p.m // 2 < len(branches) and total_cusps < 2:
            failures.append(f"expected >= 2 cusps on singular branches, found {total_cusps}")
    elif 0.0 < lam < 1.0:
        expected = f"at least {p.m - 1} rosette branches"
        if rosette_count < p.m - 1:
            failures.append(
                f"expected >= {p.m - 1} rosette branches, found {rosette_count}"
            )
    elif lam < 0.0 or lam > 1.0:
        expected = f"at least {p.m} regular branches"
        if regular_count < p.m:
            failures.append(
                f"expected >= {p.m} regular branches, found {regular_count}"
            )
    else:
        expected = "identity map (lam in {0, 1})"
    return BranchSummary(
        lam,
        tuple(branches),
        rosette_count,
        regular_count,
        expected,
        tuple(failures),
        tuple(warnings),
    )
