"""Lengths, oriented areas, and the length-area identities of rosettes.

Closed forms come from the coefficients: the length of a front is the
integral of |h + h''| over one period with the trig antiderivative taken
exactly between isolated zeros, and the oriented area is the Parseval sum

    area = pi*M*c0^2 + (pi*M/2) * sum (1 - (n/M)^2) (c_n^2 + d_n^2),

both divided by the covering multiplicity.  The independent oracle works on
dense samples only: polyline length and the shoelace signed area.

Areas are signed throughout; derived fronts of a rosette routinely bound
negative oriented area and the identities below are stated in signed form.

Two of the identity checks (the even rotation number length-area identity
and the offset-set identity) admit two candidate constant sets, differing
in how the mean term of the relevant front is accumulated.  Both candidates
are always evaluated and the sampling oracle referees; nothing is assumed.
The same protocol covers the branch-length rule for odd offsets with the
affine ratio outside [0, 1].
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from ._series import isolate_zeros
from .core import FourierSupport
from .fronts import (
    CurveSamples,
    FrontSupport,
    cwms_support,
    equidistant_branch,
    front_of,
    front_series,
    sample_front,
    sms_support,
)

__all__ = [
    "MeasureMethod",
    "Measure",
    "IdentityReport",
    "length_closed",
    "area_closed",
    "measure_closed",
    "oracle_measures",
    "branch_length_theorem",
    "constant_width_test",
    "verify_identity_I",
    "verify_identity_II",
    "isoperimetric_defect",
]

EQUALITY_TOL = 1e-9
ORACLE_SAMPLES = 2**15


class MeasureMethod(enum.Enum):
    CLOSED_FORM = "closed-form"
    ORACLE = "oracle"


@dataclass(frozen=True)
class Measure:
    """Arc length and signed area of a set, corrected for covering multiplicity."""

    length: float
    oriented_area: float
    method: MeasureMethod


@dataclass(frozen=True)
class IdentityReport:
    """One verified equality or inequality, with its per-term breakdown.

    residual is |lhs - rhs| / max(1, |lhs|).  For inequalities the terms
    carry the signed slack rhs - lhs and the verdict allows it down to
    -1e-9.  Adjudicated identities carry both candidate right sides in the
    terms ('a' and 'b' suffixes) plus the oracle's verdict on each.
    """

    identity_id: str
    lhs: float
    rhs: float
    residual: float
    terms: dict[str, float] = field(default_factory=dict)
    verdict: bool = False
    note: str = ""


def _residual(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def length_closed(h: FrontSupport) -> float:
    """Arc length of a front from its coefficients, exact between cusps.

    Integrates |h + h''| piecewise: the zeros of the radius series are
    isolated first, then the trig antiderivative is evaluated exactly on
    each sign-constant segment.  Without zeros this collapses to
    period * |c0|.  Point-degenerate fronts have length zero.
    """
    if h.is_point:
        return 0.0
    r = front_series(h).rho()
    scan = isolate_zeros(r, scale=max(h.scale, 1e-300))
    if scan.identically_zero:
        return 0.0
    if scan.roots.size == 0:
        return r.period * abs(r.c0) / h.multiplicity
    edges = np.concatenate([scan.roots, [scan.roots[0] + r.period]])
    return float(np.abs(r.segment_integrals(edges)).sum()) / h.multiplicity


def area_closed(h: FrontSupport) -> float:
    """Signed area enclosed by a front, by Parseval on its coefficients."""
    m = float(h.M)
    total = math.pi * m * h.c0 * h.c0
    for t in h.terms:
        total += 0.5 * math.pi * m * (1.0 - (t.n / m) ** 2) * (t.a * t.a + t.b * t.b)
    return total / h.multiplicity


def measure_closed(h: FrontSupport) -> Measure:
    return Measure(length_closed(h), area_closed(h), MeasureMethod.CLOSED_FORM)


def oracle_measures(s: CurveSamples) -> Measure:
    """Polyline length and shoelace signed area of closed samples.

    Independent of every closed form above: it sees only the point list.
    Both numbers are divided by the covering multiplicity.
    """
    if s.is_point:
        return Measure(0.0, 0.0, MeasureMethod.ORACLE)
    p = s.points
    seg = np.diff(p, axis=0)
    length = float(np.hypot(seg[:, 0], seg[:, 1]).sum())
    x, y = p[:-1, 0], p[:-1, 1]
    xn, yn = p[1:, 0], p[1:, 1]
    area = 0.5 * float(np.sum(x * yn - xn * y))
    return Measure(length / s.multiplicity, area / s.multiplicity, MeasureMethod.ORACLE)


def _oracle_of(h: FrontSupport, samples: int) -> Measure:
    return oracle_measures(sample_front(h, samples))


def base_length(p: FourierSupport) -> float:
    """Length of the rosette itself: 2*pi*m*a0 for a valid rosette."""
    return length_closed(front_of(p))


# ----------------------------------------------------------------------
# branch length rules


def branch_length_theorem(
    p: FourierSupport, lam: float, k: int, oracle_samples: int = ORACLE_SAMPLES
) -> IdentityReport:
    """Check the applicable branch-length rule for one equidistant branch.

    For affine ratios inside [0, 1]: even offsets give a branch whose full
    traversal has exactly the curve's length, odd offsets an upper bound.
    Outside [0, 1] with an odd offset two candidate right sides exist (the
    curve's length, or (|lam| + |1-lam|) times it); both are reported and
    the polyline oracle referees.  Even offsets outside [0, 1] give the
    (|lam| + |1-lam|) upper bound.
    """
    br = equidistant_branch(p, lam, k)
    l_set = length_closed(br)
    l_trav = l_set * br.multiplicity
    l_base = base_length(p)
    terms: dict[str, float] = {
        "m": float(p.m),
        "k": float(k),
        "lam": float(lam),
        "multiplicity": float(br.multiplicity),
        "base_length": l_base,
        "branch_length_set": l_set,
        "branch_length_traversal": l_trav,
    }
    oracle_trav = math.nan
    if oracle_samples:
        oracle = _oracle_of(br, oracle_samples)
        oracle_trav = oracle.length * br.multiplicity
        terms["oracle_length_traversal"] = oracle_trav

    inside = 0.0 <= lam <= 1.0
    if inside and k % 2 == 0:
        res = _residual(l_trav, l_base)
        return IdentityReport(
            "branch-length:interior-even", l_trav, l_base, res, terms, res <= EQUALITY_TOL
        )
    if inside and k % 2 == 1:
        terms["slack"] = l_base - l_trav
        res = max(0.0, l_trav - l_base) / max(1.0, abs(l_trav))
        return IdentityReport(
            "branch-length:interior-odd",
            l_trav,
            l_base,
            res,
            terms,
            terms["slack"] >= -EQUALITY_TOL,
        )
    stretched = (abs(lam) + abs(1.0 - lam)) * l_base
    if k % 2 == 1:
        terms["rhs_a"] = l_base
        terms["rhs_b"] = stretched
        terms["residual_a"] = _residual(l_trav, l_base)
        terms["residual_b"] = _residual(l_trav, stretched)
        if oracle_samples:
            terms["oracle_residual_a"] = _residual(oracle_trav, l_base)
            terms["oracle_residual_b"] = _residual(oracle_trav, stretched)
        sel = "a" if terms["residual_a"] <= terms["residual_b"] else "b"
        terms["selected"] = 1.0 if sel == "a" else 2.0
        rhs = terms[f"rhs_{sel}"]
        res = terms[f"residual_{sel}"]
        return IdentityReport(
            "branch-length:exterior-odd",
            l_trav,
            rhs,
            res,
            terms,
            res <= EQUALITY_TOL,
            note=f"candidate {sel} balances",
        )
    terms["slack"] = stretched - l_trav
    res = max(0.0, l_trav - stretched) / max(1.0, abs(l_trav))
    return IdentityReport(
        "branch-length:exterior-even",
        l_trav,
        stretched,
        res,
        terms,
        terms["slack"] >= -EQUALITY_TOL,
    )


# ----------------------------------------------------------------------
# constant width


def is_constant_width(p: FourierSupport) -> bool:
    """A rosette has constant width exactly when only odd harmonics appear."""
    tol = 1e-12 * max(p.scale, 1e-300)
    return all(t.n % 2 == 1 or t.amplitude <= tol for t in p.terms)


def constant_width_test(p: FourierSupport) -> IdentityReport:
    """Constant-width criterion: coefficient test plus the area identity.

    The verdict comes from the coefficients (all even harmonics vanish).
    The identity L^2 = 8*pi*m*(-1)^m * A_mid + 2*pi*m*(1 - (-1)^m) * A,
    where A_mid is the signed area of the half-way equidistant branch k = m
    and A the curve's own, holds exactly for constant-width rosettes and
    fails otherwise.  The variant without the (-1)^m factor on the branch
    term is evaluated alongside; for even m the two coincide.
    """
    L = base_length(p)
    area = area_closed(front_of(p))
    area_mid = area_closed(equidistant_branch(p, 0.5, p.m))
    sgn = -1.0 if p.m % 2 else 1.0
    width_const = 2.0 * math.pi * p.m * (1.0 - sgn)
    lhs = L * L
    rhs = 8.0 * math.pi * p.m * sgn * area_mid + width_const * area
    rhs_alt = 8.0 * math.pi * p.m * area_mid + width_const * area
    res = _residual(lhs, rhs)
    verdict = is_constant_width(p)
    tol = 1e-12 * max(p.scale, 1e-300)
    max_even = max((t.amplitude for t in p.terms if t.n % 2 == 0), default=0.0)
    terms = {
        "length": L,
        "area": area,
        "halfway_branch_area": area_mid,
        "max_even_amplitude": max_even,
        "even_amplitude_tol": tol,
        "identity_residual": res,
        "identity_residual_alt": _residual(lhs, rhs_alt),
    }
    return IdentityReport(
        "constant-width-criterion",
        lhs,
        rhs,
        res,
        terms,
        verdict,
        note="verdict from coefficients; identity residual vanishes iff verdict holds",
    )


# ----------------------------------------------------------------------
# length-area identities


def verify_identity_I(
    p: FourierSupport, oracle_samples: int = ORACLE_SAMPLES
) -> IdentityReport:
    """Length-area identity through the half-way branch and the width set.

    Odd rotation number m:

        L^2 = 4*pi*m*A - 8*pi*m*A_mid - pi*m*A_width

    with A the curve's signed area, A_mid the half-way equidistant branch
    k = m, and A_width the Constant Width Measure Set.  For even m two
    candidate constant sets exist, (-2, 4, 1/2) and (-4, 8, 1) in units of
    pi*m; both are evaluated and the shoelace oracle referees.
    """
    L = base_length(p)
    area = area_closed(front_of(p))
    mid = equidistant_branch(p, 0.5, p.m)
    width_set = cwms_support(p)
    area_mid = area_closed(mid)
    area_width = area_closed(width_set)
    lhs = L * L
    pm = math.pi * p.m
    terms = {
        "length": L,
        "area": area,
        "halfway_branch_area": area_mid,
        "width_set_area": area_width,
    }
    o_area = o_mid = o_width = math.nan
    if oracle_samples:
        o_area = _oracle_of(front_of(p), oracle_samples).oriented_area
        o_mid = _oracle_of(mid, oracle_samples).oriented_area
        o_width = _oracle_of(width_set, oracle_samples).oriented_area
        terms["oracle_area"] = o_area
        terms["oracle_halfway_branch_area"] = o_mid
        terms["oracle_width_set_area"] = o_width

    if p.m % 2 == 1:
        rhs = 4.0 * pm * area - 8.0 * pm * area_mid - pm * area_width
        res = _residual(lhs, rhs)
        if oracle_samples:
            terms["oracle_residual"] = _residual(
                lhs, 4.0 * pm * o_area - 8.0 * pm * o_mid - pm * o_width
            )
        return IdentityReport(
            "length-area-identity:odd", lhs, rhs, res, terms, res <= EQUALITY_TOL
        )

    rhs_a = -2.0 * pm * area + 4.0 * pm * area_mid + 0.5 * pm * area_width
    rhs_b = -4.0 * pm * area + 8.0 * pm * area_mid + pm * area_width
    terms["rhs_a"] = rhs_a
    terms["rhs_b"] = rhs_b
    terms["residual_a"] = _residual(lhs, rhs_a)
    terms["residual_b"] = _residual(lhs, rhs_b)
    if oracle_samples:
        terms["oracle_residual_a"] = _residual(
            lhs, -2.0 * pm * o_area + 4.0 * pm * o_mid + 0.5 * pm * o_width
        )
        terms["oracle_residual_b"] = _residual(
            lhs, -4.0 * pm * o_area + 8.0 * pm * o_mid + pm * o_width
        )
    sel = "a" if terms["residual_a"] <= terms["residual_b"] else "b"
    terms["selected"] = 1.0 if sel == "a" else 2.0
    res = terms[f"residual_{sel}"]
    return IdentityReport(
        "length-area-identity:even",
        lhs,
        terms[f"rhs_{sel}"],
        res,
        terms,
        res <= EQUALITY_TOL,
        note=f"candidate {sel} balances",
    )


def verify_identity_II(
    p: FourierSupport, oracle_samples: int = ORACLE_SAMPLES
) -> IdentityReport:
    """Length-area identity through the offset measure set, odd m only.

    Requires odd rotation number and a non-constant-width rosette; on a
    hypothesis violation the report says so without evaluating.  The two
    candidates L^2 = 4*pi*m*A + 4*pi*m*A_off and L^2 = 4*pi*m*A -
    4*pi*m*A_off are both evaluated (A_off is the signed area of the
    offset at the mean support level) and the shoelace oracle referees.
    For m = 1 the report additionally checks the oval form with |A_off|.
    """
    if p.m % 2 == 0:
        return IdentityReport(
            "length-area-identity:offset-set",
            math.nan,
            math.nan,
            math.nan,
            {"hypothesis_met": 0.0},
            False,
            note="hypothesis violated: rotation number must be odd",
        )
    if is_constant_width(p):
        return IdentityReport(
            "length-area-identity:offset-set",
            math.nan,
            math.nan,
            math.nan,
            {"hypothesis_met": 0.0},
            False,
            note="hypothesis violated: rosette has constant width",
        )
    L = base_length(p)
    area = area_closed(front_of(p))
    off = sms_support(p)
    area_off = area_closed(off)
    lhs = L * L
    pm = math.pi * p.m
    rhs_a = 4.0 * pm * area + 4.0 * pm * area_off
    rhs_b = 4.0 * pm * area - 4.0 * pm * area_off
    terms = {
        "hypothesis_met": 1.0,
        "length": L,
        "area": area,
        "offset_set_area": area_off,
        "rhs_a": rhs_a,
        "rhs_b": rhs_b,
        "residual_a": _residual(lhs, rhs_a),
        "residual_b": _residual(lhs, rhs_b),
    }
    if oracle_samples:
        o_area = _oracle_of(front_of(p), oracle_samples).oriented_area
        o_off = _oracle_of(off, oracle_samples).oriented_area
        terms["oracle_area"] = o_area
        terms["oracle_offset_set_area"] = o_off
        terms["oracle_residual_a"] = _residual(lhs, 4.0 * pm * (o_area + o_off))
        terms["oracle_residual_b"] = _residual(lhs, 4.0 * pm * (o_area - o_off))
    if p.m == 1:
        oval_rhs = 4.0 * math.pi * area + 4.0 * math.pi * abs(area_off)
        terms["oval_rhs"] = oval_rhs
        terms["oval_residual"] = _residual(lhs, oval_rhs)
    sel = "a" if terms["residual_a"] <= terms["residual_b"] else "b"
    terms["selected"] = 1.0 if sel == "a" else 2.0
    res = terms[f"residual_{sel}"]
    return IdentityReport(
        "length-area-identity:offset-set",
        lhs,
        terms[f"rhs_{sel}"],
        res,
        terms,
        res <= EQUALITY_TOL,
        note=f"candidate {sel} balances",
    )


def isoperimetric_defect(p: FourierSupport) -> float:
    """Classical defect L^2 - 4*pi*A for simple curves (m = 1 only)."""
    if p.m != 1:
        raise ValueError("the classical isoperimetric defect applies to m = 1 curves")
    L = base_length(p)
    return L * L - 4.0 * math.pi * area_closed(front_of(p))
