"""Rosettes represented by Fourier-series support functions.

An m-rosette is a closed regular plane curve with non-vanishing curvature
and rotation number m.  Its Minkowski support function p is 2*m*pi periodic
and is stored as a mean value a0 plus a finite list of harmonics with
frequencies n/m.  The curve itself, its curvature radius and its validity
as a rosette all follow from the coefficients:

    point(t)  = (p cos t - p' sin t,  p sin t + p' cos t)
    rho(t)    = p(t) + p''(t)            (positive exactly for rosettes)

The coorienting unit normal at parameter t is -(cos t, sin t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._series import TrigSeries, isolate_zeros, series_minimum, support_points

__all__ = [
    "HarmonicTerm",
    "FourierSupport",
    "PlanePoint",
    "ValidationReport",
    "as_series",
    "eval_support",
    "radius_of_curvature",
    "point_at",
    "points_at",
    "positivity_margin",
    "validate_rosette",
]


@dataclass(frozen=True)
class HarmonicTerm:
    """One harmonic of a support function: a cos(n t/m) + b sin(n t/m)."""

    n: int
    a: float = 0.0
    b: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"harmonic index must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @property
    def amplitude(self) -> float:
        return math.hypot(self.a, self.b)


@dataclass(frozen=True)
class FourierSupport:
    """Support function of a candidate m-rosette.

    p(t) = a0 + sum(a_n cos(n t/m) + b_n sin(n t/m)), period 2*m*pi.
    At most one term per harmonic index; terms are kept sorted by n.
    Whether the coefficients really define a rosette (rho > 0 everywhere)
    is decided by validate_rosette, not by the constructor.
    """

    m: int
    a0: float
    terms: tuple[HarmonicTerm, ...] = ()

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise ValueError(f"rotation number must be a positive integer, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "a0", float(self.a0))
        terms = tuple(sorted(self.terms, key=lambda t: t.n))
        if len({t.n for t in terms}) != len(terms):
            raise ValueError("duplicate harmonic index in support function")
        object.__setattr__(self, "terms", terms)

    @property
    def scale(self) -> float:
        """Coefficient scale used for all relative tolerances."""
        amp = max((t.amplitude for t in self.terms), default=0.0)
        return max(abs(self.a0), amp)

    @property
    def n_max(self) -> int:
        return self.terms[-1].n if self.terms else 0

    def scaled(self, c: float) -> "FourierSupport":
        return FourierSupport(
            self.m,
            c * self.a0,
            tuple(HarmonicTerm(t.n, c * t.a, c * t.b) for t in self.terms),
        )


@dataclass(frozen=True)
class PlanePoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("plane point coordinates must be finite")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of rosette validation: curvature margin plus genericity flags."""

    is_rosette: bool
    min_rho: float
    min_rho_theta: float
    genericity_warnings: tuple[str, ...] = field(default_factory=tuple)


def as_series(p: FourierSupport) -> TrigSeries:
    return TrigSeries(
        p.m,
        p.a0,
        tuple(t.n for t in p.terms),
        tuple(t.a for t in p.terms),
        tuple(t.b for t in p.terms),
    )


def eval_support(p: FourierSupport, theta, order: int = 0):
    """Support function value, or its first or second derivative.

    Derivatives are exact term-by-term: each harmonic picks up a factor
    n/m per order (with the usual cos/sin swap for odd orders).
    Accepts scalar or array theta.
    """
    return as_series(p).eval(theta, order)


def radius_of_curvature(p: FourierSupport, theta):
    """rho(t) = p(t) + p''(t); harmonic n contributes the factor 1 - (n/m)^2."""
    return as_series(p).rho().eval(theta)


def point_at(p: FourierSupport, theta: float) -> PlanePoint:
    """Point of the curve whose tangent normal makes angle theta."""
    xy = support_points(as_series(p), theta)[0]
    return PlanePoint(float(xy[0]), float(xy[1]))


def points_at(p: FourierSupport, theta) -> np.ndarray:
    """Vectorized point_at: array of curve points, shape (len(theta), 2)."""
    return support_points(as_series(p), theta)


def positivity_margin(p: FourierSupport) -> float:
    """Sufficient (not necessary) rosette margin.

    a0 minus the largest possible oscillation of rho; a positive value proves
    rho > 0 everywhere without any sampling.
    """
    m2 = p.m * p.m
    bound = sum(abs(t.n * t.n - m2) / m2 * t.amplitude for t in p.terms)
    return p.a0 - bound


def validate_rosette(p: FourierSupport) -> ValidationReport:
    """Check rho > 0 and scan the auxiliary functions for non-generic zeros.

    The minimum of rho is isolated on a dense grid and polished by bisection
    on rho'.  Genericity warnings flag tangential (non-transverse) or
    near-tangential zeros of the functions whose transverse zeros the rest
    of the library counts: rho(t) - rho(t + k*pi) for odd k (cusp and
    antipodal bookkeeping) and rho - a0 (offset-set cusps).  Identically
    vanishing differences (extra symmetry) are flagged as degenerate.
    """
    s = as_series(p)
    rho = s.rho()
    min_rho, at = series_minimum(rho)
    warnings: list[str] = []

    scale = max(p.scale, 1e-300)
    for k in range(1, 2 * p.m, 2):
        diff = _rho_shift_difference(rho, k)
        scan = isolate_zeros(diff, scale=scale)
        for w in scan.warnings:
            warnings.append(f"parallel-offset-{k}:{w}")
    sms_rho = TrigSeries(rho.M, rho.c0 - p.a0, rho.ns, rho.ca, rho.cb)
    for w in isolate_zeros(sms_rho, scale=scale).warnings:
        warnings.append(f"radius-level-set:{w}")

    is_rosette = min_rho > 1e-12 * scale
    return ValidationReport(is_rosette, float(min_rho), float(at), tuple(warnings))


def _rho_shift_difference(rho: TrigSeries, k: int) -> TrigSeries:
    from ._series import series_sum

    return series_sum([(1.0, rho), (-1.0, rho.shifted_half_turns(k))])
