"""Derived curves of a rosette, built in coefficient space.

Each construction here returns a FrontSupport: a generalized support
function whose value may change sign, describing a wave front that is
regular except at cusps.  Constructions are exact shift-and-add arithmetic
on Fourier coefficients; sampling exists only for oracles and rendering.

Supported fronts of a single rosette with support p and rotation number m:

    equidistant branch   lam*p(t) + (-1)^k (1-lam)*p(t + k*pi)
    width measure set    p(t) - (-1)^m p(t + m*pi) - 2*a0
    offset measure set   p(t) - a0
    plain offset         p(t) - alpha

The lam = 1/2, k = m equidistant branch is traced twice per period
(multiplicity 2); every other front is traced once.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._series import TrigSeries, series_sum, support_points
from .core import FourierSupport, HarmonicTerm, as_series

__all__ = [
    "FrontKind",
    "BranchDescriptor",
    "FrontSupport",
    "CurveSamples",
    "shift_support",
    "equidistant_branch",
    "cwms_support",
    "sms_support",
    "offset_support",
    "front_of",
    "sample_front",
    "front_series",
    "hausdorff_distance",
]

_POINT_RTOL = 1e-13


class FrontKind(enum.Enum):
    EQUIDISTANT = "equidistant"
    CWMS = "cwms"
    SMS = "sms"
    OFFSET = "offset"


@dataclass(frozen=True)
class BranchDescriptor:
    """Which derived set a front represents, and where it came from."""

    kind: FrontKind
    source: tuple[FourierSupport, ...]
    lam: float | None = None
    k: int | None = None
    alpha: float | None = None

    @property
    def source_scale(self) -> float:
        return max((p.scale for p in self.source), default=0.0)


@dataclass(frozen=True)
class FrontSupport:
    """Generalized support function h of a front, period 2*pi*M.

    h(t) = c0 + sum(c_n cos(n t/M) + d_n sin(n t/M)).  multiplicity is 2
    exactly for the Wigner branch k = m of a single rosette, which is a
    double covering of its point set; all measures divide by it.
    """

    M: int
    c0: float
    terms: tuple[HarmonicTerm, ...]
    multiplicity: int
    descriptor: BranchDescriptor

    def __post_init__(self):
        if self.multiplicity not in (1, 2):
            raise ValueError("covering multiplicity must be 1 or 2")
        terms = tuple(sorted(self.terms, key=lambda t: t.n))
        if len({t.n for t in terms}) != len(terms):
            raise ValueError("duplicate harmonic index in front support")
        object.__setattr__(self, "terms", terms)

    @property
    def period(self) -> float:
        return 2.0 * math.pi * self.M

    @property
    def covering_period(self) -> float:
        """Parameter length after which every point has been visited once."""
        return self.period / self.multiplicity

    @property
    def scale(self) -> float:
        amp = max((t.amplitude for t in self.terms), default=0.0)
        return max(abs(self.c0), amp, self.descriptor.source_scale)

    @property
    def is_point(self) -> bool:
        """True when the front degenerates to a single point.

        Harmonics with n = M only translate the front; with c0 = 0 and
        nothing else present the point set is a single point.
        """
        tol = _POINT_RTOL * max(self.scale, 1e-300)
        if abs(self.c0) > tol:
            return False
        return all(t.n == self.M or t.amplitude <= tol for t in self.terms)

    def eval(self, theta, order: int = 0):
        return front_series(self).eval(theta, order)


@dataclass(frozen=True)
class CurveSamples:
    """Closed polyline samples of a front: the oracle and renderer input."""

    theta: np.ndarray
    points: np.ndarray
    multiplicity: int
    is_point: bool


def front_series(h: FrontSupport) -> TrigSeries:
    return TrigSeries(
        h.M,
        h.c0,
        tuple(t.n for t in h.terms),
        tuple(t.a for t in h.terms),
        tuple(t.b for t in h.terms),
    )


def _terms_of(s: TrigSeries) -> tuple[HarmonicTerm, ...]:
    return tuple(HarmonicTerm(n, a, b) for n, a, b in zip(s.ns, s.ca, s.cb))


def shift_support(p: FourierSupport, phi: float) -> FourierSupport:
    """Support of the reparameterized curve t -> p(t + phi).

    Each harmonic (a_n, b_n) rotates by the phase n*phi/m; the mean value
    is unchanged.  Pure coefficient arithmetic, exact on quarter-turn phases.
    """
    s = as_series(p).shifted(phi)
    return FourierSupport(p.m, p.a0, _terms_of(s))


def equidistant_branch(p: FourierSupport, lam: float, k: int) -> FrontSupport:
    """Branch k of the affine lam-equidistant of a rosette.

    Support lam*p(t) + (-1)^k (1-lam)*p(t + k*pi).  Valid branch indices:
    1..m when lam = 1/2 (k and 2m-k trace the same set), 1..2m-1 otherwise.
    k = 0 is excluded: it reproduces the curve itself.
    """
    k_max = p.m if lam == 0.5 else 2 * p.m - 1
    if not 1 <= k <= k_max:
        raise ValueError(f"branch index {k} outside 1..{k_max} for lam={lam}")
    sign = -1.0 if k % 2 else 1.0
    s = series_sum(
        [
            (lam, as_series(p)),
            (sign * (1.0 - lam), as_series(p).shifted_half_turns(k)),
        ]
    )
    multiplicity = 2 if (lam == 0.5 and k == p.m) else 1
    desc = BranchDescriptor(FrontKind.EQUIDISTANT, (p,), lam=lam, k=k)
    return FrontSupport(p.m, s.c0, _terms_of(s), multiplicity, desc)


def cwms_support(p: FourierSupport) -> FrontSupport:
    """Constant Width Measure Set of a rosette.

    Support p(t) - (-1)^m p(t + m*pi) - 2*a0 (the constant is the length
    over m*pi).  In coefficients the mean becomes (-1 - (-1)^m) a0 and
    harmonic n keeps the factor 1 - (-1)^(n+m); for odd m a constant-width
    rosette therefore collapses to the single point at the origin.
    """
    sign = -1.0 if p.m % 2 else 1.0
    s = series_sum(
        [(1.0, as_series(p)), (-sign, as_series(p).shifted_half_turns(p.m))]
    )
    s = TrigSeries(s.M, s.c0 - 2.0 * p.a0, s.ns, s.ca, s.cb)
    desc = BranchDescriptor(FrontKind.CWMS, (p,))
    return FrontSupport(p.m, s.c0, _terms_of(s), 1, desc)


def sms_support(p: FourierSupport) -> FrontSupport:
    """Spherical Measure Set: the offset at the mean support level a0.

    Support p(t) - a0, i.e. the same harmonics with zero mean; a circle
    collapses to the single point at the origin.
    """
    desc = BranchDescriptor(FrontKind.SMS, (p,))
    return FrontSupport(p.m, 0.0, p.terms, 1, desc)


def offset_support(p: FourierSupport, alpha: float) -> FrontSupport:
    """Offset of the curve at distance alpha along the coorienting normal.

    The normal convention -(cos t, sin t) makes the offset support
    p(t) - alpha, so sms_support(p) equals offset_support(p, a0).
    """
    desc = BranchDescriptor(FrontKind.OFFSET, (p,), alpha=float(alpha))
    return FrontSupport(p.m, p.a0 - float(alpha), p.terms, 1, desc)


def front_of(p: FourierSupport) -> FrontSupport:
    """The rosette itself viewed as a front (its offset at level zero)."""
    return offset_support(p, 0.0)


def sample_front(h: FrontSupport, N: int) -> CurveSamples:
    """N+1 points at uniform parameters over one full period, closed.

    The last point repeats the first.  Point-degenerate fronts are flagged;
    their samples all coincide.  Intended for N >= 16 (oracles use 2**12 and
    up); N below 4 is rejected.
    """
    if N < 4:
        raise ValueError("need at least 4 samples for a closed polyline")
    theta = np.linspace(0.0, h.period, N + 1)
    pts = support_points(front_series(h), theta)
    pts[-1] = pts[0]
    return CurveSamples(theta, pts, h.multiplicity, h.is_point)


def hausdorff_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Symmetric Hausdorff distance between two point clouds."""
    from scipy.spatial import cKDTree

    da = cKDTree(b).query(a, k=1)[0].max()
    db = cKDTree(a).query(b, k=1)[0].max()
    return float(max(da, db))
