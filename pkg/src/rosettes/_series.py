"""Trigonometric series with frequencies n/M: the coefficient engine.

Every curve in this library is defined by a support function of the form

    h(t) = c0 + sum_i ( ca[i] * cos(ns[i] * t / M) + cb[i] * sin(ns[i] * t / M) )

with integer harmonic indices ns[i] >= 1 and period 2*pi*M.  Derived curves
are built by exact arithmetic on these coefficients (shift, scale, add);
sampling happens only for oracles, rendering, and root bracketing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

# Above this many evaluation points the cos/sin tables are generated from
# powers of exp(i*t/M): one vector exp plus n_max vector multiplies instead
# of 2*len(ns) vector trig calls.  Dense sampling dominates the runtime of
# the oracle suite, small evaluations keep the (more accurate) direct path.
_FAST_EVAL_CUTOFF = 2048

# Root isolation policy: uniform bracketing grid, bisection to this width.
_ROOT_WIDTH = 1e-12
_GRID_FLOOR = 4096
_GRID_PER_HARMONIC = 64

# A zero is flagged as non-transverse when |f'| at the root, or a local
# |f| minimum without sign change, falls below this fraction of the
# coefficient scale.
_GENERIC_RTOL = 1e-8
_ZERO_SERIES_RTOL = 1e-12


@dataclass(frozen=True)
class TrigSeries:
    """Finite trig series c0 + sum(ca cos(ns t/M) + cb sin(ns t/M))."""

    M: int
    c0: float
    ns: tuple[int, ...] = ()
    ca: tuple[float, ...] = ()
    cb: tuple[float, ...] = ()

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("period index M must be a positive integer")
        if not (len(self.ns) == len(self.ca) == len(self.cb)):
            raise ValueError("coefficient tuples must have equal length")
        if any(n < 1 for n in self.ns):
            raise ValueError("harmonic indices must be >= 1")
        if len(set(self.ns)) != len(self.ns):
            raise ValueError("duplicate harmonic index")
        if any(self.ns[i] >= self.ns[i + 1] for i in range(len(self.ns) - 1)):
            order = np.argsort(self.ns)
            object.__setattr__(self, "ns", tuple(self.ns[i] for i in order))
            object.__setattr__(self, "ca", tuple(self.ca[i] for i in order))
            object.__setattr__(self, "cb", tuple(self.cb[i] for i in order))

    @property
    def period(self) -> float:
        return TWO_PI * self.M

    @property
    def n_max(self) -> int:
        return self.ns[-1] if self.ns else 0

    @property
    def scale(self) -> float:
        amp = max((math.hypot(a, b) for a, b in zip(self.ca, self.cb)), default=0.0)
        return max(abs(self.c0), amp)

    # ------------------------------------------------------------------
    # evaluation

    def _tables(self, th: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """cos and sin of n*th/M for every harmonic, shape (len(ns), len(th))."""
        if th.size >= _FAST_EVAL_CUTOFF:
            z = np.exp(1j * (th / self.M))
            pows = np.empty((len(self.ns), th.size), dtype=complex)
            zp = np.ones_like(z)
            k = 0
            for i, n in enumerate(self.ns):
                while k < n:
                    zp = zp * z
                    k += 1
                pows[i] = zp
            return pows.real, pows.imag
        arg = np.multiply.outer(np.asarray(self.ns, dtype=float) / self.M, th)
        return np.cos(arg), np.sin(arg)

    def eval(self, theta, order: int = 0):
        """Evaluate the series or its first or second derivative."""
        if order not in (0, 1, 2):
            raise ValueError("order must be 0, 1 or 2")
        th = np.asarray(theta, dtype=float)
        scalar = th.ndim == 0
        flat = np.atleast_1d(th).ravel()
        val = np.full(flat.shape, self.c0 if order == 0 else 0.0)
        if self.ns:
            cos_t, sin_t = self._tables(flat)
            w = np.asarray(self.ns, dtype=float) / self.M
            a = np.asarray(self.ca)
            b = np.asarray(self.cb)
            if order == 0:
                ea, eb = a, b
            elif order == 1:
                ea, eb = w * b, -w * a
            else:
                ea, eb = -w * w * a, -w * w * b
            val = val + ea @ cos_t + eb @ sin_t
        if scalar:
            return float(val[0])
        return val.reshape(th.shape)

    def __call__(self, theta, order: int = 0):
        return self.eval(theta, order)

    # ------------------------------------------------------------------
    # coefficient arithmetic

    def rho(self) -> TrigSeries:
        """Series of h + h'': the radius of curvature of the front with support h."""
        f = [1.0 - (n / self.M) ** 2 for n in self.ns]
        return _pruned(
            self.M,
            self.c0,
            self.ns,
            tuple(fi * a for fi, a in zip(f, self.ca)),
            tuple(fi * b for fi, b in zip(f, self.cb)),
        )

    def scaled(self, w: float) -> TrigSeries:
        return TrigSeries(
            self.M,
            w * self.c0,
            self.ns,
            tuple(w * a for a in self.ca),
            tuple(w * b for b in self.cb),
        )

    def shifted_half_turns(self, k: int) -> TrigSeries:
        """Coefficients of t -> h(t + k*pi), exact for quarter-turn phases."""
        ca, cb = [], []
        for n, a, b in zip(self.ns, self.ca, self.cb):
            ca_i, cb_i = _rotate_half_turns(a, b, n * k, self.M)
            ca.append(ca_i)
            cb.append(cb_i)
        return TrigSeries(self.M, self.c0, self.ns, tuple(ca), tuple(cb))

    def shifted(self, phi: float) -> TrigSeries:
        """Coefficients of t -> h(t + phi)."""
        half_turns = phi / math.pi
        k = round(half_turns)
        if abs(half_turns - k) <= 4e-16 * max(1.0, abs(half_turns)):
            return self.shifted_half_turns(k)
        ca, cb = [], []
        for n, a, b in zip(self.ns, self.ca, self.cb):
            ang = math.fmod(n * phi / self.M, TWO_PI)
            c, s = math.cos(ang), math.sin(ang)
            ca.append(a * c + b * s)
            cb.append(-a * s + b * c)
        return TrigSeries(self.M, self.c0, self.ns, tuple(ca), tuple(cb))

    def lifted(self, factor: int) -> TrigSeries:
        """Same function re-indexed on the longer period 2*pi*M*factor."""
        if factor == 1:
            return self
        return TrigSeries(
            self.M * factor,
            self.c0,
            tuple(n * factor for n in self.ns),
            self.ca,
            self.cb,
        )

    def segment_integrals(self, edges: np.ndarray) -> np.ndarray:
        """Exact integrals of the series between consecutive edge values."""
        t = np.asarray(edges, dtype=float)
        anti = self.c0 * t
        for n, a, b in zip(self.ns, self.ca, self.cb):
            w = n / self.M
            anti = anti + (a / w) * np.sin(w * t) - (b / w) * np.cos(w * t)
        return np.diff(anti)


def _rotate_half_turns(a: float, b: float, nk: int, M: int) -> tuple[float, float]:
    """Rotate the (cos, sin) pair by the phase nk*pi/M, exactly on quarter turns."""
    quarters2 = 2 * nk  # phase in units of pi/2 is quarters2 / M
    if quarters2 % M == 0:
        q = (quarters2 // M) % 4
        if q == 0:
            return a, b
        if q == 1:
            return b, -a
        if q == 2:
            return -a, -b
        return -b, a
    ang = math.pi * ((nk % (2 * M)) / M)
    c, s = math.cos(ang), math.sin(ang)
    return a * c + b * s, -a * s + b * c


def _pruned(M, c0, ns, ca, cb) -> TrigSeries:
    keep = [i for i in range(len(ns)) if ca[i] != 0.0 or cb[i] != 0.0]
    return TrigSeries(
        M,
        c0,
        tuple(ns[i] for i in keep),
        tuple(ca[i] for i in keep),
        tuple(cb[i] for i in keep),
    )


def series_sum(terms: list[tuple[float, TrigSeries]], M: int | None = None) -> TrigSeries:
    """Weighted sum of series sharing one period index, merged and pruned."""
    if M is None:
        M = terms[0][1].M
    if any(s.M != M for _, s in terms):
        raise ValueError("series must share the period index; lift them first")
    c0 = 0.0
    acc: dict[int, list[float]] = {}
    for w, s in terms:
        c0 += w * s.c0
        for n, a, b in zip(s.ns, s.ca, s.cb):
            slot = acc.setdefault(n, [0.0, 0.0])
            slot[0] += w * a
            slot[1] += w * b
    ns = tuple(sorted(acc))
    return _pruned(M, c0, ns, tuple(acc[n][0] for n in ns), tuple(acc[n][1] for n in ns))


def support_points(s: TrigSeries, theta) -> np.ndarray:
    """Curve points (h cos t - h' sin t, h sin t + h' cos t), shape (len(theta), 2).

    The coorienting unit normal at parameter t is -(cos t, sin t); an offset
    that moves points along that normal lowers the support value.
    """
    th = np.atleast_1d(np.asarray(theta, dtype=float))
    h = s.eval(th, 0)
    dh = s.eval(th, 1)
    c, z = np.cos(th), np.sin(th)
    return np.stack([h * c - dh * z, h * z + dh * c], axis=-1)


# ----------------------------------------------------------------------
# root and extremum isolation


@dataclass
class ZeroScan:
    """Transverse zeros of a series over one period, with genericity flags."""

    roots: np.ndarray
    near_tangential: tuple[float, ...]
    tangential: tuple[float, ...]
    identically_zero: bool

    @property
    def warnings(self) -> list[str]:
        out = []
        if self.identically_zero:
            out.append("identically-zero")
        for t in self.tangential:
            out.append(f"tangential-zero@{t:.6f}")
        for t in self.near_tangential:
            out.append(f"near-tangential-zero@{t:.6f}")
        return out


def _grid_size(s: TrigSeries) -> int:
    return max(_GRID_FLOOR, _GRID_PER_HARMONIC * max(s.n_max, 1) * s.M)


def isolate_zeros(s: TrigSeries, scale: float | None = None) -> ZeroScan:
    """Locate the zeros of a trig series on [0, period).

    Dense uniform sampling cannot skip a transverse zero at the grid density
    used here (the series has at most 2*n_max zeros per period), so bisection
    on bracketed sign changes finds them all.  Zeros touched without a sign
    change are reported as tangential; transverse zeros with a tiny slope are
    reported as near-tangential.  Both mark the input as non-generic.
    """
    period = s.period
    if scale is None:
        scale = s.scale
    n = _grid_size(s)
    th = np.linspace(0.0, period, n, endpoint=False)
    f = s.eval(th)
    max_abs = float(np.max(np.abs(f))) if n else 0.0
    if max_abs <= _ZERO_SERIES_RTOL * scale:
        return ZeroScan(np.empty(0), (), (), True)

    f_next = np.roll(f, -1)
    exact = th[f == 0.0]
    bracket = np.nonzero(f * f_next < 0.0)[0]
    lo = th[bracket]
    hi = lo + period / n
    flo = f[bracket]
    steps = max(1, math.ceil(math.log2(max(period / n, 1e-30) / _ROOT_WIDTH)) + 2)
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        fm = s.eval(mid)
        go_right = (fm == 0.0) | (np.sign(fm) != np.sign(flo))
        hi = np.where(go_right, mid, hi)
        lo = np.where(go_right, lo, mid)
        flo = np.where(go_right, flo, fm)
    roots = np.sort(np.concatenate([exact, 0.5 * (lo + hi)])) % period
    roots = np.sort(roots)
    if roots.size > 1:
        keep = np.concatenate([[True], np.diff(roots) > 10 * _ROOT_WIDTH])
        # the first and last root may alias across the period seam
        if roots[-1] + 10 * _ROOT_WIDTH > period and roots[0] < 10 * _ROOT_WIDTH:
            keep[-1] = False
        roots = roots[keep]

    near = tuple(
        float(r) for r in roots if abs(s.eval(float(r), 1)) < _GENERIC_RTOL * scale
    )

    # local minima of |f| that hug zero without crossing it
    tangential = []
    small = np.abs(f) < _GENERIC_RTOL * scale
    if np.any(small):
        prev = np.roll(f, 1)
        sgn = np.sign(f)
        no_cross = (np.sign(prev) == sgn) & (np.sign(f_next) == sgn) & (sgn != 0)
        local_min = (np.abs(f) <= np.abs(prev)) & (np.abs(f) <= np.abs(f_next))
        cand = np.nonzero(small & no_cross & local_min)[0]
        for i in cand:
            t = float(th[i])
            if not any(abs(t - float(r)) < 4 * period / n for r in roots):
                tangential.append(t)
    return ZeroScan(roots, near, tuple(tangential), False)


def series_minimum(s: TrigSeries) -> tuple[float, float]:
    """Global minimum of a trig series over one period: (value, location)."""
    if not s.ns:
        return s.c0, 0.0
    n = _grid_size(s)
    th = np.linspace(0.0, s.period, n, endpoint=False)
    f = s.eval(th)
    i = int(np.argmin(f))
    lo = th[i] - s.period / n
    hi = th[i] + s.period / n
    # slope brackets the interior minimum; a few dozen bisections polish it
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        if s.eval(mid, 1) > 0.0:
            hi = mid
        else:
            lo = mid
    t_min = 0.5 * (lo + hi)
    candidates = [(float(s.eval(t_min)), float(t_min % s.period)), (float(f[i]), float(th[i]))]
    value, loc = min(candidates)
    return value, loc
