"""Curated example rosettes and random generators for tests and demos."""

from __future__ import annotations

import math

import numpy as np

from .core import FourierSupport, HarmonicTerm

__all__ = [
    "R2_WAVY",
    "R3_WAVY",
    "R2_PLAIN",
    "R3_PLAIN",
    "R2_PAIR_A",
    "R2_PAIR_B",
    "random_rosette",
    "random_constant_width",
]

# Two rosettes with visible width-measure sets: 10 + 4 cos(t/2) + sin(2t)
# and 12 + cos(2t/3) + 4 cos(5t/3) - sin(2t).
R2_WAVY = FourierSupport(2, 10.0, (HarmonicTerm(1, a=4.0), HarmonicTerm(4, b=1.0)))
R3_WAVY = FourierSupport(
    3,
    12.0,
    (HarmonicTerm(2, a=1.0), HarmonicTerm(5, a=4.0), HarmonicTerm(6, b=-1.0)),
)

# Gentler pair with visible offset measure sets: 3 + cos(t/2) and
# 4 + cos(2t/3) - sin(2t)/2.
R2_PLAIN = FourierSupport(2, 3.0, (HarmonicTerm(1, a=1.0),))
R3_PLAIN = FourierSupport(3, 4.0, (HarmonicTerm(2, a=1.0), HarmonicTerm(6, b=-0.5)))

# A two-rosette pair whose equidistant branches are all regular:
# 10 + cos(5t/2) next to 2 + 36 cos(t) + sin(t/2) (the large n = m harmonic
# only translates the second curve away from the first).
R2_PAIR_A = FourierSupport(2, 10.0, (HarmonicTerm(5, a=1.0),))
R2_PAIR_B = FourierSupport(2, 2.0, (HarmonicTerm(1, b=1.0), HarmonicTerm(2, a=36.0)))


def _assemble(
    rng: np.random.Generator,
    m: int,
    indices: list[int],
    a0: float,
    margin: float,
) -> FourierSupport:
    """Draw amplitudes, then rescale so the positivity bound holds by margin."""
    raw = rng.uniform(0.2, 1.0, size=len(indices))
    phases = rng.uniform(0.0, 2.0 * math.pi, size=len(indices))
    weights = [abs(n * n - m * m) / (m * m) for n in indices]
    load = sum(w * r for w, r in zip(weights, raw))
    if load <= 0.0:
        # translation harmonics only would be degenerate; caller prevents this
        raise ValueError("no curvature-active harmonic drawn")
    budget = (1.0 - margin) * a0 * rng.uniform(0.4, 1.0)
    c = budget / load
    terms = tuple(
        HarmonicTerm(n, c * r * math.cos(ph), c * r * math.sin(ph))
        for n, r, ph in zip(indices, raw, phases)
    )
    return FourierSupport(m, a0, terms)


def random_rosette(
    rng: np.random.Generator,
    m: int | None = None,
    max_harmonic: int = 8,
    margin: float = 0.25,
    max_terms: int = 4,
) -> FourierSupport:
    """A random rosette whose sufficient positivity bound holds by margin.

    At least one harmonic with n != m is always present (pure translation
    harmonics would leave a circle, degenerate for most counting theorems).
    """
    if m is None:
        m = int(rng.integers(1, 5))
    a0 = float(rng.uniform(1.0, 3.0))
    pool = [n for n in range(1, max_harmonic + 1) if n != m]
    k = int(rng.integers(1, max_terms + 1))
    indices = sorted(rng.choice(pool, size=min(k, len(pool)), replace=False).tolist())
    if rng.random() < 0.3:
        indices = sorted(set(indices) | {m})
    return _assemble(rng, m, indices, a0, margin)


def random_constant_width(
    rng: np.random.Generator,
    m: int | None = None,
    max_harmonic: int = 7,
    margin: float = 0.25,
    max_terms: int = 3,
) -> FourierSupport:
    """A random constant-width rosette: odd harmonics only."""
    if m is None:
        m = int(rng.integers(1, 5))
    a0 = float(rng.uniform(1.0, 3.0))
    pool = [n for n in range(1, max_harmonic + 1, 2) if n != m]
    k = int(rng.integers(1, max_terms + 1))
    indices = sorted(rng.choice(pool, size=min(k, len(pool)), replace=False).tolist())
    return _assemble(rng, m, indices, a0, margin)
