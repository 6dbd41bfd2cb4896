"""Seeded point generators for verification sweeps."""

from __future__ import annotations

import math

import numpy as np


def interior_points(
    seed: int,
    count: int,
    dim: int = 3,
    low: float = -2.0,
    high: float = 2.0,
    margin: float = 0.1,
) -> list[tuple[float, ...]]:
    """Uniform points in the box ``[low, high]^dim`` away from coordinate planes.

    Every coordinate satisfies ``|x_i| >= margin``, which keeps points at
    least ``margin`` from the origin, from the x3 axis, and strictly inside
    the nested stratum ``|x1| < x_p < x``.  Rejected draws are resampled.
    """
    rng = np.random.default_rng(seed)
    out: list[tuple[float, ...]] = []
    while len(out) < count:
        q = rng.uniform(low, high, size=dim)
        if np.all(np.abs(q) >= margin):
            out.append(tuple(float(v) for v in q))
    return out


def spherical_points(
    seed: int,
    count: int,
    r_range: tuple[float, float] = (0.5, 2.0),
    polar_range: tuple[float, float] = (0.15 * math.pi, 0.85 * math.pi),
) -> list[tuple[float, float, float]]:
    """Cartesian points drawn uniformly in spherical coordinates (x, theta, phi)."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        r = rng.uniform(*r_range)
        theta = rng.uniform(0.0, 2 * math.pi)
        phi = rng.uniform(*polar_range)
        out.append(
            (
                float(r * math.sin(phi) * math.cos(theta)),
                float(r * math.sin(phi) * math.sin(theta)),
                float(r * math.cos(phi)),
            )
        )
    return out
