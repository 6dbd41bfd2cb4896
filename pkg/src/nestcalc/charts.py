"""Coordinate charts: rectangular, polar, nested, cylindrical and spherical.

Chart coordinate order:

============  ======================
rect2         (x1, x2)
rect3         (x1, x2, x3)
polar         (x, theta)
nested12      (x1, x)
nested123     (x1, x_p, x)
cylindrical   (x_p, theta, x3)
spherical     (x, theta, phi)
============  ======================

``x`` is the Euclidean magnitude of the position vector, ``x_p`` the
magnitude of its projection on the e1e2 plane, ``theta`` the azimuth in
``[0, 2pi)`` and ``phi`` the angle from e3 in ``[0, pi]``.

All coordinate and frame functions here are written with :mod:`nestcalc.jets`
arithmetic, so they accept floats or jets.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import jets
from .errors import DomainError
from .ga3 import E1, E2, E3, E12, Multivector, vector
from .jets import Jet2

TWO_PI = 2.0 * math.pi
# slack for rounding when checking |x1| <= x_p <= x
_ORDER_SLACK = 1e-14


class ChartId(str, enum.Enum):
    RECT2 = "rect2"
    RECT3 = "rect3"
    POLAR = "polar"
    NESTED12 = "nested12"
    NESTED123 = "nested123"
    CYLINDRICAL = "cylindrical"
    SPHERICAL = "spherical"

    @property
    def dim(self) -> int:
        return 2 if self in _PLANAR else 3

    @property
    def planar(self) -> bool:
        return self in _PLANAR

    @property
    def coordinate_names(self) -> tuple[str, ...]:
        return _NAMES[self]


_PLANAR = frozenset({ChartId.RECT2, ChartId.POLAR, ChartId.NESTED12})
_NAMES = {
    ChartId.RECT2: ("x1", "x2"),
    ChartId.RECT3: ("x1", "x2", "x3"),
    ChartId.POLAR: ("x", "theta"),
    ChartId.NESTED12: ("x1", "x"),
    ChartId.NESTED123: ("x1", "x_p", "x"),
    ChartId.CYLINDRICAL: ("x_p", "theta", "x3"),
    ChartId.SPHERICAL: ("x", "theta", "phi"),
}


def as_chart(chart) -> ChartId:
    try:
        return ChartId(chart)
    except ValueError:
        raise ValueError(f"unknown chart {chart!r}; expected one of {[c.value for c in ChartId]}") from None


def cartesian_point(chart: ChartId, p: Sequence[float]) -> tuple[float, ...]:
    """Validate ``p`` for ``chart`` and return it with the chart's arity.

    Planar charts accept a 2-sequence or a 3-sequence with ``x3 == 0``.
    """
    q = tuple(float(v) for v in p)
    if len(q) not in (2, 3):
        raise ValueError(f"a point needs 2 or 3 coordinates, got {len(q)}")
    if not all(math.isfinite(v) for v in q):
        raise ValueError(f"non-finite point {q!r}")
    if chart.planar:
        if len(q) == 3:
            if q[2] != 0:
                raise DomainError(f"chart {chart.value} is planar but x3 = {q[2]!r}")
            q = q[:2]
        return q
    if len(q) == 2:
        return q + (0.0,)
    return q


@dataclass(frozen=True)
class ChartPoint:
    """Coordinates of a point in a named chart.

    ``degenerate`` marks points on the chart's singular locus, where the
    azimuth (or polar angle) is fixed to 0 by convention.
    """

    chart: ChartId
    coords: tuple
    degenerate: bool = False

    def __post_init__(self):
        chart = as_chart(self.chart)
        object.__setattr__(self, "chart", chart)
        coords = tuple(float(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != chart.dim:
            raise ValueError(f"chart {chart.value} takes {chart.dim} coordinates, got {len(coords)}")
        _check_invariants(chart, coords)

    def __getitem__(self, i):
        return self.coords[i]


def _check_invariants(chart: ChartId, c: tuple) -> None:
    def nonneg(name, v):
        if v < 0:
            raise DomainError(f"{name} must be >= 0, got {v!r}")

    def angle(name, v, hi, closed):
        ok = 0 <= v <= hi if closed else 0 <= v < hi
        if not ok:
            raise DomainError(f"{name} = {v!r} outside [0, {hi!r}{']' if closed else ')'}")

    def ordered(lo, hi, what):
        if lo > hi * (1 + _ORDER_SLACK):
            raise DomainError(f"nested coordinates need {what}, got {lo!r} > {hi!r}")

    if chart is ChartId.POLAR:
        nonneg("x", c[0])
        angle("theta", c[1], TWO_PI, False)
    elif chart is ChartId.NESTED12:
        nonneg("x", c[1])
        ordered(abs(c[0]), c[1], "|x1| <= x")
    elif chart is ChartId.NESTED123:
        nonneg("x_p", c[1])
        nonneg("x", c[2])
        ordered(abs(c[0]), c[1], "|x1| <= x_p")
        ordered(c[1], c[2], "x_p <= x")
    elif chart is ChartId.CYLINDRICAL:
        nonneg("x_p", c[0])
        angle("theta", c[1], TWO_PI, False)
    elif chart is ChartId.SPHERICAL:
        nonneg("x", c[0])
        angle("theta", c[1], TWO_PI, False)
        angle("phi", c[2], math.pi, True)


# coordinate functions -------------------------------------------------------

def azimuth(x1, x2):
    """theta in [0, 2pi) measured from e1 towards e2."""
    t = jets.atan2(x2, x1)
    if jets.value_of(t) < 0:
        t = t + TWO_PI
    if jets.value_of(t) >= TWO_PI:
        t = t - TWO_PI
    return t


def polar_angle(x1, x2, x3):
    """phi in [0, pi] measured from e3."""
    r = jets.hypot(x1, x2, x3)
    ratio = x3 / r
    if not isinstance(ratio, Jet2):
        ratio = min(1.0, max(-1.0, ratio))
    return jets.arccos(ratio)


def chart_coordinates(chart: ChartId, *x):
    """Chart coordinates as functions of Cartesian ones (floats or jets)."""
    chart = as_chart(chart)
    if chart in (ChartId.RECT2, ChartId.RECT3):
        return tuple(x)
    if chart is ChartId.POLAR:
        x1, x2 = x
        return (jets.hypot(x1, x2), azimuth(x1, x2))
    if chart is ChartId.NESTED12:
        x1, x2 = x
        return (x1, jets.hypot(x1, x2))
    x1, x2, x3 = x
    if chart is ChartId.NESTED123:
        return (x1, jets.hypot(x1, x2), jets.hypot(x1, x2, x3))
    if chart is ChartId.CYLINDRICAL:
        return (jets.hypot(x1, x2), azimuth(x1, x2), x3)
    return (jets.hypot(x1, x2, x3), azimuth(x1, x2), polar_angle(x1, x2, x3))


def _unit_plane(theta) -> Multivector:
    # xhat_p[theta] = e1 cos(theta) + e2 sin(theta)
    return vector(jets.cos(theta), jets.sin(theta), 0.0)


def _branch_sqrt(d):
    # non-negative root; float rounding may leave d a hair below zero
    if not isinstance(d, Jet2) and -1e-12 < d < 0:
        d = 0.0
    return jets.sqrt(d)


def chart_embedding(chart: ChartId, *u):
    """Cartesian coordinates as functions of chart coordinates (floats or jets).

    The nested charts keep only magnitudes, so ``x2`` (and ``x3``) are taken
    on the non-negative branch.
    """
    chart = as_chart(chart)
    if chart in (ChartId.RECT2, ChartId.RECT3):
        return tuple(u)
    if chart is ChartId.POLAR:
        x, theta = u
        return (x * _unit_plane(theta)).vector_part[:2]
    if chart is ChartId.NESTED12:
        x1, x = u
        return (x1, _branch_sqrt(x * x - x1 * x1))
    if chart is ChartId.NESTED123:
        x1, xp, x = u
        return (x1, _branch_sqrt(xp * xp - x1 * x1), _branch_sqrt(x * x - xp * xp))
    if chart is ChartId.CYLINDRICAL:
        xp, theta, x3 = u
        return (xp * _unit_plane(theta) + x3 * E3).vector_part
    x, theta, phi = u
    xhat = E3 * jets.cos(phi) + _unit_plane(theta) * jets.sin(phi)
    return (x * xhat).vector_part


def _degenerate(chart: ChartId, q: tuple) -> bool:
    # every curvilinear chart here degenerates exactly where x_p = 0
    # (for the planar ones that is the origin)
    if chart in (ChartId.RECT2, ChartId.RECT3):
        return False
    return q[0] == 0 and q[1] == 0


def to_chart(chart, p: Sequence[float]) -> ChartPoint:
    """Chart coordinates of the Cartesian point ``p``.

    On a singular locus the undefined angle is set to 0 and the returned
    point is flagged ``degenerate``.
    """
    chart = as_chart(chart)
    q = cartesian_point(chart, p)
    degenerate = _degenerate(chart, q)
    if not degenerate:
        return ChartPoint(chart, chart_coordinates(chart, *q))
    x1, x2 = q[0], q[1]
    xp = math.hypot(x1, x2)
    if chart is ChartId.POLAR:
        coords = (xp, 0.0)
    elif chart is ChartId.NESTED12:
        coords = (x1, xp)
    elif chart is ChartId.NESTED123:
        coords = (x1, xp, abs(q[2]))
    elif chart is ChartId.CYLINDRICAL:
        coords = (xp, 0.0, q[2])
    else:
        r = abs(q[2])
        coords = (r, 0.0, 0.0 if q[2] >= 0 else math.pi)
    return ChartPoint(chart, coords, degenerate=True)


def from_chart(cp: ChartPoint) -> tuple[float, ...]:
    """Cartesian point with the given chart coordinates."""
    return tuple(float(v) for v in chart_embedding(cp.chart, *cp.coords))


# frames ---------------------------------------------------------------------

def _singular(chart: ChartId, locus: str):
    raise DomainError(f"chart {chart.value}: point on the singular locus ({locus})")


def frame(chart: ChartId, *x) -> list[Multivector]:
    """Gradients of the chart coordinate functions, as vectors (floats or jets).

    =============  ===============================================
    polar          xhat, (1/x) d_theta xhat
    nested12       e1, xhat
    nested123      e1, xhat_p, xhat
    cylindrical    xhat_p, (1/x_p) d_theta xhat_p, e3
    spherical      xhat, (1/x_p) d_theta xhat_p, (1/x) d_phi xhat
    =============  ===============================================

    with ``d_theta xhat_p = xhat_p e12`` (a quarter turn in the e1e2 plane)
    and ``d_phi xhat = -e3 sin(phi) + xhat_p cos(phi)``.
    """
    chart = as_chart(chart)
    if chart is ChartId.RECT2:
        return [E1, E2]
    if chart is ChartId.RECT3:
        return [E1, E2, E3]
    x1, x2 = x[0], x[1]
    xp = jets.hypot(x1, x2)
    if jets.value_of(xp) == 0:
        _singular(chart, "x_p = 0" if not chart.planar else "x = 0")
    xhat_p = vector(x1 / xp, x2 / xp, 0.0)
    if chart is ChartId.POLAR:
        return [xhat_p, (xhat_p * E12) / xp]
    if chart is ChartId.NESTED12:
        return [E1, xhat_p]
    x3 = x[2]
    r = jets.hypot(x1, x2, x3)
    xhat = vector(x1 / r, x2 / r, x3 / r)
    if chart is ChartId.NESTED123:
        return [E1, xhat_p, xhat]
    grad_theta = (xhat_p * E12) / xp
    if chart is ChartId.CYLINDRICAL:
        return [xhat_p, grad_theta, E3]
    sin_phi, cos_phi = xp / r, x3 / r
    d_phi_xhat = E3 * (-sin_phi) + xhat_p * cos_phi
    return [xhat, grad_theta, d_phi_xhat / r]


def frame_vectors(chart, p: Sequence[float]) -> list[Multivector]:
    """Frame vectors (coordinate gradients) of ``chart`` at the Cartesian point ``p``."""
    chart = as_chart(chart)
    return frame(chart, *cartesian_point(chart, p))


# hat partials -----------------------------------------------------------------

def hat_partials(g: Callable, cp: ChartPoint) -> Jet2:
    """Value and first/second partials of ``g`` in the chart variables.

    The chart variables are treated as mutually independent, which is what
    distinguishes these partials from the Cartesian ones.
    """
    if cp.degenerate:
        raise DomainError(f"chart {cp.chart.value}: hat partials undefined at a degenerate point")
    return jets.jet_eval(g, cp.coords)


def ordinary_from_hat(chart, hat: Jet2, p: Sequence[float]) -> np.ndarray:
    """Cartesian gradient assembled from chart (hat) partials at ``p``.

    For the nested charts this applies the transformation rules

        d1 = h1 + (x1/x_p) h_p + (x1/x) h_x
        d2 =      (x2/x_p) h_p + (x2/x) h_x
        d3 =                     (x3/x) h_x

    (dropping the x_p terms for nested12); the remaining charts contract the
    hat gradient with their frame vectors.
    """
    chart = as_chart(chart)
    q = cartesian_point(chart, p)
    h = hat.grad
    if len(h) != chart.dim:
        raise ValueError(f"hat jet has {len(h)} variables, chart {chart.value} has {chart.dim}")
    if chart is ChartId.NESTED12:
        x1, x2 = q
        x = math.hypot(x1, x2)
        if x == 0:
            _singular(chart, "x = 0")
        return np.array([h[0] + x1 / x * h[1], x2 / x * h[1]])
    if chart is ChartId.NESTED123:
        x1, x2, x3 = q
        xp = math.hypot(x1, x2)
        x = math.hypot(x1, x2, x3)
        if xp == 0:
            _singular(chart, "x_p = 0")
        return np.array(
            [
                h[0] + x1 / xp * h[1] + x1 / x * h[2],
                x2 / xp * h[1] + x2 / x * h[2],
                x3 / x * h[2],
            ]
        )
    total = sum((f * hc for f, hc in zip(frame(chart, *q), h)), Multivector.scalar(0.0))
    return np.array(total.vector_part[: chart.dim], dtype=float)


def compose(chart, g: Callable) -> Callable:
    """Cartesian field ``p -> g(chart coordinates of p)``."""
    chart = as_chart(chart)

    def composed(*x):
        return g(*chart_coordinates(chart, *x))

    composed.__name__ = f"{getattr(g, '__name__', 'field')}_on_{chart.value}"
    return composed
