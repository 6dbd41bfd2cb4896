"""Gradient and Laplacian operators written in chart variables.

Fields passed to these operators are functions of the chart coordinates
(in the order documented in :mod:`nestcalc.charts`).  Every operator reads
the hat partials of the field from a jet evaluation in those coordinates
and applies the chart's formula.  The rectangular reference for all of them
is :func:`nestcalc.jets.laplacian_oracle` applied to
:func:`nestcalc.charts.compose`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from . import jets
from .charts import (
    ChartId,
    ChartPoint,
    as_chart,
    cartesian_point,
    chart_coordinates,
    chart_embedding,
    frame,
    hat_partials,
    to_chart,
)
from .errors import DomainError
from .ga3 import E1, E2, E3, Multivector
from .jets import Jet2


def _expect(cp: ChartPoint, chart: ChartId) -> None:
    if cp.chart is not chart:
        raise ValueError(f"expected a {chart.value} point, got {cp.chart.value}")
    if cp.degenerate:
        raise DomainError(f"{chart.value}: point lies on the singular locus")


def _nested123_interior(x1: float, xp: float, x: float) -> None:
    if not 0 < abs(x1) < xp < x:
        raise DomainError(f"nested123 needs 0 < |x1| < x_p < x, got ({x1!r}, {xp!r}, {x!r})")


# mixed-type partials ---------------------------------------------------------

def ordinary_of_hat(chart, g: Callable, p: Sequence[float], hat_index: int = 0, axis: int = 0) -> float:
    """Cartesian partial along ``axis`` of the hat partial ``hat_index`` of ``g``.

    The hat partial is taken as a new field of the chart variables, composed
    with the chart map, and then differentiated in the Cartesian variable.
    Both steps run through one two-variable jet: ``t`` shifts the Cartesian
    point, ``s`` shifts the chart coordinate.
    """
    chart = as_chart(chart)
    q = cartesian_point(chart, p)

    def shifted(t, s):
        x = list(q)
        x[axis] = x[axis] + t
        u = list(chart_coordinates(chart, *x))
        u[hat_index] = u[hat_index] + s
        return g(*u)

    return jets.jet_eval(shifted, (0.0, 0.0)).second(0, 1)


def hat_of_ordinary(chart, g: Callable, p: Sequence[float], hat_index: int = 0, axis: int = 0) -> float:
    """Hat partial ``hat_index`` of the Cartesian partial along ``axis`` of ``g``.

    The Cartesian partial is re-expressed in chart variables through the
    chart embedding, which for nested charts picks the non-negative branch.
    """
    chart = as_chart(chart)
    u0 = chart_coordinates(chart, *cartesian_point(chart, p))

    def shifted(s, t):
        u = list(u0)
        u[hat_index] = u[hat_index] + s
        x = list(chart_embedding(chart, *u))
        x[axis] = x[axis] + t
        return g(*chart_coordinates(chart, *x))

    return jets.jet_eval(shifted, (0.0, 0.0)).second(0, 1)


# chart Laplacians ------------------------------------------------------------

def laplacian_polar(g: Callable, cp: ChartPoint) -> float:
    """``d_x^2 + (1/x) d_x + (1/x^2) d_theta^2`` for ``g(x, theta)``."""
    _expect(cp, ChartId.POLAR)
    x = cp[0]
    if x <= 0:
        raise DomainError("polar Laplacian needs x > 0")
    h = hat_partials(g, cp)
    return h.second(0, 0) + h.grad[0] / x + h.second(1, 1) / (x * x)


def laplacian_nested12(g: Callable, cp: ChartPoint) -> float:
    """``h1^2 + 2 (x1/x) h_x h1 + (1/x) h_x + h_x^2`` for ``g(x1, x)``."""
    _expect(cp, ChartId.NESTED12)
    x1, x = cp.coords
    if not abs(x1) < x:
        raise DomainError(f"nested12 needs |x1| < x, got ({x1!r}, {x!r})")
    h = hat_partials(g, cp)
    return h.second(0, 0) + 2 * x1 / x * h.second(0, 1) + h.grad[1] / x + h.second(1, 1)


def laplacian_mixed12(g: Callable, p: Sequence[float]) -> float:
    """``-h1^2 + 2 d1 h1 + (1/x) h_x + h_x^2`` for ``g(x1, x)`` at the planar point ``p``.

    ``d1 h1`` is :func:`ordinary_of_hat`; with that reading the value equals
    :func:`laplacian_nested12`.
    """
    cp = to_chart(ChartId.NESTED12, p)
    _expect(cp, ChartId.NESTED12)
    x1, x = cp.coords
    if not abs(x1) < x:
        raise DomainError(f"nested12 needs |x1| < x, got ({x1!r}, {x!r})")
    h = hat_partials(g, cp)
    d1h1 = ordinary_of_hat(ChartId.NESTED12, g, p, 0, 0)
    return -h.second(0, 0) + 2 * d1h1 + h.grad[1] / x + h.second(1, 1)


def laplacian_nested123(g: Callable, cp: ChartPoint) -> float:
    """Nested Laplacian for ``g(x1, x_p, x)``::

        h1^2 + hp^2 + hx^2
        + 2 [ (x1/x_p) h1 hp + (x1/x) h1 hx + (x_p/x) hp hx ]
        + (1/x_p) hp + (2/x) hx
    """
    _expect(cp, ChartId.NESTED123)
    x1, xp, x = cp.coords
    _nested123_interior(x1, xp, x)
    h = hat_partials(g, cp)
    cross = x1 / xp * h.second(0, 1) + x1 / x * h.second(0, 2) + xp / x * h.second(1, 2)
    return (
        h.second(0, 0) + h.second(1, 1) + h.second(2, 2)
        + 2 * cross
        + h.grad[1] / xp + 2 * h.grad[2] / x
    )


def laplacian_mixed123(g: Callable, p: Sequence[float]) -> float:
    """Mixed-coordinate Laplacian for ``g(x1, x_p, x)`` at the Cartesian point ``p``::

        -h1^2 + hp^2 + hx^2 + 2 [ d1 h1 + (x_p/x) hp hx ] + (1/x_p) hp + (2/x) hx

    ``d1 h1`` is the ordinary partial in x1 applied after the hat partial
    (:func:`ordinary_of_hat`).
    """
    cp = to_chart(ChartId.NESTED123, p)
    _expect(cp, ChartId.NESTED123)
    x1, xp, x = cp.coords
    _nested123_interior(x1, xp, x)
    h = hat_partials(g, cp)
    d1h1 = ordinary_of_hat(ChartId.NESTED123, g, p, 0, 0)
    return (
        -h.second(0, 0) + h.second(1, 1) + h.second(2, 2)
        + 2 * (d1h1 + xp / x * h.second(1, 2))
        + h.grad[1] / xp + 2 * h.grad[2] / x
    )


def laplacian_cylindrical(g: Callable, cp: ChartPoint) -> float:
    """``hp^2 + (1/x_p) hp + (1/x_p^2) h_theta^2 + h3^2`` for ``g(x_p, theta, x3)``."""
    _expect(cp, ChartId.CYLINDRICAL)
    xp = cp[0]
    if xp <= 0:
        raise DomainError("cylindrical Laplacian needs x_p > 0")
    h = hat_partials(g, cp)
    return h.second(0, 0) + h.grad[0] / xp + h.second(1, 1) / (xp * xp) + h.second(2, 2)


def laplacian_spherical(g: Callable, cp: ChartPoint) -> float:
    """Spherical Laplacian for ``g(x, theta, phi)``::

        (hx + 2/x) hx + (1/x_p^2) h_theta^2 + (x3/(x^2 x_p) + (1/x^2) h_phi) h_phi

    with ``x_p = x sin(phi)`` and ``x3 = x cos(phi)``.
    """
    _expect(cp, ChartId.SPHERICAL)
    x, _, phi = cp.coords
    xp = x * math.sin(phi)
    x3 = x * math.cos(phi)
    if x <= 0 or not 0 < phi < math.pi:
        raise DomainError("spherical Laplacian needs x > 0 and 0 < phi < pi")
    h = hat_partials(g, cp)
    x2 = x * x
    return (
        h.second(0, 0) + 2 * h.grad[0] / x
        + h.second(1, 1) / (xp * xp)
        + x3 / (x2 * xp) * h.grad[2] + h.second(2, 2) / x2
    )


@dataclass(frozen=True)
class ChartLaplacian:
    """A chart Laplacian formula exposed under an operator name."""

    name: str
    chart: ChartId
    formula: str
    apply: Callable
    cartesian_input: bool = False

    def at(self, g: Callable, p: Sequence[float]) -> float:
        """Apply the formula at the Cartesian point ``p``."""
        if self.cartesian_input:
            return self.apply(g, p)
        return self.apply(g, to_chart(self.chart, p))


CHART_LAPLACIANS = {
    op.name: op
    for op in (
        ChartLaplacian("polar", ChartId.POLAR, "d_x^2 + (1/x) d_x + (1/x^2) d_theta^2", laplacian_polar),
        ChartLaplacian("nested12", ChartId.NESTED12, "h1^2 + 2(x1/x) h_x h1 + (1/x) h_x + h_x^2", laplacian_nested12),
        ChartLaplacian(
            "nested123",
            ChartId.NESTED123,
            "h1^2+hp^2+hx^2 + 2[(x1/xp)h1hp + (x1/x)h1hx + (xp/x)hphx] + (1/xp)hp + (2/x)hx",
            laplacian_nested123,
        ),
        ChartLaplacian(
            "mixed123",
            ChartId.NESTED123,
            "-h1^2+hp^2+hx^2 + 2[d1h1 + (xp/x)hphx] + (1/xp)hp + (2/x)hx",
            laplacian_mixed123,
            cartesian_input=True,
        ),
        ChartLaplacian(
            "cylindrical", ChartId.CYLINDRICAL, "hp^2 + (1/xp) hp + (1/xp^2) h_theta^2 + h3^2", laplacian_cylindrical
        ),
        ChartLaplacian(
            "spherical",
            ChartId.SPHERICAL,
            "(hx + 2/x) hx + (1/xp^2) h_theta^2 + (x3/(x^2 xp) + (1/x^2) h_phi) h_phi",
            laplacian_spherical,
        ),
    )
}


# gradients --------------------------------------------------------------------

def gradient_in_chart(chart, g: Callable, p: Sequence[float]) -> Multivector:
    """Sum over chart coordinates c of (gradient of c) times (hat partial of g in c)."""
    chart = as_chart(chart)
    q = cartesian_point(chart, p)
    cp = to_chart(chart, q)
    if cp.degenerate:
        raise DomainError(f"{chart.value}: gradient undefined on the singular locus")
    h = hat_partials(g, cp)
    total = Multivector.scalar(0.0)
    for f, hc in zip(frame(chart, *q), h.grad):
        total = total + f * hc
    return total


def gradient_divergence(chart, g: Callable, p: Sequence[float]) -> float:
    """Divergence of :func:`gradient_in_chart`, differentiated with jets.

    Each term ``d_i [ (grad c)_i  h_c g ]`` is the mixed second derivative of
    ``(grad c)_i(p + t e_i) * g(u(p + t e_i) + s e_c)`` in ``(t, s)``, so the
    frame vectors and the hat partials are both differentiated, not just
    the field.
    """
    chart = as_chart(chart)
    q = cartesian_point(chart, p)
    total = 0.0
    for i in range(len(q)):
        for c in range(chart.dim):

            def term(t, s, i=i, c=c):
                x = list(q)
                x[i] = x[i] + t
                u = list(chart_coordinates(chart, *x))
                u[c] = u[c] + s
                return frame(chart, *x)[c].coeffs[1 + i] * g(*u)

            total += jets.jet_eval(term, (0.0, 0.0)).second(0, 1)
    return total


_BASIS = (E1, E2, E3)


def vector_derivative(F: Callable, p: Sequence[float]) -> Multivector:
    """Geometric derivative ``sum_i e_i d_i F`` of a multivector-valued field.

    ``F`` maps Cartesian coordinates to a :class:`Multivector`, written with
    jet-friendly arithmetic.  The result carries the divergence in its scalar
    part and the curl in its bivector part.
    """
    out = F(*jets.seed(p))
    total = Multivector.scalar(0.0)
    for i in range(len(p)):
        partial = Multivector(tuple(c.grad[i] if isinstance(c, Jet2) else 0.0 for c in out.coeffs))
        total = total + _BASIS[i] * partial
    return total
