"""Harmonic families in nested coordinates.

* monomials ``x1^k x_p^m x^n`` over the nested chart (x1, x_p, x), harmonic
  exactly when the exponent system

      2km + m^2 = 0,   k^2 - k = 0,   2kn + 2mn + n(1 + n) = 0

  holds;
* the planar family ``x1 X(x)`` with ``3 X' + x X'' = 0``, i.e.
  ``X = c1/x^2 + c2``;
* the separability defect of a product ``X1(x1) X_p(x_p) X_x(x)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from . import jets
from .charts import ChartId, ChartPoint, compose
from .errors import DomainError


def exponent_residual(k: int, m: int, n: int) -> tuple[int, int, int]:
    """Left-hand sides of the exponent system at ``(k, m, n)``."""
    return (2 * k * m + m * m, k * k - k, 2 * k * n + 2 * m * n + n * (1 + n))


@dataclass(frozen=True, order=True)
class HarmonicTriple:
    """Exponents of a harmonic monomial ``x1^k x_p^m x^n``."""

    k: int
    m: int
    n: int

    def __post_init__(self):
        if any(exponent_residual(self.k, self.m, self.n)):
            raise ValueError(f"({self.k}, {self.m}, {self.n}) does not solve the exponent system")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.k, self.m, self.n)


def enumerate_harmonic_monomials(
    k_range: Iterable[int], m_range: Iterable[int], n_range: Iterable[int]
) -> list[HarmonicTriple]:
    """All non-trivial zero-residual triples in the product of the ranges.

    Ranges are any integer iterables (e.g. ``range(-5, 6)``).  The triple
    (0, 0, 0) is excluded.  Results come in lexicographic (k, m, n) order.
    """
    found = []
    for k, m, n in itertools.product(list(k_range), list(m_range), list(n_range)):
        if (k, m, n) == (0, 0, 0):
            continue
        if not any(exponent_residual(k, m, n)):
            found.append(HarmonicTriple(k, m, n))
    return sorted(found)


def monomial_field(t: HarmonicTriple | tuple[int, int, int]) -> Callable:
    """``(x1, x_p, x) -> x1^k x_p^m x^n`` as a field on the nested123 chart."""
    k, m, n = t.as_tuple() if isinstance(t, HarmonicTriple) else t

    def field(x1, xp, x):
        return jets.power(x1, k) * jets.power(xp, m) * jets.power(x, n)

    field.__name__ = f"monomial_{k}_{m}_{n}"
    return field


def monomial_cartesian(t: HarmonicTriple | tuple[int, int, int]) -> Callable:
    return compose(ChartId.NESTED123, monomial_field(t))


def monomial_laplacian_closed_form(k: int, m: int, n: int, x1: float, xp: float, x: float) -> float:
    """Laplacian of ``x1^k x_p^m x^n`` written through the exponent system."""
    a, b, c = exponent_residual(k, m, n)
    return (
        a * x ** n * x1 ** k * xp ** (m - 2)
        + b * x ** n * x1 ** (k - 2) * xp ** m
        + c * x ** (n - 2) * x1 ** k * xp ** m
    )


# planar family x1 * X(x) ---------------------------------------------------------

def radial_solution(c1: float, c2: float) -> Callable:
    """``X(x) = c1/x^2 + c2``."""
    return lambda x: c1 / (x * x) + c2


def planar_family_field(c1: float, c2: float) -> Callable:
    """``(x1, x) -> x1 (c1/x^2 + c2)`` on the nested12 chart."""
    X = radial_solution(c1, c2)
    return lambda x1, x: x1 * X(x)


def radial_ode_residual(X: Callable, x: float) -> float:
    """``3 X'(x) + x X''(x)`` with derivatives from a one-variable jet."""
    if x <= 0:
        raise DomainError("the radial equation is posed for x > 0")
    j = jets.jet_eval(X, (x,))
    return 3 * j.grad[0] + x * j.hess[0]


def radial_ode_check(c1: float, c2: float, x: float) -> float:
    """Residual of ``3 X' + x X'' = 0`` for ``X = c1/x^2 + c2``; zero up to rounding."""
    return radial_ode_residual(radial_solution(c1, c2), x)


# separability ------------------------------------------------------------------------

def euler_factor(f: Callable, t: float) -> float:
    """``t f'(t) / f(t)``; equals the degree for a monomial ``f``."""
    j = jets.jet_eval(f, (t,))
    if j.value == 0:
        raise DomainError("factor vanishes")
    return t * j.grad[0] / j.value


def separability_defect(X1: Callable, Xp: Callable, Xx: Callable, cp: ChartPoint) -> float:
    """Obstruction to separating ``X1(x1) X_p(x_p) X_x(x)`` in nested coordinates::

        (x_p d_p log X_p) ((1/x) d_x log X_x) + d1 log(X_p X_x) / X1

    ``d1`` is the Cartesian partial in x1, evaluated at the Cartesian point on
    the non-negative branch of ``cp``.  All three factors must be nonzero at
    ``cp``; their signs are not folded away.
    """
    if cp.chart is not ChartId.NESTED123:
        raise ValueError("separability_defect expects a nested123 point")
    x1, xp, x = cp.coords
    if not 0 < xp < x:
        raise DomainError("separability_defect needs an interior point 0 < x_p < x")
    v1 = X1(x1)
    jp = jets.jet_eval(Xp, (xp,))
    jx = jets.jet_eval(Xx, (x,))
    if v1 == 0 or jp.value == 0 or jx.value == 0:
        raise DomainError("a factor vanishes at the point")
    dlog_p = jp.grad[0] / jp.value
    dlog_x = jx.grad[0] / jx.value
    # d1 x_p = x1/x_p and d1 x = x1/x
    d1_log = x1 / xp * dlog_p + x1 / x * dlog_x
    return (xp * dlog_p) * (dlog_x / x) + d1_log / v1
