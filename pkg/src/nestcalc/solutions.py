"""Separable solutions of Laplace's equation in cylindrical and spherical charts.

Cylindrical::

    X_p(x_p)   = k1 J_n(b x_p) + k2 Y_n(b x_p)
    X_th(th)   = k3 cos(n th) + k4 sin(n th)
    X_3(x3)    = k5 cosh(b (m - x3)) + k6 sinh(b (m - x3))

The axial constant equals the radial one, ``b``; any other value breaks
harmonicity.  Spherical, with degree ``l`` and azimuthal order ``mAz``::

    X_x(x)     = k1 x^l  (growing)   or   k2 x^-(l+1)  (decaying)
    X_th(th)   = k3 cos(mAz th) + k4 sin(mAz th)
    X_phi(phi) = k5 P_l^mAz(cos phi) + k6 Q_l(cos phi)   (Q only for mAz = 0)

Parameter blocks serialise to JSON with the keys ``n, beta, mOffset, k1..k6``
and ``l, mAz, radialKind, k1..k6``, plus ``"type": "cylindrical" | "spherical"``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from . import jets, specfun
from .charts import ChartId, ChartPoint, compose
from .errors import DomainError
from .jets import laplacian_oracle

_AMPLITUDES = ("k1", "k2", "k3", "k4", "k5", "k6")


@dataclass(frozen=True)
class CylSolution:
    n: int
    beta: float
    m_offset: float = 0.0
    k1: float = 0.0
    k2: float = 0.0
    k3: float = 0.0
    k4: float = 0.0
    k5: float = 0.0
    k6: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"angular order n must be a non-negative integer, got {self.n!r}")
        if not self.beta > 0:
            raise ValueError(f"separation constant beta must be positive, got {self.beta!r}")

    def to_json(self) -> dict:
        out = {"type": "cylindrical", "n": int(self.n), "beta": self.beta, "mOffset": self.m_offset}
        out.update({k: getattr(self, k) for k in _AMPLITUDES})
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CylSolution":
        return cls(
            n=int(data["n"]),
            beta=float(data["beta"]),
            m_offset=float(data.get("mOffset", 0.0)),
            **{k: float(data.get(k, 0.0)) for k in _AMPLITUDES},
        )


RADIAL_KINDS = ("growing", "decaying")


@dataclass(frozen=True)
class SphSolution:
    l: int
    m_az: int = 0
    radial_kind: str = "growing"
    k1: float = 0.0
    k2: float = 0.0
    k3: float = 0.0
    k4: float = 0.0
    k5: float = 0.0
    k6: float = 0.0

    def __post_init__(self):
        if int(self.l) != self.l or self.l < 0:
            raise ValueError(f"degree l must be a non-negative integer, got {self.l!r}")
        if int(self.m_az) != self.m_az or abs(self.m_az) > self.l:
            raise DomainError(f"azimuthal order must satisfy |mAz| <= l, got {self.m_az!r} with l = {self.l}")
        if self.radial_kind not in RADIAL_KINDS:
            raise ValueError(f"radialKind must be one of {RADIAL_KINDS}, got {self.radial_kind!r}")
        inactive = "k2" if self.radial_kind == "growing" else "k1"
        if getattr(self, inactive) != 0:
            raise ValueError(f"{inactive} must be 0 for a {self.radial_kind} solution")
        if self.k6 != 0 and self.m_az != 0:
            raise DomainError("the second-kind term is only available for mAz = 0")

    def to_json(self) -> dict:
        out = {"type": "spherical", "l": int(self.l), "mAz": int(self.m_az), "radialKind": self.radial_kind}
        out.update({k: getattr(self, k) for k in _AMPLITUDES})
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SphSolution":
        return cls(
            l=int(data["l"]),
            m_az=int(data.get("mAz", 0)),
            radial_kind=str(data.get("radialKind", "growing")),
            **{k: float(data.get(k, 0.0)) for k in _AMPLITUDES},
        )


def solution_from_json(data: dict) -> CylSolution | SphSolution:
    kind = data.get("type")
    if kind == "cylindrical":
        return CylSolution.from_json(data)
    if kind == "spherical":
        return SphSolution.from_json(data)
    raise ValueError(f"solution JSON needs \"type\": \"cylindrical\" or \"spherical\", got {kind!r}")


def load_solution(path: str | Path) -> CylSolution | SphSolution:
    return solution_from_json(json.loads(Path(path).read_text()))


# fields ------------------------------------------------------------------------

def cyl_field(s: CylSolution, axial_scale: float = 1.0) -> Callable:
    """``(x_p, theta, x3) -> X_p X_theta X_3`` for a cylindrical solution.

    ``axial_scale`` multiplies the axial constant; anything but 1 gives a
    non-harmonic product and exists only for sensitivity checks.
    """
    b = s.beta
    a = b * axial_scale

    def field(xp, theta, x3):
        arg = b * xp
        if jets.value_of(arg) > specfun.MAX_BESSEL_ARG:
            raise DomainError(f"beta * x_p = {jets.value_of(arg)!r} beyond the Bessel envelope")
        radial = 0.0
        if s.k1:
            radial = radial + s.k1 * specfun.jn(s.n, arg)
        if s.k2:
            if jets.value_of(xp) <= 0:
                raise DomainError("the Y_n term is singular at x_p = 0")
            radial = radial + s.k2 * specfun.yn(s.n, arg)
        angular = s.k3 * jets.cos(s.n * theta) + s.k4 * jets.sin(s.n * theta)
        shift = a * (s.m_offset - x3)
        axial = s.k5 * jets.cosh(shift) + s.k6 * jets.sinh(shift)
        return radial * angular * axial

    return field


def sph_field(s: SphSolution) -> Callable:
    """``(x, theta, phi) -> X_x X_theta X_phi`` for a spherical solution."""
    l, m = s.l, s.m_az

    def field(x, theta, phi):
        if s.radial_kind == "growing":
            radial = s.k1 * jets.power(x, l)
        else:
            if jets.value_of(x) <= 0:
                raise DomainError("decaying solutions are singular at the origin")
            radial = s.k2 * jets.power(x, -(l + 1))
        angular = s.k3 * jets.cos(m * theta) + s.k4 * jets.sin(m * theta)
        u = jets.cos(phi)
        polar = 0.0
        if s.k5:
            polar = polar + s.k5 * specfun.plm(l, m, u)
        if s.k6:
            if abs(jets.value_of(u)) > specfun.MAX_Q_ARG:
                raise DomainError("cos(phi) outside the second-kind envelope")
            polar = polar + s.k6 * specfun.ql(l, u)
        return radial * angular * polar

    return field


def eval_cyl(s: CylSolution, cp: ChartPoint) -> float:
    if cp.chart is not ChartId.CYLINDRICAL:
        raise ValueError("eval_cyl expects a cylindrical point")
    return float(cyl_field(s)(*cp.coords))


def eval_sph(s: SphSolution, cp: ChartPoint) -> float:
    if cp.chart is not ChartId.SPHERICAL:
        raise ValueError("eval_sph expects a spherical point")
    x, theta, phi = cp.coords
    if (s.m_az != 0 or s.k6 != 0) and math.sin(phi) <= 0:
        raise DomainError("this solution needs sin(phi) > 0")
    return float(sph_field(s)(x, theta, phi))


def cartesian_field(s: CylSolution | SphSolution, axial_scale: float = 1.0) -> Callable:
    """The solution as a field of Cartesian coordinates (floats or jets)."""
    if isinstance(s, CylSolution):
        return compose(ChartId.CYLINDRICAL, cyl_field(s, axial_scale))
    return compose(ChartId.SPHERICAL, sph_field(s))


# residuals -------------------------------------------------------------------

@dataclass
class ResidualReport:
    max_residual: float
    mean_residual: float
    records: list = field(default_factory=list)  # (point, |laplacian|)

    @property
    def count(self) -> int:
        return len(self.records)


def residual_report(f: Callable, points: Sequence[Sequence[float]]) -> ResidualReport:
    """|Laplacian| of the Cartesian field ``f`` at each point, via the jet oracle."""
    points = list(points)
    if not points:
        raise ValueError("residual_report needs at least one point")
    records = [(tuple(p), abs(laplacian_oracle(f, p))) for p in points]
    values = [r for _, r in records]
    return ResidualReport(max(values), math.fsum(values) / len(values), records)
