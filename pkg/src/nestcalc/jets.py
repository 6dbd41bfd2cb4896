"""Second-order forward-mode differentiation.

A :class:`Jet2` carries the value, gradient and Hessian of a quantity with
respect to ``d`` seed variables.  Arithmetic and the elementary functions
below propagate all three exactly (up to rounding), so evaluating an ordinary
Python function on seeded jets yields its full second-order Taylor data at a
point.  The Hessian is stored as its upper triangle, which makes symmetry
hold by construction.

A *field* is any Python callable taking coordinates positionally and
returning a scalar; written with the functions of this module it works on
floats and on jets alike.  With floats the same code paths produce the same
values bit for bit.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError

Field = Callable[..., object]


@lru_cache(maxsize=None)
def _pairs(d: int) -> tuple:
    return tuple((i, j) for i in range(d) for j in range(i, d))


class Jet2:
    """Value, gradient and upper-triangular Hessian over ``d`` variables."""

    __slots__ = ("value", "grad", "hess", "d")

    def __init__(self, value: float, grad: Sequence[float], hess: Sequence[float]):
        self.value = value
        self.grad = tuple(grad)
        self.hess = tuple(hess)
        self.d = len(self.grad)
        if len(self.hess) != self.d * (self.d + 1) // 2:
            raise ValueError("Hessian storage does not match the gradient length")

    @classmethod
    def constant(cls, value: float, d: int) -> "Jet2":
        return cls(value, (0.0,) * d, (0.0,) * (d * (d + 1) // 2))

    @classmethod
    def variable(cls, value: float, index: int, d: int) -> "Jet2":
        grad = [0.0] * d
        grad[index] = 1.0
        return cls(value, grad, (0.0,) * (d * (d + 1) // 2))

    # views ----------------------------------------------------------------
    @property
    def gradient(self) -> np.ndarray:
        return np.array(self.grad, dtype=float)

    @property
    def hessian(self) -> np.ndarray:
        h = np.zeros((self.d, self.d))
        for k, (i, j) in enumerate(_pairs(self.d)):
            h[i, j] = h[j, i] = self.hess[k]
        return h

    def second(self, i: int, j: int) -> float:
        """The mixed partial with respect to seed variables ``i`` and ``j``."""
        if i > j:
            i, j = j, i
        return self.hess[_pairs(self.d).index((i, j))]

    @property
    def laplacian(self) -> float:
        return sum(self.hess[k] for k, (i, j) in enumerate(_pairs(self.d)) if i == j)

    def __repr__(self) -> str:
        return f"Jet2(value={self.value!r}, grad={self.grad!r}, hess={self.hess!r})"

    # arithmetic -------------------------------------------------------------
    def _lift(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            if other.d != self.d:
                raise ValueError(f"jet arity mismatch: {self.d} vs {other.d}")
            return other
        return Jet2.constant(other, self.d)

    def __add__(self, other):
        if not _is_operand(other):
            return NotImplemented
        if not isinstance(other, Jet2):
            return Jet2(self.value + other, self.grad, self.hess)
        o = self._lift(other)
        return Jet2(
            self.value + o.value,
            [a + b for a, b in zip(self.grad, o.grad)],
            [a + b for a, b in zip(self.hess, o.hess)],
        )

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.value, [-a for a in self.grad], [-a for a in self.hess])

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not _is_operand(other):
            return NotImplemented
        if not isinstance(other, Jet2):
            return Jet2(self.value - other, self.grad, self.hess)
        return self + (-other)

    def __rsub__(self, other):
        if not _is_operand(other):
            return NotImplemented
        return Jet2(other - self.value, [-a for a in self.grad], [-a for a in self.hess])

    def __mul__(self, other):
        if not _is_operand(other):
            return NotImplemented
        if not isinstance(other, Jet2):
            return Jet2(self.value * other, [a * other for a in self.grad], [a * other for a in self.hess])
        o = self._lift(other)
        a0, b0, ga, gb = self.value, o.value, self.grad, o.grad
        hess = [
            a0 * hb + b0 * ha + ga[i] * gb[j] + ga[j] * gb[i]
            for (i, j), ha, hb in zip(_pairs(self.d), self.hess, o.hess)
        ]
        return Jet2(a0 * b0, [a0 * y + b0 * x for x, y in zip(ga, gb)], hess)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_operand(other):
            return NotImplemented
        if not isinstance(other, Jet2):
            if other == 0:
                raise DomainError("division by zero")
            return Jet2(self.value / other, [a / other for a in self.grad], [a / other for a in self.hess])
        return _divide(self, self._lift(other))

    def __rtruediv__(self, other):
        if not _is_operand(other):
            return NotImplemented
        return _divide(Jet2.constant(other, self.d), self)

    def __pow__(self, exponent):
        if isinstance(exponent, Jet2):
            return exp(exponent * log(self))
        if not _is_operand(exponent):
            return NotImplemented
        return power(self, exponent)

    def __rpow__(self, base):
        if not _is_operand(base):
            return NotImplemented
        return exp(self * math.log(base))


def _is_operand(x) -> bool:
    return isinstance(x, (Jet2, int, float, np.floating, np.integer))


def _divide(a: Jet2, b: Jet2) -> Jet2:
    b0 = b.value
    if b0 == 0:
        raise DomainError("division by zero")
    q0 = a.value / b0
    gq = [(x - q0 * y) / b0 for x, y in zip(a.grad, b.grad)]
    gb = b.grad
    hess = [
        (ha - q0 * hb - gq[i] * gb[j] - gq[j] * gb[i]) / b0
        for (i, j), ha, hb in zip(_pairs(a.d), a.hess, b.hess)
    ]
    return Jet2(q0, gq, hess)


def chain(u: Jet2, f0: float, f1: float, f2: float) -> Jet2:
    """Jet of ``f(u)`` given ``f``, ``f'`` and ``f''`` at ``u.value``."""
    g = u.grad
    hess = [f1 * h + f2 * g[i] * g[j] for (i, j), h in zip(_pairs(u.d), u.hess)]
    return Jet2(f0, [f1 * x for x in g], hess)


def value_of(x) -> float:
    return x.value if isinstance(x, Jet2) else x


# elementary functions ------------------------------------------------------

def sqrt(x):
    v = value_of(x)
    if v < 0:
        raise DomainError(f"sqrt of negative number {v!r}")
    s = math.sqrt(v)
    if not isinstance(x, Jet2):
        return s
    if s == 0:
        raise DomainError("sqrt is not differentiable at 0")
    return chain(x, s, 0.5 / s, -0.25 / (s * v))


def exp(x):
    e = math.exp(value_of(x))
    return chain(x, e, e, e) if isinstance(x, Jet2) else e


def log(x):
    v = value_of(x)
    if v <= 0:
        raise DomainError(f"log of non-positive number {v!r}")
    r = math.log(v)
    return chain(x, r, 1.0 / v, -1.0 / (v * v)) if isinstance(x, Jet2) else r


def sin(x):
    v = value_of(x)
    s = math.sin(v)
    return chain(x, s, math.cos(v), -s) if isinstance(x, Jet2) else s


def cos(x):
    v = value_of(x)
    c = math.cos(v)
    return chain(x, c, -math.sin(v), -c) if isinstance(x, Jet2) else c


def sinh(x):
    v = value_of(x)
    s = math.sinh(v)
    return chain(x, s, math.cosh(v), s) if isinstance(x, Jet2) else s


def cosh(x):
    v = value_of(x)
    c = math.cosh(v)
    return chain(x, c, math.sinh(v), c) if isinstance(x, Jet2) else c


def atanh(x):
    v = value_of(x)
    if not -1 < v < 1:
        raise DomainError(f"atanh needs |x| < 1, got {v!r}")
    r = math.atanh(v)
    if not isinstance(x, Jet2):
        return r
    w = 1.0 / (1.0 - v * v)
    return chain(x, r, w, 2.0 * v * w * w)


def arccos(x):
    v = value_of(x)
    if not -1 <= v <= 1:
        raise DomainError(f"arccos needs |x| <= 1, got {v!r}")
    r = math.acos(v)
    if not isinstance(x, Jet2):
        return r
    w = 1.0 - v * v
    if w == 0:
        raise DomainError("arccos is not differentiable at +-1")
    s = math.sqrt(w)
    return chain(x, r, -1.0 / s, -v / (s * w))


def atan2(y, x):
    """Two-argument arctangent; jets in either argument are supported."""
    yv, xv = value_of(y), value_of(x)
    r = math.atan2(yv, xv)
    if not (isinstance(x, Jet2) or isinstance(y, Jet2)):
        return r
    r2 = xv * xv + yv * yv
    if r2 == 0:
        raise DomainError("atan2 is not differentiable at the origin")
    d = x.d if isinstance(x, Jet2) else y.d
    jy = y if isinstance(y, Jet2) else Jet2.constant(yv, d)
    jx = x if isinstance(x, Jet2) else Jet2.constant(xv, d)
    fy, fx = xv / r2, -yv / r2
    fyy = -2.0 * xv * yv / (r2 * r2)
    fxx = -fyy
    fxy = (yv * yv - xv * xv) / (r2 * r2)
    gx, gy = jx.grad, jy.grad
    hess = [
        fx * hx + fy * hy
        + fxx * gx[i] * gx[j] + fyy * gy[i] * gy[j]
        + fxy * (gx[i] * gy[j] + gy[i] * gx[j])
        for (i, j), hx, hy in zip(_pairs(d), jx.hess, jy.hess)
    ]
    return Jet2(r, [fx * a + fy * b for a, b in zip(gx, gy)], hess)


def power(x, a):
    """``x ** a`` for integer or real ``a``.

    Real, non-integer exponents need a positive base; negative integer
    exponents need a nonzero base.
    """
    v = value_of(x)
    integral = float(a).is_integer()
    if not integral and v < 0:
        raise DomainError(f"non-integer power {a!r} of negative number {v!r}")
    if v == 0 and a < 0:
        raise DomainError(f"negative power {a!r} of zero")
    if integral:
        a = int(a)
    p0 = v ** a
    if not isinstance(x, Jet2):
        return p0
    if a == 0:
        return Jet2.constant(1.0, x.d)
    if v == 0 and not integral and a < 2:
        raise DomainError(f"power {a!r} is not twice differentiable at 0")
    if integral:
        p1 = a * v ** (a - 1)
        p2 = a * (a - 1) * v ** (a - 2) if a != 1 else 0.0
    else:
        p1 = a * p0 / v
        p2 = a * (a - 1) * p0 / (v * v)
    return chain(x, p0, p1, p2)


def hypot(*xs):
    """Euclidean length of the arguments, written with jet arithmetic."""
    return sqrt(sum(x * x for x in xs))


# evaluation ---------------------------------------------------------------

def seed(point: Sequence[float]) -> list:
    """One independent jet per coordinate of ``point``."""
    d = len(point)
    return [Jet2.variable(float(v), i, d) for i, v in enumerate(point)]


def jet_eval(f: Field, p: Sequence[float]) -> Jet2:
    """Value, gradient and Hessian of ``f`` at ``p``.

    The arity is ``len(p)``: pass a 2-sequence for planar fields.
    Domain errors raised by elementary functions propagate as
    :class:`DomainError`.
    """
    try:
        out = f(*seed(p))
    except ZeroDivisionError as exc:
        raise DomainError(str(exc)) from exc
    if not isinstance(out, Jet2):
        return Jet2.constant(float(out), len(p))
    return out


def laplacian_oracle(f: Field, p: Sequence[float]) -> float:
    """Trace of the Hessian of ``f`` at ``p`` in rectangular coordinates."""
    return jet_eval(f, p).laplacian


def _plain(f: Field, q) -> float:
    try:
        return float(f(*q))
    except ZeroDivisionError as exc:
        raise DomainError(str(exc)) from exc


def fd_jet(f: Field, p: Sequence[float], h: float = 1e-4) -> Jet2:
    """Central-difference value, gradient and Hessian (all O(h^2)).

    Independent of the jet arithmetic; only plain float evaluations of ``f``
    are used.
    """
    if not h > 0:
        raise ValueError("step h must be positive")
    p = [float(v) for v in p]
    d = len(p)

    def at(*shifts):
        q = list(p)
        for i, s in shifts:
            q[i] += s
        return _plain(f, q)

    f0 = at()
    grad = [(at((i, h)) - at((i, -h))) / (2 * h) for i in range(d)]
    hess = []
    for i, j in _pairs(d):
        if i == j:
            hess.append((at((i, h)) - 2 * f0 + at((i, -h))) / (h * h))
        else:
            hess.append(
                (at((i, h), (j, h)) - at((i, h), (j, -h)) - at((i, -h), (j, h)) + at((i, -h), (j, -h)))
                / (4 * h * h)
            )
    return Jet2(f0, grad, hess)
