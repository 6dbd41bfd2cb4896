r"""Bessel and Legendre functions of integer order for real arguments.

Two layers:

* :func:`bessel_j`, :func:`bessel_y`, :func:`legendre_p`, :func:`legendre_q`
  check the supported envelope and return a :class:`SpecialValue` carrying a
  conservative error bound;
* :func:`jn`, :func:`yn`, :func:`plm`, :func:`ql` accept floats *or*
  :class:`~nestcalc.jets.Jet2` arguments, so separable solutions can be
  differentiated.  Bessel derivatives come from the order recurrences

  .. math::
      2 Z_n' = Z_{n-1} - Z_{n+1}, \qquad 4 Z_n'' = Z_{n-2} - 2 Z_n + Z_{n+2},

  never from Bessel's equation itself.  The Legendre recurrences are plain
  arithmetic and carry jets directly.

Methods
-------
J_n
    ascending series (``x <= 12``, exactly rounded summation) and Miller's
    downward recurrence normalised by ``J_0 + 2 sum J_2k = 1`` beyond.
Y_0, Y_1
    series with logarithm (``x <= 12``); Hankel asymptotic expansion beyond.
Y_n, n >= 2
    upward recurrence from Y_0, Y_1.
P_l^m
    upward recurrence in the degree from ``P_m^m = (-1)^m (2m-1)!! (1-u^2)^{m/2}``
    (Condon-Shortley phase included); negative orders through
    ``P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m``.
Q_l
    ``Q_0 = atanh(u)``, ``Q_1 = u Q_0 - 1`` and the three-term recurrence.
    Only order 0 is provided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import jets
from .errors import DomainError
from .jets import Jet2

EULER_GAMMA = 0.57721566490153286061
SERIES_LIMIT = 12.0

MAX_BESSEL_ORDER = 20
MAX_BESSEL_ARG = 50.0
MIN_Y_ARG = 0.1  # lower end of the Y accuracy envelope
MAX_LEGENDRE_P_DEGREE = 20
MAX_LEGENDRE_Q_DEGREE = 10
MAX_Q_ARG = 0.99

# error bounds: absolute for J; the others are scaled by max(1, magnitude)
J_ERROR = 5e-12
Y_ERROR = 1e-10
P_ERROR = 1e-12
Q_ERROR = 1e-12


@dataclass(frozen=True)
class SpecialValue:
    """A function value and a bound on its absolute error."""

    value: float
    error: float

    def __float__(self) -> float:
        return self.value


# Bessel J ----------------------------------------------------------------------

def _jn_series(n: int, x: float) -> float:
    """Ascending series for J_n(x); valid for any real x, accurate for |x| <= 12."""
    half = 0.5 * x
    term = half ** n / math.factorial(n)
    terms = [term]
    peak = abs(term)
    q = -half * half
    k = 0
    while True:
        k += 1
        term *= q / (k * (n + k))
        terms.append(term)
        peak = max(peak, abs(term))
        if k > abs(half) and abs(term) <= 1e-18 * peak or k > 300:
            break
    return math.fsum(terms)


def _jn_miller(nmax: int, x: float) -> list[float]:
    """J_0 .. J_nmax at x > 0 by downward recurrence."""
    big = max(nmax, int(x)) + 1
    start = big + int(math.sqrt(60 * big)) + 20
    start += start % 2
    f_next, f_cur = 0.0, 1e-30
    out = [0.0] * (nmax + 1)
    norm = 0.0
    for k in range(start, 0, -1):
        # f_cur holds f_k; step down to f_{k-1}
        if k <= nmax:
            out[k] = f_cur
        if k % 2 == 0:
            norm += 2.0 * f_cur
        f_prev = 2.0 * k / x * f_cur - f_next
        f_next, f_cur = f_cur, f_prev
        if abs(f_cur) > 1e250:
            scale = 1e-250
            f_next *= scale
            f_cur *= scale
            norm *= scale
            out = [v * scale for v in out]
    out[0] = f_cur
    norm += f_cur
    return [v / norm for v in out]


def _j_value(n: int, x: float) -> float:
    if n < 0:
        return (-1) ** (-n) * _j_value(-n, x)
    if x < 0:
        return (-1) ** n * _j_value(n, -x)
    if x <= SERIES_LIMIT:
        return _jn_series(n, x)
    return _jn_miller(n, x)[n]


# Bessel Y ------------------------------------------------------------------------

def _harmonic(k: int) -> float:
    return math.fsum(1.0 / j for j in range(1, k + 1))


def _yn_series(n: int, x: float) -> float:
    """Series with logarithm for Y_n(x), x > 0."""
    half = 0.5 * x
    q = half * half
    parts = []
    for k in range(n):
        parts.append(-(half ** (2 * k - n)) * math.factorial(n - k - 1) / math.factorial(k) / math.pi)
    parts.append(2.0 / math.pi * math.log(half) * _jn_series(n, x))
    term = half ** n / math.factorial(n)  # (x/2)^n (-q)^k / (k! (n+k)!)
    peak = abs(term)
    k = 0
    while True:
        psi = -2 * EULER_GAMMA + _harmonic(k) + _harmonic(n + k)
        parts.append(-term * psi / math.pi)
        k += 1
        term *= -q / (k * (n + k))
        peak = max(peak, abs(term))
        if k > half and abs(term) <= 1e-18 * peak or k > 300:
            break
    return math.fsum(parts)


def _hankel(n: int, x: float) -> tuple[float, float]:
    """(J_n, Y_n) from the Hankel asymptotic expansion, for large x."""
    mu = 4.0 * n * n
    p_terms, q_terms = [1.0], []
    term = 1.0
    k = 0
    while True:
        k += 1
        nxt = term * (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(nxt) >= abs(term) and k > 1 or abs(nxt) < 1e-17 or k > 200:
            break
        term = nxt
        sign = -1.0 if (k // 2) % 2 else 1.0
        (p_terms if k % 2 == 0 else q_terms).append(sign * term)
    P, Q = math.fsum(p_terms), math.fsum(q_terms)
    chi = x - (0.5 * n + 0.25) * math.pi
    amp = math.sqrt(2.0 / (math.pi * x))
    return amp * (P * math.cos(chi) - Q * math.sin(chi)), amp * (P * math.sin(chi) + Q * math.cos(chi))


def _y_value(n: int, x: float) -> float:
    if n < 0:
        return (-1) ** (-n) * _y_value(-n, x)
    if x <= 0:
        raise DomainError(f"Y_n is singular for x <= 0, got {x!r}")
    if x <= SERIES_LIMIT:
        y0, y1 = _yn_series(0, x), _yn_series(1, x)
    else:
        y0, y1 = _hankel(0, x)[1], _hankel(1, x)[1]
    if n == 0:
        return y0
    for k in range(1, n):
        y0, y1 = y1, 2.0 * k / x * y1 - y0
    return y1


# jet-aware entry points ------------------------------------------------------------

def _bessel_lift(value, n: int, x):
    if not isinstance(x, Jet2):
        return value(n, x)
    v = x.value
    zm2, zm1, z0, zp1, zp2 = (value(n + d, v) for d in (-2, -1, 0, 1, 2))
    return jets.chain(x, z0, 0.5 * (zm1 - zp1), 0.25 * (zm2 - 2.0 * z0 + zp2))


def jn(n: int, x):
    """J_n at a float or jet argument (no envelope check)."""
    return _bessel_lift(_j_value, n, x)


def yn(n: int, x):
    """Y_n at a float or jet argument, x > 0 (no envelope check)."""
    return _bessel_lift(_y_value, n, x)


def _check_order(n, limit: int, what: str) -> int:
    if int(n) != n or not 0 <= n <= limit:
        raise DomainError(f"{what} order must be an integer in [0, {limit}], got {n!r}")
    return int(n)


def bessel_j(n: int, x: float) -> SpecialValue:
    """J_n(x) for integer ``0 <= n <= 20`` and ``0 <= x <= 50``."""
    n = _check_order(n, MAX_BESSEL_ORDER, "Bessel")
    if not 0 <= x <= MAX_BESSEL_ARG:
        raise DomainError(f"bessel_j supports 0 <= x <= {MAX_BESSEL_ARG}, got {x!r}")
    return SpecialValue(_j_value(n, float(x)), J_ERROR)


def bessel_y(n: int, x: float) -> SpecialValue:
    """Y_n(x) for integer ``0 <= n <= 20`` and ``0 < x <= 50``.

    The error bound is ``Y_ERROR * max(1, |Y_n(x)|)``; it is validated on
    ``0.1 <= x <= 50``.
    """
    n = _check_order(n, MAX_BESSEL_ORDER, "Bessel")
    if not 0 < x <= MAX_BESSEL_ARG:
        raise DomainError(f"bessel_y supports 0 < x <= {MAX_BESSEL_ARG}, got {x!r}")
    v = _y_value(n, float(x))
    return SpecialValue(v, Y_ERROR * max(1.0, abs(v)))


# Legendre --------------------------------------------------------------------------

def _double_factorial_odd(m: int) -> int:
    return math.prod(range(1, 2 * m, 2))


def _plm_ladder(l: int, m: int, u) -> list:
    """[P_m^m, P_{m+1}^m, ..., P_l^m] for 0 <= m <= l."""
    pmm = 1.0
    if m > 0:
        pmm = (-1) ** m * _double_factorial_odd(m) * jets.power(1.0 - u * u, 0.5 * m)
    ladder = [pmm]
    if l > m:
        ladder.append(u * (2 * m + 1) * pmm)
    for ll in range(m + 2, l + 1):
        ladder.append(((2 * ll - 1) * u * ladder[-1] - (ll + m - 1) * ladder[-2]) / (ll - m))
    return ladder


def _negative_order_factor(l: int, m: int) -> float:
    # P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    return (-1) ** m * math.factorial(l - m) / math.factorial(l + m)


def plm(l: int, m: int, u):
    """Associated Legendre function of the first kind, Condon-Shortley phase."""
    if abs(m) > l:
        raise DomainError(f"|m| = {abs(m)} exceeds degree l = {l}")
    if m < 0:
        return _negative_order_factor(l, -m) * _plm_ladder(l, -m, u)[-1]
    return _plm_ladder(l, m, u)[-1]


def ql(l: int, u):
    """Legendre function of the second kind Q_l on (-1, 1)."""
    q0 = jets.atanh(u)
    if l == 0:
        return q0
    q1 = u * q0 - 1.0
    for ll in range(1, l):
        q0, q1 = q1, ((2 * ll + 1) * u * q1 - ll * q0) / (ll + 1)
    return q1


def legendre_p(l: int, m: int, u: float) -> SpecialValue:
    """P_l^m(u) for ``0 <= l <= 20``, ``|m| <= l``, ``|u| <= 1``.

    The error bound is ``P_ERROR`` times the larger of 1 and the biggest
    magnitude met along the degree recurrence, which covers the loss of
    relative accuracy near zeros of high-order functions.
    """
    l = _check_order(l, MAX_LEGENDRE_P_DEGREE, "Legendre")
    if int(m) != m or abs(m) > l:
        raise DomainError(f"need an integer |m| <= l, got m = {m!r}, l = {l}")
    if not -1 <= u <= 1:
        raise DomainError(f"legendre_p needs |u| <= 1, got {u!r}")
    ladder = _plm_ladder(l, abs(int(m)), float(u))
    factor = _negative_order_factor(l, -int(m)) if m < 0 else 1.0
    # cancellation in the recurrence is bounded by its largest rung
    scale = abs(factor) * max(abs(v) for v in ladder)
    return SpecialValue(factor * ladder[-1], P_ERROR * max(1.0, scale))


def legendre_q(l: int, u: float) -> SpecialValue:
    """Q_l(u) for ``0 <= l <= 10`` and ``|u| <= 0.99``."""
    l = _check_order(l, MAX_LEGENDRE_Q_DEGREE, "Legendre")
    if abs(u) >= 1:
        raise DomainError(f"Q_l is singular at |u| >= 1, got {u!r}")
    if abs(u) > MAX_Q_ARG:
        raise DomainError(f"legendre_q supports |u| <= {MAX_Q_ARG}, got {u!r}")
    v = float(ql(l, float(u)))
    return SpecialValue(v, Q_ERROR * max(1.0, abs(v)))
