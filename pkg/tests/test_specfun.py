import math

import numpy as np
import pytest
from scipy import special

import oracles
from nestcalc import specfun
from nestcalc.errors import DomainError
from nestcalc.jets import Jet2, fd_jet
from nestcalc.verify import bessel_ode_residual

ORDERS = range(0, 21)
XS = [0.0, 1e-3, 0.1, 0.5, 1.0, 2.5, 5.0, 9.9, 11.99, 12.0, 12.01, 15.0, 20.0, 33.3, 49.0, 50.0]


def test_bessel_j_examples():
    assert specfun.bessel_j(0, 0.0).value == 1.0
    assert specfun.bessel_j(3, 0.0).value == 0.0
    assert abs(specfun.bessel_j(0, 2.404825557695773).value) <= 1e-9
    assert specfun.bessel_j(1, 1.0).value == pytest.approx(0.44005058574493355, abs=1e-15)


def test_bessel_j_matches_mpmath_on_envelope():
    worst = 0.0
    for n in ORDERS:
        for x in XS:
            v = specfun.bessel_j(n, x)
            err = abs(v.value - oracles.besselj(n, x))
            assert err <= v.error
            worst = max(worst, err)
    assert worst <= 1e-10


def test_bessel_y_examples():
    assert specfun.bessel_y(0, 1.0).value == pytest.approx(0.08825696421567696, abs=1e-12)
    assert specfun.bessel_y(0, 1e-3).value < -4


def test_bessel_y_matches_mpmath():
    for n in ORDERS:
        for x in [v for v in XS if v >= specfun.MIN_Y_ARG]:
            v = specfun.bessel_y(n, x)
            assert abs(v.value - oracles.bessely(n, x)) <= v.error


@pytest.mark.parametrize("x", [1.0, 5.0, 20.0])
def test_wronskian(x):
    for n in range(6):
        w = (specfun.bessel_j(n + 1, x).value * specfun.bessel_y(n, x).value
             - specfun.bessel_j(n, x).value * specfun.bessel_y(n + 1, x).value)
        assert w == pytest.approx(2 / (math.pi * x), rel=1e-8)


def test_bessel_recurrence_across_envelope():
    for x in np.linspace(0.25, 50, 60):
        for n in range(1, 20):
            j = [specfun.bessel_j(k, float(x)).value for k in (n - 1, n, n + 1)]
            assert abs(j[0] + j[2] - 2 * n / x * j[1]) <= 1e-9


def test_bessel_ode_by_finite_differences():
    for n in (0, 1, 4, 9, 17):
        for x in (0.7, 3.0, 11.5, 12.5, 26.0, 49.5):
            assert abs(bessel_ode_residual(n, x)) <= 1e-5


def test_parity_of_series():
    for n in range(8):
        for x in (0.3, 2.0, 7.5):
            assert specfun._jn_series(n, -x) == pytest.approx((-1) ** n * specfun._jn_series(n, x), abs=1e-15)


def test_bessel_jets_match_finite_differences():
    for n in (0, 1, 3):
        for f in (specfun.jn, specfun.yn):
            x = 2.7
            j = f(n, Jet2.variable(x, 0, 1))
            fd = fd_jet(lambda t: f(n, t), (x,), 1e-4)
            assert j.grad[0] == pytest.approx(fd.grad[0], abs=1e-8)
            assert j.hess[0] == pytest.approx(fd.hess[0], abs=1e-6)


def test_bessel_domain_errors():
    with pytest.raises(DomainError):
        specfun.bessel_j(21, 1.0)
    with pytest.raises(DomainError):
        specfun.bessel_j(0, 50.5)
    with pytest.raises(DomainError):
        specfun.bessel_j(-1, 1.0)
    with pytest.raises(DomainError):
        specfun.bessel_y(0, 0.0)
    with pytest.raises(DomainError):
        specfun.bessel_j(1.5, 1.0)


def test_legendre_p_examples():
    for u in (-1.0, -0.3, 0.0, 0.8, 1.0):
        assert specfun.legendre_p(0, 0, u).value == 1.0
    assert specfun.legendre_p(2, 0, 0.5).value == pytest.approx(-0.125)
    assert specfun.legendre_p(2, 2, 0.0).value == pytest.approx(3.0)
    # Condon-Shortley phase
    assert specfun.legendre_p(1, 1, 0.0).value == pytest.approx(-1.0)


def test_legendre_p_matches_rodrigues_oracle():
    rng = np.random.default_rng(8)
    for _ in range(300):
        l = int(rng.integers(0, 21))
        m = int(rng.integers(-l, l + 1))
        u = float(rng.uniform(-1, 1))
        v = specfun.legendre_p(l, m, u)
        assert abs(v.value - oracles.legendre_p(l, m, u)) <= v.error


def test_legendre_p_agrees_with_scipy():
    for l in range(0, 12):
        for m in range(-l, l + 1):
            for u in (-0.9, -0.2, 0.35, 0.99):
                assert specfun.legendre_p(l, m, u).value == pytest.approx(special.lpmv(m, l, u), rel=1e-9, abs=1e-9)


def test_legendre_recurrence():
    rng = np.random.default_rng(42)
    for _ in range(200):
        l = int(rng.integers(1, 20))
        m = int(rng.integers(0, l + 1))
        u = float(rng.uniform(-1, 1))
        p = [specfun.legendre_p(k, m, u).value if m <= k else 0.0 for k in (l - 1, l, l + 1)]
        terms = ((l + 1 - m) * p[2], (2 * l + 1) * u * p[1], (l + m) * p[0])
        assert abs(terms[0] - terms[1] + terms[2]) <= 1e-10 * max(1.0, *map(abs, terms))


def test_legendre_q_examples():
    assert specfun.legendre_q(0, 0.5).value == pytest.approx(0.5 * math.log(3), abs=1e-15)
    assert specfun.legendre_q(0, 0.0).value == 0.0
    assert specfun.legendre_q(1, 0.5).value == pytest.approx(0.25 * math.log(3) - 1, abs=1e-15)


def test_legendre_q_matches_oracle():
    for l in range(11):
        for u in np.linspace(-0.99, 0.99, 23):
            v = specfun.legendre_q(l, float(u))
            assert abs(v.value - oracles.legendre_q(l, float(u))) <= v.error


def test_legendre_domain_errors():
    with pytest.raises(DomainError):
        specfun.legendre_p(2, 3, 0.1)
    with pytest.raises(DomainError):
        specfun.legendre_p(2, 1, 1.5)
    with pytest.raises(DomainError):
        specfun.legendre_p(21, 0, 0.1)
    with pytest.raises(DomainError):
        specfun.legendre_q(1, 1.0)
    with pytest.raises(DomainError):
        specfun.legendre_q(1, 0.995)
    with pytest.raises(DomainError):
        specfun.legendre_q(11, 0.5)


def test_legendre_jets_satisfy_their_ode():
    # (1-u^2) P'' - 2u P' + (l(l+1) - m^2/(1-u^2)) P = 0
    for l, m in [(2, 0), (3, 2), (5, -1)]:
        u = 0.37
        j = specfun.plm(l, m, Jet2.variable(u, 0, 1))
        w = 1 - u * u
        res = w * j.hess[0] - 2 * u * j.grad[0] + (l * (l + 1) - m * m / w) * j.value
        assert abs(res) <= 1e-11
    for l in range(4):
        u = -0.6
        j = specfun.ql(l, Jet2.variable(u, 0, 1))
        assert abs((1 - u * u) * j.hess[0] - 2 * u * j.grad[0] + l * (l + 1) * j.value) <= 1e-12
