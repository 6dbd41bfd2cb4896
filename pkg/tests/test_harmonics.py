import math

import pytest

from nestcalc import harmonics, jets
from nestcalc.charts import ChartPoint, to_chart
from nestcalc.errors import DomainError
from nestcalc.harmonics import HarmonicTriple, enumerate_harmonic_monomials, exponent_residual
from nestcalc.jets import laplacian_oracle
from nestcalc.operators import laplacian_nested12
from nestcalc.sampling import interior_points

TABLE = {(1, 0, 0), (0, 0, -1), (1, -2, 0), (1, 0, -3), (1, -2, 1)}


def test_exponent_residual_examples():
    assert exponent_residual(1, -2, 1) == (0, 0, 0)
    assert exponent_residual(1, 0, 0) == (0, 0, 0)
    assert exponent_residual(2, 0, 0) == (0, 2, 0)


def test_table_reproduced_by_brute_force():
    r = range(-5, 6)
    found = {t.as_tuple() for t in enumerate_harmonic_monomials(r, r, r)}
    assert found == TABLE
    # independent brute force straight from the system
    brute = {
        (k, m, n) for k in r for m in r for n in r
        if (k, m, n) != (0, 0, 0)
        and 2 * k * m + m * m == 0 and k * k - k == 0 and 2 * k * n + 2 * m * n + n * (1 + n) == 0
    }
    assert brute == TABLE


def test_enumeration_edge_ranges():
    assert enumerate_harmonic_monomials(range(2, 6), range(2, 6), range(2, 6)) == []
    assert [t.as_tuple() for t in enumerate_harmonic_monomials([0], [0], [-1])] == [(0, 0, -1)]
    assert enumerate_harmonic_monomials([0], [0], [0]) == []


def test_triple_rejects_non_solution():
    with pytest.raises(ValueError):
        HarmonicTriple(2, 0, 0)


def test_monomial_values():
    f = lambda t, p: harmonics.monomial_cartesian(t)(*p)
    assert f((1, -2, 0), (1.0, 1.0, 0.0)) == pytest.approx(0.5)
    assert f((0, 0, -1), (1.0, 2.0, 2.0)) == pytest.approx(1 / 3)
    assert f((1, -2, 1), (1.0, 2.0, 2.0)) == pytest.approx(0.6)
    with pytest.raises(DomainError):
        f((1, -2, 0), (0.0, 0.0, 1.0))
    with pytest.raises(DomainError):
        f((0, 0, -1), (0.0, 0.0, 0.0))


@pytest.mark.parametrize("t", sorted(TABLE))
def test_monomials_are_harmonic(t):
    f = harmonics.monomial_cartesian(t)
    for p in interior_points(1, 50, 3):
        assert abs(laplacian_oracle(f, p)) <= 1e-9


def test_closed_form_laplacian_matches_oracle_for_non_solutions():
    for k, m, n in [(2, 0, 0), (1, 1, 1), (0, 2, -1), (3, -1, 2)]:
        f = harmonics.monomial_cartesian((k, m, n))
        for p in interior_points(2, 10, 3):
            cp = to_chart("nested123", p)
            closed = harmonics.monomial_laplacian_closed_form(k, m, n, *cp.coords)
            assert closed == pytest.approx(laplacian_oracle(f, p), rel=1e-10, abs=1e-10)


@pytest.mark.parametrize("c1, c2", [(1.0, 0.0), (0.0, 1.0), (2.0, -3.0)])
def test_planar_family(c1, c2):
    g = harmonics.planar_family_field(c1, c2)
    from nestcalc.charts import compose

    for p in interior_points(4, 50, 2):
        assert abs(laplacian_oracle(compose("nested12", g), p)) <= 1e-9
        assert abs(laplacian_nested12(g, to_chart("nested12", p))) <= 1e-9
        assert abs(harmonics.radial_ode_check(c1, c2, math.hypot(*p))) <= 1e-12


def test_radial_ode_examples():
    assert harmonics.radial_ode_check(1, 0, 2.0) == 0.0
    assert harmonics.radial_ode_check(0, 7, 0.3) == 0.0
    assert harmonics.radial_ode_residual(lambda x: 1 / x, 1.0) == pytest.approx(-1.0)
    with pytest.raises(DomainError):
        harmonics.radial_ode_check(1, 0, 0.0)


def test_euler_factor_of_linear_is_one():
    for x1 in (-2.0, 0.3, 5.0):
        assert harmonics.euler_factor(lambda t: t, x1) == pytest.approx(1.0)


def test_separability_defect_examples():
    cp = ChartPoint("nested123", (1.0, math.sqrt(2), 2.0))
    const = lambda t: 3.0 + 0 * t
    assert harmonics.separability_defect(lambda t: t, const, const, cp) == 0.0
    d = harmonics.separability_defect(lambda t: t, lambda t: jets.power(t, -2), lambda t: 1.0 + 0 * t, cp)
    # hand formula: d1 log(x_p^-2) / x1 = (x1/x_p)(-2/x_p) / x1 = -2/x_p^2
    assert d == pytest.approx(-2 / cp[1] ** 2)
    assert d == pytest.approx(-1.0)


def test_separability_defect_errors():
    cp = ChartPoint("nested123", (1.0, math.sqrt(2), 2.0))
    with pytest.raises(DomainError):
        harmonics.separability_defect(lambda t: 0.0 * t, lambda t: t, lambda t: t, cp)
    with pytest.raises(DomainError):
        harmonics.separability_defect(lambda t: t, lambda t: t, lambda t: t, ChartPoint("nested123", (1.0, 2.0, 2.0)))
    with pytest.raises(ValueError):
        harmonics.separability_defect(lambda t: t, lambda t: t, lambda t: t, ChartPoint("nested12", (1.0, 2.0)))
