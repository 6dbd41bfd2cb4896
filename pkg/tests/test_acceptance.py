"""Acceptance criteria, one test each, at their stated tolerances.

Each test prints a single ``[PASS]``/``[FAIL]`` line; the lines are also
collected and repeated in the pytest terminal summary.
"""

import csv
import io
import math

import numpy as np

from nestcalc import harmonics, jets, operators, solutions, specfun
from nestcalc.charts import ChartId, compose
from nestcalc.cli import main
from nestcalc.ga3 import grade_part, vector
from nestcalc.grid import fig1
from nestcalc.jets import jet_eval, laplacian_oracle
from nestcalc.sampling import interior_points, spherical_points
from nestcalc.verify import TEST_FIELDS, phi_field, theta_field

SEED = 42
RESULTS: list[str] = []


def report(number: int, title: str, value: float, tol: float, ok: bool, op: str = "<=") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {value:.3e} {op} {tol:g}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_divergence_of_unit_radius():
    def xhat(*x):
        r = jets.hypot(*x)
        return vector(*(c / r for c in x))

    worst = 0.0
    for n in (2, 3):
        for p in interior_points(SEED, 100, n):
            d = operators.vector_derivative(xhat, p)
            expected = (n - 1) / math.sqrt(sum(v * v for v in p))
            assert math.sqrt(sum(v * v for v in p)) >= 0.1
            worst = max(worst, abs(d.scalar_part - expected) / expected,
                        max(abs(c) for c in grade_part(d, 2).coeffs) / expected)
    report(1, "div xhat = (n-1)/x, n = 2, 3 (max rel err)", worst, 1e-10, worst <= 1e-10)


def test_criterion_2_angle_identities():
    worst = 0.0
    for x1, x2, x3 in interior_points(SEED, 100, 3):
        xp2 = x1 * x1 + x2 * x2
        r2 = xp2 + x3 * x3
        jt2 = jet_eval(theta_field, (x1, x2))
        jt3 = jet_eval(theta_field, (x1, x2, x3))
        jp = jet_eval(phi_field, (x1, x2, x3))
        worst = max(
            worst,
            abs(jt2.laplacian),
            abs(float(jt2.gradient @ jt2.gradient) - 1 / xp2),
            abs(jt3.laplacian),
            abs(jp.laplacian - x3 / (r2 * math.sqrt(xp2))),
        )
    report(2, "lap theta = 0, |grad theta|^2 = 1/x^2, lap phi = x3/(x^2 x_p) (max abs err)", worst, 1e-9, worst <= 1e-9)


def test_criterion_3_mixed_partials():
    f = lambda a, x: a * x ** 2
    p = (1.0, math.sqrt(3.0))  # x1 = 1, x = 2
    oh = operators.ordinary_of_hat(ChartId.NESTED12, f, p)
    ho = operators.hat_of_ordinary(ChartId.NESTED12, f, p)
    err = max(abs(oh - 2.0), abs(ho - 4.0))
    report(3, f"d1 hat1 f = {oh!r}, hat1 d1 f = {ho!r} (err vs 2, 4)", err, 1e-12, err <= 1e-12)


def test_criterion_4_chart_laplacians_match_oracle():
    points = interior_points(SEED, 100, 3)
    worst, count = 0.0, 0
    for name in ("polar", "nested12", "nested123", "mixed123", "cylindrical", "spherical"):
        op = operators.CHART_LAPLACIANS[name]
        fields = TEST_FIELDS[name]
        assert len(fields) == 5
        for _, g in fields:
            for p in points:
                q = p[:2] if op.chart.planar else p
                oracle = laplacian_oracle(compose(op.chart, g), q)
                worst = max(worst, abs(op.at(g, q) - oracle) / max(1.0, abs(oracle)))
                count += 1
    assert count == 6 * 5 * 100
    report(4, "six chart Laplacians vs rectangular oracle, 5 fields x 100 points (max rel err)", worst, 1e-8, worst <= 1e-8)


def test_criterion_5_exponent_table():
    r = range(-5, 6)
    found = {t.as_tuple() for t in harmonics.enumerate_harmonic_monomials(r, r, r)}
    expected = {(1, 0, 0), (0, 0, -1), (1, -2, 0), (1, 0, -3), (1, -2, 1)}
    points = interior_points(SEED, 50, 3)
    worst = max(abs(laplacian_oracle(harmonics.monomial_cartesian(t), p)) for t in found for p in points)
    ok = found == expected and worst <= 1e-9
    report(5, f"table over [-5,5]^3 = {sorted(found)}; max |lap|", worst, 1e-9, ok)


def test_criterion_6_planar_family():
    points = interior_points(SEED, 50, 2)
    lap_worst, ode_worst = 0.0, 0.0
    for c1, c2 in ((1.0, 0.0), (0.0, 1.0), (2.0, -3.0)):
        F = lambda x1, x2: x1 * (c1 / (x1 * x1 + x2 * x2) + c2)
        for p in points:
            lap_worst = max(lap_worst, abs(laplacian_oracle(F, p)))
            ode_worst = max(ode_worst, abs(harmonics.radial_ode_check(c1, c2, math.hypot(*p))))
    ok = lap_worst <= 1e-9 and ode_worst <= 1e-12
    report(6, f"x1 (c1/x^2 + c2) max |lap| (<= 1e-9); radial ODE max residual {ode_worst:.3e} (<= 1e-12)",
           lap_worst, 1e-9, ok)


def test_criterion_7_separable_solutions():
    cyl_points = interior_points(SEED, 50, 3, margin=0.2)
    sph_points = spherical_points(SEED, 50)
    worst, weakest_perturbation = 0.0, math.inf
    for n, beta in ((0, 1.0), (1, 2.0), (2, 1.0)):
        s = solutions.CylSolution(n, beta, m_offset=0.5, k1=1.0, k2=0.5, k3=1.0, k4=0.3, k5=1.0, k6=0.2)
        worst = max(worst, solutions.residual_report(solutions.cartesian_field(s), cyl_points).max_residual)
        bad = solutions.residual_report(solutions.cartesian_field(s, axial_scale=1.1), cyl_points).max_residual
        weakest_perturbation = min(weakest_perturbation, bad)
    for l, m in ((1, 0), (2, 1), (3, 2)):
        for kind in solutions.RADIAL_KINDS:
            radial = {"k1": 1.0} if kind == "growing" else {"k2": 1.0}
            s = solutions.SphSolution(l, m, kind, k3=1.0, k4=0.4, k5=1.0, k6=0.7 if m == 0 else 0.0, **radial)
            worst = max(worst, solutions.residual_report(solutions.cartesian_field(s), sph_points).max_residual)
    ok = worst <= 1e-6 and weakest_perturbation >= 1e-2
    report(7, f"cylindrical + spherical max residual (<= 1e-6); alpha = 1.1 beta gives min {weakest_perturbation:.3e} (>= 1e-2)",
           worst, 1e-6, ok)


def test_criterion_8_special_function_consistency():
    wr = 0.0
    for x in np.linspace(0.5, 20.0, 200):
        x = float(x)
        for n in range(6):
            w = (specfun.bessel_j(n + 1, x).value * specfun.bessel_y(n, x).value
                 - specfun.bessel_j(n, x).value * specfun.bessel_y(n + 1, x).value)
            wr = max(wr, abs(w - 2 / (math.pi * x)) / (2 / (math.pi * x)))
    rng = np.random.default_rng(SEED)
    rec = 0.0
    for _ in range(200):
        l = int(rng.integers(1, 20))
        m = int(rng.integers(-l, l + 1))
        u = float(rng.uniform(-1, 1))
        p = [specfun.legendre_p(k, m, u).value if abs(m) <= k else 0.0 for k in (l - 1, l, l + 1)]
        terms = ((l + 1 - m) * p[2], (2 * l + 1) * u * p[1], (l + m) * p[0])
        rec = max(rec, abs(terms[0] - terms[1] + terms[2]) / max(1.0, *map(abs, terms)))
    ok = wr <= 1e-8 and rec <= 1e-10
    report(8, f"Wronskian max rel err (<= 1e-8); Legendre recurrence max rel residual {rec:.3e} (<= 1e-10)",
           wr, 1e-8, ok)


def test_criterion_9_figure_dataset(tmp_path, capsys):
    paths = [tmp_path / "run1.csv", tmp_path / "run2.csv"]
    for path in paths:
        code = main(["grid", "--range", "-2:2:81", "--range", "-2:2:81", "--field", "fig1", "--out", str(path)])
        assert code == 0
    capsys.readouterr()
    identical = paths[0].read_bytes() == paths[1].read_bytes()
    rows = list(csv.reader(io.StringIO(paths[0].read_text())))
    assert rows[0] == ["x1", "x2", "F"] and len(rows) == 1 + 81 * 81
    worst, finite = 0.0, 0
    for x1, x2, F in rows[1:]:
        if F == "":
            continue
        p = (float(x1), float(x2))
        assert float(F) == fig1(*p)
        worst = max(worst, abs(laplacian_oracle(fig1, p)))
        finite += 1
    ok = identical and worst <= 1e-9 and finite == 81 * 81 - 1
    report(9, f"81x81 fig1 CSV byte-identical={identical}, {finite} finite samples, max |lap|", worst, 1e-9, ok)
