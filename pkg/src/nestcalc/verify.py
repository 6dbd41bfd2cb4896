"""Verification suites: every identity checked numerically against the jet oracle.

Each suite returns a list of :class:`CheckRecord`; :func:`run_suite`
bundles them into a :class:`VerifyReport`.  All randomness flows from the
seed, so a seed fixes the report.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import charts, harmonics, jets, operators, sampling, solutions, specfun
from .charts import ChartId
from .ga3 import E1, E2, E3, E12, Multivector, geometric_product, grade_part, random_multivector, vector, vector_inverse
from .jets import jet_eval, laplacian_oracle

SUITES = ("ga", "jets", "charts", "operators", "harmonics", "specfun", "solutions")

HARMONIC_TABLE = ((1, 0, 0), (0, 0, -1), (1, -2, 0), (1, 0, -3), (1, -2, 1))


@dataclass
class CheckRecord:
    check_id: str
    points: int
    max_residual: float
    tolerance: float
    # "max": pass when residual <= tolerance; "min": when residual >= tolerance
    bound: str = "max"

    @property
    def passed(self) -> bool:
        if not math.isfinite(self.max_residual):
            return False
        if self.bound == "min":
            return self.max_residual >= self.tolerance
        return self.max_residual <= self.tolerance


@dataclass
class VerifyReport:
    suite: str
    seed: int
    records: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "records": [dict(asdict(r), passed=r.passed) for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def table(self) -> str:
        width = max([len(r.check_id) for r in self.records] + [5])
        lines = [
            f"suite: {self.suite}   seed: {self.seed}",
            f"{'check':<{width}}  {'points':>6}  {'residual':>10}  {'tolerance':>10}  result",
        ]
        for r in self.records:
            op = ">=" if r.bound == "min" else "<="
            lines.append(
                f"{r.check_id:<{width}}  {r.points:>6}  {r.max_residual:>10.3e}  {op}{r.tolerance:>8.1e}  "
                f"{'pass' if r.passed else 'FAIL'}"
            )
        lines.append(f"overall: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _record(check_id: str, residuals: Iterable[float], tol: float, bound: str = "max") -> CheckRecord:
    values = list(residuals)
    worst = max(values) if values else float("nan")
    return CheckRecord(check_id, len(values), float(worst), tol, bound)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


# ga --------------------------------------------------------------------------------

def suite_ga(seed: int) -> list[CheckRecord]:
    rng = np.random.default_rng(seed)
    assoc = []
    for _ in range(100):
        a, b, c = (random_multivector(rng) for _ in range(3))
        left = geometric_product(geometric_product(a, b), c)
        right = geometric_product(a, geometric_product(b, c))
        assoc.append(max(abs(x - y) for x, y in zip(left.coeffs, right.coeffs)))
    basis = (E1, E2, E3)
    anti = []
    for i, ei in enumerate(basis):
        for j, ej in enumerate(basis):
            sym = geometric_product(ei, ej) + geometric_product(ej, ei)
            expected = Multivector.scalar(2.0 if i == j else 0.0)
            anti.append(max(abs(x - y) for x, y in zip(sym.coeffs, expected.coeffs)))
    sym_res, square_res, inv_res = [], [], []
    for _ in range(100):
        a, b = (random_multivector(rng, grades=(1,)) for _ in range(2))
        sym = geometric_product(a, b) + geometric_product(b, a)
        dot = float(np.dot(a.vector_part, b.vector_part))
        sym_res.append(max(abs(x - y) for x, y in zip(sym.coeffs, Multivector.scalar(2 * dot).coeffs)))
        vv = geometric_product(a, a)
        square_res.append(
            max(abs(grade_part(vv, 0).scalar_part - float(np.dot(a.vector_part, a.vector_part))),
                max(abs(c) for c in grade_part(vv, 2).coeffs))
        )
        one = geometric_product(a, vector_inverse(a))
        inv_res.append(max(abs(x - y) for x, y in zip(one.coeffs, Multivector.scalar(1.0).coeffs)))
    return [
        _record("ga.associativity", assoc, 1e-12),
        _record("ga.basis_anticommutation", anti, 0.0),
        _record("ga.symmetrized_product", sym_res, 1e-12),
        _record("ga.vector_square", square_res, 1e-12),
        _record("ga.vector_inverse", inv_res, 1e-12),
    ]


# jets ----------------------------------------------------------------------------------

def random_rational_field(rng) -> Callable:
    """Seeded field P(x) / (1 + Q(x)^2) with random cubic polynomials P, Q in 3 variables."""
    def poly():
        terms = []
        for _ in range(6):
            exps = tuple(int(e) for e in rng.integers(0, 3, size=3))
            terms.append((float(rng.normal()), exps))
        return terms

    P, Q = poly(), poly()

    def ev(terms, x):
        total = 0.0
        for c, (a, b, d) in terms:
            total = total + c * jets.power(x[0], a) * jets.power(x[1], b) * jets.power(x[2], d)
        return total

    def f(*x):
        q = ev(Q, x)
        return ev(P, x) / (1.0 + q * q)

    return f


def suite_jets(seed: int) -> list[CheckRecord]:
    rng = np.random.default_rng(seed)
    fd_res, lin_res, sym_res = [], [], []
    for _ in range(100):
        f, g = random_rational_field(rng), random_rational_field(rng)
        p = tuple(float(v) for v in rng.uniform(-1, 1, size=3))
        h = 1e-4 * max(1.0, float(np.max(np.abs(p))))
        j, fd = jet_eval(f, p), jets.fd_jet(f, p, h)
        scale = max(1.0, abs(j.value))
        fd_res.append(max(np.max(np.abs(j.gradient - fd.gradient)), np.max(np.abs(j.hessian - fd.hessian))) / scale)
        a, b = float(rng.normal()), float(rng.normal())
        jl = jet_eval(lambda *x: a * f(*x) + b * g(*x), p)
        jf, jg = j, jet_eval(g, p)
        expect = [a * u + b * v for u, v in zip((jf.value,) + jf.grad + jf.hess, (jg.value,) + jg.grad + jg.hess)]
        got = (jl.value,) + jl.grad + jl.hess
        lin_res.append(max(abs(x - y) / max(1.0, abs(y)) for x, y in zip(got, expect)))
        H = j.hessian
        sym_res.append(float(np.max(np.abs(H - H.T))))
    radial = jet_eval(lambda *x: jets.hypot(*x), (1.0, 2.0, 2.0))
    return [
        _record("jets.fd_agreement", fd_res, 1e-5),
        _record("jets.linearity", lin_res, 1e-12),
        _record("jets.hessian_symmetry", sym_res, 0.0),
        _record("jets.grad_radius_is_unit", [float(np.max(np.abs(radial.gradient - np.array([1, 2, 2]) / 3)))], 1e-15),
        _record("jets.inverse_radius_harmonic", [abs(laplacian_oracle(lambda *x: 1 / jets.hypot(*x), (1.0, 2.0, 2.0)))], 1e-12),
    ]


# charts ------------------------------------------------------------------------------

def _xhat_field(*x):
    r = jets.hypot(*x)
    return vector(*(c / r for c in x))


def theta_field(*x):
    return charts.azimuth(x[0], x[1])


def phi_field(x1, x2, x3):
    return charts.polar_angle(x1, x2, x3)


def sphere_chain_product(x1: float, x2: float, x3: float) -> Multivector:
    """``(d_theta xhat_p)(d_theta xhat)`` at a point, both derivatives by jets."""
    cp = charts.to_chart(ChartId.SPHERICAL, (x1, x2, x3))
    _, theta, phi = cp.coords
    t = jets.Jet2.variable(theta, 0, 1)
    xhat_p = vector(jets.cos(t), jets.sin(t), 0.0)
    xhat = E3 * math.cos(phi) + xhat_p * math.sin(phi)
    d = lambda mv: Multivector(tuple(c.grad[0] if isinstance(c, jets.Jet2) else 0.0 for c in mv.coeffs))
    return geometric_product(d(xhat_p), d(xhat))


def suite_charts(seed: int) -> list[CheckRecord]:
    out = []
    pts3 = sampling.interior_points(seed, 1000, 3)
    for chart in ChartId:
        res = []
        for p in pts3:
            q = p[:2] if chart.planar else p
            if chart in (ChartId.NESTED12, ChartId.NESTED123):
                # nested charts reconstruct the non-negative branch
                q = (q[0],) + tuple(abs(v) for v in q[1:])
            back = charts.from_chart(charts.to_chart(chart, q))
            res.append(max(abs(a - b) for a, b in zip(back, q)))
        out.append(_record(f"charts.roundtrip.{chart.value}", res, 1e-12))

    pts = sampling.interior_points(seed + 1, 100, 3)
    for n in (2, 3):
        res = []
        for p in pts:
            q = p[:n]
            d = operators.vector_derivative(_xhat_field, q)
            r = math.sqrt(sum(v * v for v in q))
            bivector = max(abs(c) for c in grade_part(d, 2).coeffs)
            res.append(max(_rel(d.scalar_part, (n - 1) / r) * max(1.0, (n - 1) / r) / ((n - 1) / r), bivector))
        out.append(_record(f"charts.div_xhat.n{n}", res, 1e-10))

    lap_t2, grad_t2, lap_t3, grad_t3, lap_phi, grad_phi = [], [], [], [], [], []
    for x1, x2, x3 in pts:
        j2 = jet_eval(theta_field, (x1, x2))
        lap_t2.append(abs(j2.laplacian))
        grad_t2.append(abs(float(j2.gradient @ j2.gradient) - 1 / (x1 * x1 + x2 * x2)))
        j3 = jet_eval(theta_field, (x1, x2, x3))
        lap_t3.append(abs(j3.laplacian))
        grad_t3.append(abs(float(j3.gradient @ j3.gradient) - 1 / (x1 * x1 + x2 * x2)))
        jp = jet_eval(phi_field, (x1, x2, x3))
        r2 = x1 * x1 + x2 * x2 + x3 * x3
        xp = math.hypot(x1, x2)
        lap_phi.append(abs(jp.laplacian - x3 / (r2 * xp)))
        grad_phi.append(abs(float(jp.gradient @ jp.gradient) - 1 / r2))
    out += [
        _record("charts.laplacian_theta.2d", lap_t2, 1e-9),
        _record("charts.grad_theta_squared.2d", grad_t2, 1e-9),
        _record("charts.laplacian_theta.3d", lap_t3, 1e-9),
        _record("charts.grad_theta_squared.3d", grad_t3, 1e-9),
        _record("charts.laplacian_phi", lap_phi, 1e-9),
        _record("charts.grad_phi_squared", grad_phi, 1e-9),
    ]

    for chart in ChartId:
        res = []
        for p in pts:
            q = p[:2] if chart.planar else p
            fr = charts.frame_vectors(chart, q)
            for c, vec in enumerate(fr):
                j = jet_eval(lambda *x, c=c: charts.chart_coordinates(chart, *x)[c], q)
                res.append(max(abs(a - b) for a, b in zip(vec.vector_part[: len(q)], j.grad)))
        out.append(_record(f"charts.frame_consistency.{chart.value}", res, 1e-10))

    res = []
    for p in pts:
        prod = sphere_chain_product(*p)
        sin_phi = math.hypot(p[0], p[1]) / math.sqrt(sum(v * v for v in p))
        res.append(max(abs(prod.scalar_part - sin_phi), max(abs(c) for c in prod.coeffs[1:])))
    out.append(_record("charts.sphere_chain_identity", res, 1e-10))
    return out


# operators ------------------------------------------------------------------------------

J = jets

TEST_FIELDS: dict[str, list[tuple[str, Callable]]] = {
    "polar": [
        ("x^4 cos t sin t", lambda x, t: x ** 4 * J.cos(t) * J.sin(t)),
        ("1/x", lambda x, t: 1 / x),
        ("log x", lambda x, t: J.log(x)),
        ("x^3 sin 3t", lambda x, t: x ** 3 * J.sin(3 * t)),
        ("x^2 cos^2 t + x", lambda x, t: x ** 2 * J.cos(t) ** 2 + x),
    ],
    "nested12": [
        ("x1^2 x^2", lambda a, x: a ** 2 * x ** 2),
        ("1/x", lambda a, x: 1 / x),
        ("log x", lambda a, x: J.log(x)),
        ("x1/x^2", lambda a, x: a / x ** 2),
        ("x1^3 x + x1", lambda a, x: a ** 3 * x + a),
    ],
    "nested123": [
        ("x1^2 xp x", lambda a, xp, x: a ** 2 * xp * x),
        ("1/x", lambda a, xp, x: 1 / x),
        ("log xp", lambda a, xp, x: J.log(xp)),
        ("x1 x/xp^2", lambda a, xp, x: a * x / xp ** 2),
        ("x1^4 + xp^3 x", lambda a, xp, x: a ** 4 + xp ** 3 * x),
    ],
    "cylindrical": [
        ("xp^2 x3^2", lambda xp, t, z: xp ** 2 * z ** 2),
        ("log xp", lambda xp, t, z: J.log(xp)),
        ("xp cos t x3^3", lambda xp, t, z: xp * J.cos(t) * z ** 3),
        ("1/sqrt(xp^2+x3^2)", lambda xp, t, z: 1 / J.sqrt(xp * xp + z * z)),
        ("xp^3 sin 2t x3", lambda xp, t, z: xp ** 3 * J.sin(2 * t) * z),
    ],
    "spherical": [
        ("x^4 cos^2 phi", lambda x, t, f: x ** 4 * J.cos(f) ** 2),
        ("1/x", lambda x, t, f: 1 / x),
        ("x^2 sin^2 phi cos 2t", lambda x, t, f: x ** 2 * J.sin(f) ** 2 * J.cos(2 * t)),
        ("x cos phi", lambda x, t, f: x * J.cos(f)),
        ("log(x sin phi)", lambda x, t, f: J.log(x * J.sin(f))),
    ],
}
TEST_FIELDS["mixed123"] = TEST_FIELDS["nested123"]


def oracle_gap(name: str, g: Callable, p) -> float:
    """Relative gap between a chart Laplacian and the rectangular oracle."""
    op = operators.CHART_LAPLACIANS[name]
    q = p[:2] if op.chart.planar else p
    formula = op.at(g, q)
    oracle = laplacian_oracle(charts.compose(op.chart, g), q)
    return abs(formula - oracle) / max(1.0, abs(oracle))


def suite_operators(seed: int) -> list[CheckRecord]:
    out = []
    pts = sampling.interior_points(seed, 100, 3)
    for name, fields in TEST_FIELDS.items():
        gaps = [oracle_gap(name, g, p) for _, g in fields for p in pts]
        out.append(_record(f"operators.oracle.{name}", gaps, 1e-8))

    closure = []
    for t in HARMONIC_TABLE:
        g = harmonics.monomial_field(t)
        for p in pts[:50]:
            cp = charts.to_chart(ChartId.NESTED123, p)
            closure.append(max(abs(operators.laplacian_nested123(g, cp)),
                               abs(operators.laplacian_mixed123(g, p)),
                               abs(laplacian_oracle(harmonics.monomial_cartesian(t), p))))
    out.append(_record("operators.harmonic_closure", closure, 1e-9))

    for name in ("polar", "nested12", "nested123", "cylindrical", "spherical"):
        chart = charts.as_chart(name)
        grad_res, div_res = [], []
        for _, g in TEST_FIELDS[name]:
            for p in pts[:20]:
                q = p[:2] if chart.planar else p
                mv = operators.gradient_in_chart(chart, g, q)
                ref = jet_eval(charts.compose(chart, g), q)
                scale = max(1.0, float(np.max(np.abs(ref.gradient))))
                grad_res.append(float(np.max(np.abs(np.array(mv.vector_part[: len(q)]) - ref.gradient))) / scale)
                lap = operators.CHART_LAPLACIANS[name].at(g, q)
                div_res.append(_rel(operators.gradient_divergence(chart, g, q), lap))
        out.append(_record(f"operators.gradient.{name}", grad_res, 1e-10))
        out.append(_record(f"operators.gradient_divergence.{name}", div_res, 1e-8))

    f = lambda a, x: a * x ** 2
    f3 = lambda a, xp, x: a * x ** 2
    mixed = [
        abs(operators.ordinary_of_hat(ChartId.NESTED12, f, (1.0, 2.0)) - 2.0),
        abs(operators.hat_of_ordinary(ChartId.NESTED12, f, (1.0, 2.0)) - 4.0),
        abs(operators.ordinary_of_hat(ChartId.NESTED123, f3, (1.0, 2.0, 2.0)) - 2.0),
        abs(operators.hat_of_ordinary(ChartId.NESTED123, f3, (1.0, 2.0, 2.0)) - 4.0),
    ]
    out.append(_record("operators.mixed_partials_noncommuting", mixed, 1e-12))

    mixed12 = []
    for _, g in TEST_FIELDS["nested12"]:
        for p in pts[:20]:
            q = p[:2]
            mixed12.append(_rel(operators.laplacian_mixed12(g, q), operators.laplacian_nested12(g, charts.to_chart("nested12", q))))
    out.append(_record("operators.nested12_two_forms", mixed12, 1e-8))

    sep = []
    R, Th = (lambda x: x ** 3 + J.log(x)), (lambda t: J.cos(2 * t) + J.sin(t))
    for p in pts[:50]:
        cp = charts.to_chart(ChartId.POLAR, p[:2])
        x, t = cp.coords
        jr, jt = jet_eval(R, (x,)), jet_eval(Th, (t,))
        split = jr.hess[0] * jt.value + jr.grad[0] * jt.value / x + jr.value * jt.hess[0] / (x * x)
        sep.append(_rel(operators.laplacian_polar(lambda x, t: R(x) * Th(t), cp), split))
    out.append(_record("operators.polar_separation", sep, 1e-10))
    return out


# harmonics ----------------------------------------------------------------------------

def monomial_residuals(t, points) -> list[float]:
    f = harmonics.monomial_cartesian(t)
    return [abs(laplacian_oracle(f, p)) for p in points]


def suite_harmonics(seed: int) -> list[CheckRecord]:
    rng_range = range(-5, 6)
    found = [t.as_tuple() for t in harmonics.enumerate_harmonic_monomials(rng_range, rng_range, rng_range)]
    out = [_record("harmonics.table", [0.0 if sorted(found) == sorted(HARMONIC_TABLE) else 1.0], 0.0)]
    pts = sampling.interior_points(seed, 50, 3)
    for t in found:
        out.append(_record(f"harmonics.monomial({t[0]},{t[1]},{t[2]})", monomial_residuals(t, pts), 1e-9))
    planar = sampling.interior_points(seed + 1, 50, 2)
    for c1, c2 in ((1.0, 0.0), (0.0, 1.0), (2.0, -3.0)):
        g = harmonics.planar_family_field(c1, c2)
        res = []
        for p in planar:
            res.append(abs(laplacian_oracle(charts.compose(ChartId.NESTED12, g), p)))
            res.append(abs(operators.laplacian_nested12(g, charts.to_chart(ChartId.NESTED12, p))))
        out.append(_record(f"harmonics.planar_family({c1:g},{c2:g})", res, 1e-9))
        xs = [math.hypot(*p) for p in planar]
        out.append(_record(f"harmonics.radial_ode({c1:g},{c2:g})", [abs(harmonics.radial_ode_check(c1, c2, x)) for x in xs], 1e-12))
    return out


# specfun -------------------------------------------------------------------------------

def bessel_ode_residual(n: int, x: float, h: float = 1e-2) -> float:
    """``x^2 J'' + x J' + (x^2 - n^2) J`` with five-point central differences."""
    f = [specfun.bessel_j(n, x + k * h).value for k in (-2, -1, 0, 1, 2)]
    d1 = (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h)
    d2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h)
    return x * x * d2 + x * d1 + (x * x - n * n) * f[2]


def suite_specfun(seed: int) -> list[CheckRecord]:
    rng = np.random.default_rng(seed)
    wr = []
    for x in np.linspace(0.5, 20.0, 80):
        x = float(x)
        for n in range(6):
            lhs = specfun.bessel_j(n + 1, x).value * specfun.bessel_y(n, x).value - specfun.bessel_j(n, x).value * specfun.bessel_y(n + 1, x).value
            wr.append(abs(lhs - 2 / (math.pi * x)) / (2 / (math.pi * x)))
    rec = []
    for x in np.linspace(0.5, 50.0, 100):
        x = float(x)
        for n in range(1, 20):
            j = [specfun.bessel_j(k, x).value for k in (n - 1, n, n + 1)]
            rec.append(abs(j[0] + j[2] - 2 * n / x * j[1]))
    leg = []
    for _ in range(200):
        l = int(rng.integers(1, 20))
        m = int(rng.integers(-l, l + 1))
        u = float(rng.uniform(-1, 1))
        p = [specfun.legendre_p(k, m, u).value if abs(m) <= k else 0.0 for k in (l - 1, l, l + 1)]
        terms = ((l + 1 - m) * p[2], (2 * l + 1) * u * p[1], (l + m) * p[0])
        leg.append(abs(terms[0] - terms[1] + terms[2]) / max(1.0, *map(abs, terms)))
    ode = [abs(bessel_ode_residual(n, float(x))) for n in range(0, 11) for x in np.linspace(0.5, 49.9, 50)]
    q_closed = []
    for u in np.linspace(-0.99, 0.99, 41):
        u = float(u)
        q0 = 0.5 * math.log((1 + u) / (1 - u))
        q_closed.append(abs(specfun.legendre_q(0, u).value - q0))
        q_closed.append(abs(specfun.legendre_q(1, u).value - (u * q0 - 1)))
    return [
        _record("specfun.bessel_wronskian", wr, 1e-8),
        _record("specfun.bessel_recurrence", rec, 1e-9),
        _record("specfun.legendre_recurrence", leg, 1e-10),
        _record("specfun.bessel_ode_fd", ode, 1e-5),
        _record("specfun.legendre_q_closed_form", q_closed, 1e-12),
    ]


# solutions ------------------------------------------------------------------------------

CYL_CASES = ((0, 1.0), (1, 2.0), (2, 1.0))
SPH_CASES = ((1, 0), (2, 1), (3, 2))


def cyl_case(n: int, beta: float) -> solutions.CylSolution:
    return solutions.CylSolution(n, beta, m_offset=0.5, k1=1.0, k2=0.5, k3=1.0, k4=0.3, k5=1.0, k6=0.2)


def sph_case(l: int, m: int, kind: str) -> solutions.SphSolution:
    radial = {"k1": 1.0} if kind == "growing" else {"k2": 1.0}
    return solutions.SphSolution(l, m, kind, k3=1.0, k4=0.4, k5=1.0, k6=0.7 if m == 0 else 0.0, **radial)


def suite_solutions(seed: int) -> list[CheckRecord]:
    out = []
    cyl_pts = sampling.interior_points(seed, 50, 3, margin=0.2)
    for n, beta in CYL_CASES:
        s = cyl_case(n, beta)
        rep = solutions.residual_report(solutions.cartesian_field(s), cyl_pts)
        out.append(_record(f"solutions.cylindrical(n={n},beta={beta:g})", [r for _, r in rep.records], 1e-6))
        bad = solutions.residual_report(solutions.cartesian_field(s, axial_scale=1.1), cyl_pts)
        out.append(_record(f"solutions.cylindrical_perturbed(n={n},beta={beta:g})", [bad.max_residual], 1e-2, "min"))
    sph_pts = sampling.spherical_points(seed + 1, 50)
    for l, m in SPH_CASES:
        for kind in solutions.RADIAL_KINDS:
            rep = solutions.residual_report(solutions.cartesian_field(sph_case(l, m, kind)), sph_pts)
            out.append(_record(f"solutions.spherical(l={l},mAz={m},{kind})", [r for _, r in rep.records], 1e-6))
    return out


_SUITE_FUNCS = {
    "ga": suite_ga,
    "jets": suite_jets,
    "charts": suite_charts,
    "operators": suite_operators,
    "harmonics": suite_harmonics,
    "specfun": suite_specfun,
    "solutions": suite_solutions,
}


def run_suite(name: str, seed: int = 42, tol: float | None = None) -> VerifyReport:
    """Run one suite (or ``"all"``).  ``tol`` replaces every upper-bound tolerance."""
    names = SUITES if name == "all" else (name,)
    if any(n not in _SUITE_FUNCS for n in names):
        raise ValueError(f"unknown suite {name!r}; expected 'all' or one of {SUITES}")
    report = VerifyReport(name, seed)
    for n in names:
        report.records.extend(_SUITE_FUNCS[n](seed))
    if tol is not None:
        for r in report.records:
            if r.bound == "max":
                r.tolerance = tol
    return report
