"""Invariant suites run by ``hyperkin verify``.

Each suite returns a ``SuiteResult``; PASS needs every checked quantity
inside its tolerance and at least one quantity checked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import canonical as cn
from . import motion as mo
from . import oracle
from . import timefun as tf
from .errors import HyperkinError, IsotropicSegment, NoConjugate
from .hypnum import HyperbolicNumber, cross, exp_j, inner, mul, norm_h


@dataclass
class VerifyConfig:
    seed: int = 20090317
    algebra_triples: int = 10_000
    algebra_tol: float = 1e-12
    rotation_tol: float = 1e-9
    composition_samples: int = 100
    composition_tol: float = 1e-9
    derivative_tol: float = 1e-6
    sliding_at_pole_tol: float = 1e-8
    pole_formula_tol: float = 1e-12
    speed_tol: float = 1e-7
    arc_rel_tol: float = 1e-6
    frame_identity_tol: float = 1e-8
    es_times: int = 5
    es_directions: int = 20
    es_radius: float = 0.5
    es_rel_tol: float = 1e-5
    involution_rel_tol: float = 1e-6
    collinear_tol: float = 1e-10


@dataclass
class SuiteResult:
    name: str
    status: str  # PASS / FAIL / SKIP
    worst: float = 0.0
    tolerance: float = 0.0
    checked: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "PASS"


def _finish(name: str, worst: float, tol: float, checked: int, notes: list[str]) -> SuiteResult:
    if checked == 0:
        return SuiteResult(name, "SKIP", worst, tol, 0, notes or ["nothing to check"])
    return SuiteResult(name, "PASS" if worst <= tol else "FAIL", worst, tol, checked, notes)


def _random_hn(rng, size: float = 10.0) -> HyperbolicNumber:
    return HyperbolicNumber(*rng.uniform(-size, size, 2))


def algebra_suite(config: VerifyConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    worst_alg = 0.0
    worst_rot = 0.0
    for _ in range(config.algebra_triples):
        z, w, v = (_random_hn(rng) for _ in range(3))
        zw = mul(z, w)
        scale2 = abs(z) * abs(w)
        scale3 = scale2 * abs(v)
        worst_alg = max(
            worst_alg,
            abs(zw - mul(w, z)) / scale2,
            abs(mul(zw, v) - mul(z, mul(w, v))) / scale3,
            abs(mul(z, w + v) - (zw + mul(z, v))) / (abs(z) * (abs(w) + abs(v))),
        )
        e = exp_j(float(rng.uniform(-3.0, 3.0)))
        lhs = inner(mul(z, e), mul(w, e))
        worst_rot = max(worst_rot, abs(lhs - inner(z, w)) / scale2)
    # one figure of merit: each part measured against its own tolerance
    worst = max(worst_alg / config.algebra_tol, worst_rot / config.rotation_tol)
    notes = [f"product laws {worst_alg:.2e} (tol {config.algebra_tol:g})",
             f"rotation invariance {worst_rot:.2e} (tol {config.rotation_tol:g})"]
    return _finish("algebra", worst, 1.0, config.algebra_triples, notes)


def derivative_suite(spec: mo.MotionSpec, t0: float, t1: float, config: VerifyConfig) -> SuiteResult:
    worst, checked, notes = 0.0, 0, []
    for name, e in spec.expressions().items():
        d = e.derivative
        for t in np.linspace(t0, t1, 11):
            t = float(t)
            try:
                err = abs(d(t) - tf.central_difference(e, t))
            except (ArithmeticError, HyperkinError) as exc:
                notes.append(f"{name} at t={t:g}: {exc}")
                continue
            worst = max(worst, err / max(1.0, abs(d(t))))
            checked += 1
    return _finish("derivatives", worst, config.derivative_tol, checked, notes)


def composition_suite(spec: mo.MotionSpec, t0: float, t1: float, config: VerifyConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed + 1)
    worst, checked, skipped = 0.0, 0, 0
    for _ in range(config.composition_samples):
        t = float(rng.uniform(t0, t1))
        x, dx = _random_hn(rng, 2.0), _random_hn(rng, 2.0)
        try:
            va = mo.absolute_velocity(spec, x, dx, t)
            vf = mo.sliding_velocity(spec, x, t)
            vr = mo.relative_velocity(spec, x, dx, t, axes="Hp")
        except HyperkinError:
            skipped += 1
            continue
        worst = max(worst, abs(va - (vf + vr)) / (1.0 + abs(va)))
        checked += 1
    notes = [f"{skipped} degenerate instants skipped"] if skipped else []
    return _finish("composition", worst, config.composition_tol, checked, notes)


def pole_suite(spec: mo.MotionSpec, t0: float, t1: float, samples: int,
               config: VerifyConfig) -> SuiteResult:
    worst, checked, notes = 0.0, 0, []
    for t in np.linspace(t0, t1, samples):
        t = float(t)
        try:
            st = mo.pfaffians(spec, t)
            p = mo.pole_point(spec, t)
            p1, p2 = mo.pole_components(st)
        except HyperkinError as exc:
            notes.append(f"t={t:g}: {exc.token}")
            continue
        slide = abs(mo.sliding_velocity(spec, p.in_A, t))
        comp = max(abs(p1 - p.in_A.re), abs(p2 - p.in_A.uni)) / max(1.0, abs(p.in_A))
        worst = max(worst, slide / config.sliding_at_pole_tol, comp / config.pole_formula_tol)
        checked += 1
    return _finish("pole", worst, 1.0, checked, notes[:3])


def rolling_suite(spec: mo.MotionSpec, t0: float, t1: float, samples: int,
                  config: VerifyConfig) -> SuiteResult:
    worst, checked, notes = 0.0, 0, []
    ts = [float(t) for t in np.linspace(t0, t1, samples)]
    for t in ts:
        try:
            v_m, v_f = mo.centrode_velocities(spec, t)
        except (HyperkinError, ArithmeticError) as exc:
            notes.append(f"t={t:g}: {getattr(exc, 'token', 'eval_error')}")
            continue
        s_m, s_f = norm_h(v_m), norm_h(v_f)
        worst = max(worst, abs(s_m - s_f) / max(1.0, s_f) / config.speed_tol)
        checked += 1
    moving = _curve(spec.moving_centrode, t0, t1)
    fixed = _curve(spec.fixed_centrode, t0, t1)
    for a, b in zip(ts, ts[1:]):
        try:
            l_m = oracle.lorentz_arc_length(moving, a, b)
            l_f = oracle.lorentz_arc_length(fixed, a, b)
        except (IsotropicSegment, HyperkinError, ArithmeticError):
            notes.append(f"arc [{a:g}, {b:g}] skipped")
            continue
        worst = max(worst, abs(l_m - l_f) / max(l_f, 1e-300) / config.arc_rel_tol)
        checked += 1
    return _finish("rolling", worst, 1.0, checked, notes[:3])


def _curve(c: mo.CurveExpr, t0: float, t1: float) -> oracle.SampledCurve:
    return oracle.SampledCurve(np.array([t0, t1]), np.full((2, 2), np.nan), c, c.velocity, c.acceleration)


def frame_identity_suite(spec: mo.MotionSpec, t0: float, t1: float, samples: int,
                         config: VerifyConfig) -> SuiteResult:
    worst, checked, notes = 0.0, 0, []
    for t in np.linspace(t0, t1, samples):
        t = float(t)
        try:
            cd = cn.canonical_data(spec, t)
        except HyperkinError as exc:
            notes.append(f"t={t:g}: {exc.token}")
            continue
        lhs = (0.0 if math.isinf(cd.r_p) else 1.0 / cd.r_p) - (0.0 if math.isinf(cd.r) else 1.0 / cd.r)
        worst = max(worst, abs(lhs - cd.nu_dot / cd.s_dot))
        checked += 1
    return _finish("frame-identity", worst, config.frame_identity_tol, checked, notes[:3])


def probe_directions(count: int, radius: float) -> list[HyperbolicNumber]:
    """Evenly spread Euclidean directions, offset away from the null lines."""
    out = []
    for k in range(count):
        theta = 2.0 * math.pi * (k + 0.37) / count
        out.append(HyperbolicNumber(radius * math.cos(theta), radius * math.sin(theta)))
    return out


def oracle_conjugate(spec: mo.MotionSpec, cd: cn.CanonicalData, x_rel: HyperbolicNumber,
                     mode: str = "exact") -> HyperbolicNumber:
    """Pole-relative curvature center of X's trajectory, from curve geometry alone."""
    x_H = cd.point_in_moving(x_rel)
    traj = spec.trajectory_expr(x_H)
    t = cd.t
    h = 0.01 * max(1.0, abs(t))
    curve = oracle.SampledCurve.from_function(traj, t - 2 * h, t + 2 * h, 5,
                                              traj.velocity, traj.acceleration)
    return oracle.osculating_center(curve, t, mode) - cd.pole_Hp


def signed_along(v: HyperbolicNumber, direction: HyperbolicNumber) -> float:
    return inner(v, direction) / direction.quad()


def involution_error(spec: mo.MotionSpec, cd: cn.CanonicalData, pair: cn.ConjugatePair) -> float:
    """Relative distance between X and the conjugate of X' under the inverse motion."""
    inv = cn.canonical_data(spec.swapped(), cd.t)
    back = cn.conjugate_point(inv, cd.fixed_to_moving_axes(pair.x_rel_p))
    x_again = cd.moving_to_fixed_axes(back.x_rel_p)
    return abs(x_again - pair.x_rel) / abs(pair.x_rel)


def euler_savary_suite(spec: mo.MotionSpec, t0: float, t1: float, config: VerifyConfig) -> SuiteResult:
    worst, checked, notes = 0.0, 0, []
    directions = probe_directions(config.es_directions, config.es_radius)
    for t in np.linspace(t0, t1, config.es_times):
        t = float(t)
        try:
            cd = cn.canonical_data(spec, t)
        except HyperkinError as exc:
            notes.append(f"t={t:g}: {exc.token}")
            continue
        for x in directions:
            try:
                pair = cn.conjugate_point(cd, x)
            except NoConjugate:
                notes.append(f"t={t:g} x={x}: inflection locus")
                continue
            u = pair.direction
            expected = signed_along(oracle_conjugate(spec, cd, x), u)
            rel = abs(pair.a_p_signed - expected) / max(abs(expected), 1e-12 * pair.a)
            col = abs(cross(pair.x_rel, pair.x_rel_p)) / max(abs(pair.x_rel) * abs(pair.x_rel_p), 1e-300)
            parts = [rel / config.es_rel_tol, col / config.collinear_tol]
            if pair.a_p > 0:
                parts.append(involution_error(spec, cd, pair) / config.involution_rel_tol)
            worst = max(worst, *parts)
            checked += 1
    return _finish("euler-savary", worst, 1.0, checked, notes[:3])


def run_all(spec: mo.MotionSpec, t0: float, t1: float, samples: int,
            config: VerifyConfig | None = None) -> list[SuiteResult]:
    config = config or VerifyConfig()
    samples = max(samples, 2)
    return [
        algebra_suite(config),
        derivative_suite(spec, t0, t1, config),
        composition_suite(spec, t0, t1, config),
        pole_suite(spec, t0, t1, samples, config),
        rolling_suite(spec, t0, t1, samples, config),
        frame_identity_suite(spec, t0, t1, samples, config),
        euler_savary_suite(spec, t0, t1, config),
    ]


def format_report(results: list[SuiteResult]) -> str:
    lines = [f"{'suite':<16}{'status':<8}{'checked':>8}  worst/tol"]
    for r in results:
        ratio = r.worst / r.tolerance if r.tolerance else r.worst
        lines.append(f"{r.name:<16}{r.status:<8}{r.checked:>8}  {ratio:.3g}")
        lines.extend(f"    {note}" for note in r.notes)
    return "\n".join(lines)
