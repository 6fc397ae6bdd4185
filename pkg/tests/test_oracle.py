import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hyperkin import oracle
from hyperkin.errors import IsotropicSegment, NullVelocity, StraightCurve
from hyperkin.hypnum import HyperbolicNumber as H, J, inner, mul
from hyperkin.oracle import SampledCurve

S1_ARC = 1.471739827  # closed form of the integral of sqrt(9 - 4t^2) on [0, 0.5]


def hyperbola(c0=H(0.0, 0.0), rho=1.0):
    pos = lambda t: c0 + H(math.cosh(t), math.sinh(t)) * rho
    vel = lambda t: H(math.sinh(t), math.cosh(t)) * rho
    acc = lambda t: H(math.cosh(t), math.sinh(t)) * rho
    return pos, vel, acc


def curve_of(expr, t0=-0.5, t1=1.5, exact=True):
    if exact:
        return SampledCurve.from_function(expr, t0, t1, 41, expr.velocity, expr.acceleration)
    return SampledCurve.from_function(expr, t0, t1, 41)


def test_arc_length_of_unit_hyperbola():
    pos, vel, acc = hyperbola()
    c = SampledCurve.from_function(pos, 0.0, 2.0, 21, vel, acc)
    assert oracle.lorentz_arc_length(c, 0.0, 2.0) == pytest.approx(2.0, rel=1e-10)
    assert oracle.lorentz_arc_length(c, 0.5, 1.25) == pytest.approx(0.75, rel=1e-10)


def test_arc_length_of_null_line_raises():
    line = lambda t: H(t, t)
    c = SampledCurve.from_function(line, 0.0, 1.0, 11, lambda t: H(1.0, 1.0), lambda t: H(0.0, 0.0))
    with pytest.raises(IsotropicSegment):
        oracle.lorentz_arc_length(c, 0.0, 1.0)


@pytest.mark.parametrize("name", ["s1", "s2"])
def test_s1_centrode_arc_length(name, request):
    spec = request.getfixturevalue(name)
    for c in (spec.moving_centrode, spec.fixed_centrode):
        length = oracle.lorentz_arc_length(curve_of(c, 0.0, 1.0), 0.0, 0.5)
        assert length == pytest.approx(S1_ARC, abs=1e-8)
        assert length == pytest.approx(1.47170, abs=1e-4)


def test_arc_length_from_samples_only(s1):
    c = s1.moving_centrode
    ts = np.linspace(0.0, 0.5, 201)
    sampled = SampledCurve.from_samples(ts, [c(float(t)).as_tuple() for t in ts])
    assert oracle.lorentz_arc_length(sampled, 0.0, 0.5) == pytest.approx(S1_ARC, rel=1e-6)


def test_osculating_center_of_hyperbola_is_its_center():
    c0 = H(0.3, -2.0)
    for rho in (1.0, 2.5):
        pos, vel, acc = hyperbola(c0, rho)
        c = SampledCurve.from_function(pos, -1.0, 1.0, 21, vel, acc)
        for t in (-0.5, 0.0, 0.7):
            assert abs(oracle.osculating_center(c, t) - c0) < 1e-12
            assert abs(oracle.osculating_center(c, t, mode="fd") - c0) < 1e-7


def test_osculating_center_s1_examples(s1):
    # the trajectory of the point at the pole + 0.5 along the tangent is centered at the pole
    c = curve_of(s1.trajectory_expr(H(-0.5, -1.0)))
    assert abs(oracle.osculating_center(c, 0.0) - H(0.0, -1.0)) < 1e-12
    c = curve_of(s1.trajectory_expr(H(0.0, 0.0)))
    assert abs(oracle.osculating_center(c, 0.0) - H(0.0, -0.25)) < 1e-12


def test_osculating_center_errors():
    line = lambda t: H(2 * t, t)
    c = SampledCurve.from_function(line, 0.0, 1.0, 11, lambda t: H(2.0, 1.0), lambda t: H(0.0, 0.0))
    with pytest.raises(StraightCurve):
        oracle.osculating_center(c, 0.5)
    null = SampledCurve.from_function(lambda t: H(t, t), 0.0, 1.0, 11,
                                      lambda t: H(1.0, 1.0), lambda t: H(1.0, 0.0))
    with pytest.raises(NullVelocity):
        oracle.osculating_center(null, 0.5)


@given(st.floats(-1.0, 1.2), st.floats(-2.0, 2.0), st.floats(-2.0, 2.0))
def test_osculating_center_lies_on_the_normal(t, x, y):
    from hyperkin.scenarios import s1

    traj = s1().trajectory_expr(H(x, y))
    v = traj.velocity(t)
    if abs(v.quad()) < 1e-6 * (1 + abs(v) ** 2):
        return
    c = curve_of(traj, t - 0.1, t + 0.1)
    try:
        center = oracle.osculating_center(c, t)
    except StraightCurve:
        return
    offset = center - traj(t)
    assert abs(inner(offset, v)) <= 1e-10 * max(1.0, abs(offset) * abs(v))


def test_tangent_angle_rates_s1(s1):
    m, f = curve_of(s1.moving_centrode), curve_of(s1.fixed_centrode)
    assert oracle.tangent_angle_rate(m, 0.0) == pytest.approx(5 / 3, abs=1e-12)
    assert oracle.tangent_angle_rate(f, 0.0) == pytest.approx(8 / 3, abs=1e-12)
    for t in np.linspace(0.0, 1.2, 13):
        diff = oracle.tangent_angle_rate(f, float(t)) - oracle.tangent_angle_rate(m, float(t))
        assert diff == pytest.approx(1.0, abs=1e-8)


def test_tangent_angle_rate_of_hyperbola_is_one():
    for rho in (1.0, 3.0):
        pos, vel, acc = hyperbola(rho=rho)
        c = SampledCurve.from_function(pos, -1.0, 1.0, 21, vel, acc)
        for t in (-0.4, 0.0, 0.6):
            assert oracle.tangent_angle_rate(c, t) == pytest.approx(1.0, abs=1e-12)
            assert oracle.tangent_angle_rate(c, t, mode="fd") == pytest.approx(1.0, rel=1e-6)


@pytest.mark.parametrize("name", ["s1", "s2"])
def test_exact_and_fd_modes_agree(name, request):
    spec = request.getfixturevalue(name)
    for expr in (spec.moving_centrode, spec.fixed_centrode, spec.trajectory_expr(H(0.4, 0.9))):
        exact, fd = curve_of(expr), curve_of(expr, exact=False)
        for t in (0.0, 0.3, 0.8):
            v_e, a_e = oracle.derivatives(exact, t)
            v_f, a_f = oracle.derivatives(fd, t)
            assert abs(v_e - v_f) <= 1e-6 * abs(v_e)
            assert abs(a_e - a_f) <= 1e-6 * max(1.0, abs(a_e))
            r_e = oracle.tangent_angle_rate(exact, t)
            assert oracle.tangent_angle_rate(fd, t) == pytest.approx(r_e, rel=1e-6)
            c_e = oracle.osculating_center(exact, t)
            assert abs(oracle.osculating_center(fd, t) - c_e) <= 1e-6 * max(1.0, abs(c_e))


def test_sample_mode_derivatives(s1):
    c = s1.fixed_centrode
    ts = np.linspace(-0.2, 0.2, 41)
    sampled = SampledCurve.from_samples(ts, [c(float(t)).as_tuple() for t in ts])
    v, a = oracle.derivatives(sampled, float(ts[20]))
    assert abs(v - c.velocity(0.0)) < 1e-6
    assert abs(a - c.acceleration(0.0)) < 1e-4
    with pytest.raises(ValueError):
        oracle.derivatives(sampled, float(ts[0]))
    with pytest.raises(ValueError):
        oracle.derivatives(sampled, 0.013)


def test_sampled_curve_validation():
    with pytest.raises(ValueError):
        SampledCurve.from_samples([0.0, 1.0, 2.0], np.zeros((3, 2)))
    with pytest.raises(ValueError):
        SampledCurve.from_samples([0.0, 2.0, 1.0, 3.0, 4.0], np.zeros((5, 2)))
    with pytest.raises(ValueError):
        oracle.derivatives(SampledCurve.from_function(lambda t: H(t, 0.0), 0.0, 1.0, 5), 0.5, mode="exact")
