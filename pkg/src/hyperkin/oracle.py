"""Minkowski-plane curve geometry, kept independent of the kinematics code.

Curves are sampled points with optional exact derivative callbacks.
Without callbacks, derivatives come from 5-point central stencils, either
on a position function or on the stored uniform samples.  The metric is
the Lorentzian one from ``hypnum``; normals are ``j * velocity``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from .errors import IsotropicSegment, NullVelocity, StraightCurve
from .hypnum import ISOTROPY_TOL, J, HyperbolicNumber, cross, inner, is_isotropic, mul, norm_h, to_polar

PointFn = Callable[[float], HyperbolicNumber]

#: |<acc, n>| <= STRAIGHT_TOL * |acc| * |n| means the center is at infinity.
STRAIGHT_TOL = 1e-12


@dataclass(frozen=True)
class SampledCurve:
    ts: np.ndarray
    points: np.ndarray  # (n, 2) re/uni pairs
    position: Optional[PointFn] = None
    velocity: Optional[PointFn] = None
    acceleration: Optional[PointFn] = None

    def __post_init__(self):
        ts = np.asarray(self.ts, dtype=float)
        pts = np.asarray(self.points, dtype=float).reshape(len(ts), 2)
        if len(ts) and np.any(np.diff(ts) <= 0):
            raise ValueError("sample times must be strictly increasing")
        if self.position is None and len(ts) < 5:
            raise ValueError("finite-difference mode needs at least 5 samples")
        object.__setattr__(self, "ts", ts)
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_function(cls, f: PointFn, t0: float, t1: float, n: int = 65,
                      velocity: Optional[PointFn] = None,
                      acceleration: Optional[PointFn] = None) -> SampledCurve:
        ts = np.linspace(t0, t1, n)
        pts = np.array([f(float(t)).as_tuple() for t in ts])
        return cls(ts, pts, f, velocity, acceleration)

    @classmethod
    def from_samples(cls, ts, points) -> SampledCurve:
        return cls(np.asarray(ts, dtype=float), np.asarray(points, dtype=float))

    @property
    def exact(self) -> bool:
        return self.velocity is not None

    def point(self, t: float) -> HyperbolicNumber:
        if self.position is not None:
            return self.position(t)
        return _hn(self.points[self._sample_index(t)])

    def _sample_index(self, t: float, margin: int = 0) -> int:
        i = int(np.argmin(np.abs(self.ts - t)))
        if not math.isclose(self.ts[i], t, rel_tol=1e-12, abs_tol=1e-12):
            raise ValueError(f"t={t!r} is not a sample time and the curve has no position function")
        if i < margin or i > len(self.ts) - 1 - margin:
            raise ValueError(f"t={t!r} is too close to the end of the samples")
        return i

    def _sample_step(self) -> float:
        steps = np.diff(self.ts)
        h = float(steps.mean())
        if not np.allclose(steps, h, rtol=1e-9, atol=0.0):
            raise ValueError("finite differences on samples need uniform spacing")
        return h


def _hn(row) -> HyperbolicNumber:
    return HyperbolicNumber(float(row[0]), float(row[1]))


def _fd_step(t: float) -> float:
    return 1e-3 * max(1.0, abs(t))


def _stencil(p_m2, p_m1, p_0, p_p1, p_p2, h):
    v = (-p_p2 + 8.0 * p_p1 - 8.0 * p_m1 + p_m2) / (12.0 * h)
    a = (-p_p2 + 16.0 * p_p1 - 30.0 * p_0 + 16.0 * p_m1 - p_m2) / (12.0 * h * h)
    return v, a


def _fd_derivatives(c: SampledCurve, t: float) -> tuple[HyperbolicNumber, HyperbolicNumber]:
    if c.position is not None:
        h = _fd_step(t)
        rows = [np.array(c.position(t + k * h).as_tuple()) for k in (-2, -1, 0, 1, 2)]
    else:
        i = c._sample_index(t, margin=2)
        h = c._sample_step()
        rows = [c.points[i + k] for k in (-2, -1, 0, 1, 2)]
    v, a = _stencil(*rows, h)
    return _hn(v), _hn(a)


def _sample_velocities(ts: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Fourth-order velocities at every sample (one-sided near the ends)."""
    steps = np.diff(ts)
    h = float(steps.mean())
    if len(ts) < 5 or not np.allclose(steps, h, rtol=1e-9, atol=0.0):
        return np.gradient(pts, ts, axis=0, edge_order=2)
    v = np.empty_like(pts)
    v[2:-2] = (-pts[4:] + 8.0 * pts[3:-1] - 8.0 * pts[1:-3] + pts[:-4]) / (12.0 * h)
    fwd = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / (12.0 * h)
    v[0] = fwd @ pts[0:5]
    v[1] = np.array([-3.0, -10.0, 18.0, -6.0, 1.0]) / (12.0 * h) @ pts[0:5]
    v[-1] = -(fwd @ pts[-1:-6:-1])
    v[-2] = -(np.array([-3.0, -10.0, 18.0, -6.0, 1.0]) / (12.0 * h) @ pts[-1:-6:-1])
    return v


def derivatives(c: SampledCurve, t: float, mode: str = "auto") -> tuple[HyperbolicNumber, HyperbolicNumber]:
    """(velocity, acceleration) at t; ``mode`` is "auto", "exact" or "fd"."""
    if mode == "auto":
        mode = "exact" if c.exact else "fd"
    if mode == "fd":
        return _fd_derivatives(c, t)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    if c.velocity is None:
        raise ValueError("exact mode needs a velocity callback")
    v = c.velocity(t)
    if c.acceleration is not None:
        return v, c.acceleration(t)
    h = _fd_step(t)
    vs = [c.velocity(t + k * h) for k in (-2, -1, 1, 2)]
    a = (vs[0] - vs[1] * 8.0 + vs[2] * 8.0 - vs[3]) / (12.0 * h)
    return v, a


def _check_velocity(v: HyperbolicNumber, t: float, tol: float = ISOTROPY_TOL) -> None:
    if (v.re == 0.0 and v.uni == 0.0) or is_isotropic(v, tol):
        raise NullVelocity(f"velocity {v} at t={t!r} is null")


def lorentz_arc_length(c: SampledCurve, t0: float, t1: float) -> float:
    """Integral of the Lorentzian speed over [t0, t1]."""
    if t1 < t0:
        raise ValueError("t1 must not precede t0")
    if t1 == t0:
        return 0.0

    def speed_of(v: HyperbolicNumber, t: float) -> float:
        if (v.re == 0.0 and v.uni == 0.0) or is_isotropic(v):
            raise IsotropicSegment(f"speed vanishes at t={t!r}")
        return norm_h(v)

    if c.exact or c.position is not None:
        def speed(t: float) -> float:
            v = c.velocity(t) if c.exact else _fd_derivatives(c, t)[0]
            return speed_of(v, t)

        # cheap screen for null stretches that quadrature might step over
        for t in np.linspace(t0, t1, 33):
            speed(float(t))
        value, _ = integrate.quad(speed, t0, t1, epsabs=0.0, epsrel=1e-11, limit=200)
        return float(value)

    mask = (c.ts >= t0 - 1e-12) & (c.ts <= t1 + 1e-12)
    ts, pts = c.ts[mask], c.points[mask]
    if len(ts) < 3:
        raise ValueError("too few samples inside the interval")
    vel = _sample_velocities(ts, pts)
    speeds = [speed_of(_hn(v), float(t)) for t, v in zip(ts, vel)]
    return float(integrate.simpson(speeds, x=ts))


def osculating_center(c: SampledCurve, t: float, mode: str = "auto") -> HyperbolicNumber:
    """Center of the osculating Lorentzian circle of the curve at t.

    The center sits on the normal line through the point, at the place
    where the Lorentzian squared distance to the curve is stationary to
    second order.
    """
    v, a = derivatives(c, t, mode)
    _check_velocity(v, t)
    n = mul(J, v)
    den = inner(a, n)
    if abs(den) <= STRAIGHT_TOL * abs(a) * abs(n):
        raise StraightCurve(f"curve is straight to second order at t={t!r}")
    lam = inner(v, v) / den
    return c.point(t) + n * lam


def tangent_angle_rate(c: SampledCurve, t: float, mode: str = "auto") -> float:
    """Rate of change of the hyperbolic polar angle of the velocity."""
    if mode == "auto":
        mode = "exact" if c.exact else "fd"
    if mode == "exact":
        v, a = derivatives(c, t, "exact")
        _check_velocity(v, t)
        return cross(v, a) / v.quad()

    if c.position is None and c.velocity is None:
        # angle samples at neighbouring interior nodes
        i = c._sample_index(t, margin=3)
        h = c._sample_step()
        angles = [_velocity_angle(c, float(c.ts[i + k]), "fd") for k in (-1, 1)]
        return (angles[1] - angles[0]) / (2.0 * h)
    h = 1e-4 * max(1.0, abs(t))
    vmode = "exact" if c.exact else "fd"
    angles = [_velocity_angle(c, t + k * h, vmode) for k in (-1, 1)]
    return (angles[1] - angles[0]) / (2.0 * h)


def _velocity_angle(c: SampledCurve, t: float, mode: str) -> float:
    v = c.velocity(t) if mode == "exact" else _fd_derivatives(c, t)[0]
    _check_velocity(v, t)
    return to_polar(v).angle
