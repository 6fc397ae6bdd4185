"""Canonical relative system at the pole and the Euler-Savary map.

Conventions
-----------
Pole-relative vectors (``x_rel``, ``tangent_unit``) are resolved along the
axes of the fixed plane H'.  The canonical frame is the pole plus a unit
``a1 = e^{j frame_angle}`` (so ``a2 = j a1``).  ``a1`` spans the pole
tangent line when the tangent is spacelike (H-I/H-III) and the normal
line when it is timelike (H-II/H-IV).  Being an exponential it always
lies in H-I, so it points against the motion for H-III/H-IV tangents.
Canonical coordinates of a vector ``w`` are ``w * e^{-j frame_angle}``.

Euler-Savary, scalar form.  Write ``x_rel = eps * a * T * e^{j alpha}``
(tangent sector) or ``x_rel = eps * a * N * e^{j alpha}`` (normal sector),
with ``T`` the unit tangent, ``N = j T``, ``eps = +-1`` and ``a > 0``.
The curvature center ``x_rel_p = (a'/a) x_rel`` has signed distance
``a'`` along the same ray, and::

    tangent sector:  (1/a - 1/a') * eps * sinh(alpha) = 1/r - 1/r'
    normal sector:   (1/a - 1/a') * eps * cosh(alpha) = 1/r' - 1/r
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from . import motion as mo
from .errors import IsotropicDirection, IsotropicTangent, NoConjugate
from .hypnum import (
    ISOTROPY_TOL,
    J,
    HyperbolicNumber,
    SectorClass,
    classify,
    cross,
    exp_j,
    inner,
    is_isotropic,
    mul,
    norm_h,
    to_polar,
)

#: |1/a'| * a below this means X sits on the inflection locus.
INFLECTION_TOL = 1e-12


@dataclass(frozen=True)
class CanonicalData:
    t: float
    pole_A: HyperbolicNumber
    pole_H: HyperbolicNumber
    pole_Hp: HyperbolicNumber
    tangent_unit: HyperbolicNumber  # H' axes, oriented so s_dot > 0
    sector: SectorClass
    s_dot: float
    r: float
    r_p: float
    nu_dot: float  # psi' - phi'
    tau_m: float  # tangent-angle rate of (P) in H
    tau_f: float  # tangent-angle rate of (P') in H'
    phi: float
    psi: float
    frame_angle: float

    @property
    def normal_unit(self) -> HyperbolicNumber:
        return mul(J, self.tangent_unit)

    @property
    def nu_ds(self) -> float:
        """Rotation per unit arc, d(nu)/ds = 1/r' - 1/r."""
        return self.nu_dot / self.s_dot

    @property
    def tangent_axis(self) -> str:
        """Which canonical axis carries the pole tangent: "a1" or "a2"."""
        return "a1" if self.sector.spacelike else "a2"

    @property
    def sigma(self) -> HyperbolicNumber:
        """Pole velocity in canonical coordinates, +-s_dot on the tangent axis."""
        return self.to_canonical(self.tangent_unit * self.s_dot)

    def to_canonical(self, w: HyperbolicNumber) -> HyperbolicNumber:
        return mul(w, exp_j(-self.frame_angle))

    def from_canonical(self, x: HyperbolicNumber) -> HyperbolicNumber:
        return mul(x, exp_j(self.frame_angle))

    def fixed_to_moving_axes(self, w: HyperbolicNumber) -> HyperbolicNumber:
        """Re-resolve a vector from H' axes to H axes."""
        return mul(w, exp_j(self.phi - self.psi))

    def moving_to_fixed_axes(self, w: HyperbolicNumber) -> HyperbolicNumber:
        return mul(w, exp_j(self.psi - self.phi))

    def point_in_moving(self, x_rel: HyperbolicNumber) -> HyperbolicNumber:
        """H coordinates of the moving-plane point at pole + x_rel."""
        return self.pole_H + self.fixed_to_moving_axes(x_rel)

    def point_in_fixed(self, x_rel: HyperbolicNumber) -> HyperbolicNumber:
        return self.pole_Hp + x_rel


@dataclass(frozen=True)
class ConjugatePair:
    x_rel: HyperbolicNumber
    x_rel_p: HyperbolicNumber
    a: float
    a_p: float  # |signed a'|
    alpha: float
    sector: Literal["tangent", "normal"]
    side: int  # eps in the scalar law
    a_p_signed: float

    @property
    def direction(self) -> HyperbolicNumber:
        """Unit vector along the ray of x_rel."""
        return self.x_rel / self.a


def _tangent_rate(v: HyperbolicNumber, acc: HyperbolicNumber) -> float:
    return cross(v, acc) / v.quad()


def canonical_data(spec: mo.MotionSpec, t: float, method: str = "symbolic") -> CanonicalData:
    """Canonical frame, arc rate and centrode radii at t.

    ``method="numeric"`` takes the tangent-angle rates from finite
    differences of the traced centrodes instead of symbolic derivatives;
    it exists for cross-checking.
    """
    st = mo.pfaffians(spec, t)
    pole = mo.pole_point(spec, t)
    moving, fixed = spec.moving_centrode, spec.fixed_centrode
    v_f = fixed.velocity(t)
    if (v_f.re == 0.0 and v_f.uni == 0.0) or is_isotropic(v_f, ISOTROPY_TOL):
        raise IsotropicTangent(f"pole tangent {v_f} at t={t!r} is isotropic")
    s_dot = norm_h(v_f)
    tangent = v_f / s_dot
    if method == "symbolic":
        v_m = moving.velocity(t)
        if is_isotropic(v_m) or (v_m.re == 0.0 and v_m.uni == 0.0):
            raise IsotropicTangent(f"moving centrode tangent {v_m} at t={t!r} is isotropic")
        tau_m = _tangent_rate(v_m, moving.acceleration(t))
        tau_f = _tangent_rate(v_f, fixed.acceleration(t))
    elif method == "numeric":
        from . import oracle

        tau_m = oracle.tangent_angle_rate(_position_curve(moving, t), t, mode="fd")
        tau_f = oracle.tangent_angle_rate(_position_curve(fixed, t), t, mode="fd")
    else:
        raise ValueError(f"unknown method {method!r}")
    sector = classify(tangent)
    a1 = tangent if sector.spacelike else mul(J, tangent)
    return CanonicalData(
        t=t,
        pole_A=pole.in_A,
        pole_H=pole.in_H,
        pole_Hp=pole.in_Hp,
        tangent_unit=tangent,
        sector=sector,
        s_dot=s_dot,
        r=_radius(s_dot, tau_m),
        r_p=_radius(s_dot, tau_f),
        nu_dot=st.tau_p - st.tau,
        tau_m=tau_m,
        tau_f=tau_f,
        phi=spec.phi(t),
        psi=spec.psi(t),
        frame_angle=to_polar(a1).angle,
    )


def _radius(s_dot: float, rate: float) -> float:
    return s_dot / rate if rate != 0.0 else math.inf


def _position_curve(curve: mo.CurveExpr, t: float):
    from .oracle import SampledCurve

    h = 1e-3 * max(1.0, abs(t))
    return SampledCurve.from_function(curve, t - 4 * h, t + 4 * h, n=9)


def _inv(x: float) -> float:
    return 0.0 if math.isinf(x) else 1.0 / x


def curvature_difference(cd: CanonicalData) -> float:
    """1/r - 1/r'."""
    return _inv(cd.r) - _inv(cd.r_p)


def conjugate_point(cd: CanonicalData, x_rel: HyperbolicNumber) -> ConjugatePair:
    """Curvature center X' of the trajectory of X = pole + x_rel."""
    x_rel = HyperbolicNumber.coerce(x_rel)
    if x_rel.re == 0.0 and x_rel.uni == 0.0:
        raise IsotropicDirection("x_rel is zero; the pole has no trajectory direction")
    if is_isotropic(x_rel):
        raise IsotropicDirection(f"{x_rel} lies on an isotropic line through the pole")
    a = norm_h(x_rel)
    tangent = cd.tangent_unit
    in_tangent_sector = (x_rel.quad() > 0) == (tangent.quad() > 0)
    axis = tangent if in_tangent_sector else mul(J, tangent)
    # x_rel / axis = eps * a * e^{j alpha}, with axis * conj(axis) = +-1
    ratio = mul(x_rel, axis.conj()) * (1.0 / axis.quad())
    polar = to_polar(ratio)
    side = 1 if polar.sector is SectorClass.H_I else -1
    alpha = polar.angle
    k = curvature_difference(cd)
    if in_tangent_sector:
        s = math.sinh(alpha)
        if s == 0.0:
            return _pair(x_rel, a, 0.0, alpha, "tangent", side)
        inv_ap = 1.0 / a - k / (side * s)
    else:
        inv_ap = 1.0 / a + k / (side * math.cosh(alpha))
    if abs(inv_ap) * a <= INFLECTION_TOL:
        raise NoConjugate(f"{x_rel} is on the inflection locus; curvature center at infinity")
    return _pair(x_rel, a, 1.0 / inv_ap, alpha, "tangent" if in_tangent_sector else "normal", side)


def _pair(x_rel, a, a_p_signed, alpha, sector, side) -> ConjugatePair:
    return ConjugatePair(
        x_rel=x_rel,
        x_rel_p=x_rel * (a_p_signed / a),
        a=a,
        a_p=abs(a_p_signed),
        alpha=alpha,
        sector=sector,
        side=side,
        a_p_signed=a_p_signed,
    )


def euler_savary_residual(cd: CanonicalData, pair: ConjugatePair) -> HyperbolicNumber:
    """j*sigma*(a - a') + j*a*a'*u*(tau' - tau) in canonical coordinates.

    ``u`` is the unit vector along the ray (``j e^{j alpha}`` when the ray
    is in H-II, as in the textbook set-up).  For a genuine conjugate pair
    only the component along the ray is forced to vanish; see
    ``residual_components``.
    """
    u = cd.to_canonical(pair.direction)
    a, ap = pair.a, pair.a_p_signed
    g = cd.sigma * (a - ap) + mul(J, u) * (a * ap * cd.nu_dot)
    return mul(J, g)


def residual_components(cd: CanonicalData, pair: ConjugatePair) -> tuple[float, float]:
    """(along the ray, across the ray) coordinates of the residual.

    The first vanishes exactly when X' is the curvature center of X.
    """
    res = euler_savary_residual(cd, pair)
    u = cd.to_canonical(pair.direction)
    kappa = u.quad()
    return inner(res, u) / kappa, -inner(res, mul(J, u)) / kappa


def residual_scale(cd: CanonicalData, pair: ConjugatePair) -> float:
    return cd.s_dot * pair.a + pair.a * pair.a_p * abs(cd.nu_dot) + cd.s_dot * pair.a_p


def canonical_fixed_flow(cd: CanonicalData, x: HyperbolicNumber,
                         which: Literal["moving", "fixed"] = "moving") -> HyperbolicNumber:
    """Canonical-coordinate rates dx/dt that keep X at rest in H or H'."""
    rate = {"moving": cd.tau_m, "fixed": cd.tau_f}[which]
    return -cd.sigma - mul(J, x) * rate


def canonical_sliding(cd: CanonicalData, x: HyperbolicNumber) -> HyperbolicNumber:
    """Sliding velocity of the point at canonical coordinates x, in H' axes."""
    return cd.from_canonical(mul(J, x) * (cd.tau_f - cd.tau_m))
