"""One-parameter planar hyperbolic motion of a plane A against H and H'.

A point with A-coordinates ``x~`` sits at ``(b + x~) e^{j phi}`` in H and
at ``(b' + x~) e^{j psi}`` in H'.  H is the moving plane, H' the fixed
one.  All rates are per unit t.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import timefun as tf
from .errors import DegenerateMotion, NoPole
from .hypnum import J, HyperbolicNumber, exp_j, mul
from .timefun import TimeExpr

#: |tau - tau'| <= POLE_TOL * (|tau| + |tau'| + 1) means no pole.
POLE_TOL = 1e-12

ExprPair = tuple[TimeExpr, TimeExpr]


def _pair_add(a: ExprPair, b: ExprPair) -> ExprPair:
    return (tf.add(a[0], b[0]), tf.add(a[1], b[1]))


def _pair_sub(a: ExprPair, b: ExprPair) -> ExprPair:
    return (tf.sub(a[0], b[0]), tf.sub(a[1], b[1]))


def _pair_mul(a: ExprPair, b: ExprPair) -> ExprPair:
    return (
        tf.add(tf.mul(a[0], b[0]), tf.mul(a[1], b[1])),
        tf.add(tf.mul(a[0], b[1]), tf.mul(a[1], b[0])),
    )


def _pair_exp_j(angle: TimeExpr) -> ExprPair:
    return (tf.func("cosh", angle), tf.func("sinh", angle))


def _pair_const(z: HyperbolicNumber) -> ExprPair:
    return (tf.const(z.re), tf.const(z.uni))


@dataclass(frozen=True)
class CurveExpr:
    """A plane curve given by two time expressions, with exact derivatives."""

    re: TimeExpr
    uni: TimeExpr

    def __call__(self, t: float) -> HyperbolicNumber:
        return HyperbolicNumber(self.re(t), self.uni(t))

    @cached_property
    def d(self) -> CurveExpr:
        return CurveExpr(self.re.derivative, self.uni.derivative)

    def velocity(self, t: float) -> HyperbolicNumber:
        return self.d(t)

    def acceleration(self, t: float) -> HyperbolicNumber:
        return self.d.d(t)


@dataclass(frozen=True)
class MotionSpec:
    b_re: TimeExpr
    b_uni: TimeExpr
    bp_re: TimeExpr
    bp_uni: TimeExpr
    phi: TimeExpr
    psi: TimeExpr
    name: str = field(default="", compare=False)

    @classmethod
    def from_strings(cls, b=("0", "0"), b_prime=("0", "0"), phi="t", psi="t", name=""):
        """Build from expression strings (or numbers, or parsed trees)."""
        return cls(
            tf.as_expr(b[0]),
            tf.as_expr(b[1]),
            tf.as_expr(b_prime[0]),
            tf.as_expr(b_prime[1]),
            tf.as_expr(phi),
            tf.as_expr(psi),
            name=name,
        )

    def swapped(self) -> MotionSpec:
        """The inverse motion: H' becomes the moving plane, H the fixed one."""
        return MotionSpec(
            self.bp_re, self.bp_uni, self.b_re, self.b_uni, self.psi, self.phi,
            name=f"{self.name}-inverse" if self.name else "",
        )

    def expressions(self) -> dict[str, TimeExpr]:
        return {
            "b_re": self.b_re,
            "b_uni": self.b_uni,
            "bp_re": self.bp_re,
            "bp_uni": self.bp_uni,
            "phi": self.phi,
            "psi": self.psi,
        }

    def b(self, t: float) -> HyperbolicNumber:
        return HyperbolicNumber(self.b_re(t), self.b_uni(t))

    def b_prime(self, t: float) -> HyperbolicNumber:
        return HyperbolicNumber(self.bp_re(t), self.bp_uni(t))

    # symbolic pieces, built once per spec

    @cached_property
    def _pole_expr(self) -> ExprPair:
        dphi, dpsi = self.phi.derivative, self.psi.derivative
        sigma = (
            tf.add(self.b_re.derivative, tf.mul(self.b_uni, dphi)),
            tf.add(self.b_uni.derivative, tf.mul(self.b_re, dphi)),
        )
        sigma_p = (
            tf.add(self.bp_re.derivative, tf.mul(self.bp_uni, dpsi)),
            tf.add(self.bp_uni.derivative, tf.mul(self.bp_re, dpsi)),
        )
        diff = _pair_sub(sigma_p, sigma)
        den = tf.sub(dphi, dpsi)
        # j * (d_re + j d_uni) = d_uni + j d_re
        return (tf.div(diff[1], den), tf.div(diff[0], den))

    @cached_property
    def moving_centrode(self) -> CurveExpr:
        """Pole locus (P) in H coordinates."""
        b = (self.b_re, self.b_uni)
        return CurveExpr(*_pair_mul(_pair_add(b, self._pole_expr), _pair_exp_j(self.phi)))

    @cached_property
    def fixed_centrode(self) -> CurveExpr:
        """Pole locus (P') in H' coordinates."""
        bp = (self.bp_re, self.bp_uni)
        return CurveExpr(*_pair_mul(_pair_add(bp, self._pole_expr), _pair_exp_j(self.psi)))

    def trajectory_expr(self, x_H: HyperbolicNumber) -> CurveExpr:
        """H'-coordinates over time of the point fixed in H at ``x_H``."""
        x_A = _pair_sub(_pair_mul(_pair_const(x_H), _pair_exp_j(tf.neg(self.phi))),
                        (self.b_re, self.b_uni))
        return CurveExpr(*_pair_mul(_pair_add((self.bp_re, self.bp_uni), x_A),
                                    _pair_exp_j(self.psi)))


@dataclass(frozen=True)
class PfaffianState:
    t: float
    sigma: HyperbolicNumber
    tau: float
    sigma_p: HyperbolicNumber
    tau_p: float


@dataclass(frozen=True)
class PolePoint:
    t: float
    in_A: HyperbolicNumber
    in_H: HyperbolicNumber
    in_Hp: HyperbolicNumber


def pfaffians(spec: MotionSpec, t: float) -> PfaffianState:
    tau = spec.phi.derivative(t)
    tau_p = spec.psi.derivative(t)
    if tau == 0.0 or tau_p == 0.0:
        raise DegenerateMotion(f"rotation rate vanishes at t={t!r} (phi'={tau}, psi'={tau_p})")
    db = HyperbolicNumber(spec.b_re.derivative(t), spec.b_uni.derivative(t))
    dbp = HyperbolicNumber(spec.bp_re.derivative(t), spec.bp_uni.derivative(t))
    sigma = db + mul(J, spec.b(t)) * tau
    sigma_p = dbp + mul(J, spec.b_prime(t)) * tau_p
    return PfaffianState(t, sigma, tau, sigma_p, tau_p)


def relative_velocity(spec: MotionSpec, x_A: HyperbolicNumber, dx_A: HyperbolicNumber,
                      t: float, axes: str = "H") -> HyperbolicNumber:
    """Velocity of X relative to H.

    With ``axes="H"`` the vector is in H coordinates.  ``axes="Hp"`` gives
    the same vector resolved along the axes of H', which is the form in
    which it adds to the sliding velocity to give the absolute one.
    """
    st = pfaffians(spec, t)
    body = st.sigma + mul(J, x_A) * st.tau + dx_A
    angle = _axes_angle(spec, t, axes)
    return mul(body, exp_j(angle))


def absolute_velocity(spec: MotionSpec, x_A: HyperbolicNumber, dx_A: HyperbolicNumber,
                      t: float) -> HyperbolicNumber:
    st = pfaffians(spec, t)
    body = st.sigma_p + mul(J, x_A) * st.tau_p + dx_A
    return mul(body, exp_j(spec.psi(t)))


def sliding_velocity(spec: MotionSpec, x_A: HyperbolicNumber, t: float) -> HyperbolicNumber:
    """Velocity in H' of the point of H currently at A-coordinates ``x_A``."""
    st = pfaffians(spec, t)
    body = (st.sigma_p - st.sigma) + mul(J, x_A) * (st.tau_p - st.tau)
    return mul(body, exp_j(spec.psi(t)))


def fixed_in_H_rate(spec: MotionSpec, x_A: HyperbolicNumber, t: float) -> HyperbolicNumber:
    """dx~/dt keeping X at rest in H."""
    st = pfaffians(spec, t)
    return -st.sigma - mul(J, x_A) * st.tau


def fixed_in_Hp_rate(spec: MotionSpec, x_A: HyperbolicNumber, t: float) -> HyperbolicNumber:
    """dx~/dt keeping X at rest in H'."""
    st = pfaffians(spec, t)
    return -st.sigma_p - mul(J, x_A) * st.tau_p


def _axes_angle(spec: MotionSpec, t: float, axes: str) -> float:
    if axes == "H":
        return spec.phi(t)
    if axes == "Hp":
        return spec.psi(t)
    raise ValueError(f"axes must be 'H' or 'Hp', got {axes!r}")


def pole_from_pfaffians(st: PfaffianState) -> HyperbolicNumber:
    den = st.tau - st.tau_p
    if abs(den) <= POLE_TOL * (abs(st.tau) + abs(st.tau_p) + 1.0):
        raise NoPole(f"tau == tau' at t={st.t!r}; the instant is translation-like")
    return mul(J, st.sigma_p - st.sigma) / den


def pole_components(st: PfaffianState) -> tuple[float, float]:
    """Pole A-coordinates from the componentwise formulas."""
    den = st.tau - st.tau_p
    if abs(den) <= POLE_TOL * (abs(st.tau) + abs(st.tau_p) + 1.0):
        raise NoPole(f"tau == tau' at t={st.t!r}; the instant is translation-like")
    return ((st.sigma_p.uni - st.sigma.uni) / den, (st.sigma_p.re - st.sigma.re) / den)


def pole_point(spec: MotionSpec, t: float) -> PolePoint:
    st = pfaffians(spec, t)
    p = pole_from_pfaffians(st)
    in_H = mul(spec.b(t) + p, exp_j(spec.phi(t)))
    in_Hp = mul(spec.b_prime(t) + p, exp_j(spec.psi(t)))
    return PolePoint(t, p, in_H, in_Hp)


def moving_to_A(spec: MotionSpec, x_H: HyperbolicNumber, t: float) -> HyperbolicNumber:
    return mul(x_H, exp_j(-spec.phi(t))) - spec.b(t)


def fixed_to_A(spec: MotionSpec, x_Hp: HyperbolicNumber, t: float) -> HyperbolicNumber:
    return mul(x_Hp, exp_j(-spec.psi(t))) - spec.b_prime(t)


def A_to_moving(spec: MotionSpec, x_A: HyperbolicNumber, t: float) -> HyperbolicNumber:
    return mul(spec.b(t) + x_A, exp_j(spec.phi(t)))


def A_to_fixed(spec: MotionSpec, x_A: HyperbolicNumber, t: float) -> HyperbolicNumber:
    return mul(spec.b_prime(t) + x_A, exp_j(spec.psi(t)))


def fixed_to_moving(spec: MotionSpec, x_Hp: HyperbolicNumber, t: float) -> HyperbolicNumber:
    return A_to_moving(spec, fixed_to_A(spec, x_Hp, t), t)


def trajectory_in_fixed(spec: MotionSpec, x_H: HyperbolicNumber, t: float) -> HyperbolicNumber:
    """Where, in H', the point fixed in H at ``x_H`` is at time t."""
    return A_to_fixed(spec, moving_to_A(spec, x_H, t), t)


@dataclass(frozen=True)
class PoleTrace:
    ts: np.ndarray
    moving: np.ndarray  # (n, 2), H coordinates
    fixed: np.ndarray  # (n, 2), H' coordinates


def trace_pole_curves(spec: MotionSpec, t0: float, t1: float, n: int) -> PoleTrace:
    if n < 2:
        raise ValueError("need at least two samples")
    ts = np.linspace(t0, t1, n)
    moving = np.empty((n, 2))
    fixed = np.empty((n, 2))
    for i, t in enumerate(ts):
        p = pole_point(spec, float(t))
        moving[i] = p.in_H.as_tuple()
        fixed[i] = p.in_Hp.as_tuple()
    return PoleTrace(ts, moving, fixed)


def centrode_velocities(spec: MotionSpec, t: float) -> tuple[HyperbolicNumber, HyperbolicNumber]:
    """Exact velocities of (P) in H and (P') in H' at t."""
    pole_point(spec, t)  # raises NoPole/DegenerateMotion before any division
    return spec.moving_centrode.velocity(t), spec.fixed_centrode.velocity(t)

