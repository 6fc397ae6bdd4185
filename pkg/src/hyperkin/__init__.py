"""Planar hyperbolic (Lorentzian) kinematics over split-complex numbers."""
from .hypnum import HyperbolicNumber, J, exp_j, inner, mul, norm_h
from .motion import MotionSpec, pole_point
from .canonical import canonical_data, conjugate_point

__all__ = [
    "HyperbolicNumber",
    "J",
    "MotionSpec",
    "canonical_data",
    "conjugate_point",
    "exp_j",
    "inner",
    "mul",
    "norm_h",
    "pole_point",
]
