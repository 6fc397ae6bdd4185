"""Split-complex (hyperbolic) numbers x + jy with j**2 = +1.

The Lorentzian plane uses these as coordinates: ``inner`` is the
signature (+, -) form and ``norm_h`` the hyperbolic distance from the
origin.  Points on the lines y = x and y = -x are isotropic (null).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import IsotropicInput, ZeroInput

#: |re^2 - uni^2| <= ISOTROPY_TOL * (re^2 + uni^2) counts as isotropic.
ISOTROPY_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class HyperbolicNumber:
    re: float
    uni: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.uni)):
            raise ValueError(f"non-finite hyperbolic number ({self.re}, {self.uni})")

    @classmethod
    def coerce(cls, value) -> HyperbolicNumber:
        if isinstance(value, HyperbolicNumber):
            return value
        if isinstance(value, (tuple, list)) and len(value) == 2:
            return cls(float(value[0]), float(value[1]))
        return cls(float(value), 0.0)

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return HyperbolicNumber(self.re + other.re, self.uni + other.uni)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return HyperbolicNumber(self.re - other.re, self.uni - other.uni)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return HyperbolicNumber(self.re * other, self.uni * other)
        other = _lift(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return HyperbolicNumber(self.re / other, self.uni / other)
        other = _lift(other)
        if other is NotImplemented:
            return other
        q = inner(other, other)
        if q == 0.0:
            raise ZeroDivisionError(f"{other} is a zero divisor")
        num = mul(self, other.conj())
        return HyperbolicNumber(num.re / q, num.uni / q)

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return HyperbolicNumber(-self.re, -self.uni)

    def __abs__(self):
        # Euclidean magnitude of the coordinate pair; used for error sizes only.
        return math.hypot(self.re, self.uni)

    def conj(self) -> HyperbolicNumber:
        return HyperbolicNumber(self.re, -self.uni)

    def quad(self) -> float:
        """Signed Lorentzian square <z, z> = re^2 - uni^2."""
        return (self.re - self.uni) * (self.re + self.uni)

    def as_tuple(self) -> tuple[float, float]:
        return (self.re, self.uni)

    def __repr__(self):
        sign = "+" if self.uni >= 0 or math.isnan(self.uni) else "-"
        return f"({self.re!r}{sign}{abs(self.uni)!r}j)"


def _lift(value):
    if isinstance(value, HyperbolicNumber):
        return value
    if isinstance(value, (int, float)):
        return HyperbolicNumber(float(value), 0.0)
    return NotImplemented


ZERO = HyperbolicNumber(0.0, 0.0)
ONE = HyperbolicNumber(1.0, 0.0)
J = HyperbolicNumber(0.0, 1.0)


def mul(z: HyperbolicNumber, w: HyperbolicNumber) -> HyperbolicNumber:
    return HyperbolicNumber(z.re * w.re + z.uni * w.uni, z.re * w.uni + z.uni * w.re)


def inner(z: HyperbolicNumber, w: HyperbolicNumber) -> float:
    """Lorentzian inner product Re(z * conj(w)) = xu - yv."""
    return z.re * w.re - z.uni * w.uni


def cross(z: HyperbolicNumber, w: HyperbolicNumber) -> float:
    """Determinant re(z)*uni(w) - uni(z)*re(w); zero iff z and w are parallel."""
    return z.re * w.uni - z.uni * w.re


def norm_h(z: HyperbolicNumber) -> float:
    # two roots, so tiny inputs do not square into the subnormal range
    return math.sqrt(abs(z.re - z.uni)) * math.sqrt(abs(z.re + z.uni))


def exp_j(phi: float) -> HyperbolicNumber:
    if not math.isfinite(phi):
        raise ValueError(f"non-finite hyperbolic angle {phi}")
    return HyperbolicNumber(math.cosh(phi), math.sinh(phi))


def rotate(z: HyperbolicNumber, phi: float) -> HyperbolicNumber:
    """z * e^{j phi}."""
    return mul(z, exp_j(phi))


def rotation_matrix(phi: float) -> np.ndarray:
    c, s = math.cosh(phi), math.sinh(phi)
    return np.array([[c, s], [s, c]])


class SectorClass(enum.Enum):
    H_I = "H-I"
    H_II = "H-II"
    H_III = "H-III"
    H_IV = "H-IV"
    ISOTROPIC_PLUS = "isotropic+"
    ISOTROPIC_MINUS = "isotropic-"
    ZERO = "zero"

    @property
    def spacelike(self) -> bool:
        """True for the H-I/H-III pair, where <z, z> > 0."""
        return self in (SectorClass.H_I, SectorClass.H_III)

    @property
    def timelike(self) -> bool:
        return self in (SectorClass.H_II, SectorClass.H_IV)

    @property
    def isotropic(self) -> bool:
        return self in (SectorClass.ISOTROPIC_PLUS, SectorClass.ISOTROPIC_MINUS)


def is_isotropic(z: HyperbolicNumber, tol: float = ISOTROPY_TOL) -> bool:
    """Null test, scale invariant; zero is not isotropic."""
    m = max(abs(z.re), abs(z.uni))
    if m == 0.0:
        return False
    x, y = z.re / m, z.uni / m
    return abs((x - y) * (x + y)) <= tol * (x * x + y * y)


def classify(z: HyperbolicNumber, tol: float = ISOTROPY_TOL) -> SectorClass:
    if z.re == 0.0 and z.uni == 0.0:
        return SectorClass.ZERO
    if is_isotropic(z, tol):
        same_sign = (z.re >= 0) == (z.uni >= 0)
        return SectorClass.ISOTROPIC_PLUS if same_sign else SectorClass.ISOTROPIC_MINUS
    if abs(z.re) > abs(z.uni):
        return SectorClass.H_I if z.re > 0 else SectorClass.H_III
    return SectorClass.H_II if z.uni > 0 else SectorClass.H_IV


@dataclass(frozen=True, slots=True)
class HyperbolicPolar:
    radius: float
    angle: float
    sector: SectorClass

    def __post_init__(self):
        if self.sector not in _SECTOR_SIGN:
            raise ValueError(f"polar form undefined for sector {self.sector.value}")
        if not self.radius > 0:
            raise ValueError("polar radius must be positive")


# sector -> (sign, multiplied by j)
_SECTOR_SIGN = {
    SectorClass.H_I: (1.0, False),
    SectorClass.H_II: (1.0, True),
    SectorClass.H_III: (-1.0, False),
    SectorClass.H_IV: (-1.0, True),
}


def to_polar(z: HyperbolicNumber, tol: float = ISOTROPY_TOL) -> HyperbolicPolar:
    """Write z as +-r e^{j angle} (H-I/H-III) or +-r j e^{j angle} (H-II/H-IV)."""
    sector = classify(z, tol)
    if sector is SectorClass.ZERO:
        raise ZeroInput("polar form of zero is undefined")
    if sector.isotropic:
        raise IsotropicInput(f"{z} lies on an isotropic line")
    sign, use_j = _SECTOR_SIGN[sector]
    # For H-II/H-IV, j*z swaps the components and lands in H-I/H-III.
    a, b = (z.uni, z.re) if use_j else (z.re, z.uni)
    a, b = sign * a, sign * b
    # a > |b|; log form keeps relative accuracy near the light cone
    angle = 0.5 * math.log((a + b) / (a - b))
    radius = math.sqrt(a - b) * math.sqrt(a + b)
    return HyperbolicPolar(radius, angle, sector)


def from_polar(p: HyperbolicPolar) -> HyperbolicNumber:
    sign, use_j = _SECTOR_SIGN[p.sector]
    w = exp_j(p.angle) * (sign * p.radius)
    return mul(J, w) if use_j else w


def angle_of(z: HyperbolicNumber) -> float:
    """Hyperbolic polar angle, insensitive to which sector z lies in."""
    return to_polar(z).angle
