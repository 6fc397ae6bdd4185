"""Built-in fixture motions with closed-form ground truth.

S1: b = 0, phi = t, b' = t, psi = 2t.  The pole tangent at t = 0 is
spacelike (along -1), the pole sits at -j in every chart and the
centrodes are (-2t - j)e^{jt} and (-t - j)e^{2jt}.

S2: same, but b' = jt.  The pole tangent at t = 0 is timelike (along -j).
"""
from __future__ import annotations

import copy

from .document import MotionDocument, from_dict
from .motion import MotionSpec

S1_DOC = {
    "name": "S1",
    "b": {"re": "0", "uni": "0"},
    "b_prime": {"re": "t", "uni": "0"},
    "phi": "t",
    "psi": "2*t",
    "t_range": [0.0, 1.2],
    "samples": 13,
}

S2_DOC = {
    "name": "S2",
    "b": {"re": "0", "uni": "0"},
    "b_prime": {"re": "0", "uni": "t"},
    "phi": "t",
    "psi": "2*t",
    "t_range": [0.0, 1.2],
    "samples": 13,
}

SCENARIOS = {"S1": S1_DOC, "S2": S2_DOC}


def document(name: str) -> MotionDocument:
    return from_dict(copy.deepcopy(SCENARIOS[name]))


def s1() -> MotionSpec:
    return document("S1").spec


def s2() -> MotionSpec:
    return document("S2").spec


def _coef(rng) -> str:
    return f"{float(rng.uniform(-1.0, 1.0)):.6f}"


def _smooth_term(rng) -> str:
    """Random cubic plus a hyperbolic-trig term, as expression text."""
    c = [_coef(rng) for _ in range(5)]
    trig = rng.choice(["sinh", "cosh"])
    return f"{c[0]} + {c[1]}*t + {c[2]}*t^2 + {c[3]}*t^3 + {c[4]}*{trig}(0.7*t)"


def _angle(rng) -> str:
    # both terms increase, so the rotation rate never vanishes
    a = float(rng.uniform(0.3, 2.0))
    b = float(rng.uniform(0.0, 0.5))
    return f"{a:.6f}*t + {b:.6f}*sinh(t)"


def random_motion(seed: int) -> MotionSpec:
    """Seeded polynomial/hyperbolic-trig motion for property checks."""
    import numpy as np

    rng = np.random.default_rng(seed)
    return MotionSpec.from_strings(
        b=(_smooth_term(rng), _smooth_term(rng)),
        b_prime=(_smooth_term(rng), _smooth_term(rng)),
        phi=_angle(rng),
        psi=_angle(rng),
        name=f"random-{seed}",
    )
