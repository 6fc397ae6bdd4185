"""Exception hierarchy.

Every geometric failure carries a short ``token`` used in CSV cells and
CLI diagnostics.
"""


class HyperkinError(Exception):
    token = "error"


class ZeroInput(HyperkinError, ValueError):
    token = "zero_input"


class IsotropicInput(HyperkinError, ValueError):
    token = "isotropic_input"


class ParseError(HyperkinError, ValueError):
    token = "parse_error"

    def __init__(self, message, offset, text=""):
        self.message = message
        self.offset = offset
        self.text = text
        super().__init__(f"parse error at offset {offset}: {message}")


class EvalError(HyperkinError, ArithmeticError):
    token = "eval_error"


class DegenerateMotion(HyperkinError):
    token = "degenerate_motion"


class NoPole(HyperkinError):
    token = "no_pole"


class IsotropicTangent(HyperkinError):
    token = "isotropic_tangent"


class IsotropicDirection(HyperkinError):
    token = "isotropic_direction"


class NoConjugate(HyperkinError):
    """The point sits on the inflection locus; its curvature center is at infinity."""

    token = "no_conjugate"


class IsotropicSegment(HyperkinError):
    token = "isotropic_segment"


class NullVelocity(HyperkinError):
    token = "null_velocity"


class StraightCurve(HyperkinError):
    token = "straight_curve"


class DocumentError(HyperkinError, ValueError):
    token = "document_error"
