"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`LorentzSkewError`, so callers (and the CLI) can catch one class and
turn it into a structured report.
"""


class LorentzSkewError(Exception):
    """Base class for all library errors."""

    #: short machine-readable tag used in CLI error objects
    code = "Error"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class SuperluminalVelocity(LorentzSkewError, ValueError):
    code = "SuperluminalVelocity"


class ZeroVelocity(LorentzSkewError, ValueError):
    code = "ZeroVelocity"


class ZeroField(LorentzSkewError, ValueError):
    code = "ZeroField"


class NullField(LorentzSkewError, ValueError):
    code = "NullField"


class NotNull(LorentzSkewError, ValueError):
    code = "NotNull"


class InvalidTensor(LorentzSkewError, ValueError):
    code = "InvalidTensor"


class OrientationMismatch(LorentzSkewError, ValueError):
    code = "OrientationMismatch"


class SingularPoint(LorentzSkewError, ValueError):
    code = "SingularPoint"


class NullLocusCrossing(LorentzSkewError, ArithmeticError):
    """A loop sample (or a refinement midpoint) landed on the null locus."""

    code = "NullLocusCrossing"

    def __init__(self, message, parameter=None, point=None):
        super().__init__(message)
        self.parameter = parameter
        self.point = point

    def to_dict(self):
        d = super().to_dict()
        if self.parameter is not None:
            d["parameter"] = float(self.parameter)
        if self.point is not None:
            d["point"] = [float(x) for x in self.point]
        return d


class RefinementExhausted(LorentzSkewError, ArithmeticError):
    code = "RefinementExhausted"


class AmbiguousContinuation(LorentzSkewError, ArithmeticError):
    code = "AmbiguousContinuation"
