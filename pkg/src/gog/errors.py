"""Exception hierarchy.

Every error carries a stable ``code`` string that the CLI prints verbatim.
"""


class GogError(Exception):
    code = "GOG_ERROR"


class DivisionByZero(GogError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO"


class NegativeRadicand(GogError, ValueError):
    code = "NEGATIVE_RADICAND"


class RootNotRepresentable(GogError, ValueError):
    code = "ROOT_NOT_REPRESENTABLE"


class ZeroCoefficient(GogError, ValueError):
    code = "ZERO_COEFFICIENT"


class ZeroDivisor(GogError, ZeroDivisionError):
    code = "ZERO_DIVISOR"


class NonPositiveLeading(GogError, ValueError):
    code = "NON_POSITIVE_LEADING"


class NotInfinitelyIncreasing(GogError, ValueError):
    code = "NOT_INFINITELY_INCREASING"


class FuelExhausted(GogError):
    code = "FUEL_EXHAUSTED"


class IdentityHasNoRank(GogError, ValueError):
    code = "IDENTITY_HAS_NO_RANK"


class InvalidCoordinate(GogError, ValueError):
    code = "INVALID_COORDINATE"


class RankNotDecreasing(GogError):
    code = "RANK_NOT_DECREASING"


class NotCommuting(GogError, ValueError):
    code = "NOT_COMMUTING"


class PreconditionViolated(GogError, ValueError):
    code = "PRECONDITION_VIOLATED"


class LogarithmRequired(GogError, ValueError):
    code = "LOGARITHM_REQUIRED"


class ActionViolation(GogError, ValueError):
    code = "ACTION_VIOLATION"


class NotNormal(GogError, ValueError):
    code = "NOT_NORMAL"


class NotConvex(GogError, ValueError):
    code = "NOT_CONVEX"


class ParseError(GogError, ValueError):
    code = "PARSE_ERROR"

    def __init__(self, position, expected, text=""):
        self.position = position
        self.expected = sorted(set(expected))
        self.text = text
        super().__init__(self._message())

    def _message(self):
        exp = ", ".join(self.expected) if self.expected else "end of input"
        msg = f"parse error at column {self.position + 1}: expected {exp}"
        if self.text:
            msg += f"\n  {self.text}\n  {' ' * self.position}^"
        return msg
