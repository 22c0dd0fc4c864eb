"""Exception hierarchy shared by all spl modules."""


class SplError(Exception):
    """Base class for every error raised by the toolkit."""


# -- parsing -------------------------------------------------------------

class ParseError(SplError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LexError(ParseError):
    pass


class UnknownVariable(ParseError):
    pass


class ExponentOverflow(ParseError):
    pass


class EmptyInput(ParseError):
    pass


class MissingRingHeader(ParseError):
    pass


# -- arithmetic ----------------------------------------------------------

class RingMismatch(SplError):
    pass


class OrderMismatch(SplError):
    pass


class ShapeMismatch(SplError):
    pass


class NotSquare(ShapeMismatch):
    pass


class BadOrder(SplError):
    pass


# -- ideal level ---------------------------------------------------------

class NotMonomial(SplError):
    pass


class NotHomogeneous(SplError):
    pass


class UnitIdeal(SplError):
    pass


class ZeroIdeal(SplError):
    pass


class NeverAttained(SplError):
    pass


class BudgetExceeded(SplError):
    """A computation hit its degree, basis-size or wall-clock guardrail."""


# -- catalog / verification ---------------------------------------------

class BadParameter(SplError):
    pass


class NoWitnessKnown(SplError):
    pass


class MalformedConfig(SplError):
    pass


class MissingAlpha(SplError):
    pass
