"""Exception hierarchy shared by every subpackage."""


class PolySurjError(Exception):
    """Base class for all errors raised by polysurj."""


class ZeroInput(PolySurjError, ValueError):
    pass


class FactorizationTooHard(PolySurjError):
    pass


class ZeroArgument(PolySurjError, ValueError):
    pass


class BothZero(PolySurjError, ValueError):
    pass


class NotCoprime(PolySurjError, ValueError):
    pass


class ZeroPolynomial(PolySurjError, ValueError):
    pass


class ZeroFunction(PolySurjError, ValueError):
    pass


class NotEmbeddedLine(PolySurjError):
    pass


class NotLaurent(PolySurjError, ValueError):
    pass


class NonIntegralExponent(PolySurjError):
    pass


class ConstantFunction(PolySurjError, ValueError):
    pass


class InvariantViolated(PolySurjError, ValueError):
    pass


class NoWitnessFound(PolySurjError):
    def __init__(self, message, budget=None):
        super().__init__(message)
        self.budget = budget


class UnknownVariable(PolySurjError, ValueError):
    pass


class PolySyntaxError(PolySurjError, ValueError):
    """Malformed polynomial text.  ``offset`` is a 1-based column, as in
    Python's own ``SyntaxError``."""

    def __init__(self, message, text, offset):
        super().__init__(f"{message} at offset {offset}")
        self.msg = message
        self.text = text
        self.offset = offset


class CorpusFormatError(PolySurjError, ValueError):
    pass
