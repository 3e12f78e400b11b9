"""Exceptions raised by the library."""


class OutOfRange(ValueError):
    """A truth value or proportion argument lies outside [0, 1]."""


class NotArchimedean(ValueError):
    """The t-norm has no additive generator (min, ordinal sums, Frank at p=0)."""


class InvalidSegments(ValueError):
    """Ordinal-sum segments are degenerate, overlapping or out of [0, 1]."""


class NegativeParameter(ValueError):
    """A Frank parameter below zero."""


class InvalidRange(ValueError):
    """A search or sweep interval with lo >= hi, or bad step count."""


class NoBracket(ArithmeticError):
    """No sign change of the mean residual within the exponent search window.

    ``fallback`` is the ``min``/``max`` sentinel with the smaller residual and
    ``residual`` is that residual.
    """

    def __init__(self, message, fallback, residual):
        super().__init__(message)
        self.fallback = fallback
        self.residual = residual
