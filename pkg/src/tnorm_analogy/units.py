"""Truth degrees in the unit interval."""

from tnorm_analogy.errors import OutOfRange


def unit_value(x):
    """Return ``x`` as a float, rejecting anything outside [0, 1] (and NaN)."""
    v = float(x)
    if not 0.0 <= v <= 1.0:
        raise OutOfRange(f"{x!r} is not in [0, 1]")
    return v


def negation(a):
    """Standard strong negation ``1 - a``."""
    return 1.0 - unit_value(a)
