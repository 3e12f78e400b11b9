"""Frank's family of t-norms, t-conorms and additive generators.

The family runs from ``min`` (p = 0) through the product (p = 1) to the
Lukasiewicz t-norm (p = inf), and is the only family whose members satisfy
``T(a, b) + S(a, b) = a + b``.
"""

import math
from dataclasses import dataclass

from tnorm_analogy import _kernels
from tnorm_analogy.errors import NegativeParameter, NotArchimedean
from tnorm_analogy.units import unit_value

# distance from a sentinel inside which a numeric parameter is replaced by it
SNAP_ONE = 1e-9
SNAP_ZERO = 1e-12
SNAP_INF = 1e15


@dataclass(frozen=True)
class FrankParam:
    """A normalized Frank parameter.

    Construction snaps values close to 0, 1 or infinity onto the exact
    sentinels, so ``FrankParam(1 + 1e-12) == ONE``.
    """

    value: float

    def __post_init__(self):
        p = float(self.value)
        if math.isnan(p):
            raise NegativeParameter("Frank parameter is NaN")
        if p < 0.0:
            raise NegativeParameter(f"Frank parameter must be >= 0, got {p!r}")
        if p < SNAP_ZERO:
            p = 0.0
        elif abs(p - 1.0) < SNAP_ONE:
            p = 1.0
        elif p > SNAP_INF:
            p = math.inf
        object.__setattr__(self, "value", p)

    @property
    def is_zero(self):
        return self.value == 0.0

    @property
    def is_one(self):
        return self.value == 1.0

    @property
    def is_inf(self):
        return self.value == math.inf

    @property
    def is_sentinel(self):
        return self.is_zero or self.is_one or self.is_inf

    def __str__(self):
        if self.is_zero:
            return "0"
        if self.is_one:
            return "1"
        if self.is_inf:
            return "inf"
        return repr(self.value)


ZERO = FrankParam(0.0)
ONE = FrankParam(1.0)
INF = FrankParam(math.inf)


def frank_regime(p_numeric):
    """Normalize a raw number into a :class:`FrankParam`."""
    if isinstance(p_numeric, FrankParam):
        return p_numeric
    return FrankParam(p_numeric)


def frank_tnorm(p, a, b):
    """Frank t-norm ``T_p(a, b)``.

    >>> frank_tnorm(1, 0.5, 0.4)
    0.2
    """
    return _kernels.frank_tnorm(frank_regime(p).value, unit_value(a), unit_value(b))


def frank_tconorm(p, a, b):
    """Dual t-conorm ``1 - T_p(1 - a, 1 - b)``."""
    return _kernels.frank_tconorm(frank_regime(p).value, unit_value(a), unit_value(b))


def frank_generator(p, x):
    """Additive generator of ``T_p``, natural-log scale.

    Returns ``-ln x`` at p = 1, ``1 - x`` at p = inf and
    ``ln((p - 1) / (p**x - 1))`` otherwise; ``inf`` at x = 0 for finite p.
    """
    p = frank_regime(p)
    x = unit_value(x)
    if p.is_zero:
        raise NotArchimedean("the minimum t-norm (p=0) has no additive generator")
    if p.is_inf:
        return 1.0 - x
    if x == 0.0:
        return math.inf
    if x == 1.0:
        return 0.0
    if p.is_one:
        return -math.log(x)
    L = math.log(p.value)
    # both expm1 terms carry the sign of L, so the ratio is >= 1
    return math.log(math.expm1(L) / math.expm1(x * L))


def frank_generator_inverse(p, y):
    """Pseudo-inverse of :func:`frank_generator`.

    1 for ``y <= 0``, 0 once ``y`` reaches the generator's value at 0.
    """
    p = frank_regime(p)
    if p.is_zero:
        raise NotArchimedean("the minimum t-norm (p=0) has no additive generator")
    y = float(y)
    if math.isnan(y):
        raise ValueError("generator value is NaN")
    if y <= 0.0:
        return 1.0
    if p.is_inf:
        return max(0.0, 1.0 - y)
    if y == math.inf:
        return 0.0
    if p.is_one:
        return math.exp(-y)
    L = math.log(p.value)
    x = math.log1p(math.expm1(L) * math.exp(-y)) / L
    return min(1.0, max(0.0, x))
