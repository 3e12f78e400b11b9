"""Triangular norms, their dual co-norms, additive generators and ordinal sums.

A t-norm is selected by a small immutable *kind* value:

>>> tnorm_eval(Lukasiewicz(), 0.7, 0.5)  # doctest: +ELLIPSIS
0.199999...
>>> tconorm_eval(Product(), 0.5, 0.4)
0.7

The co-norm is always obtained by duality with the negation ``1 - a``.
"""

import enum
import math
from dataclasses import dataclass, field

from tnorm_analogy import _kernels
from tnorm_analogy.errors import InvalidSegments, NotArchimedean
from tnorm_analogy.frank import (
    INF,
    ONE,
    FrankParam,
    frank_generator,
    frank_generator_inverse,
    frank_regime,
)
from tnorm_analogy.units import negation, unit_value

__all__ = [
    "Min",
    "Product",
    "Lukasiewicz",
    "Frank",
    "OrdinalSegment",
    "OrdinalSum",
    "NormClass",
    "negation",
    "tnorm_eval",
    "tconorm_eval",
    "generator_eval",
    "generator_pseudo_inverse",
    "eval_via_generator",
    "ordinal_sum_eval",
    "classify",
]


class TNormKind:
    """Marker base class for t-norm kinds."""

    __slots__ = ()


@dataclass(frozen=True)
class Min(TNormKind):
    """The minimum (Goedel) t-norm, dual to the maximum."""


@dataclass(frozen=True)
class Product(TNormKind):
    """The product t-norm, dual to the probabilistic sum."""


@dataclass(frozen=True)
class Lukasiewicz(TNormKind):
    """``max(0, a + b - 1)``, dual to the bounded sum."""


@dataclass(frozen=True)
class Frank(TNormKind):
    """Member of Frank's family; ``p`` may be a number or a FrankParam."""

    p: FrankParam

    def __post_init__(self):
        object.__setattr__(self, "p", frank_regime(self.p))


@dataclass(frozen=True)
class OrdinalSegment:
    lo: float
    hi: float
    inner: TNormKind

    def __post_init__(self):
        try:
            lo, hi = unit_value(self.lo), unit_value(self.hi)
        except ValueError as exc:
            raise InvalidSegments(str(exc)) from None
        if not lo < hi:
            raise InvalidSegments(f"degenerate segment [{lo}, {hi}]")
        if classify(self.inner) is NormClass.NON_ARCHIMEDEAN:
            raise InvalidSegments(f"segment t-norm {self.inner!r} is not Archimedean")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)


@dataclass(frozen=True)
class OrdinalSum(TNormKind):
    """Ordinal sum of Archimedean t-norms on disjoint sub-intervals.

    Segments are sorted on construction.  Neighbouring segments may share an
    endpoint; at that point every summand agrees with ``min``.
    """

    segments: tuple = field(default=())

    def __post_init__(self):
        segs = tuple(sorted(self.segments, key=lambda s: (s.lo, s.hi)))
        for s in segs:
            if not isinstance(s, OrdinalSegment):
                raise InvalidSegments(f"not an OrdinalSegment: {s!r}")
        for left, right in zip(segs, segs[1:]):
            if right.lo < left.hi:
                raise InvalidSegments(
                    f"segments [{left.lo}, {left.hi}] and [{right.lo}, {right.hi}] overlap"
                )
        object.__setattr__(self, "segments", segs)


class NormClass(enum.Enum):
    STRICT = "strict"
    NILPOTENT = "nilpotent"
    NON_ARCHIMEDEAN = "non-archimedean"


def classify(kind):
    """Strict, nilpotent or non-Archimedean.

    Min fails ``T(a, a) < a`` and ordinal sums contain min-like regions, so
    both are non-Archimedean.  Frank at p = inf is Lukasiewicz, hence nilpotent.
    """
    if isinstance(kind, Product):
        return NormClass.STRICT
    if isinstance(kind, Lukasiewicz):
        return NormClass.NILPOTENT
    if isinstance(kind, Frank):
        if kind.p.is_zero:
            return NormClass.NON_ARCHIMEDEAN
        if kind.p.is_inf:
            return NormClass.NILPOTENT
        return NormClass.STRICT
    if isinstance(kind, (Min, OrdinalSum)):
        return NormClass.NON_ARCHIMEDEAN
    raise TypeError(f"unknown t-norm kind: {kind!r}")


def _tnorm(kind, a, b):
    if isinstance(kind, Min):
        return min(a, b)
    if isinstance(kind, Product):
        return a * b
    if isinstance(kind, Lukasiewicz):
        lo, hi = (a, b) if a <= b else (b, a)
        return max(0.0, lo - (1.0 - hi))
    if isinstance(kind, Frank):
        return _kernels.frank_tnorm(kind.p.value, a, b)
    if isinstance(kind, OrdinalSum):
        return _ordinal_sum(kind.segments, a, b)
    raise TypeError(f"unknown t-norm kind: {kind!r}")


def _ordinal_sum(segments, a, b):
    lo_arg, hi_arg = (a, b) if a <= b else (b, a)
    for seg in segments:
        if seg.lo <= lo_arg and hi_arg <= seg.hi:
            w = seg.hi - seg.lo
            inner = _tnorm(seg.inner, (lo_arg - seg.lo) / w, (hi_arg - seg.lo) / w)
            return min(lo_arg, seg.lo + w * inner)
    return lo_arg


def _tconorm(kind, a, b):
    lo, hi = (a, b) if a <= b else (b, a)
    if lo == 0.0:
        return hi
    if hi == 1.0:
        return 1.0
    s = 1.0 - _tnorm(kind, 1.0 - lo, 1.0 - hi)
    return s if s > hi else hi


def tnorm_eval(kind, a, b):
    """Evaluate ``T(a, b)`` for the given kind."""
    return _tnorm(kind, unit_value(a), unit_value(b))


def tconorm_eval(kind, a, b):
    """Evaluate the dual co-norm ``S(a, b) = 1 - T(1 - a, 1 - b)``.

    The result is clamped below at ``max(a, b)``, which rounding in
    ``1 - T(...)`` can otherwise undercut by an ulp.
    """
    return _tconorm(kind, unit_value(a), unit_value(b))


def ordinal_sum_eval(segments, a, b):
    """Evaluate the ordinal sum built from ``segments`` (validated first)."""
    if not isinstance(segments, OrdinalSum):
        segments = OrdinalSum(tuple(segments))
    return tnorm_eval(segments, a, b)


def _generator_param(kind):
    if isinstance(kind, Product):
        return ONE
    if isinstance(kind, Lukasiewicz):
        return INF
    if isinstance(kind, Frank) and not kind.p.is_zero:
        return kind.p
    raise NotArchimedean(f"{kind!r} has no additive generator")


def generator_eval(kind, x):
    """Additive generator ``f(x)``; may return ``math.inf`` at 0 for strict kinds."""
    return frank_generator(_generator_param(kind), x)


def generator_pseudo_inverse(kind, y):
    """Pseudo-inverse ``f^(-1)(y)``: 1 on ``[0, f(1)]``, 0 from ``f(0)`` on."""
    if y < 0 or math.isnan(y):
        raise ValueError(f"generator values are non-negative, got {y!r}")
    return frank_generator_inverse(_generator_param(kind), y)


def eval_via_generator(kind, a, b):
    """``T(a, b)`` computed as ``f^(-1)(f(a) + f(b))``."""
    param = _generator_param(kind)
    return frank_generator_inverse(param, frank_generator(param, a) + frank_generator(param, b))
