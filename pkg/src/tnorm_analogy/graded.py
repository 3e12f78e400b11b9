"""Analogical proportion between numbers in [0, 1].

:func:`analogy_check` is the crisp t-norm based test: ``a:b::c:d`` holds for
a t-norm ``T`` with dual ``S`` when ``T(a, d) = T(b, c)`` and
``S(a, d) = S(b, c)``.  The two ``mv_degree_*`` functions are the older
graded (many-valued) versions of the Boolean connectives.
"""

from dataclasses import dataclass
from typing import NamedTuple

from tnorm_analogy.tnorms import _tconorm, _tnorm
from tnorm_analogy.units import unit_value

DEFAULT_TOL = 1e-9


class Quadruple(NamedTuple):
    a: float
    b: float
    c: float
    d: float

    @classmethod
    def of(cls, values):
        """Build a validated quadruple from any 4-item iterable."""
        if isinstance(values, cls):
            return values
        vals = tuple(values)
        if len(vals) != 4:
            raise ValueError(f"a quadruple needs 4 values, got {len(vals)}")
        return cls(*(unit_value(v) for v in vals))


@dataclass(frozen=True)
class ProportionVerdict:
    """Outcome of :func:`analogy_check`.

    ``t_residual`` alone answers the weaker, t-norm-only variant of the test.
    """

    holds: bool
    t_residual: float
    s_residual: float

    def __bool__(self):
        return self.holds


def _check_tol(tol):
    tol = float(tol)
    if not tol >= 0.0:
        raise ValueError(f"tolerance must be >= 0, got {tol!r}")
    return tol


def residuals(kind, q):
    """``(|T(a,d) - T(b,c)|, |S(a,d) - S(b,c)|)`` for a validated quadruple."""
    a, b, c, d = Quadruple.of(q)
    t = abs(_tnorm(kind, a, d) - _tnorm(kind, b, c))
    s = abs(_tconorm(kind, a, d) - _tconorm(kind, b, c))
    return t, s


def analogy_check(kind, q, tol=DEFAULT_TOL):
    """Crisp t-norm analogy; both residuals must be within ``tol``."""
    tol = _check_tol(tol)
    t, s = residuals(kind, q)
    return ProportionVerdict(t <= tol and s <= tol, t, s)


def _equiv(s, t):
    # Lukasiewicz equivalence min(s -> t, t -> s)
    return 1.0 - abs(s - t)


def mv_degree_dissim(q):
    """Graded version of the dissimilarity form; equals 1 iff ``a - b == c - d``.

    The inner ``x and not y`` is the bounded difference ``max(0, x - y)`` and
    the outer conjunction is ``min``.
    """
    a, b, c, d = Quadruple.of(q)
    return min(
        _equiv(max(0.0, a - b), max(0.0, c - d)),
        _equiv(max(0.0, b - a), max(0.0, d - c)),
    )


def mv_degree_similarity(q):
    """Graded version of the min/max form; equals 1 iff ``min`` and ``max`` of
    ``(a, d)`` and ``(b, c)`` coincide."""
    a, b, c, d = Quadruple.of(q)
    return min(
        _equiv(min(a, d), min(b, c)),
        _equiv(max(a, d), max(b, c)),
    )


def lukasiewicz_implication(s, t):
    return min(1.0, 1.0 - unit_value(s) + unit_value(t))


def goguen_implication(s, t):
    """1 if ``s == 0``, else ``min(1, t / s)``."""
    s, t = unit_value(s), unit_value(t)
    if s == 0.0 or s <= t:
        return 1.0
    return t / s


def geometric_proportion_check(q, tol=DEFAULT_TOL):
    """``|a*d - b*c| <= tol``."""
    a, b, c, d = Quadruple.of(q)
    return abs(a * d - b * c) <= _check_tol(tol)
