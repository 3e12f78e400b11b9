"""Power means and the mean-based analogical proportion.

``a:b::c:d`` holds for exponent ``r`` when ``M_r(a, d) == M_r(b, c)`` with
``M_r(x, y) = ((x**r + y**r) / 2) ** (1 / r)``.  For ``a <= b <= c <= d`` there
is exactly one such ``r``; :func:`solve_r` finds it by bisection.
"""

import math
from dataclasses import dataclass

from tnorm_analogy.errors import NoBracket
from tnorm_analogy.graded import DEFAULT_TOL, Quadruple
from tnorm_analogy.options import SolverOptions
from tnorm_analogy.units import unit_value

# bracket for the exponent search grows 1, 2, 4, ... up to this bound
MAX_BRACKET = 512.0
BISECT_WIDTH = 1e-13


@dataclass(frozen=True)
class MeanParam:
    """Exponent of a power mean; ``0`` is the geometric mean, ``-inf``/``inf``
    are ``min``/``max``."""

    r: float

    def __post_init__(self):
        r = float(self.r)
        if math.isnan(r):
            raise ValueError("mean exponent is NaN")
        object.__setattr__(self, "r", r + 0.0)  # folds -0.0 into 0.0

    @property
    def is_geo(self):
        return self.r == 0.0

    @property
    def is_min(self):
        return self.r == -math.inf

    @property
    def is_max(self):
        return self.r == math.inf

    def __str__(self):
        if self.is_geo:
            return "geo"
        if self.is_min:
            return "min"
        if self.is_max:
            return "max"
        return repr(self.r)


GEO = MeanParam(0.0)
MIN = MeanParam(-math.inf)
MAX = MeanParam(math.inf)


def mean_param(r):
    if isinstance(r, MeanParam):
        return r
    if isinstance(r, str):
        key = r.strip().lower()
        named = {"geo": GEO, "min": MIN, "max": MAX, "inf": MAX, "-inf": MIN}
        if key in named:
            return named[key]
    return MeanParam(r)


def _power_mean(r, x, y):
    lo, hi = (x, y) if x <= y else (y, x)
    if lo == hi:
        return lo
    if r == -math.inf:
        return lo
    if r == math.inf:
        return hi
    if r == 1.0:
        return (lo + hi) / 2
    if r == 0.0:
        return math.sqrt(lo) * math.sqrt(hi)
    if lo == 0.0:
        if r < 0.0:
            return 0.0
        return hi * 2.0 ** (-1.0 / r)
    # M = ref * ((1 + (other/ref)**r) / 2) ** (1/r) with ref chosen so the
    # power stays <= 1; expm1/log1p keep precision for |r| -> 0
    if r > 0.0:
        ref, k = hi, math.log(lo / hi)
    else:
        ref, k = lo, math.log(hi / lo)
    m = ref * math.exp(math.log1p(math.expm1(r * k) / 2) / r)
    return min(hi, max(lo, m))


def power_mean(r, x, y):
    """Power mean of two values in [0, 1].

    >>> power_mean(1, 0.2, 0.4)
    0.30000000000000004
    >>> power_mean("geo", 0.25, 1.0)
    0.5
    """
    return _power_mean(mean_param(r).r, unit_value(x), unit_value(y))


def mean_residual(r, q):
    a, b, c, d = Quadruple.of(q)
    r = mean_param(r).r
    return abs(_power_mean(r, a, d) - _power_mean(r, b, c))


def mean_analogy_check(r, q, tol=DEFAULT_TOL):
    return mean_residual(r, q) <= tol


def solve_r(q, opts=None):
    """Exponent ``r`` with ``M_r(a, d) == M_r(b, c)``.

    Tries ``r = 1`` and the geometric mean first, then expands a symmetric
    bracket ``[-R, R]`` until the residual changes sign and bisects.  Raises
    :class:`NoBracket` when no sign change appears up to ``R = 512``.
    """
    opts = opts or SolverOptions()
    a, b, c, d = Quadruple.of(q)
    if a == b == c == d:
        return MeanParam(1.0)

    def h(r):
        return _power_mean(r, a, d) - _power_mean(r, b, c)

    if abs(h(1.0)) <= opts.tol:
        return MeanParam(1.0)
    if abs(h(0.0)) <= opts.tol:
        return GEO

    R = 1.0
    while R <= MAX_BRACKET:
        lo, hi = -R, R
        flo, fhi = h(lo), h(hi)
        if flo == 0.0:
            return MeanParam(lo)
        if fhi == 0.0:
            return MeanParam(hi)
        if (flo < 0.0) != (fhi < 0.0):
            return MeanParam(_bisect(h, lo, hi, flo, opts.max_refine))
        R *= 2.0

    res_min = abs(min(a, d) - min(b, c))
    res_max = abs(max(a, d) - max(b, c))
    fallback, residual = (MIN, res_min) if res_min <= res_max else (MAX, res_max)
    raise NoBracket(
        f"no sign change of M_r(a,d) - M_r(b,c) for |r| <= {MAX_BRACKET:g}",
        fallback,
        residual,
    )


def _bisect(f, lo, hi, flo, max_iter):
    best, best_f = lo, flo
    for _ in range(max_iter):
        if hi - lo <= BISECT_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) < abs(best_f):
            best, best_f = mid, fm
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    if abs(f(hi)) < abs(best_f):
        return hi
    return best
