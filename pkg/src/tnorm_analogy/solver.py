"""Residual curves and one-dimensional searches over Frank's family.

``diff_p(x) = |T_p(a, x) - T_p(b, c)| + |S_p(a, x) - S_p(b, c)|`` measures how
far ``a:b::c:x`` is from holding for the Frank t-norm ``T_p``.  Because
``T_p + S_p`` is the sum of the arguments, ``diff_p(x) >= |a + x - b - c|``,
so for finite ``p`` the curve usually has a strictly positive minimum rather
than a zero.  Searches therefore return the minimizer and the minimum and
only call it a root when the minimum is within tolerance.
"""

import math
from dataclasses import dataclass

import numpy as np

from tnorm_analogy import _kernels
from tnorm_analogy.errors import InvalidRange
from tnorm_analogy.frank import INF, ONE, ZERO, FrankParam, frank_regime
from tnorm_analogy.graded import Quadruple, residuals
from tnorm_analogy.options import SolverOptions
from tnorm_analogy.tnorms import Frank
from tnorm_analogy.units import unit_value

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

# log-uniform parameter window scanned by solve_p
P_GRID_LO = 1e-6
P_GRID_HI = 1e6

__all__ = [
    "DiffCurve",
    "DMinimum",
    "PSearchResult",
    "SolverOptions",
    "diff_residual",
    "sweep_d",
    "minimize_over_d",
    "solve_p",
    "golden_section",
]


def _param(p):
    if isinstance(p, Frank):
        return p.p
    return frank_regime(p)


@dataclass(frozen=True)
class DiffCurve:
    p: FrankParam
    fixed: tuple
    x: np.ndarray
    diff: np.ndarray

    @property
    def samples(self):
        return list(zip(self.x.tolist(), self.diff.tolist()))

    def argmin(self):
        return int(np.argmin(self.diff))


@dataclass(frozen=True)
class DMinimum:
    d_star: float
    min_diff: float
    root: bool

    def __iter__(self):
        # unpacks as (d_star, min_diff)
        return iter((self.d_star, self.min_diff))


@dataclass(frozen=True)
class PSearchResult:
    best_p: FrankParam
    best_residual: float
    solutions: tuple


def diff_residual(kind, q):
    """``|T(a,d) - T(b,c)| + |S(a,d) - S(b,c)|``; zero iff the t-norm analogy holds."""
    t, s = residuals(kind, q)
    return t + s


def _check_range(lo, hi):
    lo, hi = unit_value(lo), unit_value(hi)
    if not lo < hi:
        raise InvalidRange(f"empty range [{lo}, {hi}]")
    return lo, hi


def _grid(lo, hi, steps):
    if int(steps) != steps or steps < 2:
        raise InvalidRange(f"steps must be an integer >= 2, got {steps!r}")
    xs = np.linspace(lo, hi, int(steps) + 1)
    if not np.all(np.diff(xs) > 0):
        raise InvalidRange(f"range [{lo}, {hi}] too narrow for {steps} steps")
    return xs


def sweep_d(p, a, b, c, lo, hi, steps):
    """Sample ``diff_p`` at ``steps + 1`` evenly spaced points of ``[lo, hi]``."""
    p = _param(p)
    a, b, c = unit_value(a), unit_value(b), unit_value(c)
    lo, hi = _check_range(lo, hi)
    xs = _grid(lo, hi, steps)
    return DiffCurve(p, (a, b, c), xs, _kernels.diff_sweep(p.value, a, b, c, xs))


def golden_section(f, lo, hi, max_iter=200, f_lo=None, f_hi=None):
    """Minimize a unimodal ``f`` on ``[lo, hi]``.

    Runs until the bracket stops shrinking in floating point or ``max_iter``
    evaluations, and returns the best ``(x, f(x))`` seen, endpoints included
    when their values are supplied.
    """
    x1 = hi - INVPHI * (hi - lo)
    x2 = lo + INVPHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    best = min((f1, x1), (f2, x2))
    for _ in range(max_iter):
        if not lo < x1 < x2 < hi:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INVPHI * (hi - lo)
            f1 = f(x1)
            best = min(best, (f1, x1))
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INVPHI * (hi - lo)
            f2 = f(x2)
            best = min(best, (f2, x2))
    for fx, x in ((f_lo, lo), (f_hi, hi)):
        if fx is not None:
            best = min(best, (fx, x))
    return best[1], best[0]


def minimize_over_d(p, a, b, c, lo, hi, opts=None):
    """Minimize ``diff_p`` over ``[lo, hi]``: coarse scan, then golden section
    around the best grid point."""
    opts = opts or SolverOptions()
    p = _param(p)
    a, b, c = unit_value(a), unit_value(b), unit_value(c)
    lo, hi = _check_range(lo, hi)
    pv = p.value

    def f(x):
        t, s = _kernels.frank_residuals(pv, a, b, c, x)
        return t + s

    xs = _grid(lo, hi, opts.grid_steps)
    ds = _kernels.diff_sweep(pv, a, b, c, xs)
    i = int(np.argmin(ds))
    j, k = max(i - 1, 0), min(i + 1, len(xs) - 1)
    x, fx = golden_section(f, float(xs[j]), float(xs[k]), opts.max_refine, float(ds[j]), float(ds[k]))
    if ds[i] < fx:
        x, fx = float(xs[i]), float(ds[i])
    return DMinimum(x, fx, fx <= opts.tol)


def solve_p(q, opts=None):
    """Search Frank parameters for which ``a:b::c:d`` holds.

    Evaluates the three sentinels and a log-uniform grid on ``[1e-6, 1e6]``,
    refines every local minimum of the residual by golden section in
    ``ln p``, and reports every parameter whose residual is within
    ``opts.tol``.  Several (or infinitely many) parameters may qualify.
    """
    opts = opts or SolverOptions()
    a, b, c, d = Quadruple.of(q)

    def f(lnp):
        t, s = _kernels.frank_residuals(math.exp(lnp), a, b, c, d)
        return t + s

    sentinels = (ZERO, ONE, INF)
    sres = _kernels.diff_over_params([s.value for s in sentinels], a, b, c, d)
    lnps = np.linspace(math.log(P_GRID_LO), math.log(P_GRID_HI), opts.grid_steps)
    ps = np.exp(lnps)
    gres = _kernels.diff_over_params(ps, a, b, c, d)

    candidates = list(zip(sentinels, sres.tolist()))
    candidates += [(FrankParam(float(pv)), float(r)) for pv, r in zip(ps, gres)]

    n = len(gres)
    for i in range(n):
        left = gres[i - 1] if i > 0 else math.inf
        right = gres[i + 1] if i < n - 1 else math.inf
        if not (gres[i] <= left and gres[i] <= right and (gres[i] < left or gres[i] < right)):
            continue
        if gres[i] == 0.0:
            continue
        j, k = max(i - 1, 0), min(i + 1, n - 1)
        lnp, r = golden_section(f, float(lnps[j]), float(lnps[k]), opts.max_refine)
        candidates.append((FrankParam(math.exp(lnp)), r))

    best_p, best_residual = min(candidates, key=lambda pr: pr[1])
    found = {}
    for param, r in candidates:
        if r <= opts.tol:
            found.setdefault(param.value, param)
    solutions = tuple(found[v] for v in sorted(found))
    return PSearchResult(best_p, best_residual, solutions)
