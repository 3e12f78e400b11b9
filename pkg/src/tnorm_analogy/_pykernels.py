"""Pure-Python Frank kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors it
statement for statement so both backends round identically.
"""

from math import exp, expm1, inf, log, log1p

import numpy as np

BACKEND = "python"


def frank_tnorm(p, a, b):
    """Frank t-norm for a raw parameter ``p`` in [0, inf].

    ``p`` equal to 0, 1 or inf selects min, product or Lukasiewicz.  Other
    values use one of three cancellation-free rewrites of
    ``log_p(1 + (p**a - 1) * (p**b - 1) / (p - 1))`` chosen by ``ln p``.
    """
    if a > b:
        a, b = b, a
    if a <= 0.0:
        return 0.0
    if b >= 1.0:
        return a
    if p == 0.0:
        return a
    if p == 1.0:
        return a * b
    # Lukasiewicz bound as a - (1 - b): 1 - b is exact whenever it matters and
    # the result never exceeds a
    lo = max(0.0, a - (1.0 - b))
    if p == inf:
        return lo
    L = log(p)
    if -1.0 <= L <= 1.0:
        t = log1p(expm1(a * L) * expm1(b * L) / expm1(L)) / L
    elif L > 1.0:
        # ln(p**x - 1) for x in {a, b, 1}; the two numerator terms are positive
        la = a * L + log(-expm1(-a * L))
        lb = b * L + log(-expm1(-b * L))
        l1 = L + log(-expm1(-L))
        s = la + lb
        if s > l1:
            z = s - l1 + log1p(exp(l1 - s))
        else:
            z = log1p(exp(s - l1))
        t = z / L
    else:
        m = -L
        u1 = -expm1(-m)
        ua = -expm1(-a * m)
        ub = -expm1(-(1.0 - a) * m)
        t = a - (log(ub + exp(-(b - a) * m) * ua) - log(u1)) / m
    if t < lo:
        return lo
    if t > a:
        return a
    return t


def frank_tconorm(p, a, b):
    if a > b:
        a, b = b, a
    if a <= 0.0:
        return b
    if b >= 1.0:
        return 1.0
    # duality, clamped to the exact lower bound lost to rounding
    s = 1.0 - frank_tnorm(p, 1.0 - a, 1.0 - b)
    return s if s > b else b


def frank_residuals(p, a, b, c, d):
    """Return ``(|T(a,d) - T(b,c)|, |S(a,d) - S(b,c)|)``."""
    t = abs(frank_tnorm(p, a, d) - frank_tnorm(p, b, c))
    s = abs(frank_tconorm(p, a, d) - frank_tconorm(p, b, c))
    return t, s


def diff_sweep(p, a, b, c, xs):
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    out = np.empty(xs.shape[0], dtype=np.float64)
    tbc = frank_tnorm(p, b, c)
    sbc = frank_tconorm(p, b, c)
    for i in range(xs.shape[0]):
        x = float(xs[i])
        out[i] = abs(frank_tnorm(p, a, x) - tbc) + abs(frank_tconorm(p, a, x) - sbc)
    return out


def diff_over_params(ps, a, b, c, d):
    ps = np.ascontiguousarray(ps, dtype=np.float64)
    out = np.empty(ps.shape[0], dtype=np.float64)
    for i in range(ps.shape[0]):
        t, s = frank_residuals(float(ps[i]), a, b, c, d)
        out[i] = t + s
    return out
