# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Frank kernels; same arithmetic as ``_pykernels``."""

from libc.math cimport exp, expm1, fabs, log, log1p, INFINITY

import numpy as np

BACKEND = "cython"


cdef inline double _tnorm(double p, double a, double b) noexcept nogil:
    cdef double lo, L, t, la, lb, l1, s, z, m, u1, ua, ub, tmp
    if a > b:
        tmp = a
        a = b
        b = tmp
    if a <= 0.0:
        return 0.0
    if b >= 1.0:
        return a
    if p == 0.0:
        return a
    if p == 1.0:
        return a * b
    lo = a - (1.0 - b)
    if lo < 0.0:
        lo = 0.0
    if p == INFINITY:
        return lo
    L = log(p)
    if -1.0 <= L <= 1.0:
        t = log1p(expm1(a * L) * expm1(b * L) / expm1(L)) / L
    elif L > 1.0:
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


cdef inline double _tconorm(double p, double a, double b) noexcept nogil:
    cdef double s, tmp
    if a > b:
        tmp = a
        a = b
        b = tmp
    if a <= 0.0:
        return b
    if b >= 1.0:
        return 1.0
    s = 1.0 - _tnorm(p, 1.0 - a, 1.0 - b)
    return s if s > b else b


def frank_tnorm(double p, double a, double b):
    return _tnorm(p, a, b)


def frank_tconorm(double p, double a, double b):
    return _tconorm(p, a, b)


def frank_residuals(double p, double a, double b, double c, double d):
    cdef double t = fabs(_tnorm(p, a, d) - _tnorm(p, b, c))
    cdef double s = fabs(_tconorm(p, a, d) - _tconorm(p, b, c))
    return t, s


def diff_sweep(double p, double a, double b, double c, xs):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0], i
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double tbc = _tnorm(p, b, c)
    cdef double sbc = _tconorm(p, b, c)
    with nogil:
        for i in range(n):
            ov[i] = fabs(_tnorm(p, a, xv[i]) - tbc) + fabs(_tconorm(p, a, xv[i]) - sbc)
    return out


def diff_over_params(ps, double a, double b, double c, double d):
    cdef double[::1] pv = np.ascontiguousarray(ps, dtype=np.float64)
    cdef Py_ssize_t n = pv.shape[0], i
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    with nogil:
        for i in range(n):
            ov[i] = (fabs(_tnorm(pv[i], a, d) - _tnorm(pv[i], b, c))
                     + fabs(_tconorm(pv[i], a, d) - _tconorm(pv[i], b, c)))
    return out
