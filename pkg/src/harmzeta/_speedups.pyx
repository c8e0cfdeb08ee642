# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Double-precision partial sums over n = 1..N with compensated (Neumaier) summation."""

from libc.math cimport log, fabs, pow

cdef double EULER = 0.57721566490153286060651209008240243


cdef inline void _acc(double* s, double* c, double x) noexcept nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        c[0] += (s[0] - t) + x
    else:
        c[0] += (x - t) + s[0]
    s[0] = t


cdef inline double _ipow(double x, int m) noexcept nogil:
    cdef double r = 1.0
    while m > 0:
        if m & 1:
            r *= x
        x *= x
        m >>= 1
    return r


def gap_sum(long N, int m):
    """sum (H_n^m - (log n + gamma)^m) / n."""
    cdef double hs = 0.0, hc = 0.0, s = 0.0, c = 0.0, h, L
    cdef long n
    with nogil:
        for n in range(1, N + 1):
            _acc(&hs, &hc, 1.0 / n)
            h = hs + hc
            L = log(<double>n) + EULER
            _acc(&s, &c, (_ipow(h, m) - _ipow(L, m)) / n)
    return s + c


def skew_sum(long N, int m):
    """sum ((H_n - log n)^m - gamma^m) / n."""
    cdef double hs = 0.0, hc = 0.0, s = 0.0, c = 0.0, h, g = _ipow(EULER, m)
    cdef long n
    with nogil:
        for n in range(1, N + 1):
            _acc(&hs, &hc, 1.0 / n)
            h = hs + hc - log(<double>n)
            _acc(&s, &c, (_ipow(h, m) - g) / n)
    return s + c


def weighted_gap_sum(long N, int m):
    """sum H_n^m (H_n - log n - gamma) / n."""
    cdef double hs = 0.0, hc = 0.0, s = 0.0, c = 0.0, h
    cdef long n
    with nogil:
        for n in range(1, N + 1):
            _acc(&hs, &hc, 1.0 / n)
            h = hs + hc
            _acc(&s, &c, _ipow(h, m) * (h - log(<double>n) - EULER) / n)
    return s + c


def log_weighted_sum(long N, int m, int p, double s_exp):
    """sum H_k^m log(k)^p / k^s."""
    cdef double hs = 0.0, hc = 0.0, s = 0.0, c = 0.0, h
    cdef long k
    with nogil:
        for k in range(1, N + 1):
            _acc(&hs, &hc, 1.0 / k)
            h = hs + hc
            _acc(&s, &c, _ipow(h, m) * _ipow(log(<double>k), p) * pow(<double>k, -s_exp))
    return s + c
