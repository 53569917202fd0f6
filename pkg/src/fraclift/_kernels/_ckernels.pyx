# cython: language_level=3, cdivision=True, boundscheck=False
"""Compiled twin of pykernels. Same arithmetic, same operation order."""

from libc.math cimport exp, fabs, floor, fmod, log, pow, sin, INFINITY

from fraclift.errors import GammaPoleError

BACKEND = "c"

cdef double LANCZOS_G = 7.0
cdef double[9] _LANCZOS
_LANCZOS[0] = 0.99999999999980993
_LANCZOS[1] = 676.5203681218851
_LANCZOS[2] = -1259.1392167224028
_LANCZOS[3] = 771.32342877765313
_LANCZOS[4] = -176.61502916214059
_LANCZOS[5] = 12.507343278686905
_LANCZOS[6] = -0.13857109526572012
_LANCZOS[7] = 9.9843695780195716e-6
_LANCZOS[8] = 1.5056327351493116e-7

cdef double _HALF_LOG_TWO_PI = 0.9189385332046727417803297364
cdef double _LOG_PI = 1.1447298858494001741434273514
cdef double _PI = 3.14159265358979323846264338328
EXP_OVERFLOW = 709.782712893384
EXP_UNDERFLOW = -745.1332191019412
cdef double _EXP_OVERFLOW = 709.782712893384
cdef double _EXP_UNDERFLOW = -745.1332191019412


cdef inline bint _is_nonpos_int(double x, double tol) noexcept:
    cdef double r = floor(x + 0.5)
    return r <= 0.0 and fabs(x - r) <= tol


cdef inline double _sinpi(double x) noexcept:
    cdef double sign = 1.0
    cdef double r
    if x < 0.0:
        x = -x
        sign = -1.0
    r = fmod(x, 2.0)
    if r >= 1.0:
        sign = -sign
        r -= 1.0
    if r > 0.5:
        r = 1.0 - r
    return sign * sin(_PI * r)


cdef inline double _loggamma_pos(double x) noexcept:
    cdef double z = x - 1.0
    cdef double acc = _LANCZOS[0]
    cdef int i
    for i in range(1, 9):
        acc += _LANCZOS[i] / (z + i)
    cdef double t = z + 7.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * log(t) - t + log(acc)


def is_nonpos_int(double x, double tol):
    return bool(_is_nonpos_int(x, tol))


def sinpi(double x):
    return _sinpi(x)


def signed_loggamma(double x, double tol):
    cdef double s, log_abs
    if _is_nonpos_int(x, tol):
        return INFINITY, 1.0, True
    if x >= 0.5:
        return _loggamma_pos(x), 1.0, False
    s = _sinpi(x)
    log_abs = _LOG_PI - log(fabs(s)) - _loggamma_pos(1.0 - x)
    return log_abs, (1.0 if s > 0.0 else -1.0), False


def recip_gamma(double x, double tol):
    cdef double s, log_abs, d
    if _is_nonpos_int(x, tol):
        return 0.0
    if x >= 0.5:
        log_abs = _loggamma_pos(x)
        s = 1.0
    else:
        s = _sinpi(x)
        log_abs = _LOG_PI - log(fabs(s)) - _loggamma_pos(1.0 - x)
        s = 1.0 if s > 0.0 else -1.0
    d = -log_abs
    if d > _EXP_OVERFLOW:
        return s * INFINITY
    if d < _EXP_UNDERFLOW:
        return 0.0
    return s * exp(d)


def gamma_ratio(double p, double q, double tol):
    cdef bint p_pole = _is_nonpos_int(p, tol)
    cdef bint q_pole = _is_nonpos_int(q, tol)
    cdef double m, n, sign, d
    cdef double la, sa, lb, sb, s
    if p_pole and q_pole:
        m = -floor(p + 0.5)
        n = -floor(q + 0.5)
        sign = 1.0 if fmod(n - m, 2.0) == 0.0 else -1.0
        d = _loggamma_pos(n + 1.0) - _loggamma_pos(m + 1.0)
        if d > _EXP_OVERFLOW:
            return sign * INFINITY
        return sign * exp(d)
    if q_pole:
        return 0.0
    if p_pole:
        raise GammaPoleError(
            "gamma ratio undefined: numerator pole at %r with finite denominator" % p
        )
    if p >= 0.5:
        la = _loggamma_pos(p)
        sa = 1.0
    else:
        s = _sinpi(p)
        la = _LOG_PI - log(fabs(s)) - _loggamma_pos(1.0 - p)
        sa = 1.0 if s > 0.0 else -1.0
    if q >= 0.5:
        lb = _loggamma_pos(q)
        sb = 1.0
    else:
        s = _sinpi(q)
        lb = _LOG_PI - log(fabs(s)) - _loggamma_pos(1.0 - q)
        sb = 1.0 if s > 0.0 else -1.0
    d = la - lb
    sign = sa * sb
    if d > _EXP_OVERFLOW:
        return sign * INFINITY
    if d < _EXP_UNDERFLOW:
        return 0.0
    return sign * exp(d)


def eval_terms(double dx, exps, coefs):
    cdef double total = 0.0
    cdef double e, c
    cdef Py_ssize_t i, nterms = len(exps)
    for i in range(nterms):
        e = exps[i]
        c = coefs[i]
        total += c * pow(dx, e)
    return total
