"""Pure-Python scalar kernels: signed log-Gamma, reciprocal Gamma, Gamma
ratios and power-term evaluation.

This module is the reference backend; fraclift._kernels swaps in the compiled
twin (_ckernels) when it is available. Both backends implement the identical
arithmetic, in the identical order, so results agree to the last few ulps.

Gamma is evaluated with the 9-term Lanczos approximation (g = 7) on the
half-line x >= 0.5 and carried to the rest of the real line through the
reflection formula Gamma(x) Gamma(1-x) = pi / sin(pi x). sin(pi x) uses exact
argument reduction so reflected values stay accurate arbitrarily close to the
poles.
"""

import math

from fraclift.errors import GammaPoleError

BACKEND = "python"

LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.9189385332046727417803297364  # log(2 pi)/2
_LOG_PI = 1.1447298858494001741434273514  # log(pi)
EXP_OVERFLOW = 709.782712893384  # log(DBL_MAX)
EXP_UNDERFLOW = -745.1332191019412  # log of smallest denormal


def is_nonpos_int(x, tol):
    """True when x is within tol of an integer <= 0 (a Gamma pole)."""
    r = math.floor(x + 0.5)
    return r <= 0.0 and abs(x - r) <= tol


def sinpi(x):
    """sin(pi*x) with exact range reduction (accurate near every integer)."""
    sign = 1.0
    if x < 0.0:
        x = -x
        sign = -1.0
    r = math.fmod(x, 2.0)  # exact
    if r >= 1.0:
        sign = -sign
        r -= 1.0  # exact
    if r > 0.5:
        r = 1.0 - r  # exact (Sterbenz)
    return sign * math.sin(math.pi * r)


def _loggamma_pos(x):
    # Lanczos g=7; requires x >= 0.5 where the rational part is positive.
    z = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, 9):
        acc += _LANCZOS[i] / (z + i)
    t = z + 7.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def signed_loggamma(x, tol):
    """Return (log|Gamma(x)|, sign, is_pole); (inf, 1.0, True) at poles."""
    if is_nonpos_int(x, tol):
        return math.inf, 1.0, True
    if x >= 0.5:
        return _loggamma_pos(x), 1.0, False
    # reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x))
    s = sinpi(x)
    log_abs = _LOG_PI - math.log(abs(s)) - _loggamma_pos(1.0 - x)
    return log_abs, (1.0 if s > 0.0 else -1.0), False


def recip_gamma(x, tol):
    """1/Gamma(x); exactly 0.0 on poles, never raises."""
    log_abs, sign, pole = signed_loggamma(x, tol)
    if pole:
        return 0.0
    d = -log_abs
    if d > EXP_OVERFLOW:
        return sign * math.inf
    if d < EXP_UNDERFLOW:
        return 0.0
    return sign * math.exp(d)


def gamma_ratio(p, q, tol):
    """Gamma(p)/Gamma(q) in log space with pole-case semantics.

    neither pole      -> ordinary value
    q pole only       -> exactly 0.0
    both poles        -> joint limit (-1)^(n-m) n!/m! for p=-m, q=-n
    p pole only       -> GammaPoleError
    """
    p_pole = is_nonpos_int(p, tol)
    q_pole = is_nonpos_int(q, tol)
    if p_pole and q_pole:
        m = -math.floor(p + 0.5)
        n = -math.floor(q + 0.5)
        sign = 1.0 if math.fmod(n - m, 2.0) == 0.0 else -1.0
        d = _loggamma_pos(n + 1.0) - _loggamma_pos(m + 1.0)
        if d > EXP_OVERFLOW:
            return sign * math.inf
        return sign * math.exp(d)
    if q_pole:
        return 0.0
    if p_pole:
        raise GammaPoleError(
            "gamma ratio undefined: numerator pole at %r with finite denominator" % p
        )
    la, sa, _ = signed_loggamma(p, tol)
    lb, sb, _ = signed_loggamma(q, tol)
    d = la - lb
    sign = sa * sb
    if d > EXP_OVERFLOW:
        return sign * math.inf
    if d < EXP_UNDERFLOW:
        return 0.0
    return sign * math.exp(d)


def eval_terms(dx, exps, coefs):
    """Sum of coef * dx**exp over paired sequences, in the given order."""
    total = 0.0
    for e, c in zip(exps, coefs):
        total += c * math.pow(dx, e)
    return total
