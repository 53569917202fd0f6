"""Gamma kernel with explicit pole semantics.

Four views of the same function, differing in how they treat the poles at
nonpositive integers:

  gamma(x)          value; raises at poles and on overflow
  recip_gamma(x)    the entire reciprocal; exactly 0.0 at poles, never raises
  signed_loggamma   (log|Gamma|, sign, is_pole) triple for log-space work
  gamma_ratio(p,q)  Gamma(p)/Gamma(q) with the four pole cases resolved:
                    no poles -> value; denominator pole -> 0; both poles ->
                    the joint limit (-1)^(n-m) n!/m!; numerator pole -> error

Pole detection is tolerance-based (config.int_tol, default 1e-9) so that
lattice arithmetic performed in doubles lands on the intended case. Exact
integer arguments take exact factorial paths.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels, config
from .errors import GammaOverflowError, GammaPoleError

__all__ = [
    "SignedLogGamma",
    "signed_loggamma",
    "gamma",
    "recip_gamma",
    "gamma_ratio",
    "sinpi",
    "is_pole",
]

# largest exact-integer argument routed through math.factorial
_MAX_EXACT_FACT = 301


def _tol(tol):
    return config.int_tol if tol is None else tol


@dataclass(frozen=True)
class SignedLogGamma:
    """Magnitude-and-sign representation of Gamma(x).

    When is_pole is False, sign * exp(log_abs) reconstructs Gamma(x); at a
    pole log_abs is +inf and sign is fixed at +1.
    """

    log_abs: float
    sign: float
    is_pole: bool

    def value(self):
        if self.is_pole:
            raise GammaPoleError("gamma pole: no finite value")
        if self.log_abs > _kernels.impl.EXP_OVERFLOW:
            raise GammaOverflowError("gamma value exceeds double range")
        return self.sign * math.exp(self.log_abs)


def signed_loggamma(x, tol=None):
    log_abs, sign, pole = _kernels.impl.signed_loggamma(float(x), _tol(tol))
    return SignedLogGamma(log_abs, sign, pole)


def is_pole(x, tol=None):
    """True when x is within tolerance of a nonpositive integer."""
    return _kernels.impl.is_nonpos_int(float(x), _tol(tol))


def sinpi(x):
    """sin(pi*x) with exact argument reduction."""
    return _kernels.impl.sinpi(float(x))


def gamma(x, tol=None):
    """Gamma(x). Raises GammaPoleError at nonpositive integers and
    GammaOverflowError above ~171.6."""
    x = float(x)
    if x == math.floor(x):
        n = int(x)
        if n <= 0:
            raise GammaPoleError("gamma pole at %d" % n)
        if n <= 171:
            return float(math.factorial(n - 1))
        raise GammaOverflowError("gamma(%d) exceeds double range" % n)
    log_abs, sign, pole = _kernels.impl.signed_loggamma(x, _tol(tol))
    if pole:
        raise GammaPoleError("gamma pole at %r" % x)
    if log_abs > _kernels.impl.EXP_OVERFLOW:
        raise GammaOverflowError("gamma(%r) exceeds double range" % x)
    return sign * math.exp(log_abs)


def recip_gamma(x, tol=None):
    """1/Gamma(x), the entire extension: exactly 0.0 at every nonpositive
    integer. Never raises."""
    x = float(x)
    if x == math.floor(x):
        n = int(x)
        if n <= 0:
            return 0.0
        if n <= 171:
            return 1.0 / math.factorial(n - 1)
    return _kernels.impl.recip_gamma(x, _tol(tol))


def _exact_int(x):
    # exact, small-enough integer for factorial arithmetic
    return x == math.floor(x) and abs(x) <= _MAX_EXACT_FACT


def gamma_ratio(p, q, tol=None):
    """Gamma(p)/Gamma(q) computed in log space with sign tracking.

    Pole handling: denominator pole -> exact 0.0; both arguments on poles
    p=-m, q=-n -> the joint limit (-1)^(n-m)*n!/m!; numerator pole alone ->
    GammaPoleError. Exact integer arguments are resolved by exact factorial
    arithmetic, so e.g. gamma_ratio(n+1, n) == n without rounding.
    """
    p = float(p)
    q = float(q)
    t = _tol(tol)
    if _exact_int(p) and _exact_int(q):
        pi, qi = int(p), int(q)
        if pi >= 1 and qi >= 1:
            value = float(Fraction(math.factorial(pi - 1), math.factorial(qi - 1)))
        elif pi >= 1:  # denominator pole only
            value = 0.0
        elif qi >= 1:  # numerator pole only
            raise GammaPoleError(
                "gamma ratio undefined: numerator pole at %d" % pi
            )
        else:  # both poles: joint limit
            m, n = -pi, -qi
            sign = 1 if (n - m) % 2 == 0 else -1
            value = float(sign * Fraction(math.factorial(n), math.factorial(m)))
    else:
        value = _kernels.impl.gamma_ratio(p, q, t)
    if config.gamma_perturb != 0.0 and value != 0.0:
        value *= 1.0 + config.gamma_perturb
    return value
