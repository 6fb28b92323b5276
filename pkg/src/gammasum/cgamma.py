"""Principal-branch complex log-Gamma and real-exponent Gamma powers.

Every contour integrand in this package is a product of terms of the form
Gamma(c0 + c1*s)**e with real exponent e, so the one primitive that matters
is a log-Gamma that is continuous on the cut plane C \\ (-inf, 0] and real
on the positive real axis.  ``log_gamma`` is that analytic continuation; it
is NOT log(Gamma(z)), which jumps by multiples of 2*pi*i along vertical
lines.  Only with the continuous branch is Gamma(z)**e single-valued along
an integration contour for non-integer e.
"""

import numpy as np
import scipy.special as _sp

from .errors import DomainError, PoleError

#: Distance below which an argument counts as sitting on a pole of Gamma.
POLE_TOL = 1e-10


def _pole_distance(z: complex) -> float:
    """Distance from z to the nearest non-positive integer."""
    k = round(-z.real)
    if k < 0:
        k = 0
    return abs(z - (-k))


def log_gamma(z: complex) -> complex:
    """Principal log-Gamma, continuous on the plane cut along (-inf, 0].

    Real on the positive real axis, satisfies
    log_gamma(z + 1) = log_gamma(z) + Log(z) away from the cut, and
    log_gamma(conj(z)) = conj(log_gamma(z)).

    Raises:
        PoleError: if z is within ``POLE_TOL`` of a non-positive integer.
    """
    z = complex(z)
    if z.real <= 0.5 and _pole_distance(z) < POLE_TOL:
        raise PoleError(f"log_gamma argument {z} is at or near a pole of Gamma")
    out = complex(_sp.loggamma(z))
    if not (np.isfinite(out.real) and np.isfinite(out.imag)):
        raise PoleError(f"log_gamma({z}) is not finite")
    return out


def gamma_pow(z: complex, a: float) -> complex:
    """Gamma(z)**a for real a > 0, via exp(a * log_gamma(z)).

    The continuous branch of ``log_gamma`` makes this single-valued for
    non-integer exponents; for a = 1 it agrees with Gamma(z) to better
    than 1e-12 relative away from the poles.
    """
    if not a > 0:
        raise DomainError(f"gamma power exponent must be positive, got {a}")
    return complex(np.exp(a * log_gamma(z)))


def log_gamma_vec(z):
    """Vectorized principal log-Gamma without pole screening.

    Internal quadrature helper: contour nodes are kept away from the real
    axis poles by construction, so per-point checks are skipped.
    """
    return _sp.loggamma(z)
