"""
Local gamma and beta functions of the archimedean fields R and C.

All powers of pi and 2*pi are taken as exp(s * log(base)) with a real positive
base, so they are single valued. Poles are detected by distance to the pole
lattice and raised as PoleError; they are never returned as large numbers.
"""

import cmath
import math
from typing import Union

from utils.config import get_max_weight
from utils.error_handlers import PoleError, ValidationError

Number = Union[int, float, complex]

POLE_TOLERANCE = 1e-12

LOG_PI = math.log(math.pi)
LOG_TWO_PI = math.log(2.0 * math.pi)
HALF_LOG_TWO_PI = 0.5 * LOG_TWO_PI

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
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


def i_power(k: int) -> complex:
    """Exact value of i**k for an integer k."""
    return (1 + 0j, 1j, -1 + 0j, -1j)[k % 4]


def _nearest_nonpositive_integer(z: complex) -> int:
    """Return n <= 0 if z lies within POLE_TOLERANCE of n, else 1."""
    n = round(z.real)
    if n <= 0 and abs(z - n) < POLE_TOLERANCE:
        return n
    return 1


def _sin_pi(z: complex) -> complex:
    """sin(pi*z) with the integer part of Re z reduced away first."""
    n = round(z.real)
    value = cmath.sin(math.pi * (z - n))
    return -value if n % 2 else value


def _lanczos_log_gamma(z: complex) -> complex:
    """log Gamma(z) for Re z >= 0.5, principal branch not guaranteed."""
    z -= 1
    x = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        x += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def complex_gamma(z: Number) -> complex:
    """
    Euler's Gamma function on the complex plane.

    Lanczos approximation for Re z >= 0.5 and the reflection formula
    Gamma(z) Gamma(1 - z) = pi / sin(pi z) below that.

    Raises:
        PoleError: if z is within 1e-12 of a non-positive integer
    """
    z = complex(z)
    if _nearest_nonpositive_integer(z) <= 0:
        raise PoleError(f"Gamma has a pole at z={z}")
    if z.real < 0.5:
        return math.pi / (_sin_pi(z) * cmath.exp(_lanczos_log_gamma(1 - z)))
    return cmath.exp(_lanczos_log_gamma(z))


def reciprocal_gamma(z: Number) -> complex:
    """1/Gamma(z), an entire function: exactly zero on the pole lattice."""
    z = complex(z)
    if _nearest_nonpositive_integer(z) <= 0:
        return 0j
    return 1 / complex_gamma(z)


def _power(log_base: float, s: complex) -> complex:
    return cmath.exp(s * log_base)


def g_infty(alpha: Number) -> complex:
    """
    Completed gamma factor of R.

    Args:
        alpha: complex argument

    Returns:
        pi^(-alpha/2) Gamma(alpha/2)

    Raises:
        PoleError: for alpha in {0, -2, -4, ...}
    """
    alpha = complex(alpha)
    return _power(LOG_PI, -alpha / 2) * complex_gamma(alpha / 2)


def g_minus_infty(alpha: Number) -> complex:
    """
    Completed gamma factor of C.

    Args:
        alpha: complex argument

    Returns:
        (2 pi)^(1 - alpha) Gamma(alpha)

    Raises:
        PoleError: for alpha in {0, -1, -2, ...}
    """
    alpha = complex(alpha)
    return _power(LOG_TWO_PI, 1 - alpha) * complex_gamma(alpha)


def _check_parity(nu: int) -> int:
    if nu not in (0, 1):
        raise ValidationError(f"real parity must be 0 or 1, got {nu!r}")
    return nu


def _check_weight(nu: int) -> int:
    if not isinstance(nu, int) or isinstance(nu, bool):
        raise ValidationError(f"complex weight must be an integer, got {nu!r}")
    limit = get_max_weight()
    if abs(nu) > limit:
        raise ValidationError(f"|nu|={abs(nu)} exceeds the weight bound {limit}")
    return nu


def gamma_real(alpha: Number, nu: int) -> complex:
    """
    Local gamma function of R for the character sgn^nu.

    i^(-nu) pi^(1/2 - alpha) Gamma((alpha + nu)/2) / Gamma((1 - alpha + nu)/2).
    A pole of the denominator gives the value 0.
    """
    alpha = complex(alpha)
    nu = _check_parity(nu)
    numerator = complex_gamma((alpha + nu) / 2)
    return (
        i_power(-nu)
        * _power(LOG_PI, 0.5 - alpha)
        * numerator
        * reciprocal_gamma((1 - alpha + nu) / 2)
    )


def gamma_complex_field(alpha: Number, nu: int) -> complex:
    """
    Local gamma function of C for the character of weight nu.

    i^(-|nu|) (2 pi)^(1 - 2 alpha) Gamma(alpha + |nu|/2) / Gamma(1 - alpha + |nu|/2),
    so only |nu| matters.
    """
    alpha = complex(alpha)
    n = abs(_check_weight(nu))
    numerator = complex_gamma(alpha + n / 2)
    return (
        i_power(-n)
        * _power(LOG_TWO_PI, 1 - 2 * alpha)
        * numerator
        * reciprocal_gamma(1 - alpha + n / 2)
    )


def beta_real(alpha: Number, nu: int, beta: Number, mu: int) -> complex:
    """B_inf(alpha, nu; beta, mu) with third point (1 - alpha - beta, -nu - mu mod 2)."""
    alpha, beta = complex(alpha), complex(beta)
    _check_parity(nu)
    _check_parity(mu)
    eta = (-nu - mu) % 2
    return (
        gamma_real(alpha, nu)
        * gamma_real(beta, mu)
        * gamma_real(1 - alpha - beta, eta)
    )


def beta_complex_field(alpha: Number, nu: int, beta: Number, mu: int) -> complex:
    """B_{-inf}(alpha, nu; beta, mu) with third point (1 - alpha - beta, -nu - mu)."""
    alpha, beta = complex(alpha), complex(beta)
    _check_weight(nu)
    _check_weight(mu)
    return (
        gamma_complex_field(alpha, nu)
        * gamma_complex_field(beta, mu)
        * gamma_complex_field(1 - alpha - beta, -nu - mu)
    )


def gamma_real_pole_distance(alpha: Number, nu: int) -> float:
    """
    Distance from alpha to the pole set {-nu - 2k : k >= 0} of gamma_real.

    Args:
        alpha: complex argument
        nu: parity, 0 or 1

    Returns:
        |alpha - pole| for the nearest pole
    """
    alpha = complex(alpha)
    k = max(0, round((-nu - alpha.real) / 2))
    return abs(alpha - (-nu - 2 * k))


def gamma_complex_pole_distance(alpha: Number, nu: int) -> float:
    """Distance from alpha to the pole set {-|nu|/2 - k : k >= 0} of gamma_complex_field."""
    alpha = complex(alpha)
    shift = abs(nu) / 2
    k = max(0, round(-shift - alpha.real))
    return abs(alpha - (-shift - k))
