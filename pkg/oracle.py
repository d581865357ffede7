"""
Analytic oracle: zeta, Dirichlet L and Dedekind zeta functions with continuation.

This module is the independent ground truth for the regularization engine and
deliberately shares no Euler-product code with it:

- zeta: Borwein-accelerated eta series, reflection for Re s <= 0
- hurwitz_zeta: Euler-Maclaurin summation, valid on the whole plane
- dirichlet_l: finite combination of Hurwitz zeta values
- dedekind_zeta: products of Dirichlet L-functions for quadratic and
  cyclotomic fields
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from archimedean import complex_gamma, i_power
from arithmetic import factorize
from characters import (
    DirichletCharacter,
    IdeleClassCharacter,
    enumerate_characters,
    kronecker_character,
)
from places import CYCLOTOMIC, QUADRATIC, RATIONALS, NumberFieldDescriptor
from utils.error_handlers import OracleUnavailable, PoleError
from utils.logging_config import get_logger
from utils.reduction import fsum_complex

logger = get_logger(__name__)

POLE_TOLERANCE = 1e-8
BORWEIN_TERMS = 60
MAX_EM_TERMS = 1 << 16

LOG_TWO = math.log(2.0)
LOG_PI = math.log(math.pi)

# B_2, B_4, ..., B_16 divided by (2j)!
_BERNOULLI = (
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
)
_BERNOULLI_SCALED = tuple(
    float(b / math.factorial(2 * (j + 1))) for j, b in enumerate(_BERNOULLI)
)


# --- Riemann zeta ---

@lru_cache(maxsize=4)
def _borwein_coefficients(n: int) -> Tuple[float, ...]:
    """(d_k - d_n) / d_n for k < n, from exact integer arithmetic."""
    partial = []
    total = Fraction(0)
    for i in range(n + 1):
        total += Fraction(
            math.factorial(n + i - 1) * 4 ** i,
            math.factorial(n - i) * math.factorial(2 * i),
        )
        partial.append(n * total)
    d_n = partial[n]
    return tuple(float((partial[k] - d_n) / d_n) for k in range(n))


def _eta(s: complex) -> complex:
    coeffs = _borwein_coefficients(BORWEIN_TERMS)
    terms = [
        (-1) ** k * c * cmath.exp(-s * math.log(k + 1)) for k, c in enumerate(coeffs)
    ]
    return -fsum_complex(terms)


def zeta(s: complex) -> complex:
    """
    Riemann zeta function.

    Raises:
        PoleError: within 1e-8 of s = 1
    """
    s = complex(s)
    if abs(s - 1) < POLE_TOLERANCE:
        raise PoleError(f"zeta has a pole at s={s}")
    if s.real > 0 or abs(s) < 0.25:
        denominator = 1 - cmath.exp((1 - s) * LOG_TWO)
        if abs(denominator) < 1e-3:
            return hurwitz_zeta(s, 1.0)
        return _eta(s) / denominator
    # zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
    return (
        cmath.exp(s * LOG_TWO + (s - 1) * LOG_PI)
        * cmath.sin(math.pi * s / 2)
        * complex_gamma(1 - s)
        * zeta(1 - s)
    )


# --- Hurwitz zeta ---

def _rising_tail_estimate(s: complex, x: float) -> float:
    """Size of the last Euler-Maclaurin correction relative to x^(-s)."""
    rising = 1.0
    for i in range(2 * len(_BERNOULLI) - 1):
        rising *= abs(s + i)
    return abs(_BERNOULLI_SCALED[-1]) * rising / x ** (2 * len(_BERNOULLI) - 1)


@lru_cache(maxsize=512)
def _em_cutoff(s: complex) -> int:
    n = 16 + math.ceil(abs(s))
    while _rising_tail_estimate(s, n) > 1e-17 and n < MAX_EM_TERMS:
        n *= 2
    logger.debug(f"Euler-Maclaurin cutoff N={n} for s={s}")
    return n


def _em_regular(s: complex, a: float, n: int) -> complex:
    """sum_{k<n} (k+a)^(-s) + x^(-s)/2 + Bernoulli corrections, with x = n + a."""
    k = np.arange(n, dtype=np.float64)
    head = fsum_complex(np.exp(-s * np.log(k + a)).tolist())
    x = n + a
    x_minus_s = cmath.exp(-s * math.log(x))
    total = head + 0.5 * x_minus_s
    rising = s
    power = x_minus_s / x
    for j, b in enumerate(_BERNOULLI_SCALED, start=1):
        total += b * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= x * x
    return total


def hurwitz_zeta(s: complex, a: float) -> complex:
    """Hurwitz zeta sum_{k>=0} (k+a)^(-s), continued to s != 1, for a > 0."""
    s = complex(s)
    if abs(s - 1) < POLE_TOLERANCE:
        raise PoleError(f"Hurwitz zeta has a pole at s={s}")
    n = _em_cutoff(s)
    x = n + a
    return _em_regular(s, a, n) + cmath.exp((1 - s) * math.log(x)) / (s - 1)


def _expm1_ratio(u: complex) -> complex:
    """(e^u - 1) / u, smooth through u = 0."""
    if abs(u) < 1e-5:
        return 1 + u / 2 + u * u / 6
    return (cmath.exp(u) - 1) / u


# --- Dirichlet L-functions ---

def dirichlet_l(s: complex, chi: DirichletCharacter) -> complex:
    """
    L(s, chi) = m^(-s) sum_a chi(a) zeta_H(s, a/m), entire for nontrivial chi.

    The 1/(s-1) parts of the Hurwitz values cancel because the character
    values sum to zero, so L(1, chi) needs no limit.
    """
    s = complex(s)
    m = chi.modulus
    if m == 1:
        return zeta(s)
    if chi.is_trivial:
        value = zeta(s)
        for p, _ in factorize(m):
            value *= 1 - cmath.exp(-s * math.log(p))
        return value

    n = _em_cutoff(s)
    regular = []
    singular = []
    for a in range(1, m):
        value = chi(a)
        if value == 0:
            continue
        x = n + a / m
        log_x = math.log(x)
        regular.append(value * _em_regular(s, a / m, n))
        # x^(1-s)/(s-1) minus its pole 1/(s-1)
        singular.append(-value * log_x * _expm1_ratio((1 - s) * log_x))
    return cmath.exp(-s * math.log(m)) * (fsum_complex(regular) + fsum_complex(singular))


def gauss_sum(chi: DirichletCharacter) -> complex:
    """tau(chi) = sum_a chi(a) exp(2 pi i a / m)."""
    m = chi.modulus
    angles = np.asarray(chi.angles, dtype=np.int64)
    a = np.arange(m, dtype=np.int64)
    units = angles >= 0
    n = chi.order * m
    phase = (angles[units] * m + a[units] * chi.order) % n
    return complex(np.exp(2j * np.pi * phase / n).sum())


def root_number(chi: DirichletCharacter) -> complex:
    """epsilon(chi) = tau(chi) / (i^nu sqrt(m)) for primitive chi."""
    return gauss_sum(chi) / (i_power(chi.parity) * math.sqrt(chi.modulus))


# --- Dedekind zeta functions ---

def dedekind_zeta(s: complex, field: NumberFieldDescriptor) -> complex:
    """Dedekind zeta function of Q, Q(sqrt d) or Q(zeta_m)."""
    s = complex(s)
    if abs(s - 1) < POLE_TOLERANCE:
        raise PoleError(f"Dedekind zeta of {field} has a pole at s={s}")
    if field.kind == RATIONALS:
        return zeta(s)
    if field.kind == QUADRATIC:
        return zeta(s) * dirichlet_l(s, kronecker_character(field.discriminant))
    if field.kind == CYCLOTOMIC:
        value = 1 + 0j
        for chi in enumerate_characters(field.parameter):
            value *= dirichlet_l(s, chi.primitive())
        return value
    raise OracleUnavailable(f"no Dedekind zeta for {field}")


@dataclass(frozen=True)
class LFunctionHandle:
    """Which analytic L-function the oracle evaluates."""
    kind: str
    character: Optional[DirichletCharacter] = None
    field: Optional[NumberFieldDescriptor] = None

    def __call__(self, s: complex) -> complex:
        if self.kind == "riemann_zeta":
            return zeta(s)
        if self.kind == "dirichlet":
            return dirichlet_l(s, self.character)
        return dedekind_zeta(s, self.field)


def l_function_for(omega: IdeleClassCharacter) -> LFunctionHandle:
    """The analytic L-function L(s; omega) of an idele-class character."""
    if omega.dirichlet is not None and not omega.dirichlet.is_trivial:
        if omega.field.kind != RATIONALS:
            raise OracleUnavailable(f"{omega} over {omega.field}")
        return LFunctionHandle("dirichlet", character=omega.dirichlet)
    if omega.ramified:
        raise OracleUnavailable(f"ramified character {omega} without Dirichlet data")
    if omega.field.kind == RATIONALS:
        return LFunctionHandle("riemann_zeta")
    if omega.field.kind == QUADRATIC:
        return LFunctionHandle("dedekind_quadratic", field=omega.field)
    return LFunctionHandle("dedekind_cyclotomic", field=omega.field)
