"""
Local gamma and beta functions of the p-adic fields.

- gamma_q / beta_q: the unramified (reduced) gamma function of a field with
  residue module q and the beta function built from three of them
- RamifiedLocalCharacter: a character of the units mod p^rho, stored as exact
  angle numerators k of 2*pi*k/n
- kappa_local / gamma_ramified: normalized Gauss sum and ramified gamma
"""

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from arithmetic import is_prime, prime_power
from utils.error_handlers import (
    NotPrimitiveError,
    PoleError,
    UnsupportedFieldError,
    ValidationError,
)

Number = Union[int, float, complex]

POLE_TOLERANCE = 1e-14
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ResidueModule:
    """Residue field size q = p^f of a finite place."""
    p: int
    f: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValidationError(f"residue characteristic {self.p} is not prime")
        if self.f < 1:
            raise ValidationError(f"residue degree must be >= 1, got {self.f}")

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def log_q(self) -> float:
        return self.f * math.log(self.p)

    @classmethod
    def from_q(cls, q: int) -> "ResidueModule":
        try:
            p, f = prime_power(q)
        except ValueError as e:
            raise ValidationError(f"module q={q} is not a prime power") from e
        return cls(p, f)


def as_module(q: Union[int, ResidueModule]) -> ResidueModule:
    """
    Coerce a prime power or a module into a ResidueModule.

    Args:
        q: prime power q = p^f, or an existing module

    Returns:
        The module itself, or ResidueModule(p, f) built from q

    Raises:
        ValidationError: if q is not a prime power
    """
    return q if isinstance(q, ResidueModule) else ResidueModule.from_q(int(q))


def root_of_unity(k: int, n: int) -> complex:
    """exp(2 pi i k / n), exact at multiples of a quarter turn."""
    k %= n
    if (4 * k) % n == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[4 * k // n]
    return cmath.exp(TWO_PI * 1j * k / n)


# --- Unramified local functions ---

def _check_gamma_q_pole(alpha: complex, log_q: float) -> None:
    # 1 - q^(-alpha) vanishes on the lattice 2 pi i k / log q
    w = alpha * log_q
    im = math.remainder(w.imag, TWO_PI)
    if math.hypot(w.real, im) < POLE_TOLERANCE:
        raise PoleError(f"Gamma_q has a pole at alpha={alpha} (q={math.exp(log_q):.0f})")


def reduced_gamma(alpha: complex, log_q: float) -> complex:
    """Gamma_q with the module given as log q, for callers that iterate over places."""
    _check_gamma_q_pole(alpha, log_q)
    return (1 - cmath.exp((alpha - 1) * log_q)) / (1 - cmath.exp(-alpha * log_q))


def gamma_q(alpha: Number, q: Union[int, ResidueModule]) -> complex:
    """Reduced gamma function (1 - q^(alpha-1)) / (1 - q^(-alpha))."""
    return reduced_gamma(complex(alpha), as_module(q).log_q)


def reduced_beta(alpha: complex, beta: complex, log_q: float) -> complex:
    """
    B_q with the module given as log q.

    Args:
        alpha: first argument
        beta: second argument
        log_q: f log p of the place

    Returns:
        Gamma_q(alpha) Gamma_q(beta) Gamma_q(1 - alpha - beta)

    Raises:
        PoleError: if any of the three points is a pole of Gamma_q
    """
    return (
        reduced_gamma(alpha, log_q)
        * reduced_gamma(beta, log_q)
        * reduced_gamma(1 - alpha - beta, log_q)
    )


def beta_q(alpha: Number, beta: Number, q: Union[int, ResidueModule]) -> complex:
    """B_q(alpha, beta) = Gamma_q(alpha) Gamma_q(beta) Gamma_q(1 - alpha - beta)."""
    return reduced_beta(complex(alpha), complex(beta), as_module(q).log_q)


# --- Ramified local characters ---

@dataclass(frozen=True)
class RamifiedLocalCharacter:
    """
    Multiplicative character theta of (Z/p^rho Z)^*.

    ``angles[x]`` is k with theta(x) = exp(2 pi i k / order) for units x and
    -1 for multiples of p. ``r`` is the additive-character rank, always 0 over Q.
    """
    p: int
    rho: int
    order: int
    angles: Tuple[int, ...]
    r: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValidationError(f"{self.p} is not prime")
        if self.rho < 1:
            raise ValidationError(f"rank must be >= 1, got {self.rho}")
        if len(self.angles) != self.p ** self.rho:
            raise ValidationError("angle table does not cover the units mod p^rho")
        if self.angles[1 % self.modulus] != 0:
            raise ValidationError("theta(1) must be 1")

    @property
    def modulus(self) -> int:
        return self.p ** self.rho

    @classmethod
    def from_angles(cls, p: int, rho: int, order: int, angles, r: int = 0):
        """Build from any angle table, reducing the order to the true one."""
        angles = [a % order if a >= 0 else -1 for a in angles]
        g = order
        for a in angles:
            if a > 0:
                g = math.gcd(g, a)
        if g > 1:
            order //= g
            angles = [a // g if a >= 0 else -1 for a in angles]
        return cls(p, rho, order, tuple(angles), r)

    def angle(self, x: int) -> Optional[int]:
        a = self.angles[x % self.modulus]
        return None if a < 0 else a

    def __call__(self, x: int) -> complex:
        a = self.angle(x)
        return 0j if a is None else root_of_unity(a, self.order)

    @property
    def sign(self) -> int:
        """theta(-1) as +1 or -1."""
        return 1 if self.angle(-1) == 0 else -1

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def conjugate(self) -> "RamifiedLocalCharacter":
        return RamifiedLocalCharacter.from_angles(
            self.p, self.rho, self.order,
            [(-a) % self.order if a >= 0 else -1 for a in self.angles], self.r,
        )

    def lift(self, rho: int) -> "RamifiedLocalCharacter":
        """The same character viewed modulo p^rho, rho >= self.rho."""
        if rho < self.rho:
            raise ValidationError(f"cannot lift rank {self.rho} down to {rho}")
        m = self.p ** rho
        return RamifiedLocalCharacter(
            self.p, rho, self.order,
            tuple(self.angles[x % self.modulus] for x in range(m)), self.r,
        )

    def conductor_exponent(self) -> int:
        """Smallest c such that theta is trivial on units congruent to 1 mod p^c."""
        for c in range(self.rho + 1):
            step = self.p ** c
            if all(self.angles[x] <= 0 for x in range(1, self.modulus, step)):
                return c
        return self.rho

    def is_primitive(self) -> bool:
        return self.conductor_exponent() == self.rho

    def primitive(self) -> Optional["RamifiedLocalCharacter"]:
        """The primitive character inducing theta, or None if theta is trivial."""
        c = self.conductor_exponent()
        if c == 0:
            return None
        if c == self.rho:
            return self
        m = self.p ** c
        return RamifiedLocalCharacter.from_angles(
            self.p, c, self.order, [self.angles[x] for x in range(m)], self.r,
        )

    def __mul__(self, other: "RamifiedLocalCharacter") -> "RamifiedLocalCharacter":
        if self.p != other.p:
            raise ValidationError(f"cannot multiply characters at p={self.p} and p={other.p}")
        rho = max(self.rho, other.rho)
        a, b = self.lift(rho), other.lift(rho)
        n = self.order * other.order // math.gcd(self.order, other.order)
        angles = [
            -1 if x < 0 else (x * (n // a.order) + y * (n // b.order)) % n
            for x, y in zip(a.angles, b.angles)
        ]
        return RamifiedLocalCharacter.from_angles(self.p, rho, n, angles, self.r)


def kappa_local(theta: RamifiedLocalCharacter) -> complex:
    """
    Normalized Gauss sum p^(-rho/2) sum_x theta(x) exp(2 pi i x / p^rho).

    Raises:
        UnsupportedFieldError: for additive rank r != 0
        NotPrimitiveError: if theta is induced from a smaller power of p
    """
    if theta.r != 0:
        raise UnsupportedFieldError(f"additive rank r={theta.r} is only defined over Q with r=0")
    if not theta.is_primitive():
        raise NotPrimitiveError(
            f"character mod {theta.p}^{theta.rho} has conductor "
            f"{theta.p}^{theta.conductor_exponent()}"
        )
    m = theta.modulus
    angles = np.asarray(theta.angles, dtype=np.int64)
    x = np.arange(m, dtype=np.int64)
    units = angles >= 0
    # reduce both fractions to one denominator before exponentiating
    n = theta.order * m
    phase = (angles[units] * m + x[units] * theta.order) % n
    total = np.exp(2j * np.pi * phase / n).sum()
    return complex(total) * theta.p ** (-theta.rho / 2)


@dataclass(frozen=True)
class RamifiedGammaFactor:
    """kappa * base^exponent, kept apart so callers can assemble the powers."""
    base: int
    exponent: complex
    kappa: complex

    @property
    def value(self) -> complex:
        return self.kappa * cmath.exp(self.exponent * math.log(self.base))


def ramified_gamma_factor(alpha: Number, theta: RamifiedLocalCharacter) -> RamifiedGammaFactor:
    alpha = complex(alpha)
    return RamifiedGammaFactor(
        base=theta.p,
        exponent=(alpha - 0.5) * (theta.r + theta.rho),
        kappa=kappa_local(theta),
    )


def gamma_ramified(alpha: Number, theta: RamifiedLocalCharacter) -> complex:
    """kappa(theta) q^((alpha - 1/2)(r + rho)) with q = p."""
    return ramified_gamma_factor(alpha, theta).value


def local_gamma(
    alpha: Number,
    theta: Optional[RamifiedLocalCharacter],
    module: Optional[ResidueModule] = None,
) -> complex:
    """Gamma_q for unramified data (theta is None), the ramified gamma otherwise."""
    if theta is None:
        if module is None:
            raise ValidationError("an unramified local gamma needs its residue module")
        return gamma_q(alpha, module)
    return gamma_ramified(alpha, theta)


def beta_local(
    alpha: Number,
    theta: Optional[RamifiedLocalCharacter],
    beta: Number,
    theta_prime: Optional[RamifiedLocalCharacter],
    module: Optional[ResidueModule] = None,
) -> complex:
    """
    Local beta function Gamma(alpha; theta) Gamma(beta; theta') Gamma(1 - alpha - beta; theta'')
    with theta theta' theta'' = 1 (r = 0 only).
    """
    alpha, beta = complex(alpha), complex(beta)
    present = [t for t in (theta, theta_prime) if t is not None]
    if module is None:
        if not present:
            raise ValidationError("an unramified local beta needs its residue module")
        module = ResidueModule(present[0].p)
    if any(t.p != module.p for t in present) or (present and module.f != 1):
        raise ValidationError("local characters live over different residue fields")

    if theta is None and theta_prime is None:
        third = None
    elif theta is None:
        third = theta_prime.conjugate().primitive()
    elif theta_prime is None:
        third = theta.conjugate().primitive()
    else:
        third = (theta * theta_prime).conjugate().primitive()

    return (
        local_gamma(alpha, theta, module)
        * local_gamma(beta, theta_prime, module)
        * local_gamma(1 - alpha - beta, third, module)
    )
