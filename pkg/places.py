"""
Number field descriptors and their places.

Supported fields are Q, the quadratic fields Q(sqrt d) and the cyclotomic
fields Q(zeta_m). Finite places are produced from the splitting laws of these
fields (Kronecker symbol, multiplicative orders), never from ideal arithmetic.
"""

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from arithmetic import (
    euler_phi,
    factorize,
    is_prime,
    is_squarefree,
    kronecker,
    multiplicative_order,
    simple_sieve,
)
from nonarch import ResidueModule
from utils.error_handlers import InvalidFieldSpec, ValidationError
from utils.logging_config import get_logger

logger = get_logger(__name__)

RATIONALS = "rationals"
QUADRATIC = "quadratic"
CYCLOTOMIC = "cyclotomic"

REAL = "real"
COMPLEX = "complex"
FINITE = "finite"

_FIELD_SPEC = re.compile(r"^Q\((sqrt|zeta),\s*([+-]?\d+)\)$")


@dataclass(frozen=True)
class NumberFieldDescriptor:
    """
    One of Q, Q(sqrt d), Q(zeta_m).

    sigma real places, tau complex places; n = sigma + 2 tau is the degree.
    """
    kind: str
    parameter: int
    sigma: int
    tau: int
    discriminant: int

    @property
    def degree(self) -> int:
        return self.sigma + 2 * self.tau

    @property
    def spec(self) -> str:
        if self.kind == RATIONALS:
            return "Q"
        if self.kind == QUADRATIC:
            return f"Q(sqrt,{self.parameter})"
        return f"Q(zeta,{self.parameter})"

    def __str__(self) -> str:
        return self.spec


@dataclass(frozen=True)
class Place:
    """A real place, a complex place, or a finite place above p with data (e, f)."""
    kind: str
    p: int = 0
    f: int = 0
    e: int = 0
    index: int = 0

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    @property
    def module(self) -> ResidueModule:
        if not self.is_finite:
            raise ValidationError(f"{self.kind} places have no residue module")
        return ResidueModule(self.p, self.f)

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def log_q(self) -> float:
        return self.f * math.log(self.p)

    @property
    def is_ramified(self) -> bool:
        return self.e > 1


def parse_field_spec(text: str) -> NumberFieldDescriptor:
    """Parse "Q", "Q(sqrt,-1)" or "Q(zeta,5)"."""
    cleaned = text.strip().replace(" ", "")
    if cleaned.upper() == "Q":
        return describe_field(RATIONALS)
    match = _FIELD_SPEC.match(cleaned)
    if not match:
        raise InvalidFieldSpec(f"cannot parse field spec {text!r}")
    kind = QUADRATIC if match.group(1) == "sqrt" else CYCLOTOMIC
    return describe_field(kind, int(match.group(2)))


def describe_field(
    spec: Union[str, NumberFieldDescriptor],
    parameter: Optional[int] = None,
) -> NumberFieldDescriptor:
    """
    Build the descriptor for a field kind.

    ``spec`` is a kind name ("rationals", "quadratic", "cyclotomic") with its
    parameter, or a field spec string understood by parse_field_spec.
    """
    if isinstance(spec, NumberFieldDescriptor):
        return spec
    if spec not in (RATIONALS, QUADRATIC, CYCLOTOMIC):
        if parameter is not None:
            raise InvalidFieldSpec(f"unknown field kind {spec!r}")
        return parse_field_spec(spec)

    if spec == RATIONALS:
        return NumberFieldDescriptor(RATIONALS, 1, sigma=1, tau=0, discriminant=1)

    if parameter is None:
        raise InvalidFieldSpec(f"{spec} field needs a parameter")

    if spec == QUADRATIC:
        d = parameter
        if d in (0, 1) or not is_squarefree(d):
            raise InvalidFieldSpec(f"d={d} must be a squarefree integer other than 0 and 1")
        discriminant = d if d % 4 == 1 else 4 * d
        sigma, tau = (2, 0) if d > 0 else (0, 1)
        return NumberFieldDescriptor(QUADRATIC, d, sigma, tau, discriminant)

    m = parameter
    if m < 3 or m % 4 == 2:
        raise InvalidFieldSpec(f"cyclotomic conductor m={m} must be >= 3 and not 2 mod 4")
    phi = euler_phi(m)
    magnitude = m ** phi
    for p, _ in factorize(m):
        magnitude //= p ** (phi // (p - 1))
    sign = -1 if (phi // 2) % 2 else 1
    return NumberFieldDescriptor(CYCLOTOMIC, m, 0, phi // 2, sign * magnitude)


def archimedean_places(field: NumberFieldDescriptor) -> List[Place]:
    real = [Place(REAL, index=j) for j in range(field.sigma)]
    complex_ = [Place(COMPLEX, index=j) for j in range(field.tau)]
    return real + complex_


def places_above(field: NumberFieldDescriptor, p: int) -> List[Place]:
    """Finite places of the field above the rational prime p."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    return list(_places_above(field, p))


@lru_cache(maxsize=65536)
def _places_above(field: NumberFieldDescriptor, p: int) -> Tuple[Place, ...]:

    if field.kind == RATIONALS:
        return (Place(FINITE, p, f=1, e=1),)

    if field.kind == QUADRATIC:
        symbol = kronecker(field.discriminant, p)
        if symbol == 1:
            return tuple(Place(FINITE, p, f=1, e=1, index=j) for j in range(2))
        if symbol == -1:
            return (Place(FINITE, p, f=2, e=1),)
        return (Place(FINITE, p, f=1, e=2),)

    m = field.parameter
    a = 0
    rest = m
    while rest % p == 0:
        rest //= p
        a += 1
    f = multiplicative_order(p % rest, rest) if rest > 1 else 1
    e = euler_phi(p ** a) if a else 1
    count = euler_phi(rest) // f
    return tuple(Place(FINITE, p, f=f, e=e, index=j) for j in range(count))


def enumerate_finite_places(
    field: NumberFieldDescriptor,
    prime_bound: int,
    start: int = 2,
) -> List[Place]:
    """All finite places above primes start <= p < prime_bound, ordered by (p, q)."""
    if prime_bound < 2:
        raise ValidationError(f"prime bound must be >= 2, got {prime_bound}")
    places: List[Place] = []
    for p in simple_sieve(prime_bound - 1).tolist():
        if p < start:
            continue
        places.extend(sorted(_places_above(field, p), key=lambda v: (v.q, v.index)))
    logger.debug(f"{len(places)} finite places of {field} below {prime_bound}")
    return places
