"""
Dirichlet characters and the idele-class characters built from them.

A Dirichlet character mod m is stored by exact angles: ``angles[x] = k``
means chi(x) = exp(2 pi i k / order), and -1 marks non-units. Characters are
indexed by a mixed-radix number k over the generators of (Z/mZ)^*, taken in
ascending prime order (-1 then 5 for the 2-part), least significant first.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from archimedean import i_power
from arithmetic import crt_pair, divisors, euler_phi, factorize, kronecker, primitive_root
from nonarch import RamifiedLocalCharacter, kappa_local, root_of_unity
from places import (
    COMPLEX,
    RATIONALS,
    REAL,
    NumberFieldDescriptor,
    Place,
    describe_field,
)
from utils.error_handlers import (
    NotPrimitiveError,
    ParseError,
    UnsupportedFieldError,
    ValidationError,
)
from utils.logging_config import get_logger

logger = get_logger(__name__)

_CHAR_SPEC = re.compile(r"^chi\(m=(\d+),k=(\d+)\)$")


# --- Unit group structure ---

@dataclass(frozen=True)
class UnitGenerator:
    """Generator of one cyclic factor of (Z/mZ)^*, given mod p^a."""
    p: int
    prime_power: int
    residue: int
    order: int


@lru_cache(maxsize=256)
def unit_group_generators(m: int) -> Tuple[UnitGenerator, ...]:
    gens: List[UnitGenerator] = []
    for p, a in factorize(m) if m > 1 else ():
        pa = p ** a
        if p == 2:
            if a >= 2:
                gens.append(UnitGenerator(2, pa, pa - 1, 2))
            if a >= 3:
                gens.append(UnitGenerator(2, pa, 5, 2 ** (a - 2)))
        else:
            gens.append(UnitGenerator(p, pa, primitive_root(p, a), euler_phi(pa)))
    return tuple(gens)


@lru_cache(maxsize=256)
def _unit_logs(m: int) -> Dict[int, Tuple[int, ...]]:
    """Exponent vector of every unit mod m with respect to unit_group_generators(m)."""
    gens = unit_group_generators(m)
    # per prime power: residue -> exponents on that prime power's generators
    local: Dict[int, Dict[int, Tuple[int, ...]]] = {}
    order = list(dict.fromkeys(g.prime_power for g in gens))
    for pa in order:
        own = [g for g in gens if g.prime_power == pa]
        table: Dict[int, Tuple[int, ...]] = {1 % pa: (0,) * len(own)}
        if len(own) == 1:
            g = own[0]
            x = 1
            for e in range(g.order):
                table[x] = (e,)
                x = x * g.residue % pa
        else:
            five = own[1]
            x = 1
            for e in range(five.order):
                table[x] = (0, e)
                table[(-x) % pa] = (1, e)
                x = x * 5 % pa
        local[pa] = table

    logs: Dict[int, Tuple[int, ...]] = {}
    for x in range(m):
        if math.gcd(x, m) != 1:
            continue
        vector: Tuple[int, ...] = ()
        for pa in order:
            vector += local[pa][x % pa]
        logs[x] = vector
    return logs


def _lcm(values) -> int:
    result = 1
    for v in values:
        result = result * v // math.gcd(result, v)
    return result


# --- Dirichlet characters ---

@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod ``modulus`` of exact order ``order``."""
    modulus: int
    order: int
    angles: Tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1 or len(self.angles) != self.modulus:
            raise ValidationError("angle table must cover every residue mod m")

    @classmethod
    def from_angles(cls, modulus: int, order: int, angles) -> "DirichletCharacter":
        angles = [a % order if a >= 0 else -1 for a in angles]
        g = order
        for a in angles:
            if a > 0:
                g = math.gcd(g, a)
        if g > 1:
            order //= g
            angles = [a // g if a >= 0 else -1 for a in angles]
        return cls(modulus, order, tuple(angles))

    def angle(self, x: int) -> Optional[int]:
        a = self.angles[x % self.modulus]
        return None if a < 0 else a

    def __call__(self, x: int) -> complex:
        a = self.angle(x)
        return 0j if a is None else root_of_unity(a, self.order)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def parity(self) -> int:
        """nu in {0, 1} with chi(-1) = (-1)^nu."""
        return 0 if self.angle(-1) == 0 else 1

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter.from_angles(
            self.modulus, self.order,
            [(-a) % self.order if a >= 0 else -1 for a in self.angles],
        )

    def lift(self, modulus: int) -> "DirichletCharacter":
        """The induced character mod a multiple of self.modulus."""
        if modulus % self.modulus:
            raise ValidationError(f"{modulus} is not a multiple of {self.modulus}")
        angles = [
            self.angles[x % self.modulus] if math.gcd(x, modulus) == 1 else -1
            for x in range(modulus)
        ]
        return DirichletCharacter(modulus, self.order, tuple(angles))

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        """Product, reduced to the primitive character inducing it."""
        m = _lcm((self.modulus, other.modulus))
        a, b = self.lift(m), other.lift(m)
        n = _lcm((a.order, b.order))
        angles = [
            -1 if x < 0 else (x * (n // a.order) + y * (n // b.order)) % n
            for x, y in zip(a.angles, b.angles)
        ]
        return DirichletCharacter.from_angles(m, n, angles).primitive()

    def _trivial_on_kernel(self, d: int) -> bool:
        """True if chi(x) = 1 for every unit x = 1 mod d."""
        return all(
            self.angles[x] <= 0 for x in range(1 % self.modulus, self.modulus, d)
        ) if self.modulus > 1 else True

    @property
    def conductor(self) -> int:
        for d in divisors(self.modulus):
            if self._trivial_on_kernel(d):
                return d
        return self.modulus

    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def primitive(self) -> "DirichletCharacter":
        """The primitive character mod the conductor that induces this one."""
        d = self.conductor
        if d == self.modulus:
            return self
        angles = []
        for y in range(d):
            if math.gcd(y, d) != 1:
                angles.append(-1)
                continue
            x = y
            while math.gcd(x, self.modulus) != 1:
                x += d
            angles.append(self.angles[x])
        return DirichletCharacter.from_angles(d, self.order, angles)

    def local_component(self, p: int) -> RamifiedLocalCharacter:
        """chi_p(x) = chi(y) with y = x mod p^a and y = 1 mod m/p^a."""
        a = 0
        rest = self.modulus
        while rest % p == 0:
            rest //= p
            a += 1
        if a == 0:
            raise ValidationError(f"{p} does not divide the modulus {self.modulus}")
        pa = p ** a
        angles = [
            -1 if x % p == 0 else self.angles[crt_pair(x, pa, rest)]
            for x in range(pa)
        ]
        return RamifiedLocalCharacter.from_angles(p, a, self.order, angles)

    @property
    def index(self) -> int:
        """Mixed-radix index k of this character mod its modulus."""
        gens = unit_group_generators(self.modulus)
        k = 0
        radix = 1
        for g in gens:
            lifted = crt_pair(g.residue, g.prime_power, self.modulus // g.prime_power)
            a = self.angles[lifted]
            digit = a * g.order // self.order
            k += digit * radix
            radix *= g.order
        return k

    @property
    def spec(self) -> str:
        if self.modulus == 1:
            return "trivial"
        return f"chi(m={self.modulus},k={self.index})"

    def __str__(self) -> str:
        return self.spec


def character_from_index(m: int, k: int) -> DirichletCharacter:
    """The k-th character mod m, 0 <= k < phi(m); k = 0 is principal."""
    if m < 1:
        raise ValidationError(f"modulus must be positive, got {m}")
    phi = euler_phi(m)
    if not 0 <= k < phi:
        raise ValidationError(f"index k={k} out of range for modulus {m} (phi={phi})")
    gens = unit_group_generators(m)
    digits = []
    for g in gens:
        digits.append(k % g.order)
        k //= g.order
    n = _lcm(g.order for g in gens)
    weights = [d * (n // g.order) for d, g in zip(digits, gens)]
    logs = _unit_logs(m)
    angles = [-1] * m
    for x, vector in logs.items():
        angles[x] = sum(w * e for w, e in zip(weights, vector)) % n
    return DirichletCharacter.from_angles(m, n, angles)


def trivial_dirichlet() -> DirichletCharacter:
    return DirichletCharacter(1, 1, (0,))


def enumerate_characters(m: int) -> List[DirichletCharacter]:
    return [character_from_index(m, k) for k in range(euler_phi(m))]


def primitive_characters(m: int) -> List[DirichletCharacter]:
    return [chi for chi in enumerate_characters(m) if chi.is_primitive()]


def kronecker_character(discriminant: int) -> DirichletCharacter:
    """The character x -> (D/x), primitive mod |D| for a fundamental discriminant D."""
    m = abs(discriminant)
    angles = []
    for x in range(m):
        symbol = kronecker(discriminant, x)
        angles.append(-1 if symbol == 0 else (0 if symbol == 1 else 1))
    if m == 1:
        return trivial_dirichlet()
    return DirichletCharacter.from_angles(m, 2, angles)


def parse_character_spec(text: str) -> DirichletCharacter:
    """Parse "trivial" or "chi(m=4,k=1)"."""
    cleaned = text.strip().replace(" ", "")
    if cleaned.lower() == "trivial":
        return trivial_dirichlet()
    match = _CHAR_SPEC.match(cleaned)
    if not match:
        raise ParseError(f"cannot parse character spec {text!r}")
    return character_from_index(int(match.group(1)), int(match.group(2)))


# --- Idele-class characters ---

@dataclass(frozen=True)
class IdeleClassCharacter:
    """
    Character of the idele class group, global twist fixed to zero.

    ``archimedean`` holds nu_v for the sigma real places (parities) followed
    by the tau complex places (weights). ``ramified`` pairs each ramified
    prime with the local component theta_p, so that lambda(p) = chi(p) at
    the unramified primes.
    """
    field: NumberFieldDescriptor
    archimedean: Tuple[int, ...]
    ramified: Tuple[Tuple[int, RamifiedLocalCharacter], ...] = ()
    dirichlet: Optional[DirichletCharacter] = None

    @property
    def is_trivial(self) -> bool:
        return not self.ramified and (self.dirichlet is None or self.dirichlet.is_trivial)

    @property
    def ramified_primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.ramified)

    @property
    def ranks(self) -> Dict[int, int]:
        return {p: theta.rho for p, theta in self.ramified}

    @property
    def conductor_norm(self) -> int:
        norm = 1
        for p, theta in self.ramified:
            norm *= p ** theta.rho
        return norm

    def is_ramified_at(self, p: int) -> bool:
        return any(p == ell for ell, _ in self.ramified)

    def eigenvalue_angle(self, place: Place) -> Tuple[int, int]:
        """(k, n) with lambda(v) = exp(2 pi i k / n) at an unramified finite place."""
        if self.is_ramified_at(place.p):
            raise ValidationError(f"place above {place.p} is ramified for {self}")
        if self.dirichlet is None or self.dirichlet.is_trivial:
            return 0, 1
        return self.dirichlet.angle(place.p), self.dirichlet.order

    def eigenvalue(self, place: Place) -> complex:
        k, n = self.eigenvalue_angle(place)
        return root_of_unity(k, n)

    def twist_exponent(self, place: Place) -> float:
        """Real alpha_v with q_v^(-i alpha_v) = lambda(v), taken nearest zero."""
        k, n = self.eigenvalue_angle(place)
        if 2 * k > n:
            k -= n
        return -2.0 * math.pi * k / (n * place.log_q)

    def conjugate(self) -> "IdeleClassCharacter":
        if self.dirichlet is None:
            return self
        return from_dirichlet(self.dirichlet.conjugate())

    def __mul__(self, other: "IdeleClassCharacter") -> "IdeleClassCharacter":
        if self.field != other.field:
            raise ValidationError(f"characters over {self.field} and {other.field}")
        if self.dirichlet is None and other.dirichlet is None:
            return self
        left = self.dirichlet or trivial_dirichlet()
        right = other.dirichlet or trivial_dirichlet()
        return from_dirichlet(left * right)

    def __str__(self) -> str:
        if self.dirichlet is None:
            return f"trivial over {self.field}"
        return self.dirichlet.spec


def trivial_character(field: NumberFieldDescriptor) -> IdeleClassCharacter:
    return IdeleClassCharacter(field, (0,) * (field.sigma + field.tau))


def from_dirichlet(chi: DirichletCharacter) -> IdeleClassCharacter:
    """Idele-class character over Q attached to a primitive Dirichlet character."""
    if not chi.is_primitive():
        raise NotPrimitiveError(f"{chi} has conductor {chi.conductor}, not {chi.modulus}")
    rationals = describe_field(RATIONALS)
    if chi.modulus == 1:
        return trivial_character(rationals)
    ramified = tuple(
        (p, chi.local_component(p).conjugate()) for p, _ in factorize(chi.modulus)
    )
    return IdeleClassCharacter(rationals, (chi.parity,), ramified, chi)


def character_for(field: NumberFieldDescriptor, chi: DirichletCharacter) -> IdeleClassCharacter:
    """Trivial character of any field, or a Dirichlet character over Q."""
    if chi.modulus == 1:
        return trivial_character(field)
    if field.kind != RATIONALS:
        raise UnsupportedFieldError(f"ramified characters are only supported over Q, not {field}")
    return from_dirichlet(chi)


# --- Global phases ---

def _archimedean_kinds(field: NumberFieldDescriptor) -> List[str]:
    return [REAL] * field.sigma + [COMPLEX] * field.tau


def kappa_global(omega: IdeleClassCharacter) -> complex:
    """Product of the local root numbers kappa_v."""
    if omega.ramified and omega.field.kind != RATIONALS:
        raise UnsupportedFieldError(f"ramified characters over {omega.field}")
    kappa = 1 + 0j
    # i^(-2 nu) at real places keeps kappa omega(C) = i^(-nu) epsilon(chi), e.g. -i for chi mod 4
    for kind, nu in zip(_archimedean_kinds(omega.field), omega.archimedean):
        kappa *= i_power(-2 * nu) if kind == REAL else i_power(-nu - abs(nu))
    for _, theta in omega.ramified:
        kappa *= theta.sign * kappa_local(theta).conjugate()
    return kappa


def omega_C(omega: IdeleClassCharacter) -> complex:
    """
    Phase of the idele C = prod pi_p^rho_p.

    At a ramified p, omega_p(pi_p) is the product of conj(theta_l(p)) over the
    other ramified primes l, since omega is trivial on the principal idele p.
    """
    if omega.ramified and omega.field.kind != RATIONALS:
        raise UnsupportedFieldError(f"ramified characters over {omega.field}")
    turns = Fraction(0)
    for p, theta_p in omega.ramified:
        for ell, theta in omega.ramified:
            if ell != p:
                turns -= Fraction(theta_p.rho * theta.angle(p), theta.order)
    return root_of_unity(turns.numerator, turns.denominator)


def combined_phase(omega: IdeleClassCharacter) -> complex:
    return kappa_global(omega) * omega_C(omega)


def beta_phase(omega: IdeleClassCharacter, omega_prime: IdeleClassCharacter) -> complex:
    """
    Unimodular constant of the regularized beta formula.

    With P = kappa * omega(C) it is P(omega) P(omega') conj(P(omega'')) times
    (-1)^nu'' at each real place, omega'' = omega omega'.
    """
    omega_second = omega * omega_prime
    phase = combined_phase(omega) * combined_phase(omega_prime)
    phase *= combined_phase(omega_second).conjugate()
    for kind, nu in zip(_archimedean_kinds(omega.field), omega_second.archimedean):
        if kind == REAL and nu % 2:
            phase = -phase
    return phase
