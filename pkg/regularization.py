"""
Regularized adelic gamma and beta products and their closed forms.

The Euler products over the finite places diverge for Re alpha < 0. They are
regularized by multiplying the truncated product over places with p < V by
the V-truncated L-function, which the analytic oracle supplies at every
alpha. As V grows the regularized value tends to the closed form

    prod_arch Gamma_inf * reg prod Gamma_q = kappa omega(C) (|D| N)^(1/2 - alpha)

and the beta analogue with sqrt(|D| N). All products are accumulated in log
space, one principal log per place, in ascending (p, q) order.
"""

import bisect
import cmath
import csv
import io
import json
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from archimedean import (
    beta_complex_field,
    beta_real,
    gamma_complex_field,
    gamma_complex_pole_distance,
    gamma_real,
    gamma_real_pole_distance,
)
from characters import IdeleClassCharacter, beta_phase, combined_phase
from nonarch import reduced_beta, reduced_gamma
from oracle import l_function_for
from places import (
    REAL,
    NumberFieldDescriptor,
    Place,
    archimedean_places,
    describe_field,
    enumerate_finite_places,
)
from utils.config import EngineConfig, get_default_schedule
from utils.error_handlers import (
    DomainError,
    ParseError,
    RankMismatchError,
    ValidationError,
)
from utils.logging_config import get_logger
from utils.reduction import chunk_totals, ordered_log_sum, pairwise_sum

logger = get_logger(__name__)

Number = Union[int, float, complex]
FieldLike = Union[str, NumberFieldDescriptor]

MIN_POLE_DISTANCE = 0.1
ZERO_THRESHOLD = 1e-12

CSV_COLUMNS = ("V", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err")

_SCHEDULE_RANGE = re.compile(r"^2\^(\d+)\.\.2\^(\d+)$")
_SCHEDULE_ITEM = re.compile(r"^(?:2\^(\d+)|(\d+))$")


# --- Schedules and reports ---

@dataclass(frozen=True)
class TruncationSchedule:
    """Strictly increasing prime bounds V_1 < V_2 < ... ."""
    cutoffs: Tuple[int, ...]

    def __post_init__(self):
        if not self.cutoffs:
            raise ValidationError("truncation schedule is empty")
        if self.cutoffs[0] < 2:
            raise ValidationError(f"cutoffs must be >= 2, got {self.cutoffs[0]}")
        for a, b in zip(self.cutoffs, self.cutoffs[1:]):
            if b <= a:
                raise ValidationError(f"cutoffs must increase strictly ({a} then {b})")

    @classmethod
    def parse(cls, text: str) -> "TruncationSchedule":
        """Parse "2^a..2^b" or a comma list such as "100,1000,2^14"."""
        cleaned = text.strip().replace(" ", "")
        match = _SCHEDULE_RANGE.match(cleaned)
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            return cls(tuple(2 ** k for k in range(low, high + 1)))
        cutoffs = []
        for item in cleaned.split(","):
            match = _SCHEDULE_ITEM.match(item)
            if not match:
                raise ParseError(f"cannot parse schedule entry {item!r} in {text!r}")
            cutoffs.append(2 ** int(match.group(1)) if match.group(1) else int(match.group(2)))
        return cls(tuple(cutoffs))

    @classmethod
    def default(cls) -> "TruncationSchedule":
        return cls.parse(get_default_schedule())

    @property
    def final(self) -> int:
        return self.cutoffs[-1]

    def require_above(self, primes: Iterable[int]) -> None:
        """Every cutoff must exceed the special (ramified) primes."""
        largest = max(primes, default=0)
        if self.cutoffs[0] <= largest:
            raise ValidationError(
                f"first cutoff {self.cutoffs[0]} must exceed the ramified prime {largest}"
            )

    def __iter__(self):
        return iter(self.cutoffs)

    def __len__(self) -> int:
        return len(self.cutoffs)


@dataclass(frozen=True)
class CutoffRecord:
    """
    Both sides of an identity at one cutoff.

    Values are stored scaled by exp(-log_scale); finite-V checks scale by the
    size of the right-hand side so that both sides stay representable.
    """
    V: int
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    log_scale: float = 0.0

    @classmethod
    def compare(cls, V: int, lhs: complex, rhs: complex, log_scale: float = 0.0) -> "CutoffRecord":
        abs_err = abs(lhs - rhs)
        rel_err = abs_err / abs(rhs) if rhs != 0 else math.inf
        return cls(V, lhs, rhs, abs_err, rel_err, log_scale)


def _fmt(x: float) -> str:
    return format(x, ".17g")


@dataclass(frozen=True)
class VerificationReport:
    """Per-cutoff comparison of the two sides of an identity, with its verdict."""
    kind: str
    field: str
    character: str
    alpha: complex
    tolerance: float
    records: Tuple[CutoffRecord, ...]
    beta: Optional[complex] = None
    character_prime: Optional[str] = None

    def __post_init__(self):
        if not self.records:
            raise ValidationError("a verification report needs at least one cutoff")

    @property
    def final(self) -> CutoffRecord:
        return self.records[-1]

    @property
    def passed(self) -> bool:
        return self.final.rel_err <= self.tolerance

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def local_slopes(self) -> List[Optional[float]]:
        """d log(abs_err) / d log V between consecutive cutoffs."""
        slopes: List[Optional[float]] = [None]
        for prev, cur in zip(self.records, self.records[1:]):
            if prev.abs_err > 0 and cur.abs_err > 0:
                slopes.append(
                    (math.log(cur.abs_err) - math.log(prev.abs_err))
                    / (math.log(cur.V) - math.log(prev.V))
                )
            else:
                slopes.append(None)
        return slopes

    @property
    def slope(self) -> Optional[float]:
        """Least-squares slope of log(abs_err) against log V."""
        points = [(r.V, r.abs_err) for r in self.records if r.abs_err > 0]
        if len(points) < 2:
            return None
        x = np.log([v for v, _ in points])
        y = np.log([e for _, e in points])
        return float(np.polyfit(x, y, 1)[0])

    def to_csv(
        self,
        include_slope: bool = False,
        extra: Optional[Dict[str, Sequence[float]]] = None,
    ) -> str:
        extra = extra or {}
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        header = list(CSV_COLUMNS)
        if include_slope:
            header.append("slope")
        header.extend(extra)
        writer.writerow(header)
        slopes = self.local_slopes()
        for i, r in enumerate(self.records):
            row = [
                str(r.V),
                _fmt(r.lhs.real), _fmt(r.lhs.imag),
                _fmt(r.rhs.real), _fmt(r.rhs.imag),
                _fmt(r.abs_err), _fmt(r.rel_err),
            ]
            if include_slope:
                row.append("" if slopes[i] is None else _fmt(slopes[i]))
            row.extend(_fmt(column[i]) for column in extra.values())
            writer.writerow(row)
        return buffer.getvalue()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "field": self.field,
            "character": self.character,
            "character_prime": self.character_prime,
            "alpha": [self.alpha.real, self.alpha.imag],
            "beta": None if self.beta is None else [self.beta.real, self.beta.imag],
            "tolerance": self.tolerance,
            "verdict": self.verdict,
            "slope": self.slope,
            "records": [
                {
                    "V": r.V,
                    "lhs_re": r.lhs.real, "lhs_im": r.lhs.imag,
                    "rhs_re": r.rhs.real, "rhs_im": r.rhs.imag,
                    "abs_err": r.abs_err, "rel_err": r.rel_err,
                    "log_scale": r.log_scale,
                }
                for r in self.records
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def write(self, path: Union[str, Path], fmt: str = "csv", include_slope: bool = False) -> Path:
        path = Path(path)
        text = self.to_json() if fmt == "json" else self.to_csv(include_slope)
        path.write_text(text, encoding="utf-8")
        return path


@dataclass(frozen=True)
class RegularizedProduct:
    """Regularized product values, one per cutoff."""
    cutoffs: Tuple[int, ...]
    values: Tuple[complex, ...]

    @property
    def trace(self) -> List[Tuple[int, complex]]:
        return list(zip(self.cutoffs, self.values))

    @property
    def final(self) -> complex:
        return self.values[-1]


# --- Shared helpers ---

def _config(config: Optional[EngineConfig]) -> EngineConfig:
    return config if config is not None else EngineConfig.from_env()


def _require_field(field: FieldLike, *characters: IdeleClassCharacter) -> NumberFieldDescriptor:
    descriptor = describe_field(field)
    for omega in characters:
        if omega.field != descriptor:
            raise ValidationError(f"character {omega} lives over {omega.field}, not {descriptor}")
    return descriptor


def _exp(value: complex) -> complex:
    try:
        return cmath.exp(value)
    except OverflowError as e:
        raise DomainError(f"value overflows binary64 (log = {value})") from e


def _log(value: complex, what: str) -> complex:
    if abs(value) == 0:
        raise DomainError(f"{what} vanishes")
    return cmath.log(value)


def _oracle_value(omega: IdeleClassCharacter, s: complex) -> complex:
    value = l_function_for(omega)(s)
    if not cmath.isfinite(value):
        raise DomainError(f"L(s; {omega}) is not finite at s={s}")
    if abs(value) < ZERO_THRESHOLD:
        raise DomainError(f"L(s; {omega}) vanishes at s={s}")
    return value


def _unramified_places(omega: IdeleClassCharacter, start: int, bound: int) -> List[Place]:
    """Finite places with start <= p < bound where omega is unramified."""
    if bound <= max(start, 2):
        return []
    return [
        v for v in enumerate_finite_places(omega.field, bound, start)
        if not omega.is_ramified_at(v.p)
    ]


def _segments(places: Sequence[Place], cutoffs: Sequence[int]) -> List[Sequence[Place]]:
    primes = [v.p for v in places]
    segments = []
    lo = 0
    for V in cutoffs:
        hi = bisect.bisect_left(primes, V)
        segments.append(places[lo:hi])
        lo = hi
    return segments


def _running_log_sums(
    term: Callable[[Place], complex],
    places: Sequence[Place],
    cutoffs: Sequence[int],
    config: EngineConfig,
) -> List[complex]:
    """Sum of term(v) over places with p < V, for each V in cutoffs."""
    totals: List[complex] = []
    sums = []
    for V, segment in zip(cutoffs, _segments(places, cutoffs)):
        totals.extend(chunk_totals(term, segment, config.chunk_size, config.threads))
        sums.append(pairwise_sum(totals))
        logger.verbose(f"Accumulated {len(segment)} places below V={V}")
    return sums


def _euler_log(alpha: complex, omega: IdeleClassCharacter) -> Callable[[Place], complex]:
    """v -> log(1 - lambda(v) q_v^(-alpha))."""
    def term(place: Place) -> complex:
        return cmath.log(1 - omega.eigenvalue(place) * cmath.exp(-alpha * place.log_q))
    return term


def _shifted(alpha: complex, omega: IdeleClassCharacter, place: Place) -> complex:
    return alpha + 1j * omega.twist_exponent(place)


def _pole_distance(alpha: complex, place: Place, nu: int) -> float:
    if place.kind == REAL:
        return gamma_real_pole_distance(alpha, nu)
    return gamma_complex_pole_distance(alpha, nu)


def _require_pole_free(field: NumberFieldDescriptor, points: Iterable[Tuple[complex, Sequence[int]]]) -> None:
    for alpha, weights in points:
        for place, nu in zip(archimedean_places(field), weights):
            distance = _pole_distance(alpha, place, nu)
            if distance < MIN_POLE_DISTANCE:
                raise DomainError(
                    f"alpha={alpha} is {distance:.3g} from a pole of the {place.kind} "
                    f"gamma factor with nu={nu}"
                )


# --- Truncated L-functions ---

def l_truncated_tail(
    alpha: Number,
    omega: IdeleClassCharacter,
    V: int,
    tail_bound: int,
    config: Optional[EngineConfig] = None,
) -> complex:
    """
    Product of (1 - lambda(v) q_v^(-alpha))^(-1) over unramified places with
    V <= p < tail_bound.

    Raises:
        DomainError: if Re alpha <= 1
    """
    alpha = complex(alpha)
    if alpha.real <= 1:
        raise DomainError(f"the tail product needs Re alpha > 1, got {alpha}")
    config = _config(config)
    places = _unramified_places(omega, max(V, 2), tail_bound)
    if not places:
        return 1 + 0j
    term = _euler_log(alpha, omega)
    total = ordered_log_sum(lambda v: -term(v), places, config.chunk_size, config.threads)
    return _exp(total)


def log_l_truncated_via_oracle(
    alpha: Number,
    omega: IdeleClassCharacter,
    V: int,
    config: Optional[EngineConfig] = None,
) -> complex:
    """log L(alpha; omega) + sum over unramified p < V of log(1 - lambda(v) q_v^(-alpha))."""
    alpha = complex(alpha)
    config = _config(config)
    log_l = _log(_oracle_value(omega, alpha), f"L(alpha; {omega})")
    places = _unramified_places(omega, 2, V)
    return log_l + ordered_log_sum(
        _euler_log(alpha, omega), places, config.chunk_size, config.threads
    )


def l_truncated_via_oracle(
    alpha: Number,
    omega: IdeleClassCharacter,
    V: int,
    config: Optional[EngineConfig] = None,
) -> complex:
    """L_V(alpha; omega), continued to every alpha through the oracle."""
    return _exp(log_l_truncated_via_oracle(alpha, omega, V, config))


# --- Gamma products ---

def archimedean_gamma_factor(alpha: Number, omega: IdeleClassCharacter) -> complex:
    """Product of Gamma_inf(alpha; nu_v) over the real and Gamma_{-inf} over the complex places."""
    alpha = complex(alpha)
    value = 1 + 0j
    for place, nu in zip(archimedean_places(omega.field), omega.archimedean):
        value *= gamma_real(alpha, nu) if place.kind == REAL else gamma_complex_field(alpha, nu)
    return value


def gamma_closed_form(alpha: Number, omega: IdeleClassCharacter) -> complex:
    """kappa omega(C) (|D| N)^(1/2 - alpha)."""
    alpha = complex(alpha)
    scale = abs(omega.field.discriminant) * omega.conductor_norm
    return combined_phase(omega) * _exp((0.5 - alpha) * math.log(scale))


def reg_gamma_product(
    field: FieldLike,
    omega: IdeleClassCharacter,
    alpha: Number,
    schedule: TruncationSchedule,
    config: Optional[EngineConfig] = None,
) -> RegularizedProduct:
    """
    prod_{v, p < V} Gamma_q(alpha + i alpha_v) * L_V(alpha; omega) for each V.

    Raises:
        DomainError: if Re alpha >= 0
    """
    alpha = complex(alpha)
    _require_field(field, omega)
    if alpha.real >= 0:
        raise DomainError(f"the regularized product converges only for Re alpha < 0, got {alpha}")
    schedule.require_above(omega.ramified_primes)
    config = _config(config)

    def term(place: Place) -> complex:
        log_q = place.log_q
        factor = reduced_gamma(_shifted(alpha, omega, place), log_q)
        factor *= 1 - omega.eigenvalue(place) * cmath.exp(-alpha * log_q)
        return cmath.log(factor)

    places = _unramified_places(omega, 2, schedule.final)
    sums = _running_log_sums(term, places, schedule.cutoffs, config)
    l_value = _oracle_value(omega, alpha)
    return RegularizedProduct(schedule.cutoffs, tuple(l_value * _exp(s) for s in sums))


def naive_gamma_partial_products(
    field: FieldLike,
    omega: IdeleClassCharacter,
    alpha: Number,
    schedule: TruncationSchedule,
    config: Optional[EngineConfig] = None,
) -> List[Tuple[int, complex]]:
    """log of the unregularized product prod_{v, p < V} Gamma_q(alpha + i alpha_v) per cutoff."""
    alpha = complex(alpha)
    _require_field(field, omega)
    config = _config(config)

    def term(place: Place) -> complex:
        value = reduced_gamma(_shifted(alpha, omega, place), place.log_q)
        return _log(value, f"Gamma_q at p={place.p}")

    places = _unramified_places(omega, 2, schedule.final)
    return list(zip(schedule.cutoffs, _running_log_sums(term, places, schedule.cutoffs, config)))


def _finish(report: VerificationReport) -> VerificationReport:
    for r in report.records:
        logger.verbose(f"V={r.V} lhs={r.lhs:.12g} rhs={r.rhs:.12g} rel_err={r.rel_err:.3g}")
    logger.info(
        f"{report.kind} identity over {report.field} for {report.character}: "
        f"{report.verdict} (rel_err={report.final.rel_err:.3g}, tol={report.tolerance:g})"
    )
    return report


def verify_gamma_identity(
    field: FieldLike,
    omega: IdeleClassCharacter,
    alpha: Number,
    schedule: Optional[TruncationSchedule] = None,
    tolerance: Optional[float] = None,
    config: Optional[EngineConfig] = None,
) -> VerificationReport:
    """Compare arch * reg prod Gamma_q with kappa omega(C) (|D| N)^(1/2 - alpha) per cutoff."""
    alpha = complex(alpha)
    descriptor = _require_field(field, omega)
    config = _config(config)
    schedule = schedule or TruncationSchedule.default()
    tolerance = config.tolerance if tolerance is None else tolerance

    _require_pole_free(descriptor, [(alpha, omega.archimedean)])
    product = reg_gamma_product(descriptor, omega, alpha, schedule, config)
    arch = archimedean_gamma_factor(alpha, omega)
    rhs = gamma_closed_form(alpha, omega)
    records = tuple(CutoffRecord.compare(V, arch * value, rhs) for V, value in product.trace)
    return _finish(VerificationReport("gamma", descriptor.spec, str(omega), alpha, tolerance, records))


def finite_V_identity_check(
    field: FieldLike,
    omega: IdeleClassCharacter,
    alpha: Number,
    V: int,
    tolerance: Optional[float] = None,
    config: Optional[EngineConfig] = None,
) -> VerificationReport:
    """
    Check arch * prod_{p < V} Gamma_q * L_V(alpha; omega)
    = kappa omega(C) (|D| N)^(1/2 - alpha) * L_V(1 - alpha; conj omega) at a single V.

    Both sides come from the oracle, so the identity holds at every alpha and
    every V, not only in the limit.
    """
    alpha = complex(alpha)
    descriptor = _require_field(field, omega)
    config = _config(config)
    tolerance = config.tolerance if tolerance is None else tolerance
    TruncationSchedule((V,)).require_above(omega.ramified_primes)

    def term(place: Place) -> complex:
        value = reduced_gamma(_shifted(alpha, omega, place), place.log_q)
        return _log(value, f"Gamma_q at p={place.p}")

    places = _unramified_places(omega, 2, V)
    log_gamma = ordered_log_sum(term, places, config.chunk_size, config.threads)
    log_lhs = (
        _log(archimedean_gamma_factor(alpha, omega), "the archimedean gamma factor")
        + log_gamma
        + log_l_truncated_via_oracle(alpha, omega, V, config)
    )
    scale = abs(descriptor.discriminant) * omega.conductor_norm
    log_rhs = (
        cmath.log(combined_phase(omega))
        + (0.5 - alpha) * math.log(scale)
        + log_l_truncated_via_oracle(1 - alpha, omega.conjugate(), V, config)
    )
    shift = log_rhs.real
    record = CutoffRecord.compare(V, _exp(log_lhs - shift), _exp(log_rhs - shift), shift)
    return _finish(VerificationReport("finite", descriptor.spec, str(omega), alpha, tolerance, (record,)))


# --- Beta products ---

def check_rank_hypothesis(
    omega: IdeleClassCharacter,
    omega_prime: IdeleClassCharacter,
) -> IdeleClassCharacter:
    """
    Return omega'' = omega omega' after checking that all three characters
    ramify at the same primes with the same ranks.

    Raises:
        RankMismatchError: if the ranks of omega, omega' and omega'' differ
    """
    if omega.field != omega_prime.field:
        raise ValidationError(f"characters over {omega.field} and {omega_prime.field}")
    omega_second = omega * omega_prime
    if not omega.ranks == omega_prime.ranks == omega_second.ranks:
        raise RankMismatchError(
            f"local ranks differ: {omega} {omega.ranks}, {omega_prime} {omega_prime.ranks}, "
            f"product {omega_second.ranks}"
        )
    return omega_second


def archimedean_beta_factor(
    alpha: Number,
    omega: IdeleClassCharacter,
    beta: Number,
    omega_prime: IdeleClassCharacter,
) -> complex:
    alpha, beta = complex(alpha), complex(beta)
    value = 1 + 0j
    for place, nu, mu in zip(
        archimedean_places(omega.field), omega.archimedean, omega_prime.archimedean
    ):
        if place.kind == REAL:
            value *= beta_real(alpha, nu, beta, mu)
        else:
            value *= beta_complex_field(alpha, nu, beta, mu)
    return value


def beta_closed_form(omega: IdeleClassCharacter, omega_prime: IdeleClassCharacter) -> complex:
    """kappa sqrt(|D| N)."""
    scale = abs(omega.field.discriminant) * omega.conductor_norm
    return beta_phase(omega, omega_prime) * math.sqrt(scale)


def reg_beta_product(
    field: FieldLike,
    omega: IdeleClassCharacter,
    omega_prime: IdeleClassCharacter,
    alpha: Number,
    beta: Number,
    schedule: TruncationSchedule,
    config: Optional[EngineConfig] = None,
) -> RegularizedProduct:
    """
    prod_{v, p < V} B_q(alpha + i alpha_v, beta + i beta_v)
    * L_V(alpha; omega) L_V(beta; omega') / L_V(alpha + beta; omega'') for each V.

    Raises:
        DomainError: unless Re alpha < 0 and Re beta < 0
        RankMismatchError: if the three characters have different local ranks
    """
    alpha, beta = complex(alpha), complex(beta)
    _require_field(field, omega, omega_prime)
    if alpha.real >= 0 or beta.real >= 0:
        raise DomainError(
            f"the regularized beta product needs Re alpha < 0 and Re beta < 0, got {alpha}, {beta}"
        )
    omega_second = check_rank_hypothesis(omega, omega_prime)
    schedule.require_above(omega.ramified_primes)
    config = _config(config)

    def term(place: Place) -> complex:
        log_q = place.log_q
        factor = reduced_beta(
            _shifted(alpha, omega, place), _shifted(beta, omega_prime, place), log_q
        )
        factor *= 1 - omega.eigenvalue(place) * cmath.exp(-alpha * log_q)
        factor *= 1 - omega_prime.eigenvalue(place) * cmath.exp(-beta * log_q)
        factor /= 1 - omega_second.eigenvalue(place) * cmath.exp(-(alpha + beta) * log_q)
        return cmath.log(factor)

    places = _unramified_places(omega, 2, schedule.final)
    sums = _running_log_sums(term, places, schedule.cutoffs, config)
    l_value = (
        _oracle_value(omega, alpha)
        * _oracle_value(omega_prime, beta)
        / _oracle_value(omega_second, alpha + beta)
    )
    return RegularizedProduct(schedule.cutoffs, tuple(l_value * _exp(s) for s in sums))


def verify_beta_identity(
    field: FieldLike,
    omega: IdeleClassCharacter,
    omega_prime: IdeleClassCharacter,
    alpha: Number,
    beta: Number,
    schedule: Optional[TruncationSchedule] = None,
    tolerance: Optional[float] = None,
    config: Optional[EngineConfig] = None,
) -> VerificationReport:
    """Compare arch * reg prod B_q with kappa sqrt(|D| N) per cutoff."""
    alpha, beta = complex(alpha), complex(beta)
    descriptor = _require_field(field, omega, omega_prime)
    config = _config(config)
    schedule = schedule or TruncationSchedule.default()
    tolerance = config.tolerance if tolerance is None else tolerance

    omega_second = check_rank_hypothesis(omega, omega_prime)
    _require_pole_free(descriptor, [
        (alpha, omega.archimedean),
        (beta, omega_prime.archimedean),
        (alpha + beta, omega_second.archimedean),
    ])
    product = reg_beta_product(descriptor, omega, omega_prime, alpha, beta, schedule, config)
    arch = archimedean_beta_factor(alpha, omega, beta, omega_prime)
    rhs = beta_closed_form(omega, omega_prime)
    records = tuple(CutoffRecord.compare(V, arch * value, rhs) for V, value in product.trace)
    return _finish(VerificationReport(
        "beta", descriptor.spec, str(omega), alpha, tolerance, records,
        beta=beta, character_prime=str(omega_prime),
    ))


# --- Grids and error model ---

def compliant_grid(
    count: int,
    parities: Sequence[int] = (0,),
    weights: Sequence[int] = (),
    seed: int = 0,
) -> np.ndarray:
    """
    Random alphas with Re in [-3, -0.3], |Im| <= 2, at least 0.1 away from the
    pole lattices of gamma_real for each parity and gamma_complex_field for
    each weight.
    """
    rng = np.random.default_rng(seed)
    points: List[complex] = []
    while len(points) < count:
        alpha = complex(rng.uniform(-3.0, -0.3), rng.uniform(-2.0, 2.0))
        if all(gamma_real_pole_distance(alpha, nu) >= MIN_POLE_DISTANCE for nu in parities) and all(
            gamma_complex_pole_distance(alpha, nu) >= MIN_POLE_DISTANCE for nu in weights
        ):
            points.append(alpha)
    return np.array(points, dtype=complex)


def tail_estimate(alpha: Number, V: int) -> float:
    """Size of sum_{p >= V} p^(Re alpha - 1), about V^Re alpha / (|Re alpha| log V)."""
    sigma = complex(alpha).real
    if sigma >= 0:
        raise DomainError(f"the tail estimate needs Re alpha < 0, got {alpha}")
    return V ** sigma / (abs(sigma) * math.log(V))
