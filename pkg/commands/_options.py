"""
Shared argument parsing for the verification sub-commands.

Parses complex literals ("a+bi"), field specs, character specs and schedules
into a RunConfig, and writes reports to a file or stdout.
"""

import cmath
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from characters import IdeleClassCharacter, character_for, parse_character_spec
from places import NumberFieldDescriptor, parse_field_spec
from regularization import TruncationSchedule
from utils.config import get_default_tolerance
from utils.error_handlers import ParseError, ValidationError

_BARE_IMAGINARY = re.compile(r"(^|[+-])j$")


def parse_complex(text: str) -> complex:
    """Parse "a+bi" style literals with decimal components; "j" is accepted too."""
    cleaned = text.strip().replace(" ", "").lower().replace("i", "j")
    cleaned = _BARE_IMAGINARY.sub(r"\g<1>1j", cleaned)
    try:
        value = complex(cleaned)
    except ValueError as e:
        raise ParseError(f"cannot parse complex literal {text!r}") from e
    if not cmath.isfinite(value):
        raise ParseError(f"complex literal {text!r} is not finite")
    return value


def format_value(value: complex) -> str:
    """15 significant digits, the imaginary part only when it is nonzero."""
    if value.imag == 0:
        return f"{value.real:.15g}"
    return f"{value.real:.15g}{value.imag:+.15g}i"


def add_run_arguments(parser, schedule: bool = True) -> None:
    parser.add_argument("--field", default="Q", help='Field spec: Q, "Q(sqrt,d)" or "Q(zeta,m)"')
    parser.add_argument("--char", default="trivial", help='Character spec: trivial or "chi(m=4,k=1)"')
    parser.add_argument("--alpha", required=True, help="Complex literal such as -1.5 or -1+0.7i")
    if schedule:
        parser.add_argument("--schedule", default=None, help='Cutoffs, "2^8..2^17" or "100,1000"')
    parser.add_argument("--tol", type=float, default=None, help="Relative tolerance at the final cutoff")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--output", type=Path, default=None, help="Report file (stdout if omitted)")


def add_beta_arguments(parser, required: bool) -> None:
    parser.add_argument("--char2", default=None, help="Second character (defaults to --char)")
    parser.add_argument("--beta", required=required, default=None, help="Second complex argument")


@dataclass(frozen=True)
class RunConfig:
    """Everything one verification or convergence run needs."""
    field: NumberFieldDescriptor
    omega: IdeleClassCharacter
    alpha: complex
    schedule: Optional[TruncationSchedule]
    tolerance: float
    fmt: str = "csv"
    output: Optional[Path] = None
    omega_prime: Optional[IdeleClassCharacter] = None
    beta: Optional[complex] = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        field = parse_field_spec(args.field)
        omega = character_for(field, parse_character_spec(args.char))
        tolerance = get_default_tolerance() if args.tol is None else args.tol
        if not tolerance > 0:
            raise ValidationError(f"tolerance must be positive, got {args.tol}")

        schedule_text = getattr(args, "schedule", None)
        schedule = TruncationSchedule.parse(schedule_text) if schedule_text else None

        omega_prime = None
        beta = None
        if getattr(args, "beta", None) is not None:
            beta = parse_complex(args.beta)
            char2 = args.char2 if args.char2 is not None else args.char
            omega_prime = character_for(field, parse_character_spec(char2))

        return cls(
            field=field,
            omega=omega,
            alpha=parse_complex(args.alpha),
            schedule=schedule,
            tolerance=tolerance,
            fmt=args.format,
            output=args.output,
            omega_prime=omega_prime,
            beta=beta,
        )


def emit(text: str, output: Optional[Path], summary: Optional[str] = None) -> None:
    """Write the report; the summary line goes to stderr when the report takes stdout."""
    if output is None:
        sys.stdout.write(text)
        if summary:
            print(summary, file=sys.stderr)
        return
    output.write_text(text, encoding="utf-8")
    if summary:
        print(summary)
