from archimedean import gamma_complex_field, gamma_real
from arithmetic import prime_power
from characters import parse_character_spec
from commands._options import format_value, parse_complex
from nonarch import RamifiedLocalCharacter, beta_q, gamma_q, gamma_ramified
from utils.error_handlers import EXIT_PASS, ValidationError, handle_command_errors
from utils.logging_config import get_logger

logger = get_logger(__name__)


def _ramified_component(spec: str) -> RamifiedLocalCharacter:
    """Caractère de (Z/p^a Z)^* donné par ses propres valeurs."""
    chi = parse_character_spec(spec)
    try:
        p, a = prime_power(chi.modulus)
    except ValueError as e:
        raise ValidationError(f"{spec} needs a prime-power modulus, got {chi.modulus}") from e
    return RamifiedLocalCharacter(p, a, chi.order, chi.angles)


def _evaluate(args) -> complex:
    alpha = parse_complex(args.alpha)
    if args.function == "gamma-real":
        return gamma_real(alpha, args.nu)
    if args.function == "gamma-complex":
        return gamma_complex_field(alpha, args.nu)
    if args.function == "gamma-q":
        return gamma_q(alpha, args.q)
    if args.function == "beta-q":
        return beta_q(alpha, parse_complex(args.beta), args.q)
    return gamma_ramified(alpha, _ramified_component(args.char))


@handle_command_errors
def cmd_local(args) -> int:
    value = _evaluate(args)
    logger.debug(f"local {args.function} alpha={args.alpha} -> {value!r}")
    print(format_value(value))
    return EXIT_PASS


def setup(subparsers):
    parser = subparsers.add_parser("local", help="Evaluate a local gamma or beta function")
    functions = parser.add_subparsers(dest="function", required=True)

    # Places archimédiennes
    for name, help_text in (
        ("gamma-real", "Gamma_inf(alpha; nu) of R, nu in {0, 1}"),
        ("gamma-complex", "Gamma_{-inf}(alpha; nu) of C, integer weight nu"),
    ):
        sub = functions.add_parser(name, help=help_text)
        sub.add_argument("--alpha", required=True)
        sub.add_argument("--nu", type=int, default=0)
        sub.set_defaults(handler=cmd_local)

    # Places finies non ramifiées
    sub = functions.add_parser("gamma-q", help="Reduced gamma Gamma_q(alpha)")
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--alpha", required=True)
    sub.set_defaults(handler=cmd_local)

    sub = functions.add_parser("beta-q", help="B_q(alpha, beta)")
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--beta", required=True)
    sub.set_defaults(handler=cmd_local)

    # Places finies ramifiées
    sub = functions.add_parser("gamma-ramified", help="kappa(theta) p^((alpha - 1/2) rho)")
    sub.add_argument("--char", required=True, help='Character mod p^a, e.g. "chi(m=4,k=1)"')
    sub.add_argument("--alpha", required=True)
    sub.set_defaults(handler=cmd_local)
