from commands._options import (
    RunConfig,
    add_beta_arguments,
    add_run_arguments,
    emit,
)
from regularization import (
    VerificationReport,
    finite_V_identity_check,
    verify_beta_identity,
    verify_gamma_identity,
)
from utils.config import EngineConfig
from utils.error_handlers import EXIT_FAIL, EXIT_PASS, handle_command_errors
from utils.logging_config import get_logger

logger = get_logger(__name__)


def summary_line(report: VerificationReport) -> str:
    final = report.final
    return (
        f"{report.verdict}: {report.kind} identity over {report.field} "
        f"for {report.character}, V={final.V}, rel_err={final.rel_err:.3e}, "
        f"tol={report.tolerance:g}"
    )


def run_verification(identity: str, run: RunConfig, cutoff: int = 50) -> VerificationReport:
    """Lance la vérification demandée avec la configuration du moteur lue dans l'environnement."""
    config = EngineConfig.from_env()
    if identity == "gamma":
        return verify_gamma_identity(
            run.field, run.omega, run.alpha, run.schedule, run.tolerance, config
        )
    if identity == "beta":
        return verify_beta_identity(
            run.field, run.omega, run.omega_prime, run.alpha, run.beta,
            run.schedule, run.tolerance, config,
        )
    return finite_V_identity_check(run.field, run.omega, run.alpha, cutoff, run.tolerance, config)


@handle_command_errors
def cmd_verify(args) -> int:
    run = RunConfig.from_args(args)
    report = run_verification(args.identity, run, getattr(args, "cutoff", 50))
    text = report.to_json() if run.fmt == "json" else report.to_csv()
    emit(text, run.output, summary_line(report))
    return EXIT_PASS if report.passed else EXIT_FAIL


def setup(subparsers):
    parser = subparsers.add_parser("verify", help="Verify a regularized adelic identity")
    identities = parser.add_subparsers(dest="identity", required=True)

    # Formule régularisée pour les fonctions gamma
    sub = identities.add_parser("gamma", help="Regularized gamma formula")
    add_run_arguments(sub)
    sub.set_defaults(handler=cmd_verify)

    # Formule régularisée pour les fonctions bêta
    sub = identities.add_parser("beta", help="Regularized beta formula")
    add_run_arguments(sub)
    add_beta_arguments(sub, required=True)
    sub.set_defaults(handler=cmd_verify)

    # Identité exacte à V fini
    sub = identities.add_parser("finite", help="Key formula at a single finite cutoff V")
    add_run_arguments(sub, schedule=False)
    sub.add_argument("--cutoff", type=int, default=50, help="Prime bound V")
    sub.set_defaults(handler=cmd_verify)
