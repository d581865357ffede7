import json

from commands._options import (
    RunConfig,
    add_beta_arguments,
    add_run_arguments,
    emit,
)
from commands.verify import run_verification
from regularization import TruncationSchedule, naive_gamma_partial_products
from utils.config import EngineConfig
from utils.error_handlers import EXIT_PASS, ValidationError, handle_command_errors
from utils.logging_config import get_logger

logger = get_logger(__name__)


@handle_command_errors
def cmd_converge(args) -> int:
    run = RunConfig.from_args(args)
    identity = "beta" if run.beta is not None else "gamma"
    if args.naive and identity == "beta":
        raise ValidationError("--naive traces the gamma product only")

    report = run_verification(identity, run)

    # Produit naïf (non régularisé), pour comparaison
    extra = {}
    if args.naive:
        schedule = run.schedule or TruncationSchedule.default()
        naive = naive_gamma_partial_products(
            run.field, run.omega, run.alpha, schedule, EngineConfig.from_env()
        )
        extra = {
            "naive_log_re": [value.real for _, value in naive],
            "naive_log_im": [value.imag for _, value in naive],
        }

    if run.fmt == "json":
        data = report.to_dict()
        data["local_slopes"] = report.local_slopes()
        data.update(extra)
        text = json.dumps(data, indent=2)
    else:
        text = report.to_csv(include_slope=True, extra=extra)

    logger.info(f"Pente estimée: {report.slope}")
    emit(text, run.output)
    return EXIT_PASS


def setup(subparsers):
    parser = subparsers.add_parser("converge", help="Per-cutoff convergence table")
    add_run_arguments(parser)
    add_beta_arguments(parser, required=False)
    parser.add_argument(
        "--naive", action="store_true", help="Add the log of the unregularized product"
    )
    parser.set_defaults(handler=cmd_converge)
