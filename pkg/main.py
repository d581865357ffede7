# Importation des bibliothèques et modules
import argparse
import importlib
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from dotenv import load_dotenv

# Répertoire racine de l'outil
_SCRIPT_DIR = Path(__file__).resolve().parent

# Chargement du fichier .env
load_dotenv()

from utils.error_handlers import EXIT_USAGE  # noqa: E402
from utils.logging_config import VALID_LOG_LEVELS, get_logger, setup_logging  # noqa: E402

logger = get_logger(__name__)


def load_command_modules(subparsers) -> List[str]:
    """Charge chaque module de commands/ et appelle son hook setup(subparsers)."""
    loaded = []
    commands_path = _SCRIPT_DIR / "commands"
    for file in sorted(commands_path.glob("*.py")):
        if file.name.startswith("_"):
            continue
        # Charger le module comme extension
        module_name = f"commands.{file.stem}"
        module = importlib.import_module(module_name)
        setup = getattr(module, "setup", None)
        if setup is None:
            logger.debug(f"{module_name} n'a pas de hook setup, ignoré")
            continue
        setup(subparsers)
        loaded.append(module_name)
        logger.debug(f"Extension {module_name} chargée avec succès")
    return loaded


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adelic",
        description=(
            "Local gamma/beta functions and numerical checks of the regularized "
            "adelic formulas. Negative complex literals need the --alpha=-1+0.5i form."
        ),
    )
    parser.add_argument(
        "--log-level",
        choices=sorted(VALID_LOG_LEVELS),
        type=str.upper,
        default=None,
        help="Override LOG_LEVEL from the environment",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    load_command_modules(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Point d'entrée: renvoie le code de sortie (0 PASS, 1 FAIL, 2 usage, 3 domaine)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse sort avec 2 sur une erreur d'usage, 0 pour --help
        return EXIT_USAGE if e.code else 0

    level = VALID_LOG_LEVELS[args.log_level] if args.log_level else None
    setup_logging(log_level=level)
    logger.debug(f"Commande {args.command} lancée")
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
