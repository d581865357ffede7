"""
Logging for the adelic numerics toolkit.

Console records go to stderr so that CSV and JSON reports on stdout stay
parseable. Setting LOG_FILE adds a rotating file in a structured,
grep-friendly format. The VERBOSE level sits between DEBUG and INFO and
carries per-cutoff progress of long verification runs.
"""

import logging
import os
import sys
from datetime import datetime, timezone
from logging.handlers import RotatingFileHandler
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

DEFAULT_LOG_LEVEL = "WARNING"
LOG_FILE_BYTES = 5 * 1024 * 1024
LOG_FILE_BACKUPS = 3

VERBOSE = 15
logging.addLevelName(VERBOSE, "VERBOSE")

VALID_LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "VERBOSE": VERBOSE,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
}

_LEVEL_COLORS = {
    logging.DEBUG: "\033[36m",
    VERBOSE: "\033[96m",
    logging.INFO: "\033[32m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
}
_DIM = "\033[90m"
_RESET = "\033[0m"

FILE_FORMAT = "[%(run_time)s] [%(levelname)-8s] [%(name)s:%(lineno)d] %(message)s"


class RunFormatter(logging.Formatter):
    """File records stamped with UTC milliseconds."""

    def format(self, record: logging.LogRecord) -> str:
        record.run_time = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S.%f")[:-3]
        return super().format(record)


class ConsoleFormatter(logging.Formatter):
    """Short stderr lines, colored by level when stderr is a terminal."""

    def __init__(self, stream=None):
        super().__init__()
        stream = stream or sys.stderr
        self.use_colors = (
            not os.getenv("NO_COLOR")
            and (bool(os.getenv("FORCE_COLOR")) or getattr(stream, "isatty", lambda: False)())
        )

    def format(self, record: logging.LogRecord) -> str:
        stamp = datetime.now(timezone.utc).strftime("%H:%M:%S")
        level = record.levelname
        if self.use_colors:
            color = _LEVEL_COLORS.get(record.levelno, "")
            line = f"{_DIM}{stamp}{_RESET} {color}{level:<8}{_RESET} {record.name}: {record.getMessage()}"
        else:
            line = f"{stamp} {level:<8} {record.name}: {record.getMessage()}"
        if record.exc_info:
            line += "\n" + self.formatException(record.exc_info)
        return line


def get_log_level() -> int:
    """LOG_LEVEL from the environment, WARNING when unset or unknown."""
    name = os.getenv("LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    if name not in VALID_LOG_LEVELS:
        print(f"Invalid LOG_LEVEL {name!r}, using {DEFAULT_LOG_LEVEL}", file=sys.stderr)
        return VALID_LOG_LEVELS[DEFAULT_LOG_LEVEL]
    return VALID_LOG_LEVELS[name]


def setup_logging(log_level: Optional[int] = None, log_file: Optional[str] = None) -> logging.Logger:
    """
    Install the console handler and, if a path is given, the rotating file handler.

    Args:
        log_level: level for every handler (default: LOG_LEVEL)
        log_file: log file path (default: LOG_FILE); empty disables the file

    Returns:
        The root logger.
    """
    level = log_level if log_level is not None else get_log_level()
    path = log_file if log_file is not None else os.getenv("LOG_FILE", "")

    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)
    root.setLevel(level)

    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(ConsoleFormatter(sys.stderr))
    root.addHandler(console)

    if path:
        try:
            handler = RotatingFileHandler(
                path, maxBytes=LOG_FILE_BYTES, backupCount=LOG_FILE_BACKUPS, encoding="utf-8"
            )
        except OSError as e:
            root.warning(f"Could not open log file {path}: {e}")
        else:
            handler.setFormatter(RunFormatter(FILE_FORMAT))
            root.addHandler(handler)

    return root


def get_logger(name: str) -> logging.Logger:
    """Named logger with a ``verbose`` method for the VERBOSE level."""
    logger = logging.getLogger(name)

    def verbose(msg, *args, **kwargs):
        if logger.isEnabledFor(VERBOSE):
            logger._log(VERBOSE, msg, args, **kwargs)

    logger.verbose = verbose
    return logger


__all__ = ["VALID_LOG_LEVELS", "VERBOSE", "get_log_level", "get_logger", "setup_logging"]
