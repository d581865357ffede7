"""
Runtime configuration for the adelic numerics toolkit.

Every knob is read from the environment (optionally through a .env file)
with a documented default, and clamped to a safe range.
"""

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

# Default configuration
DEFAULT_TOLERANCE = 1e-4
DEFAULT_SCHEDULE = "2^8..2^17"
DEFAULT_CHUNK_SIZE = 1024
DEFAULT_MAX_WEIGHT = 64
MAX_THREADS = 64


def get_thread_count() -> int:
    """Get the worker cap for per-place evaluation (ADELIC_THREADS)."""
    default = os.cpu_count() or 1
    try:
        threads = int(os.getenv("ADELIC_THREADS", default))
        return max(1, min(threads, MAX_THREADS))  # Clamp between 1 and 64
    except (ValueError, TypeError):
        return max(1, min(default, MAX_THREADS))


def get_default_tolerance() -> float:
    """Get the default relative tolerance (ADELIC_TOLERANCE)."""
    try:
        tolerance = float(os.getenv("ADELIC_TOLERANCE", DEFAULT_TOLERANCE))
    except (ValueError, TypeError):
        return DEFAULT_TOLERANCE
    if not tolerance > 0 or tolerance != tolerance:
        logger.warning(f"Ignoring non-positive ADELIC_TOLERANCE {tolerance!r}")
        return DEFAULT_TOLERANCE
    return tolerance


def get_default_schedule() -> str:
    """Get the default truncation schedule text (ADELIC_SCHEDULE)."""
    return os.getenv("ADELIC_SCHEDULE", DEFAULT_SCHEDULE).strip() or DEFAULT_SCHEDULE


def get_chunk_size() -> int:
    """Get the number of places per reduction chunk (ADELIC_CHUNK_SIZE)."""
    try:
        size = int(os.getenv("ADELIC_CHUNK_SIZE", DEFAULT_CHUNK_SIZE))
        return max(64, min(size, 65536))  # Clamp between 64 and 65536
    except (ValueError, TypeError):
        return DEFAULT_CHUNK_SIZE


def get_max_weight() -> int:
    """Get the bound on complex-place weights |nu| (ADELIC_MAX_WEIGHT)."""
    try:
        weight = int(os.getenv("ADELIC_MAX_WEIGHT", DEFAULT_MAX_WEIGHT))
        return max(0, weight)
    except (ValueError, TypeError):
        return DEFAULT_MAX_WEIGHT


@dataclass(frozen=True)
class EngineConfig:
    """Snapshot of the settings the regularization engine runs with."""
    threads: int = 1
    chunk_size: int = DEFAULT_CHUNK_SIZE
    tolerance: float = DEFAULT_TOLERANCE

    @classmethod
    def from_env(cls) -> "EngineConfig":
        return cls(
            threads=get_thread_count(),
            chunk_size=get_chunk_size(),
            tolerance=get_default_tolerance(),
        )
