"""
Tests for environment configuration and logging setup.

This module tests:
- the ADELIC_* getters: defaults, clamping and bad values
- EngineConfig.from_env
- setup_logging: levels, the rotating log file and the VERBOSE helper
"""

import logging

import pytest

from utils.config import (
    DEFAULT_CHUNK_SIZE,
    DEFAULT_MAX_WEIGHT,
    DEFAULT_SCHEDULE,
    DEFAULT_TOLERANCE,
    EngineConfig,
    get_chunk_size,
    get_default_schedule,
    get_default_tolerance,
    get_max_weight,
    get_thread_count,
)
from utils.logging_config import VERBOSE, get_log_level, get_logger, setup_logging


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in (
        "ADELIC_THREADS", "ADELIC_TOLERANCE", "ADELIC_SCHEDULE", "ADELIC_CHUNK_SIZE",
        "ADELIC_MAX_WEIGHT", "LOG_LEVEL", "LOG_FILE",
    ):
        monkeypatch.delenv(key, raising=False)


class TestGetters:
    """Tests for the environment getters."""

    def test_defaults(self):
        """Unset variables fall back to the documented defaults."""
        assert get_default_tolerance() == DEFAULT_TOLERANCE
        assert get_default_schedule() == DEFAULT_SCHEDULE
        assert get_chunk_size() == DEFAULT_CHUNK_SIZE
        assert get_max_weight() == DEFAULT_MAX_WEIGHT
        assert get_thread_count() >= 1

    def test_thread_clamp(self, monkeypatch):
        """Thread counts are clamped to [1, 64]."""
        monkeypatch.setenv("ADELIC_THREADS", "0")
        assert get_thread_count() == 1
        monkeypatch.setenv("ADELIC_THREADS", "1000")
        assert get_thread_count() == 64

    def test_chunk_clamp(self, monkeypatch):
        """Chunk sizes are clamped to [64, 65536]."""
        monkeypatch.setenv("ADELIC_CHUNK_SIZE", "1")
        assert get_chunk_size() == 64
        monkeypatch.setenv("ADELIC_CHUNK_SIZE", "not-a-number")
        assert get_chunk_size() == DEFAULT_CHUNK_SIZE

    @pytest.mark.parametrize("value", ["-1", "0", "nan", "abc"])
    def test_bad_tolerance(self, monkeypatch, value):
        """Non-positive or unparseable tolerances use the default."""
        monkeypatch.setenv("ADELIC_TOLERANCE", value)
        assert get_default_tolerance() == DEFAULT_TOLERANCE

    def test_blank_schedule(self, monkeypatch):
        """A blank schedule uses the default."""
        monkeypatch.setenv("ADELIC_SCHEDULE", "  ")
        assert get_default_schedule() == DEFAULT_SCHEDULE

    def test_engine_config(self, monkeypatch):
        """EngineConfig snapshots the environment."""
        monkeypatch.setenv("ADELIC_THREADS", "3")
        monkeypatch.setenv("ADELIC_CHUNK_SIZE", "128")
        monkeypatch.setenv("ADELIC_TOLERANCE", "1e-6")
        assert EngineConfig.from_env() == EngineConfig(threads=3, chunk_size=128, tolerance=1e-6)


class TestLogging:
    """Tests for the logging setup."""

    def test_level_from_env(self, monkeypatch):
        """LOG_LEVEL accepts VERBOSE and falls back on bad values."""
        monkeypatch.setenv("LOG_LEVEL", "verbose")
        assert get_log_level() == VERBOSE
        monkeypatch.setenv("LOG_LEVEL", "LOUD")
        assert get_log_level() == logging.WARNING

    def test_log_file(self, tmp_path):
        """Records reach the rotating log file in the structured format."""
        path = tmp_path / "adelic.log"
        setup_logging(log_level=VERBOSE, log_file=str(path))
        get_logger("adelic.test").verbose("segment done")
        for handler in logging.getLogger().handlers:
            handler.flush()
        text = path.read_text(encoding="utf-8")
        assert "[VERBOSE ]" in text
        assert "segment done" in text
        setup_logging(log_level=logging.WARNING, log_file="")

    def test_verbose_filtered(self, tmp_path):
        """VERBOSE messages are dropped at INFO."""
        path = tmp_path / "adelic.log"
        setup_logging(log_level=logging.INFO, log_file=str(path))
        get_logger("adelic.test").verbose("hidden")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "hidden" not in path.read_text(encoding="utf-8")
        setup_logging(log_level=logging.WARNING, log_file="")

    def test_console_on_stderr(self, monkeypatch, capsys):
        """Console records go to stderr, uncolored under NO_COLOR."""
        monkeypatch.setenv("NO_COLOR", "1")
        setup_logging(log_level=logging.INFO, log_file="")
        get_logger("adelic.test").info("verdict ready")
        captured = capsys.readouterr()
        assert "INFO     adelic.test: verdict ready" in captured.err
        assert "\033[" not in captured.err
        assert captured.out == ""
        setup_logging(log_level=logging.WARNING, log_file="")
