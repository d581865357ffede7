"""
Tests for the command-line interface.

This module tests:
- the local sub-commands and their printed values
- verify gamma / beta / finite: reports, summaries and exit codes
- converge: slope and naive columns, agreement with verify
- complex literal parsing and value formatting
"""

import csv
import io
import json

import pytest

from commands._options import format_value, parse_complex
from main import main
from utils.error_handlers import EXIT_DOMAIN, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, ParseError

SCHEDULE = "2^8..2^12"


def rows(text):
    return list(csv.reader(io.StringIO(text)))


class TestParseComplex:
    """Tests for complex literals."""

    @pytest.mark.parametrize(
        "text,value",
        [("-1.5", -1.5), ("-1+0.7i", -1 + 0.7j), ("0.3-2i", 0.3 - 2j), ("i", 1j), ("-i", -1j), ("2j", 2j)],
    )
    def test_values(self, text, value):
        """Decimal a+bi literals, with i or j."""
        assert parse_complex(text) == value

    @pytest.mark.parametrize("text", ["abc", "1+", "nan", "inf"])
    def test_invalid(self, text):
        """Garbage and non-finite values raise ParseError."""
        with pytest.raises(ParseError):
            parse_complex(text)

    def test_format(self):
        """The imaginary part is printed only when nonzero."""
        assert format_value(-0.75 + 0j) == "-0.75"
        assert format_value(1 - 2j) == "1-2i"


class TestLocal:
    """Tests for the local sub-command."""

    def test_gamma_q(self, capsys):
        """Gamma_2(-1) = -0.75."""
        assert main(["local", "gamma-q", "--q", "2", "--alpha=-1"]) == EXIT_PASS
        assert capsys.readouterr().out.strip() == "-0.75"

    def test_gamma_real(self, capsys):
        """Gamma_inf(1/2; 1) = -i."""
        assert main(["local", "gamma-real", "--alpha", "0.5", "--nu", "1"]) == EXIT_PASS
        assert parse_complex(capsys.readouterr().out) == pytest.approx(-1j, abs=1e-12)

    def test_gamma_ramified(self, capsys):
        """Gamma(1.5; chi4) = 4i."""
        code = main(["local", "gamma-ramified", "--char", "chi(m=4,k=1)", "--alpha", "1.5"])
        assert code == EXIT_PASS
        assert parse_complex(capsys.readouterr().out) == pytest.approx(4j, abs=1e-12)

    def test_beta_q(self, capsys):
        """B_q accepts complex arguments."""
        code = main(["local", "beta-q", "--q", "3", "--alpha=-1+0.5i", "--beta=-0.5"])
        assert code == EXIT_PASS
        assert capsys.readouterr().out.strip()

    def test_pole(self, capsys):
        """A pole exits with the domain code and names the error."""
        assert main(["local", "gamma-q", "--q", "2", "--alpha", "0"]) == EXIT_DOMAIN
        assert "PoleError: Pole encountered" in capsys.readouterr().err

    def test_bad_q(self, capsys):
        """q must be a prime power."""
        assert main(["local", "gamma-q", "--q", "6", "--alpha", "0.3"]) == EXIT_USAGE
        assert "ValidationError" in capsys.readouterr().err

    def test_ramified_needs_prime_power(self):
        """The ramified gamma needs a character mod a prime power."""
        code = main(["local", "gamma-ramified", "--char", "chi(m=12,k=3)", "--alpha", "1.5"])
        assert code == EXIT_USAGE


class TestVerify:
    """Tests for the verify sub-command."""

    def test_gamma_pass(self, capsys):
        """Trivial character over Q at alpha = -1.5 passes."""
        code = main(["verify", "gamma", "--alpha=-1.5", "--schedule", SCHEDULE, "--tol", "1e-4"])
        captured = capsys.readouterr()
        assert code == EXIT_PASS
        table = rows(captured.out)
        assert table[0][:2] == ["V", "lhs_re"]
        assert len(table) == 6
        assert "PASS: gamma identity over Q" in captured.err

    def test_gamma_fail(self, capsys):
        """An unreachable tolerance fails with exit code 1."""
        code = main(["verify", "gamma", "--alpha=-1.5", "--schedule", SCHEDULE, "--tol", "1e-12"])
        assert code == EXIT_FAIL
        assert "FAIL" in capsys.readouterr().err

    def test_character(self, capsys):
        """chi4 at a complex point."""
        code = main([
            "verify", "gamma", "--char", "chi(m=4,k=1)", "--alpha=-1.3+0.7i",
            "--schedule", "2^10..2^13", "--tol", "1e-4",
        ])
        assert code == EXIT_PASS

    def test_right_half_plane(self, capsys):
        """Re alpha >= 0 is a domain error."""
        assert main(["verify", "gamma", "--alpha", "0.5", "--schedule", SCHEDULE]) == EXIT_DOMAIN
        assert "DomainError: Argument outside" in capsys.readouterr().err

    def test_bad_field(self):
        """Unknown fields are usage errors."""
        assert main(["verify", "gamma", "--field", "Q(cbrt,2)", "--alpha=-1.5"]) == EXIT_USAGE

    def test_bad_alpha(self):
        """Unparseable complex literals are usage errors."""
        assert main(["verify", "gamma", "--alpha", "abc"]) == EXIT_USAGE

    def test_bad_tolerance(self):
        """Tolerances must be positive."""
        assert main(["verify", "gamma", "--alpha=-1.5", "--tol", "0"]) == EXIT_USAGE

    def test_ramified_over_quadratic(self):
        """Ramified characters are supported over Q only."""
        code = main(["verify", "gamma", "--field", "Q(sqrt,-1)", "--char", "chi(m=4,k=1)", "--alpha=-1.5"])
        assert code == EXIT_DOMAIN

    def test_beta_rank_mismatch(self):
        """chi4 with chi5 breaks the rank hypothesis."""
        code = main([
            "verify", "beta", "--char", "chi(m=4,k=1)", "--char2", "chi(m=5,k=1)",
            "--alpha=-1.5", "--beta=-1.25", "--schedule", SCHEDULE,
        ])
        assert code == EXIT_DOMAIN

    def test_beta_pass(self, capsys):
        """Trivial characters over Q(i) pass the beta identity."""
        code = main([
            "verify", "beta", "--field", "Q(sqrt,-1)", "--alpha=-1.5", "--beta=-1.25",
            "--schedule", "2^10..2^13", "--tol", "1e-4",
        ])
        assert code == EXIT_PASS

    def test_finite(self, capsys):
        """The finite-V identity holds at V = 50."""
        code = main(["verify", "finite", "--alpha=0.3+2i", "--cutoff", "50", "--tol", "1e-8"])
        assert code == EXIT_PASS

    def test_json_output(self, tmp_path, capsys):
        """JSON reports go to --output, the summary to stdout."""
        path = tmp_path / "report.json"
        code = main([
            "verify", "gamma", "--alpha=-1.5", "--schedule", SCHEDULE,
            "--format", "json", "--output", str(path),
        ])
        assert code == EXIT_PASS
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["verdict"] == "PASS"
        assert [r["V"] for r in data["records"]] == [256, 512, 1024, 2048, 4096]
        assert capsys.readouterr().out.startswith("PASS")

    def test_thread_count(self, monkeypatch, capsys):
        """ADELIC_THREADS does not change the report."""
        outputs = []
        for threads in ("1", "4"):
            monkeypatch.setenv("ADELIC_THREADS", threads)
            main(["verify", "gamma", "--char", "chi(m=5,k=1)", "--alpha=-1.3+0.7i", "--schedule", SCHEDULE])
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]


class TestConverge:
    """Tests for the converge sub-command."""

    def test_slope_column(self, capsys):
        """The table carries per-cutoff slopes, empty on the first row."""
        assert main(["converge", "--alpha=-1.5", "--schedule", SCHEDULE]) == EXIT_PASS
        table = rows(capsys.readouterr().out)
        assert table[0][-1] == "slope"
        assert table[1][-1] == ""
        assert -2.0 < float(table[-1][-1]) < -1.2

    def test_matches_verify(self, capsys):
        """The final row equals the verify report."""
        main(["converge", "--alpha=-1.5", "--schedule", SCHEDULE])
        converge = rows(capsys.readouterr().out)
        main(["verify", "gamma", "--alpha=-1.5", "--schedule", SCHEDULE])
        verify = rows(capsys.readouterr().out)
        assert converge[-1][:7] == verify[-1][:7]

    def test_naive(self, capsys):
        """--naive adds the log of the unregularized product."""
        assert main(["converge", "--alpha=-1.5", "--schedule", SCHEDULE, "--naive"]) == EXIT_PASS
        table = rows(capsys.readouterr().out)
        assert table[0][-2:] == ["naive_log_re", "naive_log_im"]
        assert float(table[-1][-2]) < float(table[1][-2])

    def test_naive_beta_rejected(self):
        """--naive traces the gamma product only."""
        code = main(["converge", "--alpha=-1.5", "--beta=-1.25", "--schedule", SCHEDULE, "--naive"])
        assert code == EXIT_USAGE

    def test_json(self, capsys):
        """JSON output carries the local slopes."""
        assert main(["converge", "--alpha=-1.5", "--schedule", SCHEDULE, "--format", "json"]) == EXIT_PASS
        data = json.loads(capsys.readouterr().out)
        assert data["local_slopes"][0] is None
        assert len(data["local_slopes"]) == 5


class TestUsage:
    """Tests for argument errors."""

    def test_missing_command(self):
        """A sub-command is required."""
        assert main([]) == EXIT_USAGE

    def test_help(self):
        """--help exits cleanly."""
        assert main(["--help"]) == 0

    def test_log_level(self, capsys):
        """--log-level is case-insensitive."""
        assert main(["--log-level", "debug", "local", "gamma-q", "--q", "3", "--alpha", "0.5"]) == EXIT_PASS
        assert capsys.readouterr().out.strip() == "1"
