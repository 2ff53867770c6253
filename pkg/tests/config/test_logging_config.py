"""
Tests for structured logging and settings.
"""
import json
import pytest
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from config.settings import Settings
from src.config.logging_config import VerifyLogger, configure_logging, get_logger


@pytest.fixture
def json_logs():
    """Route logs through the JSON renderer at INFO for one test."""
    def configure(level="INFO"):
        configure_logging(level=level, fmt="json")
        return VerifyLogger(get_logger("test"))

    yield configure
    configure_logging()


class TestVerifyLogger:
    """Log lines go to stderr as sorted JSON."""

    def test_refuted_claim_is_a_warning(self, json_logs, capsys):
        verify = json_logs()

        verify.log_claim("equiv", "refuted", {"size_bound": 2, "budget": None}, 1.234)

        captured = capsys.readouterr()
        record = json.loads(captured.err.strip().splitlines()[-1])
        assert captured.out == ""
        assert record["event"] == "Claim refuted"
        assert record["level"] == "warning"
        assert record["parameters"] == {"size_bound": 2}
        assert record["duration_ms"] == 1.23

    def test_checked_claim_fields(self, json_logs, capsys):
        verify = json_logs()

        verify.log_claim("sieve", "verified", {"size_bound": 4, "budget": 2}, 0.5)

        record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert record["event"] == "Claim checked"
        assert record["level"] == "info"
        assert record["claim"] == "sieve"
        assert record["verdict"] == "verified"
        assert record["parameters"] == {"budget": 2, "size_bound": 4}

    def test_level_filters_info(self, json_logs, capsys):
        verify = json_logs(level="WARNING")

        verify.log_sieve(candidates=8, retained=1, models_checked=14, duration_ms=0.5)

        assert capsys.readouterr().err == ""

    def test_sieve_fields(self, json_logs, capsys):
        verify = json_logs()

        verify.log_sieve(candidates=8, retained=1, models_checked=14, duration_ms=0.5)

        record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert record["candidates"] == 8
        assert record["retained"] == 1


class TestSettings:
    """Environment overrides for the search defaults."""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("SUBMODEL_LAB_MAX_SIZE", raising=False)
        monkeypatch.delenv("SUBMODEL_LAB_JOBS", raising=False)

        settings = Settings()

        assert settings.search.jobs == 1
        assert settings.sieve.budget >= 1

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("SUBMODEL_LAB_MAX_SIZE", "3")
        monkeypatch.setenv("SUBMODEL_LAB_JOBS", "2")

        settings = Settings()

        assert settings.search.max_size == 3
        assert settings.search.jobs == 2
