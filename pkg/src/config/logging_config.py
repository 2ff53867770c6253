"""
Structlog Configuration for Submodel Lab
Structured logging for searches, claims and the sieve
"""

import logging
import os
import sys
from typing import Any, Dict, Optional

import structlog

LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = os.getenv("LOG_FORMAT", "console").lower()


def _renderer(fmt: str):
    if fmt == "json":
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(colors=False)


def configure_logging(level: Optional[str] = None, fmt: Optional[str] = None):
    """Configure structlog on stderr; stdout carries only command results."""
    threshold = getattr(logging, (level or LOG_LEVEL).upper(), logging.WARNING)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="iso"),
            _renderer(fmt or LOG_FORMAT),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(threshold),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=True,
    )


def get_logger(name: str = None) -> structlog.BoundLogger:
    """Get a configured logger instance."""
    return structlog.get_logger(name or __name__)


class VerifyLogger:
    """Logger for search and verification events."""

    def __init__(self, logger: structlog.BoundLogger = None):
        self.logger = logger or get_logger("verify")

    def log_search(
        self,
        size: int,
        nodes: int,
        models: int,
        instances: int,
        duration_ms: float,
    ):
        """Log a finished model search."""
        self.logger.debug(
            "Search completed",
            size=size,
            nodes=nodes,
            models=models,
            instances=instances,
            duration_ms=round(duration_ms, 2),
        )

    def log_claim(
        self,
        claim_id: str,
        verdict: str,
        parameters: Dict[str, Any],
        duration_ms: float,
    ):
        """Log a verification verdict."""
        log_data = {
            "claim": claim_id,
            "verdict": verdict,
            "parameters": {k: v for k, v in parameters.items() if v is not None},
            "duration_ms": round(duration_ms, 2),
        }

        if verdict == "refuted":
            self.logger.warning("Claim refuted", **log_data)
        else:
            self.logger.info("Claim checked", **log_data)

    def log_sieve(
        self,
        candidates: int,
        retained: int,
        models_checked: int,
        duration_ms: float
    ):
        """Log a universal-consequence sieve run."""
        self.logger.info(
            "Sieve completed",
            candidates=candidates,
            retained=retained,
            models_checked=models_checked,
            duration_ms=round(duration_ms, 2),
        )


# Initialize logging on import
configure_logging()

# Export logger instances
logger = get_logger()
verify_logger = VerifyLogger()
