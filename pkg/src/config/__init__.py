"""
Configuration package for Submodel Lab.
"""
from .logging_config import (
    configure_logging,
    get_logger,
    logger,
    verify_logger,
    VerifyLogger,
)

__all__ = [
    "configure_logging",
    "get_logger",
    "logger",
    "verify_logger",
    "VerifyLogger",
]
