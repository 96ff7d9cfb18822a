"""Logging configuration for leavitt."""

import logging
import sys


def setup_logging(level: str = "WARNING") -> None:
    """Configure logging; stdout stays reserved for command output."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )
