"""This module contains the logger configuration for dronesched."""

import sys

from loguru import logger


def setup_logger(level: str = "INFO"):
    """Configure the logger to log messages to the console."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format="{time:YYYY-MM-DD HH:mm:ss} - {level} - {message}")
    return logger
