"""
Logging setup: progress goes to stderr so stdout stays machine-readable.
"""

import logging
import sys
from typing import Optional

from config.settings import get_config

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
PACKAGE_LOGGERS = ('algebra', 'utils', 'cli')


def configure_logging(level: Optional[str] = None) -> None:
    """Attach one stderr handler to each package logger."""
    level = (level or get_config().LOG_LEVEL).upper()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    for name in PACKAGE_LOGGERS:
        logger = logging.getLogger(name)
        logger.handlers = [handler]
        logger.setLevel(level)
        logger.propagate = False


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
