"""
Logging Setup

Library modules call get_logger(area) and never touch handlers. The CLI calls
configure_logging() once; records go to stderr as "[area] message".
"""

import logging
import sys

from utils.config import LOGGER_NAME


class _AreaFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        area = record.name.split(".", 1)[-1] if "." in record.name else record.name
        message = record.getMessage()
        if record.levelno >= logging.WARNING:
            return f"[{area}] {record.levelname}: {message}"
        return f"[{area}] {message}"


def get_logger(area: str) -> logging.Logger:
    return logging.getLogger(f"{LOGGER_NAME}.{area}")


def configure_logging(verbose: bool = False, debug: bool = False, stream=None) -> logging.Logger:
    """Attach a single stderr handler to the toolkit root logger."""
    root = logging.getLogger(LOGGER_NAME)
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(_AreaFormatter())
    root.addHandler(handler)

    if debug:
        root.setLevel(logging.DEBUG)
    elif verbose:
        root.setLevel(logging.INFO)
    else:
        root.setLevel(logging.WARNING)
    root.propagate = False
    return root
