from __future__ import annotations

import logging
import sys

from .logger_config import LoggerConfig

_config = LoggerConfig()

# Application-wide logger
logger = logging.getLogger(_config.logger_name)

logger.setLevel(_config.log_level)

file_fmt = logging.Formatter(
    "%(asctime)s | %(levelname)-8s | %(name)s | %(module)s:%(lineno)d | %(message)s"
)

if _config.enable_file_logging and not any(
    isinstance(h, logging.FileHandler) for h in logger.handlers
):
    file_handler = logging.FileHandler(_config.log_file, encoding="utf-8")
    file_handler.setFormatter(file_fmt)
    file_handler.setLevel(_config.log_level)
    logger.addHandler(file_handler)

# Console output goes to stderr: stdout is reserved for JSON reports.
# Guard against adding multiple stderr handlers when the module is imported multiple times.
if _config.enable_console_logging and not any(
    isinstance(h, logging.StreamHandler) and getattr(h, "stream", None) is sys.stderr
    for h in logger.handlers
):
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(file_fmt)
    stream_handler.setLevel(_config.log_level)
    logger.addHandler(stream_handler)

# Prevent messages from being propagated to the root logger to avoid duplicates
logger.propagate = False

__all__ = ["logger"]
