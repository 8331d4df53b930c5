"""Logging setup shared by the command-line tools."""

import logging
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

from .config_manager import ConfigManager

FORMAT = "%(asctime)-15s %(message)s"
DATE_FORMAT = '%m/%d/%Y %I:%M:%S %p'


def configure_logging(config_manager: Optional[ConfigManager] = None, level: Optional[str] = None) -> logging.Logger:
    """
    Attach a stderr handler and, if configured, a rotating log file to the package logger.

    Args:
        config_manager: source of LOG_FILE and LOG_LEVEL
        level: explicit level name overriding the configured one

    Returns:
        The configured ``awtp_pd`` logger
    """
    logger = logging.getLogger('awtp_pd')
    level_name = level or (config_manager.get_log_level() if config_manager else 'INFO')
    logger.setLevel(getattr(logging, level_name, logging.INFO))

    # Re-configuring replaces handlers instead of stacking them
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    fmt = logging.Formatter(FORMAT, datefmt=DATE_FORMAT)

    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(fmt)
    logger.addHandler(console)

    log_file = config_manager.get_log_file() if config_manager else ''
    if log_file:
        handler = RotatingFileHandler(log_file, maxBytes=5 * 1024 * 1024, backupCount=3)
        handler.setFormatter(fmt)
        logger.addHandler(handler)

    logger.propagate = False
    return logger
