"""Logging utility for Ideal Cover"""

import logging
import sys
from src.config import Config


def setup_logger(name: str) -> logging.Logger:
    """
    Set up a logger with a stderr handler and an optional file handler

    Args:
        name: Name of the logger

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(Config.LOG_LEVEL.upper())

    # Avoid duplicate handlers
    if logger.handlers:
        return logger

    formatter = logging.Formatter(Config.LOG_FORMAT)

    # Console handler on stderr: stdout carries reports
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(Config.LOG_LEVEL.upper())
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if Config.LOG_TO_FILE:
        Config.ensure_directories()
        log_file = Config.LOGS_DIR / f"{name}.log"
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(Config.LOG_LEVEL.upper())
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def set_log_level(level: str) -> None:
    """
    Change the level of every logger created through setup_logger

    Args:
        level: Logging level name such as "INFO"
    """
    Config.LOG_LEVEL = level.upper()
    for logger in logging.Logger.manager.loggerDict.values():
        if isinstance(logger, logging.Logger) and logger.handlers:
            logger.setLevel(Config.LOG_LEVEL)
            for handler in logger.handlers:
                handler.setLevel(Config.LOG_LEVEL)
