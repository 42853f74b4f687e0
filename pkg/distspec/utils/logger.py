# distspec/utils/logger.py
# This module provides logging utilities for distspec.

import logging
import sys

import structlog

from distspec.core.config import settings

_configured = False


def configure_logging(level: str = None, json_output: bool = None) -> None:
    """
    Configure structlog and the stdlib root logger.

    Args:
        level (str): Log level name; defaults to settings.log_level.
        json_output (bool): Render JSON lines instead of the console format.
    """
    global _configured
    level = (level or settings.log_level).upper()
    json_output = settings.log_json if json_output is None else json_output

    logging.basicConfig(stream=sys.stderr, format="%(message)s", level=level, force=True)
    renderer = structlog.processors.JSONRenderer() if json_output else structlog.dev.ConsoleRenderer(colors=False)
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(logging.getLevelName(level)),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
    _configured = True


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """
    Get a logger instance.

    Args:
        name (str): The name of the logger.

    Returns:
        A structlog logger bound with the component name.
    """
    if not _configured:
        configure_logging()
    return structlog.get_logger().bind(component=name)
