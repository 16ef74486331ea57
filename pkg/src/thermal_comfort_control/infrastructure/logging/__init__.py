#!/usr/bin/env python3

"""Logging infrastructure for the application."""

from .logger_setup import LoggerSetup
from .progress_tracker import ProgressTracker
from .utils import describe_result, get_logger, log_timing

__all__ = [
    "LoggerSetup",
    "ProgressTracker",
    "describe_result",
    "get_logger",
    "log_timing",
]
