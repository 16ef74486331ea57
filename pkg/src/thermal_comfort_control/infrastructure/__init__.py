#!/usr/bin/env python3

"""Infrastructure layer for technical concerns."""

from . import config, export, logging

__all__ = [
    "config",
    "export",
    "logging",
]
