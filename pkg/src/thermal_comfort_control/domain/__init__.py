#!/usr/bin/env python3

"""Domain layer containing the comfort models and numerical services."""

from . import exceptions, models, services

__all__ = [
    "exceptions",
    "models",
    "services",
]
