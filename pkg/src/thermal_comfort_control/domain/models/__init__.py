#!/usr/bin/env python3

"""Domain models for thermal comfort control."""

from . import comfort, thermal

__all__ = [
    "comfort",
    "thermal",
]
