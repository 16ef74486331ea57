#!/usr/bin/env python3

"""Per-occupant discomfort services."""

from .discomfort import (
    abs_discomfort,
    abs_discomfort_curve,
    comfort_signal,
    discomfort_curve,
    signal_curve,
    signed_discomfort,
)

__all__ = [
    "abs_discomfort",
    "abs_discomfort_curve",
    "comfort_signal",
    "discomfort_curve",
    "signal_curve",
    "signed_discomfort",
]
