#!/usr/bin/env python3

"""Signal aggregation and comfort band services."""

from .aggregate import (
    build_step_function,
    dissatisfied_in_band,
    solve_band,
    total_abs_signal,
    total_signal,
)

__all__ = [
    "build_step_function",
    "dissatisfied_in_band",
    "solve_band",
    "total_abs_signal",
    "total_signal",
]
