#!/usr/bin/env python3

"""Occupant comfort domain models."""

from .comfort_band import ComfortBand
from .occupant import ComfortSignal, Occupant
from .step_function import Segment, StepFunction
from .sweep_result import SweepResult

__all__ = [
    "ComfortBand",
    "ComfortSignal",
    "Occupant",
    "Segment",
    "StepFunction",
    "SweepResult",
]
