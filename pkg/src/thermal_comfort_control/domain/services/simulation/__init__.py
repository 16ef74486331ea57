#!/usr/bin/env python3

"""Thermal simulation services."""

from .outdoor_generator import PEAK_HOUR, TROUGH_HOUR, generate_outdoor
from .segment_analysis import settle_index, summarize_segments
from .thermal_model import (
    DIVERGENCE_LIMIT,
    SignalController,
    active_band,
    control_from_signal,
    control_input,
    run_simulation,
    signalling_occupants,
    simulate,
    step,
)

__all__ = [
    "DIVERGENCE_LIMIT",
    "PEAK_HOUR",
    "SignalController",
    "TROUGH_HOUR",
    "active_band",
    "control_from_signal",
    "control_input",
    "generate_outdoor",
    "run_simulation",
    "settle_index",
    "signalling_occupants",
    "simulate",
    "step",
    "summarize_segments",
]
