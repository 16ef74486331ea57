#!/usr/bin/env python3

"""Thermal simulation domain models."""

from .outdoor_profile import HOURS_PER_DAY, OutdoorProfile
from .schedule import ScheduleSegment, segment_at, validate_schedule
from .simulation_trace import SegmentSummary, SimulationTrace
from .thermal_params import ControlSign, ThermalParams

__all__ = [
    "ControlSign",
    "HOURS_PER_DAY",
    "OutdoorProfile",
    "ScheduleSegment",
    "SegmentSummary",
    "SimulationTrace",
    "ThermalParams",
    "segment_at",
    "validate_schedule",
]
