#!/usr/bin/env python3

"""Setpoint policy and tolerance sweep services."""

from .setpoint_policy import (
    DEFAULT_POWER_COEFFICIENT,
    expected_abs_discomfort,
    power,
    setpoint,
    utility,
    worst_case_discomfort,
)
from .tolerance_sweep import inclusive_grid, sweep_row, tolerance_grid, tolerance_sweep

__all__ = [
    "DEFAULT_POWER_COEFFICIENT",
    "expected_abs_discomfort",
    "inclusive_grid",
    "power",
    "setpoint",
    "sweep_row",
    "tolerance_grid",
    "tolerance_sweep",
    "utility",
    "worst_case_discomfort",
]
