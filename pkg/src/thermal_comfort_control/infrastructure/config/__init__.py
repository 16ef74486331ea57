#!/usr/bin/env python3

"""Configuration management."""

from .application_config import Config
from .scenario_config import (
    OUTPUT_FORMATS,
    OutputSettings,
    ScenarioConfig,
    SetpointSettings,
    SimulationSettings,
    SweepSettings,
    config_to_dict,
    dump_config,
    load_config,
    parse_config,
)

__all__ = [
    "OUTPUT_FORMATS",
    "Config",
    "OutputSettings",
    "ScenarioConfig",
    "SetpointSettings",
    "SimulationSettings",
    "SweepSettings",
    "config_to_dict",
    "dump_config",
    "load_config",
    "parse_config",
]
