"""Thermal comfort control - occupant-feedback comfort bands and HVAC simulation."""

from .application.experiments import ExperimentRunner
from .infrastructure.config import Config, ScenarioConfig, parse_config
from .main import main, run_command

__all__ = ["Config", "ExperimentRunner", "ScenarioConfig", "main", "parse_config", "run_command"]
