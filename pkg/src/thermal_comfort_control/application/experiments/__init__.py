#!/usr/bin/env python3

"""Experiment orchestration."""

from .experiment_runner import Experiment, ExperimentRunner

__all__ = [
    "Experiment",
    "ExperimentRunner",
]
