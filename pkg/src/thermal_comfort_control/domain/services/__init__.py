#!/usr/bin/env python3

"""Domain services for comfort, aggregation, policy and simulation."""

from . import aggregation, comfort, policy, simulation

__all__ = [
    "aggregation",
    "comfort",
    "policy",
    "simulation",
]
