#!/usr/bin/env python3

"""Occupant model and the ternary comfort signal."""

import math
from dataclasses import dataclass, replace
from enum import IntEnum

from ...exceptions import ComfortDomainError


class ComfortSignal(IntEnum):
    """Feedback an occupant reports through their remote.

    The integer encoding is what the aggregate sums.
    """

    COLD = 1
    COMFORTABLE = 0
    HOT = -1

    def __str__(self) -> str:
        """Return the lowercase state name."""
        return self.name.lower()


@dataclass(frozen=True)
class Occupant:
    """A room occupant with a personal comfort preference."""

    id: int
    ideal_temp: float
    """Temperature (°C) at which the occupant feels no discomfort."""
    sensitivity: float
    """Gaussian length scale (°C) of the discomfort curve, strictly positive."""
    tolerance: float = 0.0
    """Half-width (°C) of the acceptable interval around ``ideal_temp``."""

    def __post_init__(self) -> None:
        if not math.isfinite(self.ideal_temp):
            raise ComfortDomainError(
                f"Occupant {self.id}: ideal_temp must be finite, got {self.ideal_temp}"
            )
        if not (math.isfinite(self.sensitivity) and self.sensitivity > 0):
            raise ComfortDomainError(
                f"Occupant {self.id}: sensitivity must be > 0, got {self.sensitivity}"
            )
        if not (math.isfinite(self.tolerance) and self.tolerance >= 0):
            raise ComfortDomainError(
                f"Occupant {self.id}: tolerance must be >= 0, got {self.tolerance}"
            )

    @property
    def lower_bound(self) -> float:
        """Lowest comfortable temperature, ``ideal_temp - tolerance``."""
        return self.ideal_temp - self.tolerance

    @property
    def upper_bound(self) -> float:
        """Highest comfortable temperature, ``ideal_temp + tolerance``."""
        return self.ideal_temp + self.tolerance

    def with_tolerance(self, tolerance: float) -> "Occupant":
        """Return a copy of this occupant with another tolerance."""
        return replace(self, tolerance=tolerance)
