#!/usr/bin/env python3

"""Optimal comfort band model."""

import math
from dataclasses import dataclass

from ...exceptions import ComfortDomainError


@dataclass(frozen=True)
class ComfortBand:
    """Closed room-temperature interval in which the aggregate signal is balanced."""

    t_min: float
    t_max: float
    exact_zero: bool = True
    """Whether the aggregate signal actually reaches 0 on the band."""
    residual: int = 0
    """Smallest absolute aggregate signal over all temperatures."""

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t_min) and math.isfinite(self.t_max)):
            raise ComfortDomainError(
                f"Band endpoints must be finite, got [{self.t_min}, {self.t_max}]"
            )
        if self.t_min > self.t_max:
            raise ComfortDomainError(f"Band is inverted: [{self.t_min}, {self.t_max}]")
        if self.residual < 0:
            raise ComfortDomainError(f"Residual must be >= 0, got {self.residual}")
        if self.exact_zero and self.residual != 0:
            raise ComfortDomainError("An exact-zero band cannot have a nonzero residual")

    @property
    def width(self) -> float:
        """Band width in °C."""
        return self.t_max - self.t_min

    @property
    def midpoint(self) -> float:
        """Band centre in °C."""
        return (self.t_min + self.t_max) / 2

    def contains(self, temp: float) -> bool:
        """Whether ``temp`` lies in the closed band."""
        return self.t_min <= temp <= self.t_max
