#!/usr/bin/env python3

"""Synthetic outdoor temperature profile settings."""

import math
from dataclasses import dataclass

from ...exceptions import ComfortDomainError

HOURS_PER_DAY = 24.0


@dataclass(frozen=True)
class OutdoorProfile:
    """Seeded multi-day outdoor temperature scenario.

    Each day draws its minimum and maximum uniformly from the given ranges.
    """

    seed: int = 0
    days: int = 7
    daily_min_range: tuple[float, float] = (9.0, 13.0)
    daily_max_range: tuple[float, float] = (20.0, 25.0)
    samples_per_day: int = 240

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ComfortDomainError(f"seed must be >= 0, got {self.seed}")
        if self.days < 1:
            raise ComfortDomainError(f"days must be >= 1, got {self.days}")
        if self.samples_per_day < 2:
            raise ComfortDomainError(f"samples_per_day must be >= 2, got {self.samples_per_day}")
        for name, (low, high) in (
            ("daily_min_range", self.daily_min_range),
            ("daily_max_range", self.daily_max_range),
        ):
            if not (math.isfinite(low) and math.isfinite(high)):
                raise ComfortDomainError(f"{name} must be finite, got [{low}, {high}]")
            if low > high:
                raise ComfortDomainError(f"{name} is inverted: [{low}, {high}]")
        if self.daily_min_range[1] >= self.daily_max_range[0]:
            raise ComfortDomainError(
                f"daily_min_range {list(self.daily_min_range)} must lie below "
                f"daily_max_range {list(self.daily_max_range)}"
            )

    @property
    def duration(self) -> float:
        """Length of the profile in time units (hours)."""
        return self.days * HOURS_PER_DAY

    @property
    def sample_interval(self) -> float:
        """Spacing of the generated samples in time units."""
        return HOURS_PER_DAY / self.samples_per_day
