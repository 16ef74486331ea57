#!/usr/bin/env python3

"""Tolerance sweep row model."""

from dataclasses import dataclass

from ...exceptions import ComfortDomainError
from .comfort_band import ComfortBand


@dataclass(frozen=True)
class SweepResult:
    """Band and discomfort figures for one common tolerance value."""

    tolerance: float
    band: ComfortBand
    per_user_utility: tuple[float, ...]
    worst_case: float

    def __post_init__(self) -> None:
        if not self.per_user_utility:
            raise ComfortDomainError("A sweep row needs at least one utility value")
        if any(not 0.0 <= u <= 1.0 for u in self.per_user_utility):
            raise ComfortDomainError(f"Utilities out of range: {self.per_user_utility}")
        if self.worst_case != max(self.per_user_utility):
            raise ComfortDomainError("worst_case must equal the largest per-user utility")
