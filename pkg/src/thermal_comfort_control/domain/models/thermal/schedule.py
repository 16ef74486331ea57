#!/usr/bin/env python3

"""Time segments that switch the tolerance (or band) occupants signal against."""

import math
from collections.abc import Sequence
from dataclasses import dataclass

from ...exceptions import ComfortDomainError
from ..comfort import ComfortBand


@dataclass(frozen=True)
class ScheduleSegment:
    """Half-open time window ``[start, end)`` with its own band source.

    Exactly one of ``tolerance`` (common Δ applied to every occupant) or
    ``band`` (every occupant signals against this shared band) is set.
    """

    start: float
    end: float
    tolerance: float | None = None
    band: ComfortBand | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.start) and math.isfinite(self.end)):
            raise ComfortDomainError(f"Segment bounds must be finite: [{self.start}, {self.end})")
        if self.end <= self.start:
            raise ComfortDomainError(f"Segment is empty: [{self.start}, {self.end})")
        if (self.tolerance is None) == (self.band is None):
            raise ComfortDomainError("A segment needs exactly one of tolerance or band")
        if self.tolerance is not None and not (
            math.isfinite(self.tolerance) and self.tolerance >= 0
        ):
            raise ComfortDomainError(f"Segment tolerance must be >= 0, got {self.tolerance}")

    def covers(self, time: float) -> bool:
        """Whether ``time`` falls in this segment."""
        return self.start <= time < self.end

    def label(self) -> str:
        """Short description used in logs and summaries."""
        if self.tolerance is not None:
            return f"delta={self.tolerance:g}"
        assert self.band is not None
        return f"band=[{self.band.t_min:g}, {self.band.t_max:g}]"


def validate_schedule(segments: Sequence[ScheduleSegment]) -> None:
    """Check that segments are ordered by time and do not overlap.

    Raises:
        ComfortDomainError: If a segment starts before its predecessor ends
    """
    for previous, current in zip(segments, segments[1:], strict=False):
        if current.start < previous.end:
            raise ComfortDomainError(
                f"Segment [{current.start:g}, {current.end:g}) overlaps or precedes "
                f"[{previous.start:g}, {previous.end:g})"
            )


def segment_at(segments: Sequence[ScheduleSegment], time: float) -> ScheduleSegment | None:
    """The segment in force at ``time``, if any."""
    for segment in segments:
        if segment.covers(time):
            return segment
    return None
