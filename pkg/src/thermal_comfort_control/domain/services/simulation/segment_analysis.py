#!/usr/bin/env python3

"""Per-segment discomfort statistics of a simulation trace."""

from collections.abc import Sequence

import numpy as np

from ....infrastructure.logging import get_logger
from ...models.thermal import ScheduleSegment, SegmentSummary, SimulationTrace

logger = get_logger(__name__)


def settle_index(h_series: Sequence[int] | np.ndarray) -> int | None:
    """First index at which h is zero or has changed sign since index 0."""
    h = np.asarray(h_series)
    if h.size == 0:
        return None
    initial = np.sign(h[0])
    if initial == 0:
        return 0
    hits = np.flatnonzero((h == 0) | (np.sign(h) != initial))
    return int(hits[0]) if hits.size else None


def summarize_segments(
    trace: SimulationTrace, schedule: Sequence[ScheduleSegment]
) -> list[SegmentSummary]:
    """Discomfort statistics for each schedule segment.

    Samples before the segment settles (the controller first balances or
    crosses the new band) are excluded; a segment that never settles is
    summarized over all of its samples.
    """
    summaries: list[SegmentSummary] = []
    for segment in schedule:
        idx = np.flatnonzero((trace.times >= segment.start) & (trace.times < segment.end))
        if idx.size == 0:
            logger.warning(f"Segment {segment.label()} has no samples in the trace")
            continue

        first = settle_index(trace.h_series[idx])
        window = idx if first is None else idx[first:]
        discomfort = trace.per_user_abs_discomfort[:, window]
        disparity = discomfort.max(axis=0) - discomfort.min(axis=0)
        summary = SegmentSummary(
            label=segment.label(),
            start=segment.start,
            end=segment.end,
            settle_time=None if first is None else float(trace.times[idx[first]]),
            peak_discomfort=tuple(float(v) for v in discomfort.max(axis=1)),
            peak_disparity=float(disparity.max()),
            mean_dissatisfied=float(trace.g_series[window].mean()),
        )
        logger.debug(
            f"Segment {summary.label} [{segment.start:g}, {segment.end:g}): "
            f"peak={max(summary.peak_discomfort):.4f}, disparity={summary.peak_disparity:.4f}"
        )
        summaries.append(summary)
    return summaries
