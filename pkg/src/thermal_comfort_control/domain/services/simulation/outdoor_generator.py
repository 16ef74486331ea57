#!/usr/bin/env python3

"""Seeded synthetic outdoor temperature generator.

Each day has a trough at 05:00 and a peak at 15:00. Consecutive extremes are
joined by half-cosine ramps, so the series is continuous across midnight and
never leaves the range spanned by the drawn extremes.
"""

import numpy as np

from ....infrastructure.logging import get_logger
from ...models.thermal import HOURS_PER_DAY, OutdoorProfile
from ...models.thermal.simulation_trace import FloatArray

logger = get_logger(__name__)

TROUGH_HOUR = 5.0
PEAK_HOUR = 15.0


def _knots(profile: OutdoorProfile) -> tuple[FloatArray, FloatArray]:
    rng = np.random.default_rng(profile.seed)
    daily_min = rng.uniform(*profile.daily_min_range, size=profile.days)
    daily_max = rng.uniform(*profile.daily_max_range, size=profile.days)

    day_starts = np.arange(profile.days, dtype=float) * HOURS_PER_DAY
    times = np.empty(2 * profile.days)
    values = np.empty(2 * profile.days)
    times[0::2] = day_starts + TROUGH_HOUR
    times[1::2] = day_starts + PEAK_HOUR
    values[0::2] = daily_min
    values[1::2] = daily_max

    # Virtual peak the evening before day one and trough the morning after the last day
    knot_times = np.concatenate(
        ([PEAK_HOUR - HOURS_PER_DAY], times, [profile.duration + TROUGH_HOUR])
    )
    knot_values = np.concatenate(([daily_max[0]], values, [daily_min[-1]]))
    return knot_times, knot_values


def generate_outdoor(profile: OutdoorProfile) -> tuple[FloatArray, FloatArray]:
    """Sample the outdoor temperature over the whole profile.

    Args:
        profile: Seed, day count, extreme ranges and sampling density

    Returns:
        ``(times, temperatures)`` with ``days * samples_per_day + 1`` samples
        covering ``[0, 24 * days]`` hours
    """
    knot_times, knot_values = _knots(profile)
    n_samples = profile.days * profile.samples_per_day + 1
    times = np.arange(n_samples, dtype=float) * HOURS_PER_DAY / profile.samples_per_day

    idx = np.searchsorted(knot_times, times, side="right") - 1
    t0, t1 = knot_times[idx], knot_times[idx + 1]
    v0, v1 = knot_values[idx], knot_values[idx + 1]
    weight = (1.0 - np.cos(np.pi * (times - t0) / (t1 - t0))) / 2.0
    temperatures = v0 + (v1 - v0) * weight

    logger.debug(
        f"Generated {n_samples} outdoor samples (seed={profile.seed}, days={profile.days}), "
        f"range [{temperatures.min():.2f}, {temperatures.max():.2f}] °C"
    )
    return times, temperatures
