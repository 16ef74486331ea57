#!/usr/bin/env python3

"""Sweep of a common comfort tolerance across all occupants."""

import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ....infrastructure.logging import get_logger, log_timing
from ...exceptions import ComfortDomainError
from ...models.comfort import Occupant, SweepResult
from ..aggregation import solve_band
from .setpoint_policy import utility

logger = get_logger(__name__)

# Grid values are snapped to this many decimals so that decimal literals such
# as 1.5 or 3.0 are hit exactly despite accumulated binary rounding.
GRID_DECIMALS = 12


def inclusive_grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive grid ``start + n * step`` ending exactly at ``stop``.

    Raises:
        ComfortDomainError: If the bounds are not finite or inverted, or ``step <= 0``
    """
    if not (math.isfinite(step) and step > 0):
        raise ComfortDomainError(f"Grid step must be > 0, got {step}")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise ComfortDomainError("Grid bounds must be finite")
    if start > stop:
        raise ComfortDomainError(f"Grid bounds are inverted: [{start}, {stop}]")

    count = int(np.floor((stop - start) / step + 1e-9))
    grid = [round(start + n * step, GRID_DECIMALS) for n in range(count + 1)]
    if math.isclose(grid[-1], stop, rel_tol=0.0, abs_tol=1e-9):
        grid[-1] = stop
    elif grid[-1] < stop:
        grid.append(stop)
    return grid


def tolerance_grid(delta_min: float, delta_max: float, step: float) -> list[float]:
    """Tolerance values swept by :func:`tolerance_sweep`.

    Raises:
        ComfortDomainError: If the bounds are negative or inverted, or ``step <= 0``
    """
    if not (math.isfinite(step) and step > 0):
        raise ComfortDomainError(f"Sweep step must be > 0, got {step}")
    if not (math.isfinite(delta_min) and math.isfinite(delta_max)):
        raise ComfortDomainError("Sweep bounds must be finite")
    if not 0 <= delta_min <= delta_max:
        raise ComfortDomainError(
            f"Sweep bounds must satisfy 0 <= delta_min <= delta_max, "
            f"got [{delta_min}, {delta_max}]"
        )
    return inclusive_grid(delta_min, delta_max, step)


def sweep_row(
    occupants: Sequence[Occupant],
    delta: float,
    offsets: Sequence[float] | None = None,
) -> SweepResult:
    """Band, per-user utilities and worst case for one tolerance value."""
    if offsets is None:
        adjusted = [occupant.with_tolerance(delta) for occupant in occupants]
    else:
        adjusted = [
            occupant.with_tolerance(max(0.0, delta + offset))
            for occupant, offset in zip(occupants, offsets, strict=True)
        ]
    band = solve_band(adjusted)
    utilities = tuple(utility(occupant, band) for occupant in adjusted)
    return SweepResult(
        tolerance=delta,
        band=band,
        per_user_utility=utilities,
        worst_case=max(utilities),
    )


@log_timing
def tolerance_sweep(
    occupants: Sequence[Occupant],
    delta_min: float,
    delta_max: float,
    step: float,
    offsets: Sequence[float] | None = None,
    workers: int = 1,
) -> list[SweepResult]:
    """Solve the band and discomfort figures for every tolerance on the grid.

    Args:
        occupants: Occupants whose tolerances are overridden per row
        delta_min: First tolerance of the grid
        delta_max: Last tolerance of the grid (always included)
        step: Grid spacing
        offsets: Optional per-occupant offsets, giving Δ_i = max(0, Δ + offset_i)
        workers: Rows evaluated concurrently; output keeps grid order

    Returns:
        One :class:`SweepResult` per grid value, in grid order

    Raises:
        ComfortDomainError: For an empty occupant list, invalid grid or
            offsets of the wrong length
    """
    if not occupants:
        raise ComfortDomainError("At least one occupant is required")
    if offsets is not None and len(offsets) != len(occupants):
        raise ComfortDomainError(
            f"Expected {len(occupants)} tolerance offsets, got {len(offsets)}"
        )
    grid = tolerance_grid(delta_min, delta_max, step)
    logger.info(
        f"Sweeping {len(grid)} tolerances in [{delta_min:g}, {delta_max:g}] "
        f"for {len(occupants)} occupants"
    )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda delta: sweep_row(occupants, delta, offsets), grid))
    else:
        rows = [sweep_row(occupants, delta, offsets) for delta in grid]

    inexact = sum(1 for row in rows if not row.band.exact_zero)
    if inexact:
        logger.warning(f"{inexact} sweep rows have no exact h = 0 band")
    return rows
