#!/usr/bin/env python3

"""Aggregation of occupant signals and the optimal comfort band.

The sum h of all signals is a non-increasing step function of room
temperature whose breakpoints are the occupants' band edges. The band is the
closure of the set where h is zero; when h jumps over zero the closed hull of
the region with the smallest |h| is returned instead.
"""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from ....infrastructure.logging import get_logger
from ...exceptions import ComfortDomainError
from ...models.comfort import ComfortBand, Occupant, StepFunction
from ..comfort import comfort_signal

logger = get_logger(__name__)


def _require_occupants(occupants: Sequence[Occupant]) -> None:
    if not occupants:
        raise ComfortDomainError("At least one occupant is required")


def total_signal(occupants: Sequence[Occupant], room_temp: float) -> int:
    """Sum h of all occupants' comfort signals, in [-N, N].

    Raises:
        ComfortDomainError: If ``occupants`` is empty or ``room_temp`` is not finite
    """
    _require_occupants(occupants)
    return sum(int(comfort_signal(occupant, room_temp)) for occupant in occupants)


def total_abs_signal(occupants: Sequence[Occupant], room_temp: float) -> int:
    """Number g of occupants who are not comfortable, in [0, N].

    Raises:
        ComfortDomainError: If ``occupants`` is empty or ``room_temp`` is not finite
    """
    _require_occupants(occupants)
    return sum(abs(int(comfort_signal(occupant, room_temp))) for occupant in occupants)


def _bounds(
    occupants: Sequence[Occupant],
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    lows = np.fromiter((o.lower_bound for o in occupants), dtype=float, count=len(occupants))
    highs = np.fromiter((o.upper_bound for o in occupants), dtype=float, count=len(occupants))
    return lows, highs


def build_step_function(occupants: Sequence[Occupant], absolute: bool = False) -> StepFunction:
    """Exact step-function form of h (or of g with ``absolute=True``).

    Plateau values are counted from band edges rather than sampled, so two
    breakpoints one ulp apart are still resolved correctly.

    Raises:
        ComfortDomainError: If ``occupants`` is empty
    """
    _require_occupants(occupants)
    lows, highs = _bounds(occupants)
    breakpoints = tuple(sorted({float(b) for b in (*lows, *highs)}))
    edges = (-np.inf, *breakpoints, np.inf)

    def combine(cold: int, hot: int) -> int:
        return cold + hot if absolute else cold - hot

    # On the open interval (left, right) an occupant is cold iff its lower edge
    # is at or beyond ``right`` and hot iff its upper edge is at or before ``left``.
    plateau_values = tuple(
        combine(int(np.count_nonzero(lows >= right)), int(np.count_nonzero(highs <= left)))
        for left, right in zip(edges, edges[1:], strict=False)
    )
    point_values = tuple(
        combine(int(np.count_nonzero(lows > b)), int(np.count_nonzero(highs < b)))
        for b in breakpoints
    )
    logger.debug(
        f"Built {'g' if absolute else 'h'} step function for {len(occupants)} occupants "
        f"with {len(breakpoints)} breakpoints"
    )
    return StepFunction(breakpoints, plateau_values, point_values)


def solve_band(occupants: Sequence[Occupant]) -> ComfortBand:
    """Optimal comfort band: the closed set of temperatures where h = 0.

    When all occupants' comfort intervals intersect, the band is exactly
    ``[max(T* - Δ), min(T* + Δ)]``. When h never reaches zero the closed hull
    of the region minimizing |h| is returned with ``exact_zero=False``.

    Raises:
        ComfortDomainError: If ``occupants`` is empty
    """
    h = build_step_function(occupants)
    segments = h.segments()
    residual = min(abs(segment.value) for segment in segments)
    selected = [segment for segment in segments if abs(segment.value) == residual]

    # Tails carry ±N and every breakpoint has at least one comfortable occupant,
    # so the minimum is always attained on a bounded piece.
    band = ComfortBand(
        t_min=selected[0].start,
        t_max=selected[-1].end,
        exact_zero=residual == 0,
        residual=residual,
    )
    if band.exact_zero:
        logger.debug(f"Comfort band [{band.t_min:g}, {band.t_max:g}]")
    else:
        logger.warning(
            f"Aggregate signal never balances; using min |h| = {residual} region "
            f"[{band.t_min:g}, {band.t_max:g}]"
        )
    return band


def dissatisfied_in_band(occupants: Sequence[Occupant], band: ComfortBand) -> int:
    """Largest number of uncomfortable occupants anywhere on the band.

    Zero means every occupant is satisfied across the whole band; a positive
    count means the band is only balanced (as many cold as hot).
    """
    g = build_step_function(occupants, absolute=True)
    inside = [
        segment.value
        for segment in g.segments()
        if segment.start <= band.t_max
        and segment.end >= band.t_min
        and (segment.is_point or (segment.start < band.t_max and segment.end > band.t_min))
    ]
    return max(inside)
