#!/usr/bin/env python3

"""Per-occupant discomfort model and ternary comfort signal.

The signed discomfort is a Gaussian bump mirrored about the ideal
temperature: positive (cold) below it, negative (hot) above it, zero at it.
"""

import math

import numpy as np
import numpy.typing as npt

from ...exceptions import ComfortDomainError
from ...models.comfort import ComfortSignal, Occupant


def _require_finite(room_temp: float) -> None:
    if not math.isfinite(room_temp):
        raise ComfortDomainError(f"Room temperature must be finite, got {room_temp}")


def signed_discomfort(occupant: Occupant, room_temp: float) -> float:
    """Signed discomfort of an occupant at a room temperature.

    Args:
        occupant: Occupant whose preference is evaluated
        room_temp: Room temperature in °C

    Returns:
        Value in (-1, 1): positive when too cold, negative when too hot,
        0 exactly at the ideal temperature

    Raises:
        ComfortDomainError: If ``room_temp`` is not finite
    """
    _require_finite(room_temp)
    offset = room_temp - occupant.ideal_temp
    if offset == 0:
        return 0.0
    # expm1 keeps precision near the ideal point; the sign picks the branch
    decay = math.expm1(-(offset * offset) / (occupant.sensitivity * occupant.sensitivity))
    return -decay if offset < 0 else decay


def abs_discomfort(occupant: Occupant, room_temp: float) -> float:
    """Absolute discomfort in [0, 1), zero exactly at the ideal temperature."""
    return abs(signed_discomfort(occupant, room_temp))


def comfort_signal(occupant: Occupant, room_temp: float) -> ComfortSignal:
    """Ternary feedback of an occupant; band edges count as comfortable.

    Raises:
        ComfortDomainError: If ``room_temp`` is not finite
    """
    _require_finite(room_temp)
    if room_temp < occupant.lower_bound:
        return ComfortSignal.COLD
    if room_temp > occupant.upper_bound:
        return ComfortSignal.HOT
    return ComfortSignal.COMFORTABLE


def discomfort_curve(occupant: Occupant, temps: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Vectorized :func:`signed_discomfort` over an array of room temperatures."""
    grid = np.asarray(temps, dtype=float)
    if not np.all(np.isfinite(grid)):
        raise ComfortDomainError("Room temperatures must be finite")
    offset = grid - occupant.ideal_temp
    decay = np.expm1(-(offset * offset) / (occupant.sensitivity * occupant.sensitivity))
    return np.where(offset < 0, -decay, np.where(offset > 0, decay, 0.0))


def abs_discomfort_curve(occupant: Occupant, temps: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Vectorized :func:`abs_discomfort`."""
    return np.abs(discomfort_curve(occupant, temps))


def signal_curve(occupant: Occupant, temps: npt.ArrayLike) -> npt.NDArray[np.int64]:
    """Vectorized :func:`comfort_signal` as integers in {+1, 0, -1}."""
    grid = np.asarray(temps, dtype=float)
    if not np.all(np.isfinite(grid)):
        raise ComfortDomainError("Room temperatures must be finite")
    cold = (grid < occupant.lower_bound).astype(np.int64)
    hot = (grid > occupant.upper_bound).astype(np.int64)
    return cold - hot
