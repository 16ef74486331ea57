#!/usr/bin/env python3

"""Energy-minimizing setpoint and the discomfort it leaves each occupant."""

import math
from collections.abc import Sequence

from ...exceptions import ComfortDomainError
from ...models.comfort import ComfortBand, Occupant
from ..comfort import abs_discomfort

DEFAULT_POWER_COEFFICIENT = 1.0


def power(outdoor_temp: float, room_temp: float, mu: float = DEFAULT_POWER_COEFFICIENT) -> float:
    """HVAC power needed to hold ``room_temp`` against ``outdoor_temp``.

    Args:
        outdoor_temp: Outdoor temperature in °C
        room_temp: Room temperature in °C
        mu: Non-negative power per °C of indoor/outdoor gap

    Returns:
        ``mu * |outdoor_temp - room_temp|``

    Raises:
        ComfortDomainError: If ``mu`` is negative or not finite
    """
    if not (math.isfinite(mu) and mu >= 0):
        raise ComfortDomainError(f"Power coefficient mu must be >= 0, got {mu}")
    return mu * abs(outdoor_temp - room_temp)


def setpoint(outdoor_temp: float, band: ComfortBand) -> float:
    """Projection of the outdoor temperature onto the band.

    This is the unique band temperature minimizing :func:`power`; inside the
    band the outdoor temperature is returned unchanged.
    """
    if outdoor_temp < band.t_min:
        return band.t_min
    if outdoor_temp > band.t_max:
        return band.t_max
    return outdoor_temp


def expected_abs_discomfort(occupant: Occupant, outdoor_temp: float, band: ComfortBand) -> float:
    """Absolute discomfort the occupant feels at the optimal setpoint."""
    return abs_discomfort(occupant, setpoint(outdoor_temp, band))


def utility(occupant: Occupant, band: ComfortBand) -> float:
    """Worst discomfort over all outdoor temperatures for one occupant.

    Discomfort is V-shaped in room temperature, so its maximum over the band
    sits at one of the two endpoints.
    """
    return max(abs_discomfort(occupant, band.t_min), abs_discomfort(occupant, band.t_max))


def worst_case_discomfort(occupants: Sequence[Occupant], band: ComfortBand) -> float:
    """Largest :func:`utility` among all occupants.

    Raises:
        ComfortDomainError: If ``occupants`` is empty
    """
    if not occupants:
        raise ComfortDomainError("At least one occupant is required")
    return max(utility(occupant, band) for occupant in occupants)
