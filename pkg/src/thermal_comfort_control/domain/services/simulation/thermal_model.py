#!/usr/bin/env python3

"""Closed-loop room temperature simulation.

The room relaxes toward the outdoor temperature and an HVAC term driven by
the occupants' aggregate signal pushes it back toward their comfort band:

    dT/dt = -c (T - T_ext) + w,    w = ±k h(T)

integrated with a fixed explicit step so that traces are bit-reproducible.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ....infrastructure.logging import get_logger, log_timing
from ...exceptions import ComfortDomainError, SimulationDivergenceError
from ...models.comfort import ComfortBand, Occupant
from ...models.thermal import (
    ControlSign,
    OutdoorProfile,
    ScheduleSegment,
    SimulationTrace,
    ThermalParams,
    segment_at,
    validate_schedule,
)
from ..aggregation import solve_band, total_abs_signal, total_signal
from ..comfort import abs_discomfort_curve
from .outdoor_generator import generate_outdoor

logger = get_logger(__name__)

DIVERGENCE_LIMIT = 200.0


def control_from_signal(h: int, params: ThermalParams) -> float:
    """HVAC rate for a given aggregate signal value."""
    gain = params.control_gain * h
    return gain if params.control_sign is ControlSign.STABILIZING else -gain


def control_input(occupants: Sequence[Occupant], room_temp: float, params: ThermalParams) -> float:
    """HVAC rate (°C per time unit) commanded by the occupants' signals.

    Zero whenever the signals balance; with the stabilizing sign a positive
    aggregate (occupants cold) heats the room.
    """
    return control_from_signal(total_signal(occupants, room_temp), params)


def step(room_temp: float, outdoor_temp: float, w: float, params: ThermalParams) -> float:
    """One explicit fixed-step update of the heat balance."""
    return room_temp + params.dt * (-params.heat_exchange * (room_temp - outdoor_temp) + w)


class SignalController:
    """Signal-feedback controller with an optional release hysteresis.

    While heating, occupants are polled as if the room were ``hysteresis``
    colder; while cooling, as if it were warmer. With zero width this is
    exactly :func:`control_input`.
    """

    def __init__(self, params: ThermalParams):
        """
        Initialize controller.

        Args:
            params: Gain, sign convention and hysteresis width
        """
        self.params = params
        self._direction = 0

    def update(self, occupants: Sequence[Occupant], room_temp: float) -> float:
        """Compute the next actuation and remember its direction."""
        width = self.params.hysteresis
        if width > 0 and self._direction > 0:
            h = total_signal(occupants, room_temp - width)
        elif width > 0 and self._direction < 0:
            h = total_signal(occupants, room_temp + width)
        else:
            h = total_signal(occupants, room_temp)
        self._direction = (h > 0) - (h < 0)
        return control_from_signal(h, self.params)


@dataclass(frozen=True)
class _SignalContext:
    occupants: tuple[Occupant, ...]
    band: ComfortBand


def signalling_occupants(
    occupants: Sequence[Occupant], segment: ScheduleSegment | None
) -> tuple[Occupant, ...]:
    """Occupants as they report under a schedule segment.

    A tolerance segment overrides every tolerance; a band segment makes every
    occupant report against the shared band. Outside any segment the
    configured tolerances apply.
    """
    if segment is None:
        return tuple(occupants)
    if segment.tolerance is not None:
        return tuple(occupant.with_tolerance(segment.tolerance) for occupant in occupants)
    assert segment.band is not None
    band = segment.band
    return tuple(
        Occupant(
            id=occupant.id,
            ideal_temp=band.midpoint,
            sensitivity=occupant.sensitivity,
            tolerance=band.width / 2,
        )
        for occupant in occupants
    )


def active_band(
    occupants: Sequence[Occupant], schedule: Sequence[ScheduleSegment], time: float
) -> ComfortBand:
    """The comfort band the controller balances at ``time``."""
    return solve_band(signalling_occupants(occupants, segment_at(schedule, time)))


def _contexts(
    occupants: Sequence[Occupant], schedule: Sequence[ScheduleSegment]
) -> tuple[_SignalContext, list[_SignalContext]]:
    def build(segment: ScheduleSegment | None) -> _SignalContext:
        active = signalling_occupants(occupants, segment)
        return _SignalContext(active, solve_band(active))

    return build(None), [build(segment) for segment in schedule]


@log_timing
def simulate(
    occupants: Sequence[Occupant],
    times: npt.ArrayLike,
    outdoor: npt.ArrayLike,
    params: ThermalParams,
    initial_room_temp: float | None = None,
    schedule: Sequence[ScheduleSegment] = (),
) -> SimulationTrace:
    """Integrate the closed loop over a sampled outdoor temperature series.

    The outdoor series is linearly interpolated at every integration time
    ``times[0] + n * dt``.

    Args:
        occupants: Occupants providing signals and discomfort
        times: Increasing sample times of the outdoor series
        outdoor: Outdoor temperatures at ``times``
        params: Heat balance and controller parameters
        initial_room_temp: Starting room temperature; defaults to the first
            outdoor sample
        schedule: Ordered, non-overlapping tolerance/band segments

    Returns:
        Trace with one sample per integration step

    Raises:
        ComfortDomainError: For empty occupants, malformed series or schedule
        SimulationDivergenceError: If the room temperature leaves ±200 °C
    """
    if not occupants:
        raise ComfortDomainError("At least one occupant is required")
    sample_times = np.asarray(times, dtype=float)
    sample_outdoor = np.asarray(outdoor, dtype=float)
    if sample_times.ndim != 1 or sample_times.shape != sample_outdoor.shape:
        raise ComfortDomainError("times and outdoor must be 1-D series of equal length")
    if sample_times.size < 2 or not np.all(np.diff(sample_times) > 0):
        raise ComfortDomainError("times must hold at least two increasing values")
    if not np.all(np.isfinite(sample_outdoor)):
        raise ComfortDomainError("Outdoor temperatures must be finite")
    validate_schedule(schedule)

    room = float(sample_outdoor[0]) if initial_room_temp is None else float(initial_room_temp)
    if not math.isfinite(room):
        raise ComfortDomainError(f"Initial room temperature must be finite, got {room}")

    n_steps = int(round((sample_times[-1] - sample_times[0]) / params.dt))
    grid = sample_times[0] + np.arange(n_steps + 1, dtype=float) * params.dt
    ext = np.interp(grid, sample_times, sample_outdoor)
    default_context, segment_contexts = _contexts(occupants, schedule)
    controller = SignalController(params)

    room_series = np.empty(n_steps + 1)
    control = np.empty(n_steps + 1)
    h_series = np.empty(n_steps + 1, dtype=np.int64)
    g_series = np.empty(n_steps + 1, dtype=np.int64)
    band_min = np.empty(n_steps + 1)
    band_max = np.empty(n_steps + 1)

    logger.info(
        f"Simulating {len(occupants)} occupants for {n_steps} steps of dt={params.dt:g} "
        f"(c={params.heat_exchange:g}, k={params.control_gain:g}, sign={params.control_sign})"
    )
    for n in range(n_steps + 1):
        t = float(grid[n])
        context = default_context
        for segment, segment_context in zip(schedule, segment_contexts, strict=True):
            if segment.covers(t):
                context = segment_context
                break

        w = controller.update(context.occupants, room)
        room_series[n] = room
        control[n] = w
        h_series[n] = total_signal(context.occupants, room)
        g_series[n] = total_abs_signal(context.occupants, room)
        band_min[n] = context.band.t_min
        band_max[n] = context.band.t_max

        if n < n_steps:
            room = step(room, float(ext[n]), w, params)
            if not math.isfinite(room) or abs(room) > DIVERGENCE_LIMIT:
                raise SimulationDivergenceError(n + 1, float(grid[n + 1]), room)

    discomfort = np.vstack([abs_discomfort_curve(occupant, room_series) for occupant in occupants])
    return SimulationTrace(
        times=grid,
        outdoor=ext,
        room=room_series,
        control=control,
        h_series=h_series,
        g_series=g_series,
        per_user_abs_discomfort=discomfort,
        band_min=band_min,
        band_max=band_max,
    )


def run_simulation(
    occupants: Sequence[Occupant],
    profile: OutdoorProfile,
    params: ThermalParams,
    initial_room_temp: float | None = None,
    schedule: Sequence[ScheduleSegment] = (),
) -> SimulationTrace:
    """Generate the outdoor profile and simulate the closed loop over it."""
    times, outdoor = generate_outdoor(profile)
    return simulate(occupants, times, outdoor, params, initial_room_temp, schedule)
