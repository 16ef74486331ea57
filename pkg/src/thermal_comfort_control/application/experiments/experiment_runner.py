#!/usr/bin/env python3

"""Experiment orchestrator (Application Layer).

Turns a :class:`ScenarioConfig` into the tables behind each command:
- band: the aggregate signal staircase and the balanced band
- curves: per-occupant discomfort and signal samples
- signals: aligned h and g staircases
- sweep: band and discomfort figures per common tolerance
- simulate: the closed-loop trace of the weekly scenario
- setpoint: optimal room temperature and resulting discomfort per outdoor temperature
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np
import pandas as pd

from ...domain.models.comfort import ComfortBand, Occupant, StepFunction
from ...domain.models.thermal import SegmentSummary
from ...domain.services.aggregation import build_step_function, dissatisfied_in_band, solve_band
from ...domain.services.comfort import abs_discomfort_curve, discomfort_curve, signal_curve
from ...domain.services.policy import (
    expected_abs_discomfort,
    inclusive_grid,
    power,
    setpoint,
    tolerance_sweep,
)
from ...domain.services.simulation import active_band, run_simulation, summarize_segments
from ...infrastructure.config import ScenarioConfig, SimulationSettings, SweepSettings
from ...infrastructure.logging import ProgressTracker, get_logger, log_timing

logger = get_logger(__name__)

CURVE_STEP = 0.05
CURVE_SPAN_SIGMAS = 3.0


@dataclass(eq=False)
class Experiment:
    """Result table of one command together with its audit metadata."""

    command: str
    frame: pd.DataFrame
    meta: dict[str, Any]
    band: ComfortBand | None = None
    segment_summaries: list[SegmentSummary] = field(default_factory=list)


def _segment_columns(function: StepFunction) -> dict[str, list[float]]:
    segments = function.segments()
    return {
        "segment_start": [segment.start for segment in segments],
        "segment_end": [segment.end for segment in segments],
    }


class ExperimentRunner:
    """Runs the scenario experiments and shapes their results as tables."""

    def __init__(self, config: ScenarioConfig, tracker: ProgressTracker | None = None):
        """
        Initialize runner.

        Args:
            config: Validated scenario
            tracker: Optional progress tracker for timing and counters
        """
        self.config = config
        self.tracker = tracker or ProgressTracker(logger)

    def occupants(self, delta: float | None = None) -> tuple[Occupant, ...]:
        """Configured occupants, optionally with a common tolerance."""
        if delta is None:
            return self.config.occupants
        return tuple(occupant.with_tolerance(delta) for occupant in self.config.occupants)

    def _meta(
        self,
        command: str,
        occupants: Sequence[Occupant],
        seed: int | None = None,
        **params: Any,
    ) -> dict[str, Any]:
        return {
            "command": command,
            "seed": seed,
            "ideal_temp": [occupant.ideal_temp for occupant in occupants],
            "sensitivity": [occupant.sensitivity for occupant in occupants],
            "tolerance": [occupant.tolerance for occupant in occupants],
            **params,
        }

    def band(self, delta: float | None = None) -> Experiment:
        """Solve the comfort band; the table is the aggregate signal staircase."""
        occupants = self.occupants(delta)
        with self.tracker.track_operation("band"):
            function = build_step_function(occupants)
            band = solve_band(occupants)
            dissatisfied = dissatisfied_in_band(occupants, band)

        if dissatisfied:
            logger.info(
                f"Up to {dissatisfied} of {len(occupants)} occupants remain "
                f"dissatisfied inside the band"
            )
        frame = pd.DataFrame(
            {**_segment_columns(function), "value": [s.value for s in function.segments()]}
        )
        self.tracker.count_rows(len(frame))
        meta = self._meta(
            "band",
            occupants,
            delta=delta,
            t_min=band.t_min,
            t_max=band.t_max,
            exact_zero=band.exact_zero,
            residual=band.residual,
            dissatisfied=dissatisfied,
        )
        return Experiment("band", frame, meta, band=band)

    def curves(self, delta: float | None = None) -> Experiment:
        """Signed and absolute discomfort and the signal of every occupant."""
        occupants = self.occupants(delta)
        spread = CURVE_SPAN_SIGMAS * max(occupant.sensitivity for occupant in occupants)
        t_low = math.floor(min(occupant.ideal_temp for occupant in occupants) - spread)
        t_high = math.ceil(max(occupant.ideal_temp for occupant in occupants) + spread)
        temps = np.asarray(inclusive_grid(t_low, t_high, CURVE_STEP))

        with self.tracker.track_operation("curves"):
            columns: dict[str, Any] = {"t_room": temps}
            for occupant in occupants:
                columns[f"f_signed_{occupant.id}"] = discomfort_curve(occupant, temps)
                columns[f"f_abs_{occupant.id}"] = abs_discomfort_curve(occupant, temps)
                columns[f"eta_{occupant.id}"] = signal_curve(occupant, temps)

        frame = pd.DataFrame(columns)
        self.tracker.count_rows(len(frame))
        meta = self._meta(
            "curves", occupants, delta=delta, t_low=t_low, t_high=t_high, t_step=CURVE_STEP
        )
        return Experiment("curves", frame, meta)

    def signals(self, delta: float | None = None) -> Experiment:
        """Aggregate signal h and dissatisfied count g over the same segments."""
        occupants = self.occupants(delta)
        with self.tracker.track_operation("signals"):
            signed = build_step_function(occupants)
            unsigned = build_step_function(occupants, absolute=True)

        frame = pd.DataFrame(
            {
                **_segment_columns(signed),
                "h": [segment.value for segment in signed.segments()],
                "g": [segment.value for segment in unsigned.segments()],
            }
        )
        self.tracker.count_rows(len(frame))
        return Experiment("signals", frame, self._meta("signals", occupants, delta=delta))

    def sweep(self) -> Experiment:
        """Band, per-user utility and worst case across the tolerance grid."""
        settings = self.config.sweep
        if settings is None:
            logger.info("Scenario has no sweep section, using the default grid")
            settings = SweepSettings()

        with self.tracker.track_operation("sweep"):
            rows = tolerance_sweep(
                self.config.occupants,
                settings.delta_min,
                settings.delta_max,
                settings.step,
                offsets=settings.offsets,
                workers=settings.workers,
            )

        columns: dict[str, list[Any]] = {
            "delta": [row.tolerance for row in rows],
            "t_min": [row.band.t_min for row in rows],
            "t_max": [row.band.t_max for row in rows],
            "exact_zero": [row.band.exact_zero for row in rows],
            "residual": [row.band.residual for row in rows],
        }
        for index, occupant in enumerate(self.config.occupants):
            columns[f"u_{occupant.id}"] = [row.per_user_utility[index] for row in rows]
        columns["worst_case"] = [row.worst_case for row in rows]

        frame = pd.DataFrame(columns)
        self.tracker.count_rows(len(frame))
        meta = self._meta(
            "sweep",
            self.config.occupants,
            delta_min=settings.delta_min,
            delta_max=settings.delta_max,
            step=settings.step,
            offsets=None if settings.offsets is None else list(settings.offsets),
        )
        return Experiment("sweep", frame, meta)

    @log_timing
    def simulate(self, seed: int | None = None, delta: float | None = None) -> Experiment:
        """Closed-loop trace over the synthetic outdoor profile.

        Args:
            seed: Overrides the configured profile seed
            delta: Overrides the occupants' tolerances outside schedule segments
        """
        settings = self.config.simulation
        if settings is None:
            logger.info("Scenario has no simulation section, using defaults")
            settings = SimulationSettings()
        profile = settings.profile if seed is None else replace(settings.profile, seed=seed)
        occupants = self.occupants(delta)
        schedule = settings.effective_schedule()

        with self.tracker.track_operation("simulate"):
            trace = run_simulation(
                occupants, profile, settings.params, settings.initial_room_temp, schedule
            )
            summaries = summarize_segments(trace, schedule)
        self.tracker.count_steps(len(trace) - 1, float(trace.times[-1] - trace.times[0]))
        self.tracker.log_memory_usage()

        for summary in summaries:
            band = active_band(occupants, schedule, summary.start)
            window = (trace.times >= summary.start) & (trace.times < summary.end)
            in_band = np.mean([band.contains(float(temp)) for temp in trace.room[window]])
            logger.info(
                f"Segment {summary.label} [{summary.start:g}, {summary.end:g}): "
                f"band [{band.t_min:g}, {band.t_max:g}], in band {in_band:.0%} of samples, "
                f"peak discomfort {max(summary.peak_discomfort):.4f}, "
                f"disparity {summary.peak_disparity:.4f}, "
                f"mean dissatisfied {summary.mean_dissatisfied:.2f}"
            )

        columns: dict[str, Any] = {
            "time": trace.times,
            "t_ext": trace.outdoor,
            "t_room": trace.room,
            "w": trace.control,
            "h": trace.h_series,
            "g": trace.g_series,
        }
        for index, occupant in enumerate(occupants):
            columns[f"f_{occupant.id}"] = trace.per_user_abs_discomfort[index]

        frame = pd.DataFrame(columns)
        params = settings.params
        meta = self._meta(
            "simulate",
            occupants,
            seed=profile.seed,
            days=profile.days,
            samples_per_day=profile.samples_per_day,
            daily_min_range=list(profile.daily_min_range),
            daily_max_range=list(profile.daily_max_range),
            c=params.heat_exchange,
            k=params.control_gain,
            dt=params.dt,
            control_sign=params.control_sign.value,
            hysteresis=params.hysteresis,
            initial_room_temp=settings.initial_room_temp,
            schedule=[segment.label() for segment in schedule],
        )
        return Experiment("simulate", frame, meta, segment_summaries=summaries)

    def setpoint(self, delta: float | None = None) -> Experiment:
        """Optimal setpoint, power and per-user discomfort per outdoor temperature."""
        occupants = self.occupants(delta)
        grid_settings = self.config.setpoint
        mu = self.config.power_coefficient

        with self.tracker.track_operation("setpoint"):
            band = solve_band(occupants)
            outdoor = inclusive_grid(
                grid_settings.t_ext_min, grid_settings.t_ext_max, grid_settings.step
            )
            targets = [setpoint(t_ext, band) for t_ext in outdoor]
            columns: dict[str, list[float]] = {
                "t_ext": outdoor,
                "t_setpoint": targets,
                "power": [
                    power(t_ext, t_r, mu) for t_ext, t_r in zip(outdoor, targets, strict=True)
                ],
            }
            for occupant in occupants:
                columns[f"fhat_{occupant.id}"] = [
                    expected_abs_discomfort(occupant, t_ext, band) for t_ext in outdoor
                ]

        frame = pd.DataFrame(columns)
        self.tracker.count_rows(len(frame))
        meta = self._meta(
            "setpoint",
            occupants,
            delta=delta,
            mu=mu,
            t_min=band.t_min,
            t_max=band.t_max,
            t_ext_min=grid_settings.t_ext_min,
            t_ext_max=grid_settings.t_ext_max,
            t_ext_step=grid_settings.step,
        )
        return Experiment("setpoint", frame, meta, band=band)
