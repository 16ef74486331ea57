#!/usr/bin/env python3

"""Recorded output of a closed-loop simulation run."""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ...exceptions import ComfortDomainError

FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int64]


@dataclass(frozen=True, eq=False)
class SimulationTrace:
    """Time series sampled at every integration step."""

    times: FloatArray
    outdoor: FloatArray
    room: FloatArray
    control: FloatArray
    h_series: IntArray
    g_series: IntArray
    per_user_abs_discomfort: FloatArray
    """Shape ``(n_occupants, n_samples)``."""
    band_min: FloatArray
    """Lower edge of the band in force at each sample."""
    band_max: FloatArray
    """Upper edge of the band in force at each sample."""

    def __post_init__(self) -> None:
        n = self.times.shape[0]
        series = {
            "outdoor": self.outdoor,
            "room": self.room,
            "control": self.control,
            "h_series": self.h_series,
            "g_series": self.g_series,
            "band_min": self.band_min,
            "band_max": self.band_max,
        }
        for name, values in series.items():
            if values.shape != (n,):
                raise ComfortDomainError(f"{name} has shape {values.shape}, expected ({n},)")
        if self.per_user_abs_discomfort.ndim != 2 or self.per_user_abs_discomfort.shape[1] != n:
            raise ComfortDomainError(
                f"per_user_abs_discomfort has shape {self.per_user_abs_discomfort.shape}"
            )
        if n > 1 and not np.all(np.diff(self.times) > 0):
            raise ComfortDomainError("Trace times must be increasing")

    def __len__(self) -> int:
        """Number of recorded samples."""
        return int(self.times.shape[0])

    @property
    def n_occupants(self) -> int:
        """Number of occupants with a discomfort series."""
        return int(self.per_user_abs_discomfort.shape[0])


@dataclass(frozen=True)
class SegmentSummary:
    """Discomfort statistics of one schedule segment after it settled."""

    label: str
    start: float
    end: float
    settle_time: float | None
    """First time the aggregate signal was balanced or changed sign, if ever."""
    peak_discomfort: tuple[float, ...]
    """Largest absolute discomfort per occupant over the settled samples."""
    peak_disparity: float
    """Largest gap between the most and least uncomfortable occupant."""
    mean_dissatisfied: float
    """Average number of occupants not comfortable."""
