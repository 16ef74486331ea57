#!/usr/bin/env python3

"""Exact representation of a piecewise-constant function of room temperature.

The aggregate signals h and g only change value at occupant band edges.
Between two consecutive breakpoints the function is constant (a plateau);
at a breakpoint itself the value can differ from both neighbouring plateaus
because comfort intervals are closed.
"""

import bisect
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ...exceptions import ComfortDomainError


@dataclass(frozen=True)
class Segment:
    """One constant piece of a step function.

    A plateau spans the open interval ``(start, end)``; a point segment has
    ``start == end`` and covers that single temperature.
    """

    start: float
    end: float
    value: int

    @property
    def is_point(self) -> bool:
        """Whether this segment is a single breakpoint."""
        return self.start == self.end


@dataclass(frozen=True)
class StepFunction:
    """Integer-valued step function over the real line."""

    breakpoints: tuple[float, ...]
    plateau_values: tuple[int, ...]
    point_values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.plateau_values) != len(self.breakpoints) + 1:
            raise ComfortDomainError(
                f"Expected {len(self.breakpoints) + 1} plateau values, "
                f"got {len(self.plateau_values)}"
            )
        if len(self.point_values) != len(self.breakpoints):
            raise ComfortDomainError(
                f"Expected {len(self.breakpoints)} point values, got {len(self.point_values)}"
            )
        if any(b <= a for a, b in zip(self.breakpoints, self.breakpoints[1:], strict=False)):
            raise ComfortDomainError("Breakpoints must be strictly increasing")

    def evaluate(self, temp: float) -> int:
        """Value of the function at a single temperature."""
        idx = bisect.bisect_left(self.breakpoints, temp)
        if idx < len(self.breakpoints) and self.breakpoints[idx] == temp:
            return self.point_values[idx]
        return self.plateau_values[idx]

    def evaluate_many(self, temps: npt.ArrayLike) -> npt.NDArray[np.int64]:
        """Vectorized :meth:`evaluate` over an array of temperatures."""
        grid = np.asarray(temps, dtype=float)
        breaks = np.asarray(self.breakpoints, dtype=float)
        plateaus = np.asarray(self.plateau_values, dtype=np.int64)
        if breaks.size == 0:
            return np.full(grid.shape, plateaus[0], dtype=np.int64)

        points = np.asarray(self.point_values, dtype=np.int64)
        idx = np.searchsorted(breaks, grid, side="left")
        clipped = np.minimum(idx, breaks.size - 1)
        on_break = (idx < breaks.size) & (breaks[clipped] == grid)
        return np.where(on_break, points[clipped], plateaus[idx])

    def segments(self) -> list[Segment]:
        """Plateaus and breakpoints in increasing temperature order.

        The two tails are reported with infinite outer ends.
        """
        edges = (-math.inf, *self.breakpoints, math.inf)
        pieces: list[Segment] = []
        for j, value in enumerate(self.plateau_values):
            pieces.append(Segment(edges[j], edges[j + 1], value))
            if j < len(self.breakpoints):
                breakpoint_ = self.breakpoints[j]
                pieces.append(Segment(breakpoint_, breakpoint_, self.point_values[j]))
        return pieces

    def values_in_order(self) -> list[int]:
        """All plateau and point values from left to right."""
        return [segment.value for segment in self.segments()]

    def is_non_increasing(self) -> bool:
        """Whether the function never steps up, breakpoints included."""
        values = self.values_in_order()
        return all(b <= a for a, b in zip(values, values[1:], strict=False))
