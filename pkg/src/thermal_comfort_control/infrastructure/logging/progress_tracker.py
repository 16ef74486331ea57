#!/usr/bin/env python3

"""Progress tracking for sweeps and simulations."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from time import perf_counter

import psutil


class ProgressTracker:
    """
    Throughput of one run: table rows, integration steps and simulated hours.

    Operations nest; the time spent in each named operation is accumulated in
    ``operation_times`` and the totals are reported by ``report_summary``.
    """

    def __init__(self, logger: logging.Logger):
        self.logger = logger
        self.started = perf_counter()
        self.row_count = 0
        self.step_count = 0
        self.simulated_hours = 0.0
        self.operation_times: dict[str, float] = {}
        self._operations: list[str] = []

    @contextmanager
    def track_operation(self, name: str) -> Iterator[None]:
        """Time ``name`` while the block runs; failures are logged and re-raised."""
        self._operations.append(name)
        context = self.get_current_context()
        start = perf_counter()
        self.logger.debug(f"[{context}] started")
        try:
            yield
        except Exception as e:
            self.logger.error(f"[{context}] failed after {perf_counter() - start:.3f}s: {e}")
            raise
        else:
            elapsed = perf_counter() - start
            self.operation_times[name] = self.operation_times.get(name, 0.0) + elapsed
            self.logger.debug(f"[{context}] finished in {elapsed:.3f}s")
        finally:
            self._operations.pop()

    def count_rows(self, rows: int = 1) -> None:
        self.row_count += rows

    def count_steps(self, steps: int, hours: float = 0.0) -> None:
        """Add integration steps covering ``hours`` of simulated time."""
        self.step_count += steps
        self.simulated_hours += hours

    def report_summary(self) -> None:
        """Log totals at INFO."""
        total = perf_counter() - self.started
        parts = [f"{self.row_count} rows"]
        if self.step_count:
            rate = self.step_count / total if total > 0 else 0.0
            parts.append(
                f"{self.step_count} steps over {self.simulated_hours:g} h ({rate:.0f} steps/s)"
            )
        self.logger.info(f"Finished in {total:.2f}s: {', '.join(parts)}")

    def get_current_context(self) -> str:
        """Nested operation names, outermost first, or ``"idle"``."""
        return " → ".join(self._operations) or "idle"

    def log_memory_usage(self) -> None:
        """Log resident memory of the process at DEBUG."""
        try:
            rss = psutil.Process().memory_info().rss / 1024 / 1024
        except psutil.Error as e:
            self.logger.debug(f"Could not read memory usage: {e}")
            return
        self.logger.debug(f"Resident memory in {self.get_current_context()}: {rss:.1f} MB")
