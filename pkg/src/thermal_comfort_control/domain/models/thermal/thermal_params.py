#!/usr/bin/env python3

"""Parameters of the single-zone heat balance and its HVAC control law."""

import math
from dataclasses import dataclass
from enum import Enum

from ...exceptions import ComfortDomainError


class ControlSign(Enum):
    """Direction convention of the signal-feedback control law."""

    STABILIZING = "stabilizing"  # w = +k*h, heats when occupants are cold
    AS_PRINTED = "as_printed"  # w = -k*h

    def __str__(self) -> str:
        """Return the configuration spelling."""
        return self.value


@dataclass(frozen=True)
class ThermalParams:
    """Coefficients of ``dT/dt = -c (T - T_ext) + w`` and of ``w = ±k h``."""

    heat_exchange: float = 0.1
    """Relaxation rate c toward the outdoor temperature, per time unit."""
    control_gain: float = 1.0
    """Gain k in °C per time unit per signal count."""
    dt: float = 0.1
    """Fixed integration step in time units (hours)."""
    control_sign: ControlSign = ControlSign.STABILIZING
    hysteresis: float = 0.0
    """Extra overshoot (°C) required before an active actuation is released."""

    def __post_init__(self) -> None:
        if not (math.isfinite(self.heat_exchange) and self.heat_exchange > 0):
            raise ComfortDomainError(f"heat_exchange must be > 0, got {self.heat_exchange}")
        if not (math.isfinite(self.control_gain) and self.control_gain >= 0):
            raise ComfortDomainError(f"control_gain must be >= 0, got {self.control_gain}")
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ComfortDomainError(f"dt must be > 0, got {self.dt}")
        if self.heat_exchange * self.dt >= 1:
            raise ComfortDomainError(
                f"heat_exchange * dt must be < 1 for explicit integration, "
                f"got {self.heat_exchange * self.dt:g}"
            )
        if not (math.isfinite(self.hysteresis) and self.hysteresis >= 0):
            raise ComfortDomainError(f"hysteresis must be >= 0, got {self.hysteresis}")
