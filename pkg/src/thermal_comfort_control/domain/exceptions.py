#!/usr/bin/env python3

"""Exception hierarchy for the thermal comfort control domain."""


class ThermalComfortError(Exception):
    """Base class for all errors raised by this package."""


class ComfortDomainError(ThermalComfortError, ValueError):
    """An input lies outside the domain of an operation.

    Raised for invalid occupants, non-finite temperatures, empty occupant
    lists, negative power coefficients, non-positive sweep steps and
    inconsistent ranges.
    """


class SimulationDivergenceError(ThermalComfortError, ArithmeticError):
    """The room temperature left the physically plausible range."""

    def __init__(self, step_index: int, time: float, room_temp: float):
        """
        Initialize divergence error.

        Args:
            step_index: Integration step at which divergence was detected
            time: Simulation time of that step
            room_temp: Offending room temperature
        """
        self.step_index = step_index
        self.time = time
        self.room_temp = room_temp
        super().__init__(
            f"Simulation diverged at step {step_index} (t={time:g}): "
            f"room temperature {room_temp:g} °C"
        )


class ConfigParseError(ThermalComfortError, ValueError):
    """A scenario document is not well-formed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        """
        Initialize parse error.

        Args:
            message: Parser problem description
            line: 1-based line of the problem, if known
            column: 1-based column of the problem, if known
        """
        self.line = line
        self.column = column
        location = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{location}{message}")


class ConfigValidationError(ThermalComfortError, ValueError):
    """A scenario document parsed but violates a model invariant."""

    def __init__(self, field: str, message: str):
        """
        Initialize validation error.

        Args:
            field: Dotted path of the offending field (e.g. ``occupants[0].sensitivity``)
            message: What is wrong with the value
        """
        self.field = field
        super().__init__(f"{field}: {message}")
