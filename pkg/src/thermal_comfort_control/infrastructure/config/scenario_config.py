#!/usr/bin/env python3

"""YAML scenario documents.

A scenario names the occupants and, optionally, the tolerance sweep, the
weekly simulation, the setpoint table and the output location. Field names
are documented in ``docs/CONFIGURATION.md``.
"""

import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, TypeVar

import yaml

from ...domain.exceptions import (
    ComfortDomainError,
    ConfigParseError,
    ConfigValidationError,
)
from ...domain.models.comfort import ComfortBand, Occupant
from ...domain.models.thermal import (
    ControlSign,
    OutdoorProfile,
    ScheduleSegment,
    ThermalParams,
    validate_schedule,
)
from ..logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")

OUTPUT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class SweepSettings:
    """Tolerance grid and evaluation options of the ``sweep`` command."""

    delta_min: float = 0.0
    delta_max: float = 3.0
    step: float = 0.03
    offsets: tuple[float, ...] | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if not (math.isfinite(self.step) and self.step > 0):
            raise ComfortDomainError(f"step must be > 0, got {self.step}")
        if not (math.isfinite(self.delta_min) and math.isfinite(self.delta_max)):
            raise ComfortDomainError("delta_min and delta_max must be finite")
        if not 0 <= self.delta_min <= self.delta_max:
            raise ComfortDomainError(
                f"need 0 <= delta_min <= delta_max, got [{self.delta_min}, {self.delta_max}]"
            )
        if self.workers < 1:
            raise ComfortDomainError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class SetpointSettings:
    """Outdoor temperature grid of the ``setpoint`` table."""

    t_ext_min: float = 0.0
    t_ext_max: float = 35.0
    step: float = 0.5

    def __post_init__(self) -> None:
        if not (math.isfinite(self.step) and self.step > 0):
            raise ComfortDomainError(f"step must be > 0, got {self.step}")
        if not (math.isfinite(self.t_ext_min) and math.isfinite(self.t_ext_max)):
            raise ComfortDomainError("t_ext_min and t_ext_max must be finite")
        if self.t_ext_min > self.t_ext_max:
            raise ComfortDomainError(
                f"range is inverted: [{self.t_ext_min}, {self.t_ext_max}]"
            )


@dataclass(frozen=True)
class SimulationSettings:
    """Outdoor profile, heat balance and band source of the ``simulate`` command.

    The band source is either a fixed ``band`` shared by every occupant for
    the whole run or a ``schedule`` of segments; with neither, the
    configured occupant tolerances apply throughout.
    """

    profile: OutdoorProfile = field(default_factory=OutdoorProfile)
    params: ThermalParams = field(default_factory=ThermalParams)
    initial_room_temp: float | None = None
    band: ComfortBand | None = None
    schedule: tuple[ScheduleSegment, ...] = ()

    def __post_init__(self) -> None:
        if self.band is not None and self.schedule:
            raise ComfortDomainError("band and schedule are mutually exclusive")
        if self.initial_room_temp is not None and not math.isfinite(self.initial_room_temp):
            raise ComfortDomainError(
                f"initial_room_temp must be finite, got {self.initial_room_temp}"
            )
        validate_schedule(self.schedule)

    def effective_schedule(self) -> tuple[ScheduleSegment, ...]:
        """Schedule in force, with a fixed band spanning the whole run."""
        if self.band is None:
            return self.schedule
        # One step past the horizon so the final sample is covered too
        end = self.profile.duration + self.params.dt
        return (ScheduleSegment(start=0.0, end=end, band=self.band),)


@dataclass(frozen=True)
class OutputSettings:
    """Where and in which format artifacts are written."""

    directory: Path = Path("output")
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.format not in OUTPUT_FORMATS:
            raise ComfortDomainError(
                f"format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.format!r}"
            )


@dataclass(frozen=True)
class ScenarioConfig:
    """A validated scenario document."""

    occupants: tuple[Occupant, ...]
    power_coefficient: float = 1.0
    sweep: SweepSettings | None = None
    simulation: SimulationSettings | None = None
    setpoint: SetpointSettings = field(default_factory=SetpointSettings)
    output: OutputSettings = field(default_factory=OutputSettings)

    def __post_init__(self) -> None:
        if not self.occupants:
            raise ComfortDomainError("at least one occupant is required")
        if not (math.isfinite(self.power_coefficient) and self.power_coefficient >= 0):
            raise ComfortDomainError(
                f"power_coefficient must be >= 0, got {self.power_coefficient}"
            )
        if self.sweep is not None and self.sweep.offsets is not None:
            if len(self.sweep.offsets) != len(self.occupants):
                raise ComfortDomainError(
                    f"sweep offsets need one value per occupant "
                    f"({len(self.occupants)}), got {len(self.sweep.offsets)}"
                )


# -- parsing -----------------------------------------------------------------

_OCCUPANT_KEYS = {"id", "ideal_temp", "sensitivity", "tolerance"}
_SWEEP_KEYS = {"delta_min", "delta_max", "step", "offsets", "workers"}
_SETPOINT_KEYS = {"t_ext_min", "t_ext_max", "step"}
_OUTPUT_KEYS = {"directory", "format"}
_SEGMENT_KEYS = {"start", "end", "tolerance", "band"}
_PROFILE_KEYS = {"seed", "days", "samples_per_day", "daily_min_range", "daily_max_range"}
_PARAM_KEYS = {"heat_exchange", "control_gain", "dt", "control_sign", "hysteresis"}
_SIMULATION_KEYS = _PROFILE_KEYS | _PARAM_KEYS | {"initial_room_temp", "band", "schedule"}
_ROOT_KEYS = {"occupants", "power_coefficient", "sweep", "simulation", "setpoint", "output"}


def _mapping(path: str, value: Any, allowed: set[str]) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise ConfigValidationError(path, f"expected a mapping, got {type(value).__name__}")
    unknown = sorted(str(key) for key in value if key not in allowed)
    if unknown:
        raise ConfigValidationError(path, f"unknown field(s): {', '.join(unknown)}")
    return value


def _child(parent: str, key: str) -> str:
    return f"{parent}.{key}" if parent else key


def _number(path: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise ConfigValidationError(path, f"expected a number, got {value!r}")
    return float(value)


def _integer(path: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigValidationError(path, f"expected an integer, got {value!r}")
    return value


def _pair(path: str, value: Any) -> tuple[float, float]:
    if not isinstance(value, list | tuple) or len(value) != 2:
        raise ConfigValidationError(path, f"expected a [low, high] pair, got {value!r}")
    return _number(f"{path}[0]", value[0]), _number(f"{path}[1]", value[1])


def _build(path: str, factory: Callable[..., T], **kwargs: Any) -> T:
    """Construct a model, reporting its invariant violations against ``path``."""
    try:
        return factory(**kwargs)
    except ComfortDomainError as e:
        raise ConfigValidationError(path, str(e)) from e


def _options(
    path: str,
    data: Mapping[str, Any],
    converters: Mapping[str, Callable[[str, Any], Any]],
) -> dict[str, Any]:
    """Convert the optional fields present in ``data``; absent ones keep model defaults."""
    return {
        key: convert(_child(path, key), data[key])
        for key, convert in converters.items()
        if key in data
    }


def _parse_band(path: str, value: Any) -> ComfortBand:
    t_min, t_max = _pair(path, value)
    return _build(path, ComfortBand, t_min=t_min, t_max=t_max)


def _parse_occupants(value: Any) -> tuple[Occupant, ...]:
    if not isinstance(value, list):
        raise ConfigValidationError("occupants", "expected a list of occupants")
    if not value:
        raise ConfigValidationError("occupants", "at least one occupant is required")

    occupants = []
    for index, item in enumerate(value):
        path = f"occupants[{index}]"
        data = _mapping(path, item, _OCCUPANT_KEYS)
        for required in ("ideal_temp", "sensitivity"):
            if required not in data:
                raise ConfigValidationError(_child(path, required), "missing required field")
        occupants.append(
            _build(
                path,
                Occupant,
                id=_integer(_child(path, "id"), data.get("id", index + 1)),
                ideal_temp=_number(_child(path, "ideal_temp"), data["ideal_temp"]),
                sensitivity=_number(_child(path, "sensitivity"), data["sensitivity"]),
                tolerance=_number(_child(path, "tolerance"), data.get("tolerance", 0.0)),
            )
        )

    ids = [occupant.id for occupant in occupants]
    if len(set(ids)) != len(ids):
        raise ConfigValidationError("occupants", f"occupant ids must be unique, got {ids}")
    return tuple(occupants)


def _parse_offsets(path: str, value: Any) -> tuple[float, ...]:
    if not isinstance(value, list):
        raise ConfigValidationError(path, "expected a list of numbers")
    return tuple(_number(f"{path}[{i}]", item) for i, item in enumerate(value))


def _parse_sweep(value: Any) -> SweepSettings:
    data = _mapping("sweep", value, _SWEEP_KEYS)
    options = _options(
        "sweep",
        data,
        {
            "delta_min": _number,
            "delta_max": _number,
            "step": _number,
            "offsets": _parse_offsets,
            "workers": _integer,
        },
    )
    return _build("sweep", SweepSettings, **options)


def _parse_setpoint(value: Any) -> SetpointSettings:
    data = _mapping("setpoint", value, _SETPOINT_KEYS)
    options = _options(
        "setpoint", data, {"t_ext_min": _number, "t_ext_max": _number, "step": _number}
    )
    return _build("setpoint", SetpointSettings, **options)


def _parse_output(value: Any) -> OutputSettings:
    data = _mapping("output", value, _OUTPUT_KEYS)
    options: dict[str, Any] = {}
    if "directory" in data:
        if not isinstance(data["directory"], str) or not data["directory"]:
            raise ConfigValidationError("output.directory", "expected a non-empty path")
        options["directory"] = Path(data["directory"])
    if "format" in data:
        options["format"] = data["format"]
    return _build("output", OutputSettings, **options)


def _parse_control_sign(path: str, value: Any) -> ControlSign:
    try:
        return ControlSign(value)
    except ValueError as e:
        choices = ", ".join(sign.value for sign in ControlSign)
        raise ConfigValidationError(path, f"expected one of {choices}, got {value!r}") from e


def _parse_schedule(value: Any) -> tuple[ScheduleSegment, ...]:
    if not isinstance(value, list):
        raise ConfigValidationError("simulation.schedule", "expected a list of segments")

    segments = []
    for index, item in enumerate(value):
        path = f"simulation.schedule[{index}]"
        data = _mapping(path, item, _SEGMENT_KEYS)
        for required in ("start", "end"):
            if required not in data:
                raise ConfigValidationError(_child(path, required), "missing required field")
        segments.append(
            _build(
                path,
                ScheduleSegment,
                start=_number(_child(path, "start"), data["start"]),
                end=_number(_child(path, "end"), data["end"]),
                tolerance=(
                    _number(_child(path, "tolerance"), data["tolerance"])
                    if data.get("tolerance") is not None
                    else None
                ),
                band=(
                    _parse_band(_child(path, "band"), data["band"])
                    if data.get("band") is not None
                    else None
                ),
            )
        )
    try:
        validate_schedule(segments)
    except ComfortDomainError as e:
        raise ConfigValidationError("simulation.schedule", str(e)) from e
    return tuple(segments)


def _parse_simulation(value: Any) -> SimulationSettings:
    data = _mapping("simulation", value, _SIMULATION_KEYS)
    path = "simulation"

    profile = _build(
        path,
        OutdoorProfile,
        **_options(
            path,
            data,
            {
                "seed": _integer,
                "days": _integer,
                "samples_per_day": _integer,
                "daily_min_range": _pair,
                "daily_max_range": _pair,
            },
        ),
    )
    params = _build(
        path,
        ThermalParams,
        **_options(
            path,
            data,
            {
                "heat_exchange": _number,
                "control_gain": _number,
                "dt": _number,
                "control_sign": _parse_control_sign,
                "hysteresis": _number,
            },
        ),
    )

    initial = data.get("initial_room_temp")
    return _build(
        path,
        SimulationSettings,
        profile=profile,
        params=params,
        initial_room_temp=(
            None if initial is None else _number(_child(path, "initial_room_temp"), initial)
        ),
        band=None if data.get("band") is None else _parse_band(_child(path, "band"), data["band"]),
        schedule=_parse_schedule(data.get("schedule") or []),
    )


def parse_config(text: str) -> ScenarioConfig:
    """
    Parse and validate a YAML scenario document.

    Args:
        text: Document contents

    Returns:
        Validated scenario with defaults filled in

    Raises:
        ConfigParseError: If the document is not well-formed YAML
        ConfigValidationError: If a field is missing, mistyped or violates
            a model invariant
    """
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        problem = getattr(e, "problem", None) or str(e)
        if mark is not None:
            raise ConfigParseError(problem, mark.line + 1, mark.column + 1) from e
        raise ConfigParseError(problem) from e

    data = _mapping("<document>", document, _ROOT_KEYS)
    if "occupants" not in data:
        raise ConfigValidationError("occupants", "missing required field")

    options: dict[str, Any] = {"occupants": _parse_occupants(data["occupants"])}
    if "power_coefficient" in data:
        options["power_coefficient"] = _number("power_coefficient", data["power_coefficient"])
    if data.get("sweep") is not None:
        options["sweep"] = _parse_sweep(data["sweep"])
    if data.get("simulation") is not None:
        options["simulation"] = _parse_simulation(data["simulation"])
    if data.get("setpoint") is not None:
        options["setpoint"] = _parse_setpoint(data["setpoint"])
    if data.get("output") is not None:
        options["output"] = _parse_output(data["output"])

    config = _build("<document>", ScenarioConfig, **options)
    logger.debug(
        f"Parsed scenario: {len(config.occupants)} occupants, "
        f"sweep={'yes' if config.sweep else 'no'}, "
        f"simulation={'yes' if config.simulation else 'no'}"
    )
    return config


def load_config(path: Path) -> ScenarioConfig:
    """
    Read and parse a scenario file.

    Raises:
        OSError: If the file cannot be read
        ConfigParseError: If the file is not UTF-8 text or not well-formed YAML
        ConfigValidationError: If a field is invalid
    """
    logger.debug(f"Loading scenario from {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ConfigParseError(f"{path} is not UTF-8 text (byte {e.start})") from e
    return parse_config(text)


# -- serialization -----------------------------------------------------------


def _band_list(band: ComfortBand) -> list[float]:
    return [band.t_min, band.t_max]


def config_to_dict(config: ScenarioConfig) -> dict[str, Any]:
    """Plain-data form of a scenario, as accepted by :func:`parse_config`."""
    document: dict[str, Any] = {
        "occupants": [
            {
                "id": occupant.id,
                "ideal_temp": occupant.ideal_temp,
                "sensitivity": occupant.sensitivity,
                "tolerance": occupant.tolerance,
            }
            for occupant in config.occupants
        ],
        "power_coefficient": config.power_coefficient,
    }

    if config.sweep is not None:
        sweep: dict[str, Any] = {
            "delta_min": config.sweep.delta_min,
            "delta_max": config.sweep.delta_max,
            "step": config.sweep.step,
            "workers": config.sweep.workers,
        }
        if config.sweep.offsets is not None:
            sweep["offsets"] = list(config.sweep.offsets)
        document["sweep"] = sweep

    if config.simulation is not None:
        simulation = config.simulation
        profile = simulation.profile
        params = simulation.params
        sim: dict[str, Any] = {
            "seed": profile.seed,
            "days": profile.days,
            "samples_per_day": profile.samples_per_day,
            "daily_min_range": list(profile.daily_min_range),
            "daily_max_range": list(profile.daily_max_range),
            "heat_exchange": params.heat_exchange,
            "control_gain": params.control_gain,
            "dt": params.dt,
            "control_sign": params.control_sign.value,
            "hysteresis": params.hysteresis,
        }
        if simulation.initial_room_temp is not None:
            sim["initial_room_temp"] = simulation.initial_room_temp
        if simulation.band is not None:
            sim["band"] = _band_list(simulation.band)
        if simulation.schedule:
            sim["schedule"] = [
                {"start": segment.start, "end": segment.end}
                | (
                    {"tolerance": segment.tolerance}
                    if segment.tolerance is not None
                    else {"band": _band_list(segment.band)}  # type: ignore[arg-type]
                )
                for segment in simulation.schedule
            ]
        document["simulation"] = sim

    document["setpoint"] = {
        "t_ext_min": config.setpoint.t_ext_min,
        "t_ext_max": config.setpoint.t_ext_max,
        "step": config.setpoint.step,
    }
    document["output"] = {
        "directory": config.output.directory.as_posix(),
        "format": config.output.format,
    }
    return document


def dump_config(config: ScenarioConfig) -> str:
    """Serialize a scenario to YAML such that ``parse_config`` restores it."""
    return yaml.safe_dump(config_to_dict(config), sort_keys=False, default_flow_style=None)
