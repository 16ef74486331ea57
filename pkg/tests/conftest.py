"""Pytest configuration and shared fixtures."""

import sys
from collections.abc import Callable, Iterator
from pathlib import Path

import numpy as np
import pytest

# Add src directory to path for imports
src_path = Path(__file__).parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from thermal_comfort_control.domain.models.comfort import Occupant  # noqa: E402
from thermal_comfort_control.infrastructure.config import (  # noqa: E402
    ScenarioConfig,
    load_config,
)
from thermal_comfort_control.infrastructure.logging import LoggerSetup  # noqa: E402

OFFICE_IDEAL_TEMPS = (17.0, 18.0, 19.5, 20.0)
OFFICE_SENSITIVITIES = (3.0, 2.0, 2.5, 2.8)

OccupantFactory = Callable[[np.random.Generator], list[Occupant]]


@pytest.fixture(scope="session")
def project_root() -> Path:
    """Return the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture(scope="session")
def office_scenario_path(project_root: Path) -> Path:
    """Return the bundled four-occupant scenario."""
    path = project_root / "resources" / "office_week.yaml"
    if not path.exists():
        pytest.skip(f"Bundled scenario not found at {path}")
    return path


@pytest.fixture(scope="session")
def office_config(office_scenario_path: Path) -> ScenarioConfig:
    """Parsed bundled scenario."""
    return load_config(office_scenario_path)


@pytest.fixture
def office_occupants() -> tuple[Occupant, ...]:
    """The four office occupants with zero tolerance."""
    return tuple(
        Occupant(id=i + 1, ideal_temp=t, sensitivity=s)
        for i, (t, s) in enumerate(zip(OFFICE_IDEAL_TEMPS, OFFICE_SENSITIVITIES, strict=True))
    )


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so property suites check the same cases every run."""
    return np.random.default_rng(20240607)


@pytest.fixture
def random_occupants() -> OccupantFactory:
    """Factory drawing 1..20 occupants with random ideal temperature and tolerance."""

    def draw(generator: np.random.Generator) -> list[Occupant]:
        n = int(generator.integers(1, 21))
        ideal = generator.uniform(15.0, 25.0, size=n)
        sensitivity = generator.uniform(0.5, 4.0, size=n)
        tolerance = generator.uniform(0.0, 3.0, size=n)
        return [
            Occupant(
                id=i + 1,
                ideal_temp=float(ideal[i]),
                sensitivity=float(sensitivity[i]),
                tolerance=float(tolerance[i]),
            )
            for i in range(n)
        ]

    return draw


@pytest.fixture
def reset_logging() -> Iterator[None]:
    """Drop the CLI's log handlers after a test."""
    yield
    LoggerSetup.reset()
