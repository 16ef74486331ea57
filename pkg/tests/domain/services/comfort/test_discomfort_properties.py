#!/usr/bin/env python3

"""Seeded property suites for the discomfort function and the comfort signal."""

import numpy as np
import pytest

from thermal_comfort_control.domain.services.comfort import (
    comfort_signal,
    discomfort_curve,
    signal_curve,
    signed_discomfort,
)


@pytest.mark.slow
class TestSignedDiscomfortShape:
    """Signed discomfort falls strictly with temperature and is odd about the ideal."""

    def test_strictly_decreasing(self, rng: np.random.Generator, random_occupants) -> None:
        """200 occupant sets on 100 distinct sorted temperatures within 3σ of each ideal."""
        for _ in range(200):
            for occupant in random_occupants(rng):
                spread = 3.0 * occupant.sensitivity
                temps = np.unique(
                    rng.uniform(occupant.ideal_temp - spread, occupant.ideal_temp + spread, 100)
                )
                values = discomfort_curve(occupant, temps)
                assert np.all(np.diff(values) < 0)

                scalar = [signed_discomfort(occupant, float(t)) for t in temps[:10]]
                np.testing.assert_allclose(scalar, values[:10], rtol=0.0, atol=1e-15)

    def test_odd_symmetry(self, rng: np.random.Generator, random_occupants) -> None:
        """Offsets of equal size on both sides of the ideal cancel to 1e-12."""
        for _ in range(200):
            for occupant in random_occupants(rng):
                for offset in rng.uniform(0.0, 4.0 * occupant.sensitivity, size=20):
                    warm = signed_discomfort(occupant, occupant.ideal_temp + float(offset))
                    cold = signed_discomfort(occupant, occupant.ideal_temp - float(offset))
                    assert abs(warm + cold) <= 1e-12


@pytest.mark.slow
class TestComfortSignalShape:
    """The ternary signal never increases with temperature."""

    def test_non_increasing(self, rng: np.random.Generator, random_occupants) -> None:
        """200 occupant sets on 100 sorted temperatures plus the interval edges."""
        for _ in range(200):
            for occupant in random_occupants(rng):
                temps = np.sort(
                    np.concatenate(
                        (
                            rng.uniform(occupant.lower_bound - 3.0, occupant.upper_bound + 3.0, 100),
                            [occupant.lower_bound, occupant.upper_bound],
                        )
                    )
                )
                values = signal_curve(occupant, temps)
                assert np.all(np.diff(values) <= 0)
                assert [int(comfort_signal(occupant, float(t))) for t in temps[:10]] == list(
                    values[:10]
                )
