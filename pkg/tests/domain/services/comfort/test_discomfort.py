#!/usr/bin/env python3

"""Unit tests for the per-occupant discomfort model and comfort signal."""

import math

import numpy as np
import pytest

from thermal_comfort_control.domain.exceptions import ComfortDomainError
from thermal_comfort_control.domain.models.comfort import ComfortSignal, Occupant
from thermal_comfort_control.domain.services.comfort import (
    abs_discomfort,
    abs_discomfort_curve,
    comfort_signal,
    discomfort_curve,
    signal_curve,
    signed_discomfort,
)


@pytest.fixture
def occupant() -> Occupant:
    """Occupant with ideal 17 °C and sensitivity 2."""
    return Occupant(id=1, ideal_temp=17.0, sensitivity=2.0)


class TestSignedDiscomfort:
    """Tests for the signed discomfort curve."""

    @pytest.mark.unit
    def test_zero_at_ideal(self, occupant: Occupant) -> None:
        """Both branches vanish at the ideal temperature."""
        assert signed_discomfort(occupant, 17.0) == 0.0

    @pytest.mark.unit
    def test_cold_side_positive(self, occupant: Occupant) -> None:
        """Two degrees below ideal is 1 - e^-1."""
        assert signed_discomfort(occupant, 15.0) == pytest.approx(1 - math.exp(-1), abs=1e-12)

    @pytest.mark.unit
    def test_hot_side_negative(self, occupant: Occupant) -> None:
        """Two degrees above ideal is e^-1 - 1."""
        assert signed_discomfort(occupant, 19.0) == pytest.approx(math.exp(-1) - 1, abs=1e-12)

    @pytest.mark.unit
    def test_bounded_open_interval(self, occupant: Occupant) -> None:
        """Values stay strictly inside (-1, 1) for moderate offsets."""
        for temp in np.linspace(17.0 - 10.0, 17.0 + 10.0, 201):
            value = signed_discomfort(occupant, float(temp))
            assert -1.0 < value < 1.0

    @pytest.mark.unit
    def test_precision_near_ideal(self, occupant: Occupant) -> None:
        """Tiny offsets give tiny but nonzero discomfort."""
        value = signed_discomfort(occupant, 17.0 - 1e-6)
        assert value == pytest.approx(1e-12 / 4, rel=1e-6)

    @pytest.mark.unit
    @pytest.mark.parametrize("temp", [math.nan, math.inf, -math.inf])
    def test_rejects_non_finite(self, occupant: Occupant, temp: float) -> None:
        """Non-finite temperatures are domain errors."""
        with pytest.raises(ComfortDomainError, match="finite"):
            signed_discomfort(occupant, temp)


class TestAbsDiscomfort:
    """Tests for the absolute discomfort."""

    @pytest.mark.unit
    def test_examples(self, occupant: Occupant) -> None:
        """Absolute value of the signed curve."""
        assert abs_discomfort(occupant, 17.0) == 0.0
        assert abs_discomfort(occupant, 15.0) == pytest.approx(0.63212, abs=1e-5)

    @pytest.mark.unit
    def test_warmest_occupant_at_band_bottom(self) -> None:
        """Occupant 4 of the office scenario at 17 °C."""
        warm = Occupant(id=4, ideal_temp=20.0, sensitivity=2.8)
        assert abs_discomfort(warm, 17.0) == pytest.approx(1 - math.exp(-9 / 7.84), abs=1e-12)
        assert abs_discomfort(warm, 17.0) == pytest.approx(0.6829, abs=5e-4)

    @pytest.mark.unit
    def test_symmetric(self, occupant: Occupant) -> None:
        """Equal offsets on both sides give equal absolute discomfort."""
        assert abs_discomfort(occupant, 14.3) == pytest.approx(abs_discomfort(occupant, 19.7))


class TestComfortSignal:
    """Tests for the ternary comfort signal."""

    @pytest.mark.unit
    def test_examples(self) -> None:
        """Cold below, comfortable inside, hot above the interval."""
        occupant = Occupant(id=1, ideal_temp=18.0, sensitivity=2.0, tolerance=2.0)
        assert comfort_signal(occupant, 15.0) is ComfortSignal.COLD
        assert comfort_signal(occupant, 18.0) is ComfortSignal.COMFORTABLE
        assert comfort_signal(occupant, 20.0) is ComfortSignal.COMFORTABLE
        assert comfort_signal(occupant, 20.001) is ComfortSignal.HOT

    @pytest.mark.unit
    def test_lower_edge_inclusive(self) -> None:
        """The lower edge counts as comfortable."""
        occupant = Occupant(id=1, ideal_temp=18.0, sensitivity=2.0, tolerance=2.0)
        assert comfort_signal(occupant, 16.0) is ComfortSignal.COMFORTABLE
        assert comfort_signal(occupant, 15.999) is ComfortSignal.COLD

    @pytest.mark.unit
    def test_zero_tolerance_point(self) -> None:
        """With no tolerance only the ideal temperature is comfortable."""
        occupant = Occupant(id=1, ideal_temp=18.0, sensitivity=2.0)
        assert comfort_signal(occupant, 18.0) is ComfortSignal.COMFORTABLE
        assert comfort_signal(occupant, 17.9) is ComfortSignal.COLD
        assert comfort_signal(occupant, 18.1) is ComfortSignal.HOT


class TestVectorizedCurves:
    """Tests for the array versions."""

    @pytest.mark.unit
    def test_curves_match_scalars(self) -> None:
        """Vectorized curves agree with the scalar functions."""
        occupant = Occupant(id=2, ideal_temp=18.0, sensitivity=2.0, tolerance=1.0)
        temps = np.array([12.0, 16.99, 17.0, 18.0, 19.0, 19.01, 25.0])
        signed = discomfort_curve(occupant, temps)
        absolute = abs_discomfort_curve(occupant, temps)
        signals = signal_curve(occupant, temps)
        for i, temp in enumerate(temps):
            assert signed[i] == pytest.approx(signed_discomfort(occupant, float(temp)), abs=1e-15)
            assert absolute[i] == pytest.approx(abs_discomfort(occupant, float(temp)), abs=1e-15)
            assert signals[i] == int(comfort_signal(occupant, float(temp)))

    @pytest.mark.unit
    def test_four_curves_cross_zero_at_ideal(self) -> None:
        """Each occupant's signed curve changes sign at its own ideal temperature."""
        temps = np.linspace(10.0, 27.0, 1701)
        for ideal, sigma in zip((17.0, 18.0, 19.5, 20.0), (2.0, 3.0, 1.5, 2.5), strict=True):
            curve = discomfort_curve(Occupant(id=1, ideal_temp=ideal, sensitivity=sigma), temps)
            assert np.all(curve[temps < ideal] > 0)
            assert np.all(curve[temps > ideal] < 0)

    @pytest.mark.unit
    def test_rejects_non_finite(self, occupant: Occupant) -> None:
        """NaN anywhere in the array is rejected."""
        with pytest.raises(ComfortDomainError):
            discomfort_curve(occupant, [17.0, math.nan])
        with pytest.raises(ComfortDomainError):
            signal_curve(occupant, [math.inf])
