#!/usr/bin/env python3

"""Unit tests for the occupant, comfort band and sweep row models."""

import math

import pytest

from thermal_comfort_control.domain.exceptions import ComfortDomainError
from thermal_comfort_control.domain.models.comfort import (
    ComfortBand,
    ComfortSignal,
    Occupant,
    SweepResult,
)


class TestComfortSignal:
    """Tests for the ternary signal encoding."""

    @pytest.mark.unit
    def test_integer_encoding(self) -> None:
        """Cold sums as +1, hot as -1."""
        assert int(ComfortSignal.COLD) == 1
        assert int(ComfortSignal.COMFORTABLE) == 0
        assert int(ComfortSignal.HOT) == -1

    @pytest.mark.unit
    def test_string_representation(self) -> None:
        """States print as lowercase names."""
        assert str(ComfortSignal.COMFORTABLE) == "comfortable"


class TestOccupant:
    """Tests for Occupant validation and derived bounds."""

    @pytest.mark.unit
    def test_bounds(self) -> None:
        """Comfort interval is ideal ± tolerance."""
        occupant = Occupant(id=1, ideal_temp=18.0, sensitivity=2.0, tolerance=2.0)
        assert occupant.lower_bound == 16.0
        assert occupant.upper_bound == 20.0

    @pytest.mark.unit
    def test_default_tolerance_is_zero(self) -> None:
        """Without a tolerance the interval is a single point."""
        occupant = Occupant(id=1, ideal_temp=18.0, sensitivity=2.0)
        assert occupant.lower_bound == occupant.upper_bound == 18.0

    @pytest.mark.unit
    def test_with_tolerance_returns_copy(self) -> None:
        """Overriding the tolerance leaves the original untouched."""
        occupant = Occupant(id=3, ideal_temp=19.5, sensitivity=2.5)
        wider = occupant.with_tolerance(1.5)
        assert wider.tolerance == 1.5
        assert wider.ideal_temp == 19.5 and wider.id == 3
        assert occupant.tolerance == 0.0

    @pytest.mark.unit
    @pytest.mark.parametrize("sensitivity", [0.0, -1.0, math.nan, math.inf])
    def test_rejects_non_positive_sensitivity(self, sensitivity: float) -> None:
        """Sensitivity must be a positive finite number."""
        with pytest.raises(ComfortDomainError, match="sensitivity"):
            Occupant(id=1, ideal_temp=18.0, sensitivity=sensitivity)

    @pytest.mark.unit
    def test_rejects_negative_tolerance(self) -> None:
        """Tolerance must be non-negative."""
        with pytest.raises(ComfortDomainError, match="tolerance"):
            Occupant(id=1, ideal_temp=18.0, sensitivity=2.0, tolerance=-0.1)

    @pytest.mark.unit
    def test_rejects_non_finite_ideal(self) -> None:
        """Ideal temperature must be finite."""
        with pytest.raises(ComfortDomainError, match="ideal_temp"):
            Occupant(id=1, ideal_temp=math.inf, sensitivity=2.0)

    @pytest.mark.unit
    def test_domain_error_is_value_error(self) -> None:
        """Callers catching ValueError still see domain errors."""
        with pytest.raises(ValueError):
            Occupant(id=1, ideal_temp=18.0, sensitivity=0.0)


class TestComfortBand:
    """Tests for ComfortBand."""

    @pytest.mark.unit
    def test_width_and_midpoint(self) -> None:
        """Derived geometry of the band."""
        band = ComfortBand(17.0, 20.0)
        assert band.width == 3.0
        assert band.midpoint == 18.5

    @pytest.mark.unit
    def test_contains_is_closed(self) -> None:
        """Endpoints belong to the band."""
        band = ComfortBand(17.0, 20.0)
        assert band.contains(17.0) and band.contains(20.0)
        assert band.contains(18.0)
        assert not band.contains(20.001)

    @pytest.mark.unit
    def test_degenerate_band_allowed(self) -> None:
        """A single-point band is valid."""
        band = ComfortBand(18.5, 18.5)
        assert band.width == 0.0
        assert band.contains(18.5)

    @pytest.mark.unit
    def test_rejects_inverted(self) -> None:
        """t_min above t_max is invalid."""
        with pytest.raises(ComfortDomainError, match="inverted"):
            ComfortBand(20.0, 17.0)

    @pytest.mark.unit
    def test_rejects_residual_on_exact_band(self) -> None:
        """An exact-zero band has no residual."""
        with pytest.raises(ComfortDomainError):
            ComfortBand(17.0, 20.0, exact_zero=True, residual=1)

    @pytest.mark.unit
    def test_fallback_band_carries_residual(self) -> None:
        """A fallback band records the smallest |h|."""
        band = ComfortBand(17.0, 18.0, exact_zero=False, residual=1)
        assert band.residual == 1


class TestSweepResult:
    """Tests for SweepResult validation."""

    @pytest.mark.unit
    def test_valid_row(self) -> None:
        """worst_case equals the largest utility."""
        row = SweepResult(3.0, ComfortBand(17.0, 20.0), (0.1, 0.6, 0.3), 0.6)
        assert row.worst_case == 0.6

    @pytest.mark.unit
    def test_rejects_inconsistent_worst_case(self) -> None:
        """worst_case must be the maximum."""
        with pytest.raises(ComfortDomainError, match="worst_case"):
            SweepResult(3.0, ComfortBand(17.0, 20.0), (0.1, 0.6), 0.1)

    @pytest.mark.unit
    def test_rejects_out_of_range_utility(self) -> None:
        """Utilities are absolute discomforts in [0, 1]."""
        with pytest.raises(ComfortDomainError, match="out of range"):
            SweepResult(3.0, ComfortBand(17.0, 20.0), (1.5,), 1.5)
