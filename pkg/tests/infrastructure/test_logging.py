"""Tests for logging setup, timing and progress tracking."""

import logging
from pathlib import Path
from types import SimpleNamespace

import pandas as pd
import pytest

from thermal_comfort_control.infrastructure.logging import (
    LoggerSetup,
    ProgressTracker,
    describe_result,
    get_logger,
    log_timing,
)


@pytest.mark.unit
def test_logger_setup_creates_log_file(tmp_path: Path, reset_logging: None) -> None:
    """Test that initialization writes DEBUG records to a timestamped file."""
    LoggerSetup.initialize(tmp_path / "logs", verbose=False)
    assert LoggerSetup.is_initialized()

    log_file = LoggerSetup.get_log_file_path()
    assert log_file is not None
    assert log_file.parent == tmp_path / "logs"
    assert log_file.name.startswith("thermal_comfort_")

    get_logger("thermal_comfort_control.test").debug("band solved")
    for handler in logging.getLogger().handlers:
        handler.flush()
    assert "band solved" in log_file.read_text(encoding="utf-8")


@pytest.mark.unit
def test_logger_setup_without_file(reset_logging: None) -> None:
    """Test console-only logging."""
    LoggerSetup.initialize(None, verbose=True)
    assert LoggerSetup.get_log_file_path() is None
    assert LoggerSetup.is_initialized()


@pytest.mark.unit
def test_logger_setup_reset(tmp_path: Path) -> None:
    """Test that reset removes only the handlers it installed."""
    LoggerSetup.initialize(tmp_path, verbose=False)
    installed = len(logging.getLogger().handlers)
    LoggerSetup.reset()
    assert not LoggerSetup.is_initialized()
    assert len(logging.getLogger().handlers) == installed - 2


@pytest.mark.unit
def test_log_timing_returns_result(caplog: pytest.LogCaptureFixture) -> None:
    """Test that the decorator is transparent and logs completion."""

    @log_timing
    def solve(x: int) -> int:
        return x * 2

    with caplog.at_level(logging.DEBUG):
        assert solve(21) == 42
    assert any("Completed" in record.message and "solve" in record.message
               for record in caplog.records)


@pytest.mark.unit
def test_log_timing_reraises(caplog: pytest.LogCaptureFixture) -> None:
    """Test that failures are logged and propagated."""

    @log_timing
    def diverge() -> None:
        raise ArithmeticError("room left range")

    with caplog.at_level(logging.DEBUG), pytest.raises(ArithmeticError):
        diverge()
    assert any(record.levelno == logging.ERROR for record in caplog.records)


@pytest.mark.unit
def test_log_timing_reports_size(caplog: pytest.LogCaptureFixture) -> None:
    """Test that sized results are described in the completion message."""

    @log_timing
    def grid() -> list[float]:
        return [0.0, 0.5, 1.0]

    with caplog.at_level(logging.DEBUG):
        grid()
    assert any("(3 entries)" in record.message for record in caplog.records)


@pytest.mark.unit
@pytest.mark.parametrize(
    ("result", "expected"),
    [
        (SimpleNamespace(frame=pd.DataFrame({"a": [1, 2], "b": [3, 4]})), "2x2 table"),
        ([1, 2, 3], "3 entries"),
        ("text", ""),
        (None, ""),
        (1.5, ""),
    ],
)
def test_describe_result(result: object, expected: str) -> None:
    """Test the size note for tables, sequences and scalars."""
    assert describe_result(result) == expected


class TestProgressTracker:
    """Tests for ProgressTracker."""

    @pytest.mark.unit
    def test_counts_and_summary(self, mocker) -> None:
        """Rows and steps are accumulated and reported."""
        logger = mocker.Mock(spec=logging.Logger)
        tracker = ProgressTracker(logger)
        tracker.count_rows()
        tracker.count_rows(100)
        tracker.count_steps(8400, hours=168.0)
        tracker.report_summary()

        message = logger.info.call_args.args[0]
        assert "101 rows" in message
        assert "8400 steps over 168 h" in message

    @pytest.mark.unit
    def test_operation_times_accumulate(self, mocker) -> None:
        """Repeated operations add up under one name."""
        tracker = ProgressTracker(mocker.Mock(spec=logging.Logger))
        for _ in range(3):
            with tracker.track_operation("sweep"):
                pass
        assert list(tracker.operation_times) == ["sweep"]
        assert tracker.operation_times["sweep"] >= 0.0

    @pytest.mark.unit
    def test_operation_context(self, mocker) -> None:
        """Nested operations form a readable context."""
        tracker = ProgressTracker(mocker.Mock(spec=logging.Logger))
        assert tracker.get_current_context() == "idle"
        with tracker.track_operation("sweep"), tracker.track_operation("row"):
            assert tracker.get_current_context() == "sweep → row"
        assert tracker.get_current_context() == "idle"

    @pytest.mark.unit
    def test_failed_operation_logged(self, mocker) -> None:
        """Exceptions inside an operation are logged and re-raised."""
        logger = mocker.Mock(spec=logging.Logger)
        tracker = ProgressTracker(logger)
        with pytest.raises(ValueError), tracker.track_operation("simulate"):
            raise ValueError("bad")
        assert "simulate" in logger.error.call_args.args[0]
        assert tracker.get_current_context() == "idle"

    @pytest.mark.unit
    def test_memory_usage(self, mocker) -> None:
        """Resident memory is reported in MB."""
        process = mocker.patch("psutil.Process")
        process.return_value.memory_info.return_value.rss = 100 * 1024 * 1024
        logger = mocker.Mock(spec=logging.Logger)

        ProgressTracker(logger).log_memory_usage()

        assert "100.0 MB" in logger.debug.call_args.args[0]
