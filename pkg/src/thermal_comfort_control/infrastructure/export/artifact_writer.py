#!/usr/bin/env python3

"""Write experiment tables as CSV or JSON artifacts.

CSV files start with a single ``#`` audit line recording the command, seed
and parameters, followed by the header row. JSON files hold the same values
under ``"meta"``, the column order under ``"columns"`` and the table under
``"rows"``, with floats at six significant digits.
"""

import json
import math
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import pandas as pd

from ...domain.exceptions import ConfigValidationError
from ..config.scenario_config import OUTPUT_FORMATS
from ..logging import get_logger

logger = get_logger(__name__)

FLOAT_FORMAT = "%.6g"


def _audit_value(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".6g")
    if isinstance(value, list | tuple):
        return ",".join(_audit_value(item) for item in value)
    return "_".join(str(value).split())


def _json_value(value: Any) -> Any:
    # step function tails are infinite; JSON has no literal for them
    if isinstance(value, float):
        return float(format(value, ".6g")) if math.isfinite(value) else None
    return value


def format_audit_line(meta: Mapping[str, Any]) -> str:
    """Render ``meta`` as ``# key=value ...`` with ``command`` and ``seed`` first."""
    ordered = {"command": meta.get("command"), "seed": meta.get("seed")}
    ordered.update({key: value for key, value in meta.items() if key not in ordered})
    return "# " + " ".join(f"{key}={_audit_value(value)}" for key, value in ordered.items())


class ArtifactWriter:
    """Writes DataFrames in one fixed format."""

    def __init__(self, fmt: str = "csv"):
        """
        Initialize writer.

        Args:
            fmt: ``csv`` or ``json``

        Raises:
            ConfigValidationError: For an unknown format
        """
        if fmt not in OUTPUT_FORMATS:
            raise ConfigValidationError(
                "format", f"must be one of {', '.join(OUTPUT_FORMATS)}, got {fmt!r}"
            )
        self.format = fmt

    def write(self, frame: pd.DataFrame, path: Path, meta: Mapping[str, Any]) -> Path:
        """
        Write ``frame`` to ``path``, creating parent directories.

        Args:
            frame: Table to write; column order is preserved
            path: Destination file
            meta: Command name, seed and parameters for the audit trail

        Returns:
            The written path

        Raises:
            OSError: If the file cannot be written
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        if self.format == "csv":
            self._write_csv(frame, path, meta)
        else:
            self._write_json(frame, path, meta)
        logger.info(f"Wrote {len(frame)} rows to {path}")
        return path

    @staticmethod
    def _write_csv(frame: pd.DataFrame, path: Path, meta: Mapping[str, Any]) -> None:
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(format_audit_line(meta) + "\n")
            frame.to_csv(handle, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")

    @staticmethod
    def _write_json(frame: pd.DataFrame, path: Path, meta: Mapping[str, Any]) -> None:
        document = {
            "meta": dict(meta),
            "columns": [str(column) for column in frame.columns],
            "rows": [
                {key: _json_value(value) for key, value in row.items()}
                for row in frame.to_dict(orient="records")
            ],
        }
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(json.dumps(document, default=str) + "\n")
