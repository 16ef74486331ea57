"""Run-level application settings for the command-line tool."""

from dataclasses import dataclass, replace
from pathlib import Path

from ...domain.exceptions import ConfigValidationError
from .scenario_config import OUTPUT_FORMATS, OutputSettings


@dataclass(frozen=True)
class Config:
    """Settings of one command invocation.

    ``format`` and ``output_dir`` start as command line overrides and are
    completed from the scenario's ``output`` section by :meth:`with_output`.
    """

    output_dir: Path | None = None
    verbose: bool = False
    log_dir: Path | None = Path("logs")
    format: str | None = None

    @classmethod
    def from_args(
        cls,
        verbose: bool = False,
        log_dir: Path | None = None,
        log_file: bool = True,
        fmt: str | None = None,
    ) -> "Config":
        """
        Create configuration from command line values.

        Args:
            verbose: Enable debug output on the console
            log_dir: Directory for the debug log file, default ``logs``
            log_file: Whether to write a debug log file at all
            fmt: Artifact format override, ``csv`` or ``json``

        Returns:
            Config object
        """
        return cls(
            verbose=verbose,
            log_dir=(log_dir or cls.log_dir) if log_file else None,
            format=fmt,
        )

    def with_output(self, output: OutputSettings) -> "Config":
        """Fill the artifact directory and any format not given on the command line."""
        return replace(self, output_dir=output.directory, format=self.format or output.format)

    def validate(self) -> None:
        """
        Validate the configuration.

        Raises:
            ConfigValidationError: If configuration is invalid
        """
        if self.format not in OUTPUT_FORMATS:
            raise ConfigValidationError(
                "format", f"must be one of {', '.join(OUTPUT_FORMATS)}, got {self.format!r}"
            )

        if self.output_dir is None:
            raise ConfigValidationError("output_dir", "not set")
        if self.output_dir.exists() and not self.output_dir.is_dir():
            raise ConfigValidationError("output_dir", f"not a directory: {self.output_dir}")
