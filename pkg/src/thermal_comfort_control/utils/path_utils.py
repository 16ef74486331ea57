"""Default artifact filenames."""

import re
from collections.abc import Mapping

MAX_NAME_LENGTH = 120

_UNSAFE = re.compile(r"[^A-Za-z0-9.-]+")


def sanitize_for_filesystem(name: str) -> str:
    """Replace runs of unsafe characters with one underscore and cap the length."""
    sanitized = _UNSAFE.sub("_", name).strip("_")[:MAX_NAME_LENGTH].rstrip("_")
    return sanitized or "unnamed"


def format_qualifier(key: str, value: float | int | str) -> str:
    """
    Render one filename qualifier, e.g. ``delta_1.5`` or ``seed_42``.

    Floats use the shortest ``%g`` form so 1.50 and 1.5 name the same file.
    """
    text = f"{value:g}" if isinstance(value, float) else str(value)
    return f"{key}_{text}"


def create_artifact_filename(
    command: str, fmt: str, qualifiers: Mapping[str, float | int | str | None] | None = None
) -> str:
    """Create the default artifact filename for a command.

    Args:
        command: Subcommand producing the artifact
        fmt: Artifact format used as the extension
        qualifiers: Run parameters to encode, in order; ``None`` values are skipped

    Returns:
        Safe filename, e.g. ``signals_delta_1.5.csv``
    """
    parts = [command]
    for key, value in (qualifiers or {}).items():
        if value is not None:
            parts.append(format_qualifier(key, value))
    return f"{sanitize_for_filesystem('_'.join(parts))}.{fmt}"
