#!/usr/bin/env python3

"""Tabular artifact export."""

from .artifact_writer import ArtifactWriter, format_audit_line

__all__ = [
    "ArtifactWriter",
    "format_audit_line",
]
