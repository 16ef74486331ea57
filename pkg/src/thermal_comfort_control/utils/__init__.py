#!/usr/bin/env python3

"""Utility functions."""

from .path_utils import create_artifact_filename, sanitize_for_filesystem

__all__ = [
    "create_artifact_filename",
    "sanitize_for_filesystem",
]
