"""Application layer for orchestrating domain and infrastructure components."""

from . import experiments

__all__ = ["experiments"]
