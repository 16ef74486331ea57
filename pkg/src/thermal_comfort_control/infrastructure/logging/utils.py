#!/usr/bin/env python3

"""Logger lookup and timing of solver and experiment calls."""

import logging
from collections.abc import Callable, Sized
from functools import wraps
from time import perf_counter
from typing import Any, TypeVar, cast

F = TypeVar("F", bound=Callable[..., Any])


def get_logger(name: str) -> logging.Logger:
    """Return the logger for a module, normally called with ``__name__``."""
    return logging.getLogger(name)


def describe_result(result: Any) -> str:
    """
    Summarize the size of a timed result for the log.

    Experiments report their table shape, traces and sweeps their length.

    Returns:
        A short note such as ``"101x6 table"`` or ``"8401 entries"``, or an
        empty string when the result has no meaningful size
    """
    frame = getattr(result, "frame", None)
    shape = getattr(frame, "shape", None)
    if shape is not None and len(shape) == 2:
        return f"{shape[0]}x{shape[1]} table"
    if isinstance(result, Sized) and not isinstance(result, str | bytes):
        return f"{len(result)} entries"
    return ""


def log_timing(func: F) -> F:
    """
    Log the wall time of ``func`` at DEBUG together with the size of its result.

    Failures are logged at ERROR with the elapsed time and re-raised.
    """

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        logger = get_logger(func.__module__)
        name = func.__qualname__
        start = perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.error(
                f"Failed {name} after {perf_counter() - start:.3f}s: {type(e).__name__}: {e}"
            )
            raise

        size = describe_result(result)
        note = f" ({size})" if size else ""
        logger.debug(f"Completed {name} in {perf_counter() - start:.3f}s{note}")
        return result

    return cast("F", wrapper)
