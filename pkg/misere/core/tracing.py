"""Structured iteration traces.

Each solver step is described by a TraceEvent and logged as a single JSON
line on the ``misere.trace`` logger. Ordinary diagnostics go through the
per-module loggers as usual.
"""

import logging
import sys
from typing import Any

from pydantic import BaseModel, Field

TRACE_LOGGER_NAME = "misere.trace"

trace_logger = logging.getLogger(TRACE_LOGGER_NAME)


class TraceEvent(BaseModel):
    """One step of a solve."""

    event: str  # "recalibrated", "converged", "heap", "budget"
    source: str = ""  # octal code or expression
    heap: int | None = None
    order: int | None = None
    failure: list[int] | None = None  # exponent vector
    failure_kind: str | None = None
    freed: list[int] | None = None  # alphabet indices, 1-based
    n: int | None = None
    k: int | None = None
    method: str | None = None
    elapsed: float = 0.0
    extra: dict[str, Any] = Field(default_factory=dict)


def emit(event: TraceEvent) -> TraceEvent:
    """Log the event as a JSON line and hand it back for in-memory traces."""
    if trace_logger.isEnabledFor(logging.INFO):
        trace_logger.info(event.model_dump_json(exclude_none=True))
    return event


def configure_logging(level: str = "WARNING", trace: bool = False) -> None:
    """Install stderr handlers for diagnostics and, optionally, JSON-line traces."""
    root = logging.getLogger("misere")
    root.setLevel(level)
    if not any(getattr(h, "_misere", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        handler._misere = True  # type: ignore[attr-defined]
        root.addHandler(handler)

    trace_logger.propagate = False
    trace_logger.setLevel(logging.INFO if trace else logging.WARNING)
    if trace and not trace_logger.handlers:
        trace_handler = logging.StreamHandler(sys.stderr)
        trace_handler.setFormatter(logging.Formatter("%(message)s"))
        trace_logger.addHandler(trace_handler)
