"""Prometheus metrics for the solver.

Counts the expensive steps of a solve (verification nodes, recalibrations,
heap resolution paths) so long runs can be profiled after the fact. Metrics
live on a private registry and are exported as a textfile by the CLI.
"""

from pathlib import Path

from prometheus_client import (
    CollectorRegistry,
    Counter,
    Gauge,
    Histogram,
    Info,
    write_to_textfile,
)

from misere import __version__
from misere.config import settings

REGISTRY = CollectorRegistry()


def get_registry() -> CollectorRegistry:
    """Get the registry the solver metrics are recorded on."""
    return REGISTRY


APP_INFO = Info("misere", "Misere quotient solver information", registry=REGISTRY)
APP_INFO.info({"version": __version__})


RECALIBRATIONS_TOTAL = Counter(
    "misere_recalibrations_total",
    "Recalibration attempts",
    ["outcome"],  # "accepted", "rejected", "too_large"
    registry=REGISTRY,
)

VERIFICATION_NODES_TOTAL = Counter(
    "misere_verification_nodes_total",
    "Positions visited by verification searches",
    ["kind"],  # "n_verify", "transitions", "exhaustive"
    registry=REGISTRY,
)

HEAPS_RESOLVED_TOTAL = Counter(
    "misere_heaps_resolved_total",
    "Heaps added to a partial quotient",
    ["method"],  # "dead", "interpolated", "filtered", "recalibrated"
    registry=REGISTRY,
)

CACHE_REQUESTS_TOTAL = Counter(
    "misere_cache_requests_total",
    "Quotient cache lookups",
    ["result"],  # "hit", "miss", "corrupt"
    registry=REGISTRY,
)

SOLVE_DURATION = Histogram(
    "misere_solve_duration_seconds",
    "Wall clock time of a solve",
    ["entry"],  # "octal", "closed_set"
    buckets=(0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0, 60.0, 300.0, 1800.0),
    registry=REGISTRY,
)

QUOTIENT_ORDER = Gauge(
    "misere_quotient_order",
    "Order of the most recently accepted candidate quotient",
    registry=REGISTRY,
)


def record_recalibration(outcome: str) -> None:
    if settings.metrics_enabled:
        RECALIBRATIONS_TOTAL.labels(outcome=outcome).inc()


def record_nodes(kind: str, count: int) -> None:
    if settings.metrics_enabled and count:
        VERIFICATION_NODES_TOTAL.labels(kind=kind).inc(count)


def record_heap(method: str) -> None:
    if settings.metrics_enabled:
        HEAPS_RESOLVED_TOTAL.labels(method=method).inc()


def record_cache(result: str) -> None:
    if settings.metrics_enabled:
        CACHE_REQUESTS_TOTAL.labels(result=result).inc()


def record_solve(entry: str, seconds: float, order: int) -> None:
    if settings.metrics_enabled:
        SOLVE_DURATION.labels(entry=entry).observe(seconds)
        QUOTIENT_ORDER.set(order)


def write_metrics(path: Path) -> None:
    """Dump every metric in the Prometheus text format."""
    write_to_textfile(str(path), REGISTRY)
