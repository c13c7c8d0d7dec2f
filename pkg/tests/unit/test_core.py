import json
import logging
from pathlib import Path

import pytest
from pydantic import ValidationError

from misere.config import Settings
from misere.core.exceptions import (
    BudgetExceededError,
    CodeSyntaxError,
    MisereError,
    RecalibrationStuckError,
)
from misere.core.metrics import REGISTRY, record_heap, write_metrics
from misere.core.tracing import TraceEvent, emit, trace_logger


class TestSettings:
    """Environment-driven configuration."""

    def test_env_prefix(self, monkeypatch):
        monkeypatch.setenv("MISERE_MAX_ELEMENTS", "7")
        monkeypatch.setenv("MISERE_SHORTCUTS", "false")
        s = Settings()
        assert s.max_elements == 7
        assert s.shortcuts is False

    def test_rejects_non_positive_budget(self):
        with pytest.raises(ValidationError):
            Settings(max_elements=0)
        with pytest.raises(ValidationError):
            Settings(max_seconds=0)

    def test_cache_dir_expanded(self):
        assert Settings(cache_dir="~/quotients").cache_dir == Path.home() / "quotients"


class TestExceptions:
    def test_syntax_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            raise CodeSyntaxError("malformed octal code")

    def test_budget_carries_details(self):
        e = BudgetExceededError("out of nodes", budget="max_nodes", frontier=[1, 0, 2])
        assert isinstance(e, MisereError)
        assert e.code == "budget"
        assert e.budget == "max_nodes"
        assert e.frontier == [1, 0, 2]

    def test_stuck_diagnostics_default(self):
        assert RecalibrationStuckError("stuck").diagnostics == {}


class TestMetrics:
    def test_heap_counter(self):
        labels = {"method": "dead"}
        before = REGISTRY.get_sample_value("misere_heaps_resolved_total", labels) or 0.0
        record_heap("dead")
        assert REGISTRY.get_sample_value("misere_heaps_resolved_total", labels) == before + 1

    def test_textfile(self, tmp_path):
        record_heap("filtered")
        target = tmp_path / "misere.prom"
        write_metrics(target)
        assert "misere_heaps_resolved_total" in target.read_text()


class _Collect(logging.Handler):
    def __init__(self):
        super().__init__()
        self.messages: list[str] = []

    def emit(self, record):
        self.messages.append(record.getMessage())


class TestTracing:
    def test_emit_writes_json_line(self):
        handler = _Collect()
        level = trace_logger.level
        trace_logger.addHandler(handler)
        trace_logger.setLevel(logging.INFO)
        try:
            event = emit(TraceEvent(event="heap", source="0.75", heap=3, method="dead"))
        finally:
            trace_logger.removeHandler(handler)
            trace_logger.setLevel(level)
        assert event.heap == 3
        line = json.loads(handler.messages[0])
        assert line["event"] == "heap"
        assert line["method"] == "dead"
        assert "order" not in line

    def test_silent_by_default(self):
        handler = _Collect()
        level = trace_logger.level
        trace_logger.addHandler(handler)
        trace_logger.setLevel(logging.WARNING)
        try:
            emit(TraceEvent(event="converged", order=6))
        finally:
            trace_logger.removeHandler(handler)
            trace_logger.setLevel(level)
        assert handler.messages == []
