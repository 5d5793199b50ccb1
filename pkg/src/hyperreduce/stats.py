"""Lightweight operation counters for CLI reports.

Counters are collected through a context variable so the math layer stays
pure and thread-safe: outside a collect_stats() block the bump calls are
no-ops; inside, each named counter is incremented on the collector bound
to the current context.
"""

from __future__ import annotations

import contextvars
from contextlib import contextmanager

_collector: contextvars.ContextVar = contextvars.ContextVar(
    "hyperreduce_stats", default=None)


def bump(name: str, amount: int = 1) -> None:
    counters = _collector.get()
    if counters is not None:
        counters[name] = counters.get(name, 0) + amount


@contextmanager
def collect_stats():
    counters: dict[str, int] = {}
    token = _collector.set(counters)
    try:
        yield counters
    finally:
        _collector.reset(token)
