"""Append-only usage-event log (query / view / edit / submit)."""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass

EVENT_KINDS = ("query", "view", "edit", "submit")


@dataclass(frozen=True)
class UsageEvent:
    timestamp: float
    session_id: str
    kind: str
    payload: str


class EventLog:
    """Thread-safe append-only log with a total arrival order."""

    def __init__(self):
        self._events: list[UsageEvent] = []
        self._lock = threading.Lock()

    def record(self, kind: str, session_id: str, payload: str) -> UsageEvent:
        if kind not in EVENT_KINDS:
            raise ValueError(f"unknown event kind: {kind}")
        event = UsageEvent(time.time(), session_id, kind, payload)
        with self._lock:
            self._events.append(event)
        return event

    def all(self) -> list[UsageEvent]:
        with self._lock:
            return list(self._events)

    def count(self, kind: str | None = None) -> int:
        with self._lock:
            if kind is None:
                return len(self._events)
            return sum(1 for e in self._events if e.kind == kind)
