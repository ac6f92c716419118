from __future__ import annotations

import os
import time
from typing import Optional

DEFAULT_TIME_LIMIT_MS = 30_000


def default_time_limit_ms() -> int:
    """30 s unless ``GBP_TIME_LIMIT_MS`` says otherwise."""
    raw = os.environ.get("GBP_TIME_LIMIT_MS")
    if raw:
        return int(raw)
    return DEFAULT_TIME_LIMIT_MS


class Deadline:
    """Cooperative wall-clock deadline; ``None`` seconds means no limit."""

    def __init__(self, seconds: Optional[float] = None):
        self.limit = seconds
        self.end = None if seconds is None else time.perf_counter() + seconds

    def expired(self) -> bool:
        return self.end is not None and time.perf_counter() >= self.end

    @classmethod
    def from_ms(cls, ms: Optional[float]) -> "Deadline":
        return cls(None if ms is None else ms / 1000.0)
