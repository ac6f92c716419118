from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Optional

from .graph import Solution


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    TIMEOUT = "timeout_incumbent"
    INFEASIBLE_INPUT = "infeasible_input"
    UNSUPPORTED = "unsupported_habitats"
    # feasible but without an optimality claim (approximation)
    HEURISTIC = "heuristic"


@dataclass
class SolveResult:
    solution: Optional[Solution]
    status: Status
    wall_time: float  # seconds
    lower_bound: Optional[int] = None
    build_time: float = 0.0
    solver: str = ""
    message: str = ""
    stats: dict = field(default_factory=dict)

    @property
    def cost(self) -> Optional[int]:
        return None if self.solution is None else self.solution.total_cost

    @property
    def solve_time(self) -> float:
        """Seconds spent searching, without building auxiliary structures."""
        return max(0.0, self.wall_time - self.build_time)

    @property
    def ok(self) -> bool:
        return self.status in (Status.OPTIMAL, Status.HEURISTIC, Status.TIMEOUT) and self.solution is not None

    def decide(self, budget: Optional[int]) -> Optional[bool]:
        """Budget decision; ``None`` when it cannot be settled from this result."""
        if budget is None or self.solution is None:
            return None
        if self.status is Status.OPTIMAL:
            return self.solution.total_cost <= budget
        if self.solution.total_cost <= budget:
            return True
        if self.lower_bound is not None and self.lower_bound > budget:
            return False
        return None

    @classmethod
    def failed(cls, status: Status, started: float, solver: str, message: str = "") -> "SolveResult":
        return cls(None, status, time.perf_counter() - started, solver=solver, message=message)
