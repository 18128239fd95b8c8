"""Run configuration and work budgets."""
from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_MAX_SCHEMES = 5_000_000


class BudgetExceeded(RuntimeError):
    """The configured work budget ran out before a verdict was reached."""


@dataclass
class Budget:
    """Counts enumerated schemes and placements against an optional cap."""

    limit: int | None = DEFAULT_MAX_SCHEMES
    used: int = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"work budget of {self.limit} exhausted")

    def remaining(self) -> int | None:
        if self.limit is None:
            return None
        return max(self.limit - self.used, 0)


@dataclass(frozen=True)
class RunConfig:
    max_vertices: int = 16
    max_edges: int = 32
    max_schemes: int = DEFAULT_MAX_SCHEMES
    workers: int = 1
    output_format: str = "json"
    external_catalogs: tuple[str, ...] = field(default_factory=tuple)
    witness: bool = False

    def __post_init__(self) -> None:
        if self.max_schemes <= 0 or self.workers <= 0 or self.max_vertices <= 0 or self.max_edges <= 0:
            raise ValueError("budgets and worker counts must be positive")
        if self.output_format not in ("json", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    def new_budget(self) -> Budget:
        return Budget(self.max_schemes)
