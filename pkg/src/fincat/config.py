"""Global search limits."""
from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass


@dataclass
class Limits:
    budget: int = 2_000_000          # search nodes per decision procedure
    max_envelope_objects: int = 512
    max_envelope_morphisms: int = 8192
    max_em_objects: int = 512


limits = Limits()


@contextmanager
def budget(nodes: int):
    old = limits.budget
    limits.budget = nodes
    try:
        yield
    finally:
        limits.budget = old


class Counter:
    """Counts search nodes against the active budget."""

    __slots__ = ("nodes", "cap")

    def __init__(self, cap: int | None = None):
        self.nodes = 0
        self.cap = limits.budget if cap is None else cap

    def tick(self, n: int = 1) -> None:
        self.nodes += n
        if self.nodes > self.cap:
            from .errors import BudgetExceeded
            raise BudgetExceeded(f"search exceeded {self.cap} nodes")
