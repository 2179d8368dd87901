"""Work limits shared by the enumeration kernels.

Every potentially exponential operation (polynomial expansion, arc-subset
enumeration, orientation search, list-assignment enumeration) accounts its
work against a Budget.  Limits are expressed in reproducible units
(term-multiplication events, subsets, orientations, assignments) plus a
wall-clock ceiling as an operator safety net.  Exceeding a limit raises
BudgetExceededError carrying the progress counters; callers never receive
a silently truncated result.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field


class BudgetExceededError(RuntimeError):
    """A work limit was hit before the operation finished.

    Attributes:
        limit_kind: which limit fired ("term_ops", "subsets", "orientations",
            "assignments", "time", or "parity_edges").
        stats: counter snapshot at the moment the limit fired.
        atn_lower_bound: best lower bound on the Alon-Tarsi number proven
            before the limit fired, when the failing operation was an AT
            computation (None otherwise).
    """

    def __init__(self, message: str, *, limit_kind: str, stats: dict,
                 atn_lower_bound: int | None = None):
        super().__init__(message)
        self.limit_kind = limit_kind
        self.stats = stats
        self.atn_lower_bound = atn_lower_bound


@dataclass
class Budget:
    """Mutable work meter with optional limits (None = unlimited).

    Defaults: 1e7 term multiplications, 2**26 enumerated subsets, 60 s of
    wall clock, and direct parity enumeration only up to 26 arcs.
    """

    max_term_ops: int | None = 10_000_000
    max_subsets: int | None = 1 << 26
    max_orientations: int | None = None
    max_assignments: int | None = 1_000_000
    max_ms: float | None = 60_000.0
    max_parity_edges: int = 26

    term_ops: int = 0
    subsets: int = 0
    orientations: int = 0
    assignments: int = 0
    _start: float = field(default_factory=time.monotonic, repr=False)

    @classmethod
    def unlimited(cls, max_parity_edges: int = 26) -> "Budget":
        return cls(max_term_ops=None, max_subsets=None, max_orientations=None,
                   max_assignments=None, max_ms=None,
                   max_parity_edges=max_parity_edges)

    def elapsed_ms(self) -> float:
        return (time.monotonic() - self._start) * 1000.0

    def stats(self) -> dict:
        return {
            "term_ops": self.term_ops,
            "subsets": self.subsets,
            "orientations": self.orientations,
            "assignments": self.assignments,
        }

    def _exceeded(self, kind: str, atn_lower_bound: int | None = None):
        raise BudgetExceededError(
            f"budget exceeded ({kind}): {self.stats()}",
            limit_kind=kind, stats=self.stats(),
            atn_lower_bound=atn_lower_bound)

    def check_time(self):
        if self.max_ms is not None and self.elapsed_ms() > self.max_ms:
            self._exceeded("time")

    def charge_term_ops(self, k: int):
        self.term_ops += k
        if self.max_term_ops is not None and self.term_ops > self.max_term_ops:
            self._exceeded("term_ops")
        self.check_time()

    def charge_subsets(self, k: int):
        self.subsets += k
        if self.max_subsets is not None and self.subsets > self.max_subsets:
            self._exceeded("subsets")
        self.check_time()

    def charge_orientations(self, k: int = 1):
        self.orientations += k
        if (self.max_orientations is not None
                and self.orientations > self.max_orientations):
            self._exceeded("orientations")

    def charge_assignments(self, k: int = 1):
        self.assignments += k
        if (self.max_assignments is not None
                and self.assignments > self.max_assignments):
            self._exceeded("assignments")
        self.check_time()
