from dataclasses import dataclass, field
from enum import Enum

from detourkit.config import settings
from detourkit.errors import BudgetExceeded
from detourkit.graphs.simple import SimpleGraph


class Mode(str, Enum):
    CERTIFIED = "certified"
    WITNESSED = "witnessed"


@dataclass(frozen=True)
class SearchMode:
    """
    How the engine may answer.

    Certified answers are exhaustive: the subset DP up to `certified_limit`
    vertices, branch-and-bound above it only when `override` is set.
    Witnessed answers come from a budgeted search and are lower bounds.
    """

    mode: Mode = Mode.CERTIFIED
    certified_limit: int = field(default_factory=lambda: settings.certified_limit)
    node_budget: int = field(default_factory=lambda: settings.node_budget)
    override: bool = False

    @classmethod
    def certified(cls, override: bool = False) -> "SearchMode":
        return cls(Mode.CERTIFIED, override=override)

    @classmethod
    def witnessed(cls, node_budget: int | None = None) -> "SearchMode":
        if node_budget is None:
            return cls(Mode.WITNESSED)
        return cls(Mode.WITNESSED, node_budget=node_budget)

    @property
    def is_certified(self) -> bool:
        return self.mode is Mode.CERTIFIED

    def use_table(self, n: int) -> bool:
        return n <= self.certified_limit

    def check(self, g: SimpleGraph) -> None:
        """Raise when a certified answer is requested beyond the limit without override."""
        if self.is_certified and not self.use_table(g.n) and not self.override:
            raise BudgetExceeded(
                f"certified search limited to {self.certified_limit} vertices, got {g.n}; "
                "pass override to run the exhaustive search"
            )

    @property
    def dfs_budget(self) -> int | None:
        """Node budget for the DFS; None means run to completion."""
        return None if self.is_certified else self.node_budget


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def is_valid(self, g: SimpleGraph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        return all(g.has_edge(a, b) for a, b in zip(vs, vs[1:]))


@dataclass(frozen=True)
class TrailWitness:
    """Alternating vertex / edge-id sequence v0, e0, v1, e1, ..., vk."""

    steps: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.steps[0::2]

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return self.steps[1::2]

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    def is_valid(self, mg) -> bool:
        eids = self.edge_ids
        if len(set(eids)) != len(eids):
            return False
        vs = self.vertices
        for i, e in enumerate(eids):
            a, b = mg.edges[e]
            if {a, b} != {vs[i], vs[i + 1]}:
                return False
        return True
