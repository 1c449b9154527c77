"""
Detour engine: longest paths from a vertex, between two vertices, per-vertex
detour orders and circumference.

Every entry point takes a SearchMode. Up to `certified_limit` vertices the
answer comes from the subset DP in `tables`; above it the branch-and-bound
search in `search` runs, exhaustively when an override is given and under a
node budget in Witnessed mode.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from detourkit.detour import search, tables
from detourkit.detour.modes import PathWitness, SearchMode
from detourkit.errors import BadVertex, BudgetExceeded
from detourkit.graphs.simple import SimpleGraph, induced_subgraph
from detourkit.graphs.structure import components
from detourkit.sequences.sequence import DetourSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathResult:
    order: int
    witness: PathWitness
    exact: bool


@dataclass(frozen=True)
class DetourProfile:
    tau: int
    sequence: DetourSequence
    deficiency: int
    per_vertex: list[int]
    connected: bool = True
    exact: bool = True
    witnesses: dict[int, PathWitness] = field(default_factory=dict, compare=False)

    @property
    def constant(self) -> bool:
        return self.sequence.is_constant

    def as_dict(self) -> dict:
        return {
            "n": len(self.per_vertex),
            "tau": self.tau,
            "deficiency": self.deficiency,
            "constant": self.constant,
            "sequence": self.sequence.format(),
            "per_vertex": self.per_vertex,
            "connected": self.connected,
            "exact": self.exact,
        }


def _check_vertex(g: SimpleGraph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise BadVertex(f"vertex {v} out of range for n={g.n}")


@lru_cache(maxsize=2)
def any_start_table(g: SimpleGraph) -> np.ndarray:
    """Endpoint table with every vertex as a start; cached for the last graphs seen."""
    return tables.endpoint_table(g.adj)


@lru_cache(maxsize=2)
def _any_start_orders(g: SimpleGraph) -> tuple[int, ...]:
    return tuple(tables.orders_from_unions(tables.layer_unions(any_start_table(g), g.n), g.n))


def vertex_orders(g: SimpleGraph) -> list[int]:
    """Exact tau(v) for every vertex via the subset DP."""
    return list(_any_start_orders(g))


def longest_path_from(g: SimpleGraph, v: int, mode: SearchMode | None = None) -> PathResult:
    """tau_G(v) with a witness starting at v."""
    mode = mode or SearchMode()
    _check_vertex(g, v)
    mode.check(g)
    if mode.use_table(g.n):
        k = _any_start_orders(g)[v]
        path = tables.lex_least_path(any_start_table(g), g.adj, v, k)
        return PathResult(k, PathWitness(tuple(path)), True)
    outcome = search.longest_path_search(
        g.adj, v, budget=mode.dfs_budget, warnsdorff=not mode.is_certified
    )
    if not outcome.complete and mode.is_certified:
        raise BudgetExceeded(f"search from {v} did not finish")
    return PathResult(outcome.order, PathWitness(tuple(outcome.path)), outcome.complete)


def path_of_order(g: SimpleGraph, v: int, target: int, mode: SearchMode | None = None) -> PathWitness | None:
    """Some path of order `target` starting at v, or None if none was found."""
    mode = mode or SearchMode.witnessed()
    _check_vertex(g, v)
    if mode.use_table(g.n):
        if _any_start_orders(g)[v] < target:
            return None
        return PathWitness(tuple(tables.lex_least_path(any_start_table(g), g.adj, v, target)))
    outcome = search.longest_path_search(
        g.adj, v, target=target, budget=mode.dfs_budget, warnsdorff=True
    )
    if outcome.order >= target:
        return PathWitness(tuple(outcome.path[:target]))
    return None


def longest_path_between(g: SimpleGraph, u: int, v: int, mode: SearchMode | None = None) -> int:
    """tau_G(u, v); 0 when no u-v path exists."""
    mode = mode or SearchMode()
    _check_vertex(g, u, v)
    if u == v:
        raise BadVertex(f"endpoints must differ, got {u} twice")
    mode.check(g)
    if mode.use_table(g.n):
        return pair_orders(g, u)[v]
    outcome = search.longest_path_between_search(g.adj, u, v, budget=mode.dfs_budget)
    if not outcome.complete and mode.is_certified:
        raise BudgetExceeded(f"search between {u} and {v} did not finish")
    return outcome.order


def pair_orders(g: SimpleGraph, u: int) -> list[int]:
    """tau_G(u, v) for every v (entry u is 1) via one source table."""
    _, unions = tables.source_unions(g.adj, u)
    return tables.orders_from_unions(unions, g.n)


def _profile_connected(g: SimpleGraph, mode: SearchMode) -> tuple[list[int], bool]:
    mode.check(g)
    if mode.use_table(g.n):
        return vertex_orders(g), True
    budget = mode.dfs_budget
    orders = [0] * g.n
    exact = True
    for v in g.vertices:
        outcome = search.longest_path_search(g.adj, v, budget=budget, warnsdorff=not mode.is_certified)
        orders[v] = max(orders[v], outcome.order)
        end = outcome.path[-1]
        orders[end] = max(orders[end], outcome.order)
        exact = exact and outcome.complete
        logger.debug("Vertex %d: order %d after %d nodes", v, outcome.order, outcome.nodes)
    if not exact and mode.is_certified:
        raise BudgetExceeded("detour profile search did not finish")
    return orders, exact


def detour_profile(g: SimpleGraph, mode: SearchMode | None = None) -> DetourProfile:
    """
    Per-vertex detour orders, the detour sequence and the deficiency.

    A disconnected graph is profiled component by component, each held to
    the certified limit on its own, and the result carries connected=False.
    """
    mode = mode or SearchMode()
    if g.n == 0:
        raise BadVertex("cannot profile the empty graph")
    comps = components(g)
    if len(comps) == 1:
        orders, exact = _profile_connected(g, mode)
    else:
        logger.warning("Graph with %d vertices has %d components; profiling each", g.n, len(comps))
        orders = [0] * g.n
        exact = True
        for comp in comps:
            sub = induced_subgraph(g, comp)
            sub_orders, sub_exact = _profile_connected(sub, mode)
            exact = exact and sub_exact
            for i, v in enumerate(comp):
                orders[v] = sub_orders[i]
    tau = max(orders)
    return DetourProfile(
        tau=tau,
        sequence=DetourSequence.from_terms(orders),
        deficiency=g.n - tau,
        per_vertex=orders,
        connected=len(comps) == 1,
        exact=exact,
    )


def is_traceable(g: SimpleGraph, mode: SearchMode | None = None) -> bool:
    """Hamiltonian path test; a found path settles it in either mode."""
    mode = mode or SearchMode()
    if g.n <= 1:
        return g.n == 1
    if mode.use_table(g.n):
        return bool(int(any_start_table(g)[g.full_mask]))
    mode.check(g)
    complete = True
    for v in sorted(g.vertices, key=lambda x: (g.degree(x), x)):
        outcome = search.longest_path_search(g.adj, v, budget=mode.dfs_budget, warnsdorff=True)
        if outcome.order == g.n:
            return True
        complete = complete and outcome.complete
    if not complete:
        raise BudgetExceeded(f"traceability of an order-{g.n} graph not settled within budget")
    return False


def is_hamiltonian(g: SimpleGraph, mode: SearchMode | None = None, prefix: list[int] | None = None) -> bool:
    """
    Hamiltonian cycle test. K1 and K2 count as hamiltonian; `prefix` forces
    the cycle to begin with the given vertices (used to force an edge).
    """
    mode = mode or SearchMode()
    if g.n <= 2:
        return g.n >= 1 and (g.n == 1 or g.has_edge(0, 1))
    if prefix is None and mode.use_table(g.n):
        return tables.hamiltonian_cycle_exists(g.adj)
    if not mode.use_table(g.n):
        mode.check(g)
    budget = None if mode.use_table(g.n) else mode.dfs_budget
    outcome = search.hamiltonian_cycle_search(g.adj, prefix, budget=budget)
    if not outcome.complete:
        raise BudgetExceeded(f"hamiltonicity of an order-{g.n} graph not settled within budget")
    return bool(outcome.path)


def circumference(g: SimpleGraph, mode: SearchMode | None = None) -> int:
    """Order of a longest cycle; 0 for a forest."""
    mode = mode or SearchMode()
    mode.check(g)
    if mode.use_table(g.n):
        return tables.circumference_table(g.adj)
    outcome = search.longest_cycle_search(g.adj, budget=mode.dfs_budget)
    if not outcome.complete:
        if mode.is_certified:
            raise BudgetExceeded("circumference search did not finish")
        logger.warning("Circumference search stopped early; %d is a lower bound", outcome.order)
    return outcome.order
