"""
Traceability and hamiltonicity classifications built on the engine:
traceable / hamiltonian / homogeneously traceable / hamiltonian-connected,
CND detection, hypohamiltonicity, maximal nontraceability and 1-toughness.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

from detourkit.config import settings
from detourkit.detour import engine, search, tables
from detourkit.detour.engine import DetourProfile
from detourkit.detour.modes import SearchMode
from detourkit.errors import BudgetExceeded, TooLarge
from detourkit.graphs.simple import SimpleGraph, bits_of
from detourkit.graphs.structure import component_masks, is_connected

logger = logging.getLogger(__name__)

# nodes spent looking for a quick hamiltonian path before falling back to the DP
_QUICK_BUDGET = 5_000


@dataclass(frozen=True)
class TraceabilityFlags:
    traceable: bool
    hamiltonian: bool
    homogeneously_traceable: bool
    hamiltonian_connected: bool

    @property
    def nhht(self) -> bool:
        return self.homogeneously_traceable and not self.hamiltonian

    def as_dict(self) -> dict:
        return {
            "traceable": self.traceable,
            "hamiltonian": self.hamiltonian,
            "homogeneously_traceable": self.homogeneously_traceable,
            "hamiltonian_connected": self.hamiltonian_connected,
        }


@dataclass(frozen=True)
class CndReport:
    is_cnd: bool
    connected: bool
    traceable: bool
    constant: bool
    profile: DetourProfile

    def __bool__(self) -> bool:
        return self.is_cnd


@dataclass(frozen=True)
class HypohamiltonicityFlags:
    hypohamiltonian: bool
    maximal_hypohamiltonian: bool


def kapoor_bound(g: SimpleGraph) -> int:
    """Lower bound 1 + min(n-1, 2*delta) on the detour order of a connected graph."""
    return 1 + min(g.n - 1, 2 * g.min_degree)


def _homogeneous_by_search(g: SimpleGraph, mode: SearchMode) -> bool:
    complete = True
    for v in g.vertices:
        outcome = search.longest_path_search(g.adj, v, budget=mode.dfs_budget, warnsdorff=True)
        if outcome.order < g.n:
            if outcome.complete:
                return False
            complete = False
    if not complete:
        raise BudgetExceeded("homogeneous traceability not settled within budget")
    return True


def _hamiltonian_connected(g: SimpleGraph, mode: SearchMode) -> bool:
    for u in g.vertices:
        if mode.use_table(g.n):
            table, _ = tables.source_unions(g.adj, u)
            ends = int(table[g.full_mask])
            if ends | (1 << u) != g.full_mask:
                return False
            continue
        for v in range(u + 1, g.n):
            if engine.longest_path_between(g, u, v, mode) < g.n:
                return False
    return True


def traceability_suite(g: SimpleGraph, mode: SearchMode | None = None) -> TraceabilityFlags:
    mode = mode or SearchMode()
    if not is_connected(g) or g.n == 0:
        return TraceabilityFlags(False, False, False, False)
    if g.n <= 2:
        return TraceabilityFlags(True, True, True, True)
    mode.check(g)
    if mode.use_table(g.n):
        ends = int(engine.any_start_table(g)[g.full_mask])
        traceable = ends != 0
        homogeneous = ends == g.full_mask
    else:
        traceable = engine.is_traceable(g, mode)
        homogeneous = traceable and _homogeneous_by_search(g, mode)
    hamiltonian = traceable and engine.is_hamiltonian(g, mode)
    connected = homogeneous and _hamiltonian_connected(g, mode)
    return TraceabilityFlags(traceable, hamiltonian, homogeneous, connected)


def is_detour_graph(g: SimpleGraph, mode: SearchMode | None = None) -> bool:
    return engine.detour_profile(g, mode).constant


def is_cnd(g: SimpleGraph, mode: SearchMode | None = None) -> CndReport:
    """Connected, nontraceable, constant detour sequence."""
    profile = engine.detour_profile(g, mode)
    traceable = profile.deficiency == 0
    return CndReport(
        is_cnd=profile.connected and not traceable and profile.constant,
        connected=profile.connected,
        traceable=traceable,
        constant=profile.constant,
        profile=profile,
    )


def _hamiltonian_with_edge(g: SimpleGraph, u: int, v: int, mode: SearchMode) -> bool:
    """Whether g + uv has a hamiltonian cycle through uv (g itself nonhamiltonian)."""
    h = g.add_edges([(u, v)])
    return engine.is_hamiltonian(h, mode, prefix=[u, v])


def hypohamiltonicity_suite(g: SimpleGraph, mode: SearchMode | None = None) -> HypohamiltonicityFlags:
    mode = mode or SearchMode()
    if g.n < 3 or engine.is_hamiltonian(g, mode):
        return HypohamiltonicityFlags(False, False)
    for v in g.vertices:
        if not engine.is_hamiltonian(g.remove_vertex(v), mode):
            logger.debug("G - %d is nonhamiltonian", v)
            return HypohamiltonicityFlags(False, False)
    for u, v in g.non_edges():
        if not _hamiltonian_with_edge(g, u, v, mode):
            logger.debug("G + %d%d is nonhamiltonian", u, v)
            return HypohamiltonicityFlags(True, False)
    return HypohamiltonicityFlags(True, True)


def traceable_quick(h: SimpleGraph, u: int, v: int, mode: SearchMode) -> bool:
    for s in (u, v):
        outcome = search.longest_path_search(h.adj, s, budget=_QUICK_BUDGET, warnsdorff=True)
        if outcome.order == h.n:
            return True
    return engine.is_traceable(h, mode)


def nontraceable_additions(g: SimpleGraph, mode: SearchMode | None = None) -> list[tuple[int, int]]:
    """Non-edges whose addition leaves g nontraceable."""
    mode = mode or SearchMode()
    return [(u, v) for u, v in g.non_edges() if not traceable_quick(g.add_edges([(u, v)]), u, v, mode)]


def is_mnt(g: SimpleGraph, mode: SearchMode | None = None) -> bool:
    """Maximal nontraceable: nontraceable, and traceable after adding any missing edge."""
    mode = mode or SearchMode()
    if engine.is_traceable(g, mode):
        return False
    for u, v in g.non_edges():
        if not traceable_quick(g.add_edges([(u, v)]), u, v, mode):
            logger.debug("G + %d%d is still nontraceable", u, v)
            return False
    return True


def is_1_tough(g: SimpleGraph) -> bool:
    """|S| >= k(G - S) for every cutset S, by exhaustion over small cutsets."""
    limit = settings.toughness_limit
    if g.n > limit:
        raise TooLarge(f"toughness check limited to {limit} vertices, got {g.n}")
    if not is_connected(g):
        return False
    full = g.full_mask
    for s in range(1, (g.n - 1) // 2 + 1):
        for cut in combinations(g.vertices, s):
            if len(component_masks(g, full & ~bits_of(cut))) > s:
                return False
    return True
