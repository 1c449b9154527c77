"""
Necessary conditions every CND graph satisfies, as a checklist.
"""

import math
from dataclasses import dataclass, field

from detourkit.detour import engine, search, tables
from detourkit.detour.engine import DetourProfile
from detourkit.detour.modes import SearchMode
from detourkit.graphs.simple import SimpleGraph, bits_of, iter_bits
from detourkit.graphs.structure import is_bipartite, is_two_connected


@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Checklist:
    items: list[CheckItem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)

    @property
    def failures(self) -> list[str]:
        return [item.name for item in self.items if not item.ok]

    def __getitem__(self, name: str) -> CheckItem:
        return next(item for item in self.items if item.name == name)

    def as_dict(self) -> dict:
        return {item.name: {"ok": item.ok, "detail": item.detail} for item in self.items}


def _detour_between_high_degree(g: SimpleGraph, tau: int, mode: SearchMode) -> tuple[bool, str]:
    high = bits_of(v for v in g.vertices if g.degree(v) >= 3)
    if mode.use_table(g.n):
        for s in iter_bits(high):
            _, unions = tables.source_unions(g.adj, s)
            ends = unions[tau] & high & ~(1 << s)
            if ends:
                return True, f"detour from {s} to {(ends & -ends).bit_length() - 1}"
        return False, "every detour has an end of degree at most 2"
    for s in iter_bits(high):
        outcome = search.longest_path_search(g.adj, s, target=tau, budget=mode.node_budget, warnsdorff=True)
        if outcome.order >= tau and high >> outcome.path[tau - 1] & 1:
            return True, f"detour from {s} to {outcome.path[tau - 1]}"
    return False, "no such detour found within the node budget"


def cnd_necessary_conditions(
    g: SimpleGraph, profile: DetourProfile | None = None, mode: SearchMode | None = None
) -> Checklist:
    """
    1. 2-connected
    2. every vertex has at most one neighbour of degree 2
    3. some detour has both ends of degree >= 3
    4. max degree <= tau - 4
    5. with T the degree-2 vertices, |V - T| >= |T|
    6. |E| >= ceil(5n/4)
    7. tau >= 9 and n >= 10
    8. a bipartite graph has max degree <= ceil((tau-2)/2)
    """
    mode = mode or SearchMode()
    profile = profile or engine.detour_profile(g, mode)
    tau = profile.tau
    degs = g.degrees
    two = bits_of(v for v in g.vertices if degs[v] == 2)
    crowded = [v for v in g.vertices if (g.adj[v] & two).bit_count() > 1]
    found, how = _detour_between_high_degree(g, tau, mode)
    min_size = math.ceil(5 * g.n / 4)
    bipartite = is_bipartite(g)
    bip_bound = math.ceil((tau - 2) / 2)
    items = [
        CheckItem("two_connected", is_two_connected(g)),
        CheckItem(
            "degree2_neighbours",
            not crowded,
            f"vertices with two degree-2 neighbours: {crowded}" if crowded else "",
        ),
        CheckItem("detour_ends_degree3", found, how),
        CheckItem("max_degree", g.max_degree <= tau - 4, f"max degree {g.max_degree}, tau {tau}"),
        CheckItem("degree2_minority", g.n - two.bit_count() >= two.bit_count(), f"{two.bit_count()} of {g.n}"),
        CheckItem("size", g.size >= min_size, f"{g.size} edges, need {min_size}"),
        CheckItem("tau_order", tau >= 9 and g.n >= 10, f"tau {tau}, order {g.n}"),
        CheckItem(
            "bipartite_degree",
            not bipartite or g.max_degree <= bip_bound,
            f"bipartite, max degree {g.max_degree}, bound {bip_bound}" if bipartite else "not bipartite",
        ),
    ]
    return Checklist(items)
