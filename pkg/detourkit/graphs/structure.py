"""
Structural predicates: components, 2-connectivity, girth, claws, bipartiteness.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from detourkit.graphs.simple import SimpleGraph, iter_bits


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    two_connected: bool
    components: list[list[int]]
    min_degree: int
    max_degree: int
    girth: float
    claw_free: bool
    bipartite: bool
    colouring: list[int] | None = None

    @property
    def acyclic(self) -> bool:
        return math.isinf(self.girth)

    def as_dict(self) -> dict:
        return {
            "connected": self.connected,
            "two_connected": self.two_connected,
            "components": self.components,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "girth": None if self.acyclic else int(self.girth),
            "claw_free": self.claw_free,
            "bipartite": self.bipartite,
            "colouring": self.colouring,
        }


def component_masks(g: SimpleGraph, within: int | None = None) -> list[int]:
    """Connected components of g restricted to the vertex mask `within`."""
    free = g.full_mask if within is None else within
    comps = []
    while free:
        seed = free & -free
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            frontier = grow & free & ~comp
            comp |= frontier
        comps.append(comp)
        free &= ~comp
    return comps


def components(g: SimpleGraph) -> list[list[int]]:
    return [list(iter_bits(c)) for c in component_masks(g)]


def is_connected(g: SimpleGraph, within: int | None = None) -> bool:
    return len(component_masks(g, within)) <= 1


def cut_vertices(g: SimpleGraph) -> list[int]:
    """Articulation points by iterative Tarjan low-link."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts)


def is_two_connected(g: SimpleGraph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle, or inf for a forest (BFS from every vertex)."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            if 2 * dist[v] + 1 >= best:
                break
            for u in iter_bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def find_claw(g: SimpleGraph) -> tuple[int, int, int, int] | None:
    """Return (centre, a, b, c) of an induced K_{1,3}, or None."""
    for v in range(g.n):
        if g.degree(v) < 3:
            continue
        for a, b, c in combinations(g.neighbors(v), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return v, a, b, c
    return None


def is_claw_free(g: SimpleGraph) -> bool:
    return find_claw(g) is None


def two_colouring(g: SimpleGraph) -> list[int] | None:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return colour


def is_bipartite(g: SimpleGraph) -> bool:
    return two_colouring(g) is not None


def structure_report(g: SimpleGraph) -> StructureReport:
    comps = components(g)
    colouring = two_colouring(g)
    return StructureReport(
        connected=len(comps) <= 1,
        two_connected=is_two_connected(g),
        components=comps,
        min_degree=g.min_degree,
        max_degree=g.max_degree,
        girth=girth(g),
        claw_free=is_claw_free(g),
        bipartite=colouring is not None,
        colouring=colouring,
    )
