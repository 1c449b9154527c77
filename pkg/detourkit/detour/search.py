"""
Branch-and-bound depth-first search for long paths and hamiltonian cycles.

Used above the subset-DP limit and as the independent cross-check of the
DP below it. Neighbours are tried in ascending order, so with the default
ordering the first path found of each length is the lexicographically least;
`warnsdorff=True` tries neighbours with the fewest onward options first,
which finds long paths in sparse graphs much sooner.

Bounds for a partial path ending at `cur`:
- only vertices reachable from `cur` through unvisited vertices can be added;
- among those, vertices with a single usable neighbour can only end the
  path, so all but one of them are lost.
"""

import logging
from dataclasses import dataclass

from detourkit.graphs.simple import iter_bits

logger = logging.getLogger(__name__)


@dataclass
class SearchOutcome:
    path: list[int]
    complete: bool
    nodes: int

    @property
    def order(self) -> int:
        return len(self.path)


class _Stop(Exception):
    pass


def reachable_from(adj, cur: int, free: int) -> int:
    """Mask of vertices in `free` reachable from cur through `free`."""
    comp = 0
    frontier = adj[cur] & free
    while frontier:
        comp |= frontier
        grow = 0
        for v in iter_bits(frontier):
            grow |= adj[v]
        frontier = grow & free & ~comp
    return comp


def _upper_bound(adj, cur: int, free: int, placed: int) -> int:
    region = reachable_from(adj, cur, free)
    if not region:
        return placed
    usable = region | (1 << cur)
    ends = 0
    for w in iter_bits(region):
        if (adj[w] & usable).bit_count() == 1:
            ends += 1
    return placed + region.bit_count() - max(0, ends - 1)


def longest_path_search(
    adj,
    start: int,
    *,
    within: int | None = None,
    target: int | None = None,
    budget: int | None = None,
    warnsdorff: bool = False,
) -> SearchOutcome:
    """
    Longest path starting at `start` inside `within`.

    Stops early once a path of order `target` is found. `complete` is true
    when the returned path is proven longest: the search finished, or the
    path already covers every allowed vertex.
    """
    n = len(adj)
    allowed = ((1 << n) - 1) if within is None else within
    total = allowed.bit_count()
    goal = total if target is None else min(target, total)
    best = [start]
    path = [start]
    nodes = 0
    finished = True

    def rec(cur: int, visited: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Stop
        if len(path) > len(best):
            best = path.copy()
            if len(best) >= goal:
                raise _Stop
        free = allowed & ~visited
        options = adj[cur] & free
        if not options:
            return
        if _upper_bound(adj, cur, free, len(path)) <= len(best):
            return
        nxt = list(iter_bits(options))
        if warnsdorff:
            nxt.sort(key=lambda u: ((adj[u] & free).bit_count(), u))
        for u in nxt:
            path.append(u)
            rec(u, visited | (1 << u))
            path.pop()

    try:
        rec(start, 1 << start)
    except _Stop:
        finished = len(best) >= total
        if budget is not None and nodes > budget:
            logger.debug("Path search from %d stopped after %d nodes at order %d", start, nodes, len(best))
    return SearchOutcome(best, finished, nodes)


def longest_path_between_search(adj, u: int, v: int, budget: int | None = None) -> SearchOutcome:
    """Longest u-v path; the returned path is empty when v is unreachable."""
    n = len(adj)
    full = (1 << n) - 1
    best: list[int] = []
    path = [u]
    nodes = 0

    def rec(cur: int, visited: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Stop
        if cur == v:
            if len(path) > len(best):
                best = path.copy()
                if len(best) == n:
                    raise _Stop
            return
        free = full & ~visited
        region = reachable_from(adj, cur, free)
        if not region >> v & 1:
            return
        if len(path) + region.bit_count() <= len(best):
            return
        for w in iter_bits(adj[cur] & free):
            path.append(w)
            rec(w, visited | (1 << w))
            path.pop()

    complete = True
    try:
        rec(u, 1 << u)
    except _Stop:
        complete = len(best) == n
    return SearchOutcome(best, complete, nodes)


def hamiltonian_cycle_search(adj, prefix: list[int] | None = None, budget: int | None = None) -> SearchOutcome:
    """
    Search for a hamiltonian cycle whose vertex order begins with `prefix`
    (default: vertex 0). The path is the cycle minus its closing edge; an
    empty path with complete=True proves there is none.
    """
    n = len(adj)
    full = (1 << n) - 1
    prefix = prefix or [0]
    start = prefix[0]
    found: list[int] = []
    nodes = 0
    path = list(prefix)

    if n < 3:
        return SearchOutcome([], True, 0)

    def feasible(cur: int, visited: int) -> bool:
        free = full & ~visited
        if not free:
            return True
        if not adj[start] & free:
            return False
        avail = free | (1 << cur) | (1 << start)
        forced = 0
        for w in iter_bits(free):
            usable = adj[w] & avail
            c = usable.bit_count()
            if c < 2:
                return False
            if c == 2 and usable >> cur & 1 and cur != start:
                forced += 1
        if forced > 1:
            return False
        return reachable_from(adj, cur, free) == free

    def rec(cur: int, visited: int) -> None:
        nonlocal found, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Stop
        if visited == full:
            if adj[cur] >> start & 1:
                found = path.copy()
                raise _Stop
            return
        if not feasible(cur, visited):
            return
        free = full & ~visited
        for u in sorted(iter_bits(adj[cur] & free), key=lambda w: ((adj[w] & free).bit_count(), w)):
            path.append(u)
            rec(u, visited | (1 << u))
            path.pop()

    visited = 0
    for i, v in enumerate(prefix):
        if visited >> v & 1 or (i and not adj[prefix[i - 1]] >> v & 1):
            return SearchOutcome([], True, 0)
        visited |= 1 << v
    try:
        rec(prefix[-1], visited)
    except _Stop:
        if not found:
            return SearchOutcome([], False, nodes)
        return SearchOutcome(found, True, nodes)
    return SearchOutcome([], True, nodes)


def hamiltonian_path_search(
    adj, u: int, v: int, within: int | None = None, budget: int | None = None
) -> SearchOutcome:
    """
    Hamiltonian u-v path of G[within], searched as a hamiltonian cycle
    through an extra vertex joined to u and v only.
    """
    n = len(adj)
    within = ((1 << n) - 1) if within is None else within
    if not (within >> u & 1 and within >> v & 1):
        return SearchOutcome([], True, 0)
    if u == v:
        return SearchOutcome([u] if within == 1 << u else [], True, 0)
    verts = list(iter_bits(within))
    index = {w: i for i, w in enumerate(verts)}
    hub = len(verts)
    sub = []
    for w in verts:
        row = 0
        for x in iter_bits(adj[w] & within):
            row |= 1 << index[x]
        sub.append(row)
    sub[index[u]] |= 1 << hub
    sub[index[v]] |= 1 << hub
    sub.append(1 << index[u] | 1 << index[v])
    outcome = hamiltonian_cycle_search(sub, prefix=[hub, index[u]], budget=budget)
    return SearchOutcome([verts[i] for i in outcome.path[1:]], outcome.complete, outcome.nodes)


def longest_cycle_search(adj, budget: int | None = None) -> SearchOutcome:
    """
    Longest cycle, each cycle rooted at its smallest vertex s and grown
    through vertices above s. The path lists the cycle without its closing edge.
    """
    n = len(adj)
    full = (1 << n) - 1
    best: list[int] = []
    nodes = 0

    def rec(s: int, cur: int, visited: int, allowed: int, path: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Stop
        if len(path) >= 3 and adj[cur] >> s & 1 and len(path) > len(best):
            best = path.copy()
        free = allowed & ~visited
        region = reachable_from(adj, cur, free)
        if len(path) + region.bit_count() <= len(best):
            return
        for u in iter_bits(adj[cur] & free):
            path.append(u)
            rec(s, u, visited | (1 << u), allowed, path)
            path.pop()

    complete = True
    try:
        for s in range(n):
            if n - s <= len(best):
                break
            allowed = full & ~((1 << s) - 1)
            rec(s, s, 1 << s, allowed, [s])
    except _Stop:
        complete = False
    return SearchOutcome(best, complete, nodes)
