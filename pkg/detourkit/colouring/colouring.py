"""
n-detour colourings: vertex colourings in which no colour class contains
a path of order greater than n.

A vertex set is P_(n+1)-free when the subgraph it induces has detour
order at most n. For graphs within `partition_limit` every subset is
scored at once with `tables.induced_orders`; otherwise sets are checked
by a depth-bounded search from each of their vertices.
"""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from detourkit.config import settings
from detourkit.detour import search, tables
from detourkit.detour.modes import SearchMode
from detourkit.errors import BadParams, BadVertex, BudgetExceeded, TooLarge
from detourkit.graphs.simple import SimpleGraph, bits_of, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Colouring:
    colours: tuple[int, ...]
    n: int

    @property
    def colour_count(self) -> int:
        return len(set(self.colours))

    @property
    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colours):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]

    def is_valid(self, g: SimpleGraph) -> bool:
        return len(self.colours) == g.n and all(is_pnfree_set(g, cls, self.n) for cls in self.classes)

    def as_dict(self) -> dict:
        return {"n": self.n, "colour_count": self.colour_count, "classes": self.classes}


def _free(adj, mask: int, n: int) -> bool:
    """No path of order n+1 inside mask; the search never goes deeper than n+1."""
    for s in iter_bits(mask):
        if search.longest_path_search(adj, s, within=mask, target=n + 1).order > n:
            return False
    return True


def is_pnfree_set(g: SimpleGraph, w: Iterable[int], n: int, mode: SearchMode | None = None) -> bool:
    """tau(G[w]) <= n."""
    vs = set(w)
    for v in vs:
        if not 0 <= v < g.n:
            raise BadVertex(f"vertex {v} out of range for n={g.n}")
    if not vs:
        return True
    mode = mode or SearchMode()
    if not mode.use_table(len(vs)):
        raise BudgetExceeded(f"P_(n+1)-free check limited to {mode.certified_limit} vertices, got {len(vs)}")
    return _free(g.adj, bits_of(vs), n)


def _check_partition_size(g: SimpleGraph) -> None:
    if g.n > settings.partition_limit:
        raise TooLarge(f"exact colouring limited to {settings.partition_limit} vertices, got {g.n}")


def greedy_detour_colouring(g: SimpleGraph, n: int) -> Colouring:
    """
    Peel maximal P_(n+1)-free sets until nothing is left:
    1. grow a set over the remaining vertices in ascending id, keeping a
       vertex when the set stays P_(n+1)-free
    2. give the set the next colour and delete it
    """
    if n < 2:
        raise BadParams(f"greedy detour colouring needs n >= 2, got {n}")
    if g.n == 0:
        raise BadParams("cannot colour the empty graph")
    colours = [-1] * g.n
    remaining = g.full_mask
    colour = 0
    while remaining:
        chosen = 0
        for v in iter_bits(remaining):
            if _free(g.adj, chosen | (1 << v), n):
                chosen |= 1 << v
        for v in iter_bits(chosen):
            colours[v] = colour
        logger.debug("Colour %d takes %d vertices", colour, chosen.bit_count())
        remaining &= ~chosen
        colour += 1
    return Colouring(tuple(colours), n)


def _proper_colouring(adj, size: int, k: int) -> list[int] | None:
    """k-colouring by backtracking, always branching on the most saturated vertex."""
    colours = [-1] * size
    degree = [a.bit_count() for a in adj]

    def rec(done: int) -> bool:
        if done == size:
            return True
        pick, best = -1, (-1, -1)
        for v in range(size):
            if colours[v] >= 0:
                continue
            sat = len({colours[u] for u in iter_bits(adj[v]) if colours[u] >= 0})
            if (sat, degree[v]) > best:
                pick, best = v, (sat, degree[v])
        taken = {colours[u] for u in iter_bits(adj[pick])}
        used = max(colours) + 1
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colours[pick] = c
            if rec(done + 1):
                return True
            colours[pick] = -1
        return False

    return colours if rec(0) else None


def chromatic_number(g: SimpleGraph) -> int:
    """Ordinary chromatic number, independent of the detour machinery."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if _proper_colouring(g.adj, g.n, k) is not None:
            return k
    return g.n


def _partition(free: np.ndarray, size: int, k: int) -> list[int] | None:
    """Assign vertices in order to at most k classes whose masks stay free."""
    masks: list[int] = []
    colours = [-1] * size

    def rec(v: int) -> bool:
        if v == size:
            return True
        bit = 1 << v
        for j in range(len(masks)):
            if free[masks[j] | bit]:
                masks[j] |= bit
                colours[v] = j
                if rec(v + 1):
                    return True
                masks[j] ^= bit
        if len(masks) < k:
            masks.append(bit)
            colours[v] = len(masks) - 1
            if rec(v + 1):
                return True
            masks.pop()
        return False

    return colours if rec(0) else None


def exact_detour_colouring(g: SimpleGraph, n: int) -> Colouring:
    """A colouring with exactly chi_n(G) colours, by iterative deepening on the count."""
    if n < 1:
        raise BadParams(f"path order threshold must be at least 1, got {n}")
    _check_partition_size(g)
    if g.n == 0:
        return Colouring((), n)
    if n == 1:
        for k in range(1, g.n + 1):
            colours = _proper_colouring(g.adj, g.n, k)
            if colours is not None:
                return Colouring(tuple(colours), n)
    free = tables.induced_orders(g.adj) <= n
    for k in range(1, g.n + 1):
        colours = _partition(free, g.n, k)
        if colours is not None:
            return Colouring(tuple(colours), n)
    raise AssertionError("singleton classes always give a colouring")


def exact_detour_chromatic(g: SimpleGraph, n: int) -> int:
    return exact_detour_colouring(g, n).colour_count


def maximal_pnfree_masks(g: SimpleGraph, n: int, orders: np.ndarray | None = None) -> list[int]:
    """Every maximal P_(n+1)-free vertex set, as bitmasks in ascending order."""
    _check_partition_size(g)
    orders = tables.induced_orders(g.adj) if orders is None else orders
    free = orders <= n
    maximal = free.copy()
    masks = np.arange(1 << g.n, dtype=np.int64)
    for v in range(g.n):
        bit = 1 << v
        without = masks[(masks & bit) == 0]
        maximal[without] &= ~free[without | bit]
    return [int(m) for m in np.flatnonzero(maximal)]


def maximal_pnfree_sets(g: SimpleGraph, n: int) -> list[list[int]]:
    return [list(iter_bits(m)) for m in maximal_pnfree_masks(g, n)]


def new_colour_bound(tau: int, n: int) -> int:
    """ceil((tau-n)/ceil((2n+2)/3)) + 1 for 2 <= n <= tau, and 1 when n > tau."""
    if n > tau:
        return 1
    return math.ceil((tau - n) / math.ceil((2 * n + 2) / 3)) + 1


def old_colour_bound(tau: int, n: int) -> int:
    """floor((tau-n-1)/2) + 2, stated for 2 <= n <= tau-1."""
    return (tau - n - 1) // 2 + 2


@dataclass(frozen=True)
class ColouringTheoremReport:
    tau: int
    n: int
    exact: int
    greedy: int
    old_bound: int | None
    new_bound: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "tau": self.tau,
            "n": self.n,
            "exact": self.exact,
            "greedy": self.greedy,
            "old_bound": self.old_bound,
            "new_bound": self.new_bound,
            "ok": self.ok,
            "failures": self.failures,
        }


def verify_colouring_theorems(g: SimpleGraph, n: int) -> ColouringTheoremReport:
    """
    Check the chi_n bounds on one graph:
    1. exact chi_n <= floor((tau-n-1)/2)+2 when 2 <= n <= tau-1
    2. tau(G-M) <= tau - ceil((2n+2)/3) for every maximal P_(n+1)-free M, when 2 <= n <= tau
    3. exact chi_n and the greedy count are within the new bound
    """
    if n < 2:
        raise BadParams(f"colouring bounds are stated for n >= 2, got {n}")
    _check_partition_size(g)
    if g.n == 0:
        raise BadParams("cannot colour the empty graph")
    orders = tables.induced_orders(g.adj)
    tau = int(orders[g.full_mask])
    exact = exact_detour_chromatic(g, n)
    greedy = greedy_detour_colouring(g, n).colour_count
    failures = []

    old = old_colour_bound(tau, n) if n <= tau - 1 else None
    if old is not None and exact > old:
        failures.append(f"chi_{n}={exact} exceeds floor((tau-n-1)/2)+2={old}")

    if n <= tau:
        drop = math.ceil((2 * n + 2) / 3)
        for m in maximal_pnfree_masks(g, n, orders):
            rest = int(orders[g.full_mask & ~m])
            if rest > tau - drop:
                failures.append(f"tau(G-M)={rest} > {tau - drop} for M={list(iter_bits(m))}")

    new = new_colour_bound(tau, n)
    if exact > new:
        failures.append(f"chi_{n}={exact} exceeds the new bound {new}")
    if greedy > new:
        failures.append(f"greedy count {greedy} exceeds the new bound {new}")
    if failures:
        logger.warning("Colouring bounds fail for n=%d on a %d-vertex graph: %s", n, g.n, failures)
    return ColouringTheoremReport(tau, n, exact, greedy, old, new, failures)
