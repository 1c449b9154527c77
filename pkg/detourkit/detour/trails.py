"""
Longest trails in multigraphs, and the admissible / presentable base tests.

A trail may repeat vertices but not edges; a loop adds one to the length.
The search walks edge ids and keeps the longest trail found, preferring a
spanning one among equally long trails.
"""

import logging
from dataclasses import dataclass, field

from detourkit.detour import search
from detourkit.detour.modes import TrailWitness
from detourkit.errors import BadStart, BadVertex
from detourkit.graphs.multigraph import MultiGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrailResult:
    length: int
    witness: TrailWitness
    spanning: bool


@dataclass(frozen=True)
class BaseCheck:
    """Outcome of an admissibility or presentability test."""

    ok: bool
    trail_length: int
    failures: list[str] = field(default_factory=list)
    certificate: dict[tuple[int, int], TrailWitness] = field(default_factory=dict, repr=False)

    def __bool__(self) -> bool:
        return self.ok


def _incidences(mg: MultiGraph) -> list[list[tuple[int, int]]]:
    inc: list[list[tuple[int, int]]] = [[] for _ in range(mg.n)]
    for e, (a, b) in enumerate(mg.edges):
        inc[a].append((e, b))
        if a != b:
            inc[b].append((e, a))
    return inc


def _reachable_edges(inc, cur: int, used: int) -> int:
    """Count unused edges reachable from cur through unused edges."""
    seen_v = {cur}
    stack = [cur]
    edges = 0
    while stack:
        v = stack.pop()
        for e, w in inc[v]:
            if used >> e & 1 or edges >> e & 1:
                continue
            edges |= 1 << e
            if w not in seen_v:
                seen_v.add(w)
                stack.append(w)
    return edges.bit_count()


def parity_bound(mg: MultiGraph) -> int:
    """Every odd-degree vertex but two leaves an unused edge: t(L) <= |E| - max(0, (odd-2)/2)."""
    odd = sum(d % 2 for d in mg.degrees)
    return mg.size - max(0, (odd - 2) // 2)


class _Done(Exception):
    pass


def longest_trail(mg: MultiGraph, start: tuple[int, int] | None = None, goal: int | None = None) -> TrailResult:
    """
    t(L), or the longest trail whose first step is the given (vertex, edge).
    Among longest trails a spanning one is returned when it exists. The
    search stops at the first spanning trail of length `goal` (default: the
    parity bound, which no trail can beat).
    """
    inc = _incidences(mg)
    all_vertices = (1 << mg.n) - 1
    best: tuple[int, bool, list[int]] = (-1, False, [])
    goal = parity_bound(mg) if goal is None else goal

    def rec(cur: int, used: int, seen: int, steps: list[int], length: int) -> None:
        nonlocal best
        spanning = seen == all_vertices
        if (length, spanning) > best[:2]:
            best = (length, spanning, steps.copy())
            if spanning and length >= goal:
                raise _Done
        bound = length + _reachable_edges(inc, cur, used)
        if bound < best[0] or (bound == best[0] and best[1]):
            return
        for e, w in inc[cur]:
            if used >> e & 1:
                continue
            steps += [e, w]
            rec(w, used | (1 << e), seen | (1 << w), steps, length + 1)
            del steps[-2:]

    if start is not None:
        v, e = start
        if not 0 <= v < mg.n:
            raise BadVertex(f"vertex {v} out of range for n={mg.n}")
        if not 0 <= e < mg.size or v not in mg.edges[e]:
            raise BadStart(f"edge {e} is not incident to vertex {v}")
        w = mg.other_end(e, v)
        try:
            rec(w, 1 << e, (1 << v) | (1 << w), [v, e, w], 1)
        except _Done:
            pass
    else:
        try:
            for v in range(mg.n):
                rec(v, 0, 1 << v, [v], 0)
        except _Done:
            pass
    length, spanning, steps = best
    return TrailResult(length, TrailWitness(tuple(steps)), spanning)


def _spanning_longest_trails(mg: MultiGraph, t: int) -> tuple[list[str], dict]:
    failures = []
    certificate = {}
    for v in range(mg.n):
        for e in mg.incident(v):
            result = longest_trail(mg, (v, e), goal=t)
            if result.length == t and result.spanning:
                certificate[(v, e)] = result.witness
            else:
                failures.append(f"no spanning trail of length {t} begins {v},e{e}")
    return failures, certificate


def is_admissible(mg: MultiGraph) -> BaseCheck:
    """t(L) < |E(L)|, and every (v, e) starts a spanning trail of length t(L)."""
    t = longest_trail(mg).length
    failures = []
    if t >= mg.size:
        failures.append(f"t(L)={t} equals |E(L)|={mg.size}")
        return BaseCheck(False, t, failures)
    more, certificate = _spanning_longest_trails(mg, t)
    failures += more
    logger.debug("Admissibility of an order-%d base: t=%d, %d failures", mg.n, t, len(failures))
    return BaseCheck(not failures, t, failures, certificate)


def _hamiltonian_path_beginning(mg: MultiGraph, v: int, e: int) -> bool:
    w = mg.other_end(e, v)
    if w == v:
        return False
    g = mg.to_simple()
    if g.n == 2:
        return True
    outcome = search.longest_path_search(g.adj, w, within=g.full_mask & ~(1 << v), target=g.n - 1)
    return outcome.order == g.n - 1


def is_presentable(mg: MultiGraph) -> BaseCheck:
    """Cubic, spanning longest trails from every (v, e), hamiltonian path from every (v, e)."""
    t = longest_trail(mg).length
    if not mg.is_cubic():
        return BaseCheck(False, t, ["not cubic"])
    failures, certificate = _spanning_longest_trails(mg, t)
    for v in range(mg.n):
        for e in mg.incident(v):
            if not _hamiltonian_path_beginning(mg, v, e):
                failures.append(f"no hamiltonian path begins {v},e{e}")
    logger.debug("Presentability of an order-%d base: t=%d, %d failures", mg.n, t, len(failures))
    return BaseCheck(not failures, t, failures, certificate)
