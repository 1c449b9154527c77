"""
Detour orders of path-unicyclic graphs: a cycle v_0..v_(n-1) with a
pendant path of order p_i hung on some of its vertices.

Each cycle vertex carries a box k_i, initially n. Attaching a path of
order p_i at v_i raises k_i to p_i + 1 when the path alone is longer,
and raises every other box k_j to n - d(i, j) + 1 + p_i, where d is the
distance around the cycle (the walk from v_j takes the long way round to
v_i and then runs down the path). The vertices on an attached path then
get their orders from k_i:

- k_i > p_i + 1: the path vertices read k_i+1, ..., k_i+p_i outward.
- k_i = p_i + 1 (at most one such vertex): with M the largest k_l + p_l
  over the other cycle vertices and m = ceil((M+1)/2), the orders on
  v_i and its path fall from k_i to m, repeat m when M is even, and rise
  to M.
"""

import logging
import math
from dataclasses import dataclass, field

from detourkit.errors import BadParams, BadVertex, NotPathUnicyclic
from detourkit.graphs.simple import SimpleGraph, build_simple
from detourkit.sequences.sequence import DetourSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnicyclicSpec:
    """Cycle length and a map from cycle index (0-based) to pendant path order."""

    cycle_len: int
    attachments: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.cycle_len < 3:
            raise BadParams(f"cycle needs at least 3 vertices, got {self.cycle_len}")
        if not self.attachments:
            raise NotPathUnicyclic("a path-unicyclic graph needs at least one attached path")
        for i, p in self.attachments.items():
            if not 0 <= i < self.cycle_len:
                raise BadVertex(f"cycle index {i} out of range for a {self.cycle_len}-cycle")
            if p < 1:
                raise BadParams(f"attached path at {i} has order {p}")

    @property
    def order(self) -> int:
        return self.cycle_len + sum(self.attachments.values())

    def p(self, i: int) -> int:
        return self.attachments.get(i, 0)


def cycle_orders(spec: UnicyclicSpec) -> list[int]:
    """The boxes k_i after every path has been attached, in index order."""
    n = spec.cycle_len
    boxes = [n] * n
    for i, p in sorted(spec.attachments.items()):
        boxes[i] = max(boxes[i], p + 1)
        for j in range(n):
            if j == i:
                continue
            d = min(abs(i - j), n - abs(i - j))
            boxes[j] = max(boxes[j], n - d + 1 + p)
        logger.debug("After attaching %d at v%d: %s", p, i, boxes)
    return boxes


def _path_orders(spec: UnicyclicSpec, boxes: list[int], i: int) -> list[int]:
    """Orders of the vertices on the path hung at v_i, nearest first."""
    k, p = boxes[i], spec.p(i)
    assert k >= p + 1, f"box {k} below path order {p} + 1 at v{i}"
    if k > p + 1:
        return list(range(k + 1, k + p + 1))
    top = max(boxes[j] + spec.p(j) for j in range(spec.cycle_len) if spec.p(j) + 1 < boxes[j])
    low = math.ceil((top + 1) / 2)
    run = list(range(k, low - 1, -1))
    if top % 2 == 0:
        run.append(low)
    run += list(range(low + 1, top + 1))
    assert len(run) == p + 1, f"extreme vertex v{i} produced {len(run)} orders for {p + 1} vertices"
    return run[1:]


def unicyclic_vertex_orders(spec: UnicyclicSpec) -> list[int]:
    """Detour order of every vertex, indexed like build_path_unicyclic."""
    boxes = cycle_orders(spec)
    orders = list(boxes)
    for i in sorted(spec.attachments):
        orders += _path_orders(spec, boxes, i)
    return orders


def unicyclic_sequence(spec: UnicyclicSpec) -> tuple[list[int], DetourSequence]:
    """Cycle boxes k_i and the full detour sequence."""
    orders = unicyclic_vertex_orders(spec)
    return orders[: spec.cycle_len], DetourSequence.from_terms(orders)


def build_path_unicyclic(spec: UnicyclicSpec) -> SimpleGraph:
    """
    Cycle on 0..n-1, then each attached path in ascending cycle index,
    its vertices numbered outward from the cycle.
    """
    n = spec.cycle_len
    edges = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for i, p in sorted(spec.attachments.items()):
        prev = i
        for _ in range(p):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_simple(nxt, edges)
