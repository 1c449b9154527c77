"""
Immutable simple undirected graphs on vertices 0..n-1.

Adjacency is stored as one integer bitset per vertex, which is what the
detour engine's subset DP and search kernels consume directly.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from detourkit.errors import BadVertex, RejectedLoop


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]
    size: int = field(default=0, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise BadVertex(f"adjacency has {len(self.adj)} rows for n={self.n}")
        if not self.size:
            object.__setattr__(self, "size", sum(a.bit_count() for a in self.adj) // 2)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        full = self.full_mask
        out = []
        for u in range(self.n):
            missing = full & ~self.adj[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in iter_bits(missing))
        return out

    def is_regular(self, d: int | None = None) -> bool:
        degs = set(self.degrees)
        if len(degs) > 1:
            return False
        return d is None or not degs or degs == {d}

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return build_simple(self.n, self.edges() + list(pairs))

    def remove_vertex(self, v: int) -> "SimpleGraph":
        return induced_subgraph(self, [u for u in range(self.n) if u != v])

    def to_graph6(self) -> str:
        from detourkit.graphs.graph6 import encode_graph6

        return encode_graph6(self)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, size={self.size})"


def build_simple(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    """Build a simple graph, dropping duplicate pairs."""
    if n < 0:
        raise BadVertex(f"vertex count must be nonnegative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertex(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise RejectedLoop(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return SimpleGraph(n, tuple(adj))


def from_adjacency(adj: Iterable[int]) -> SimpleGraph:
    rows = tuple(adj)
    return SimpleGraph(len(rows), rows)


def cartesian_product(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Cartesian product; vertex (i, j) gets id i * |V(h)| + j."""
    if g.n == 0 or h.n == 0:
        raise BadVertex("cartesian product needs nonempty factors")
    m = h.n
    edges = []
    for i in range(g.n):
        for a, b in h.edges():
            edges.append((i * m + a, i * m + b))
    for a, b in g.edges():
        for j in range(m):
            edges.append((a * m + j, b * m + j))
    return build_simple(g.n * m, edges)


def induced_subgraph(g: SimpleGraph, vs: Iterable[int]) -> SimpleGraph:
    """Subgraph induced by vs, relabelled 0.. in ascending order of the old ids."""
    keep = sorted(set(vs))
    for v in keep:
        if not 0 <= v < g.n:
            raise BadVertex(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        adj.append(row)
    return SimpleGraph(len(keep), tuple(adj))


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    shift = g.n
    edges = g.edges() + [(u + shift, v + shift) for u, v in h.edges()]
    return build_simple(g.n + h.n, edges)


def relabel(g: SimpleGraph, perm: list[int]) -> SimpleGraph:
    """Graph with vertex v renamed perm[v]."""
    return build_simple(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def complete_graph(n: int) -> SimpleGraph:
    return build_simple(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise BadVertex(f"a simple cycle needs at least 3 vertices, got {n}")
    return build_simple(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return build_simple(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, (0,) * n)
