"""
Undirected multigraphs with parallel edges and loops.

Edge ids are dense and stable: an edge keeps its id through inflation and
insertion, new edges are appended. The degree of a vertex counts a loop
twice.
"""

from collections.abc import Iterable
from dataclasses import dataclass

from detourkit.errors import BadFormat, BadVertex
from detourkit.graphs.simple import SimpleGraph, build_simple


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    @property
    def degrees(self) -> list[int]:
        degs = [0] * self.n
        for a, b in self.edges:
            degs[a] += 1
            degs[b] += 1
        return degs

    def incident(self, v: int) -> list[int]:
        """Edge ids incident to v in ascending order (a loop appears once)."""
        return [i for i, (a, b) in enumerate(self.edges) if a == v or b == v]

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if a == v:
            return b
        if b == v:
            return a
        raise BadVertex(f"edge {e} = {self.edges[e]} is not incident to {v}")

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        nbrs: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        while stack:
            v = stack.pop()
            for u in nbrs[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def to_simple(self) -> SimpleGraph:
        """Underlying simple graph: loops dropped, parallel edges merged."""
        return build_simple(self.n, [(a, b) for a, b in self.edges if a != b])

    def has_parallel_or_loop(self) -> bool:
        seen = set()
        for a, b in self.edges:
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                return True
            seen.add(key)
        return False


def build_multigraph(n: int, edges: Iterable[tuple[int, int]]) -> MultiGraph:
    """Edge ids follow input order."""
    out = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertex(f"edge ({u}, {v}) out of range for n={n}")
        out.append((u, v))
    return MultiGraph(n, tuple(out))


def from_simple(g: SimpleGraph) -> MultiGraph:
    return MultiGraph(g.n, tuple(g.edges()))


def cycle_multigraph(n: int) -> MultiGraph:
    """C_n; n=2 gives two parallel edges and n=1 a loop."""
    if n < 1:
        raise BadVertex(f"cycle needs at least one vertex, got {n}")
    return build_multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def prism_multigraph(n: int) -> MultiGraph:
    """C_n x K_2 as a multigraph; C_2 x K_2 is a 4-cycle with two opposite edges doubled."""
    cyc = cycle_multigraph(n).edges
    edges = list(cyc)
    edges += [(a + n, b + n) for a, b in cyc]
    edges += [(i, i + n) for i in range(n)]
    return build_multigraph(2 * n, edges)


def read_multigraph_text(text: str) -> MultiGraph:
    """
    Parse the plain multigraph format:

        multigraph <n> <m>
        <u> <v>        (m lines, loops written as `u u`)

    Blank lines and anything after `#` are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise BadFormat("empty multigraph file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "multigraph":
        raise BadFormat(f"bad multigraph header: {lines[0]!r}")
    try:
        n, m = int(header[1]), int(header[2])
        pairs = [tuple(int(tok) for tok in line.split()) for line in lines[1:]]
    except ValueError as e:
        raise BadFormat(f"non-integer token in multigraph file: {e}") from e
    if len(pairs) != m or any(len(p) != 2 for p in pairs):
        raise BadFormat(f"expected {m} edge lines of two ids, got {len(pairs)}")
    return build_multigraph(n, pairs)


def write_multigraph_text(mg: MultiGraph) -> str:
    lines = [f"multigraph {mg.n} {mg.size}"]
    lines += [f"{a} {b}" for a, b in mg.edges]
    return "\n".join(lines) + "\n"
