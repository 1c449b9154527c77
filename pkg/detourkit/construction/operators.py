"""
Inflation and insertion on multigraphs.

Vertex and edge ids stay stable so later steps of a recipe can keep
addressing the base: inflating v puts block vertex 0 at id v and appends
the remaining block vertices; an edge keeps its id through inflation (its
end moves onto a distinguished vertex) and through insertion (it becomes
the edge from its first end to the block).
"""

from detourkit.construction.blocks import ARITY, Block, BlockKind
from detourkit.errors import BadBlock, BadMatching, BadVertex
from detourkit.graphs.multigraph import MultiGraph, from_simple
from detourkit.graphs.simple import SimpleGraph, complete_graph


def _place(mg: MultiGraph, v: int, block_n: int) -> list[int]:
    """Ids the block's vertices take when it replaces v."""
    return [v] + [mg.n + i for i in range(block_n - 1)]


def _substitute(mg: MultiGraph, v: int, g: SimpleGraph, attach: dict[int, int]) -> MultiGraph:
    """Replace v by g, moving the end of each edge e at v onto block vertex attach[e]."""
    ids = _place(mg, v, g.n)
    edges = list(mg.edges)
    for e, local in attach.items():
        a, b = edges[e]
        edges[e] = (ids[local], b) if a == v else (a, ids[local])
    edges += [(ids[a], ids[b]) for a, b in g.edges()]
    return MultiGraph(mg.n + g.n - 1, tuple(edges))


def _incident_edges(mg: MultiGraph, v: int) -> list[int]:
    if not 0 <= v < mg.n:
        raise BadVertex(f"vertex {v} out of range for n={mg.n}")
    incident = mg.incident(v)
    loops = [e for e in incident if mg.edges[e] == (v, v)]
    if loops:
        raise BadMatching(f"cannot inflate vertex {v}: it carries loop edge {loops[0]}")
    return incident


def default_matching(mg: MultiGraph, v: int, b: Block) -> dict[int, int]:
    """Incident edges in ascending id order onto the distinguished vertices in listed order."""
    return dict(zip(_incident_edges(mg, v), b.distinguished))


def inflate_vertex(mg: MultiGraph, v: int, b: Block, matching: dict[int, int] | None = None) -> MultiGraph:
    """
    Delete v and put a copy of b in its place. `matching` sends each edge id
    formerly at v to a distinguished vertex of b (as a block vertex id).
    """
    if not b.verified:
        raise BadBlock(f"{b.kind.value} block {b.name!r} has not been verified")
    incident = _incident_edges(mg, v)
    if len(incident) != ARITY[b.kind]:
        raise BadMatching(f"vertex {v} has {len(incident)} edges but a {b.kind.value} block takes {ARITY[b.kind]}")
    matching = default_matching(mg, v, b) if matching is None else matching
    if sorted(matching) != incident:
        raise BadMatching(f"matching covers edges {sorted(matching)}, vertex {v} has {incident}")
    targets = list(matching.values())
    if len(set(targets)) != len(targets) or not set(targets) <= set(b.distinguished):
        raise BadMatching(f"matching must use distinct distinguished vertices, got {targets}")
    return _substitute(mg, v, b.graph, matching)


def inflate_clique(mg: MultiGraph, v: int, size: int) -> MultiGraph:
    """Replace v by K_size; incident edges in ascending id land on clique vertices 0, 1, ..."""
    incident = _incident_edges(mg, v)
    if size < max(1, len(incident)):
        raise BadMatching(f"K{size} cannot take the {len(incident)} edges at vertex {v}")
    return _substitute(mg, v, complete_graph(size), {e: i for i, e in enumerate(incident)})


def insert_on_edge(g: MultiGraph | SimpleGraph, e: int, b: Block) -> MultiGraph:
    """
    Delete edge e = (p, q) and join p to anchor x and q to anchor y; for K1
    both ends join the single vertex. Edge e becomes p-x, the block's edges
    follow, then y-q.
    """
    mg = from_simple(g) if isinstance(g, SimpleGraph) else g
    if b.kind is not BlockKind.HCTV:
        raise BadBlock(f"only HCTV blocks can be inserted, got {b.kind.value}")
    if not b.verified:
        raise BadBlock("HCTV block has not been verified")
    if not 0 <= e < mg.size:
        raise BadVertex(f"edge {e} out of range for {mg.size} edges")
    p, q = mg.edges[e]
    base = mg.n
    if b.graph.n == 1:
        x = y = base
    else:
        x, y = (base + a for a in b.distinguished)
    edges = list(mg.edges)
    edges[e] = (p, x)
    edges += [(base + a, base + c) for a, c in b.graph.edges()]
    edges.append((y, q))
    return MultiGraph(base + b.graph.n, tuple(edges))
