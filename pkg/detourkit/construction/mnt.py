"""
Maximal nontraceable (MNT) graphs.

In an MNT graph the two neighbours of a degree-2 vertex are adjacent, so
joining them is the first step from a nontraceable graph towards an MNT
supergraph. `mnt_completion` finishes the job greedily: a non-edge whose
addition makes the graph traceable keeps doing so in every supergraph, so
one ascending pass over the non-edges reaches a maximal graph.
"""

import logging
from itertools import combinations

from detourkit.detour import classify, engine
from detourkit.detour.modes import SearchMode
from detourkit.errors import BadParams, Refuted
from detourkit.graphs.simple import SimpleGraph, build_simple
from detourkit.graphs.structure import is_claw_free, is_two_connected

logger = logging.getLogger(__name__)


def mnt_degree2_closure(g: SimpleGraph) -> SimpleGraph:
    """Join the neighbours of every degree-2 vertex of g, in one pass."""
    extra = []
    for v in g.vertices:
        if g.degree(v) == 2:
            a, b = g.neighbors(v)
            if not g.has_edge(a, b):
                extra.append((a, b))
    if not extra:
        return g
    return g.add_edges(extra)


def mnt_completion(g: SimpleGraph, mode: SearchMode | None = None) -> SimpleGraph:
    """
    An MNT supergraph of a nontraceable g: the degree-2 closure when it is
    still nontraceable, then every non-edge (ascending) that keeps it so.
    """
    mode = mode or SearchMode()
    if engine.is_traceable(g, mode):
        raise BadParams("graph is traceable; it has no nontraceable supergraph")
    h = mnt_degree2_closure(g)
    if engine.is_traceable(h, mode):
        h = g
    added = 0
    for u, v in h.non_edges():
        candidate = h.add_edges([(u, v)])
        if not classify.traceable_quick(candidate, u, v, mode):
            h = candidate
            added += 1
    logger.info("MNT completion added %d edges beyond the closure (size %d -> %d)", added, g.size, h.size)
    return h


def _triangles(g: SimpleGraph) -> list[tuple[int, int, int]]:
    return [(a, b, c) for a, b, c in combinations(g.vertices, 3) if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)]


def _free_triangles(g: SimpleGraph) -> list[tuple[int, int, int]]:
    """Vertex-disjoint triangles without a degree-2 vertex, lowest ids first."""
    used: set[int] = set()
    out = []
    for tri in _triangles(g):
        if any(g.degree(v) == 2 for v in tri) or used & set(tri):
            continue
        out.append(tri)
        used |= set(tri)
    return out


def claw_free_mnt_family(
    m: int, extra: tuple[int, ...] = (), verify: bool = True, mode: SearchMode | None = None
) -> SimpleGraph:
    """
    A* with a new K_m joined to every vertex of its lowest-id triangle that
    has no degree-2 vertex; each entry of `extra` joins a further clique of
    that order to the next such triangle. With `verify`, claw-freeness and
    2-connectivity are checked, and maximal nontraceability too when the
    result fits the certified limit.
    """
    from detourkit.catalog.named import named_graph

    sizes = (m, *extra)
    if any(s < 1 for s in sizes):
        raise BadParams(f"clique orders must be positive, got {list(sizes)}")
    mode = mode or SearchMode()
    a_star = named_graph("graph_A_star")
    triangles = _free_triangles(a_star)
    if len(sizes) > len(triangles):
        raise BadParams(f"A* has {len(triangles)} disjoint free triangles, asked for {len(sizes)} cliques")
    edges = a_star.edges()
    n = a_star.n
    for size, tri in zip(sizes, triangles):
        clique = list(range(n, n + size))
        edges += [(u, w) for i, u in enumerate(clique) for w in clique[i + 1 :]]
        edges += [(u, t) for u in clique for t in tri]
        n += size
    h = build_simple(n, edges)
    if verify:
        if not is_claw_free(h):
            raise Refuted("claw-free", detail=f"order-{h.n} family member has a claw")
        if not is_two_connected(h):
            raise Refuted("2-connected", detail=f"order-{h.n} family member has a cut vertex")
        if mode.use_table(h.n) and not classify.is_mnt(h, mode):
            raise Refuted("MNT", detail=f"order-{h.n} family member is not maximal nontraceable")
    return h
