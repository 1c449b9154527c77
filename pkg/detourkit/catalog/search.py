"""
Exhaustive searches over small graphs.

Graphs are generated one isomorphism class at a time by vertex extension:
every class of order n arises from a class of order n - 1 by adding a
vertex with some neighbourhood, so extending each class by every subset
and rejecting isomorphs reaches every class. The filters offered are all
hereditary (closed under deleting a suitable vertex), which keeps them
sound to apply at every level. For connectivity the deleted vertex is a
non-cut vertex, which every connected graph has.
"""

import logging
import math
import time
from dataclasses import dataclass
from itertools import combinations

from detourkit.config import settings
from detourkit.construction.blocks import ARITY, Block, BlockKind, verify_block
from detourkit.detour import classify, engine
from detourkit.detour.modes import SearchMode
from detourkit.errors import BadParams, Refuted, TooLarge
from detourkit.graphs.isomorphism import invariant_key, is_isomorphic, maps_vertex_set, refine_colours
from detourkit.graphs.simple import SimpleGraph, bits_of, empty_graph, from_adjacency
from detourkit.graphs.structure import girth, is_bipartite, is_two_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphFilter:
    """Hereditary constraints applied while generating."""

    connected: bool = False
    max_size: int | None = None
    bipartite: bool = False
    girth_min: int | None = None

    def accepts(self, g: SimpleGraph) -> bool:
        if self.max_size is not None and g.size > self.max_size:
            return False
        if self.bipartite and not is_bipartite(g):
            return False
        if self.girth_min is not None and girth(g) < self.girth_min:
            return False
        return True


def _class_key(g: SimpleGraph) -> tuple:
    return invariant_key(g), tuple(sorted(refine_colours([g])[0]))


def _extend(g: SimpleGraph, nbrs: int) -> SimpleGraph:
    adj = [row | (nbrs >> v & 1) << g.n for v, row in enumerate(g.adj)]
    adj.append(nbrs)
    return from_adjacency(adj)


def _next_level(level: list[SimpleGraph], flt: GraphFilter) -> list[SimpleGraph]:
    buckets: dict[tuple, list[SimpleGraph]] = {}
    out = []
    for g in level:
        first = 1 if flt.connected and g.n > 0 else 0
        for nbrs in range(first, 1 << g.n):
            h = _extend(g, nbrs)
            if not flt.accepts(h):
                continue
            bucket = buckets.setdefault(_class_key(h), [])
            if any(is_isomorphic(h, seen) for seen in bucket):
                continue
            bucket.append(h)
            out.append(h)
    return out


def graph_levels(max_order: int, flt: GraphFilter | None = None) -> list[list[SimpleGraph]]:
    """Isomorphism classes of orders 0..max_order; entry n holds order n."""
    flt = flt or GraphFilter()
    levels = [[empty_graph(0)]]
    for n in range(1, max_order + 1):
        began = time.monotonic()
        levels.append(_next_level(levels[-1], flt))
        logger.debug("Order %d: %d classes in %.2fs", n, len(levels[-1]), time.monotonic() - began)
    return levels


def enumerate_graphs(
    order: int,
    max_size: int | None = None,
    connected: bool = False,
    bipartite: bool = False,
    girth_min: int | None = None,
) -> list[SimpleGraph]:
    """One representative per isomorphism class of the given order."""
    if order < 0:
        raise BadParams(f"order must be nonnegative, got {order}")
    flt = GraphFilter(connected=connected, max_size=max_size, bipartite=bipartite, girth_min=girth_min)
    return graph_levels(order, flt)[order]


def _table_allows(g: SimpleGraph, kind: BlockKind, d: tuple[int, ...], ends: list[int]) -> bool:
    """
    Necessary conditions read off the any-start endpoint table, where
    ends[mask] holds the ends of hamiltonian paths of G[mask].
    """
    full = g.full_mask
    match kind:
        case BlockKind.HCTV:
            return ends[full] == full
        case BlockKind.RTYPE | BlockKind.UTYPE:
            if any(not ends[full] >> x & 1 for x in d):
                return False
            if kind is BlockKind.UTYPE:
                return True
            return all(ends[full ^ 1 << x] >> y & 1 for x in d for y in d if y != x)
        case BlockKind.ITYPE:
            return all(ends[full ^ 1 << x] >> y & 1 for x in d for y in d if y != x)
        case BlockKind.INFLATOR:
            a, b = d
            return bool(ends[full] >> a & 1 and ends[full] >> b & 1 and ends[full ^ 1 << b] >> a & 1 and ends[full ^ 1 << a] >> b & 1)
    return True


def _blocks_of(g: SimpleGraph, kind: BlockKind, drop: int | None, prune: bool, mode: SearchMode) -> list[Block]:
    if kind is BlockKind.HCTV and g.n == 1:
        return [verify_block(g, (), kind, mode=mode)]
    arity = ARITY[kind]
    if g.n < arity or (kind is BlockKind.INFLATOR and g.n < 3):
        return []
    ends = [int(x) for x in engine.any_start_table(g)] if prune else []
    found: list[Block] = []
    for d in combinations(g.vertices, arity):
        if prune and not _table_allows(g, kind, d, ends):
            continue
        if any(maps_vertex_set(g, list(d), list(b.distinguished)) for b in found):
            continue
        try:
            found.append(verify_block(g, d, kind, drop=drop, mode=mode))
        except Refuted:
            continue
    return found


def _check_order_range(min_order: int, max_order: int) -> None:
    if min_order < 1 or max_order < min_order:
        raise BadParams(f"bad order range {min_order}..{max_order}")
    if max_order > settings.search_order_limit:
        raise TooLarge(f"block search limited to order {settings.search_order_limit}, got {max_order}")


def search_block(
    kind: BlockKind | str,
    min_order: int = 1,
    max_order: int = 6,
    drop: int | None = None,
    bipartite: bool = False,
    girth_min: int | None = None,
    prune: bool = True,
    mode: SearchMode | None = None,
) -> list[Block]:
    """
    Every block of `kind` with order in min_order..max_order, one per
    isomorphism class of (graph, distinguished set), sorted by (order, size).
    `prune` skips distinguished sets the endpoint table already rules out.
    """
    kind = BlockKind(kind)
    _check_order_range(min_order, max_order)
    if drop is not None and kind is not BlockKind.INFLATOR:
        raise BadParams(f"drop only applies to inflators, not {kind.value}")
    mode = mode or SearchMode()
    connected = kind is not BlockKind.ITYPE
    flt = GraphFilter(connected=connected, bipartite=bipartite, girth_min=girth_min)
    began = time.monotonic()
    levels = graph_levels(max_order, flt)
    blocks = []
    for n in range(min_order, max_order + 1):
        for g in levels[n]:
            blocks += _blocks_of(g, kind, drop, prune, mode)
    blocks.sort(key=lambda b: (b.order, b.graph.size, b.graph.to_graph6(), b.distinguished))
    logger.info(
        "Found %d %s blocks of order %d..%d in %.1fs", len(blocks), kind.value, min_order, max_order, time.monotonic() - began
    )
    return blocks


def _may_be_cnd(g: SimpleGraph) -> bool:
    """Conditions every CND graph meets; failing one rules g out."""
    if g.n < 3 or g.min_degree < 2 or g.size < math.ceil(5 * g.n / 4):
        return False
    two = bits_of(v for v in g.vertices if g.degree(v) == 2)
    if any((row & two).bit_count() > 1 for row in g.adj):
        return False
    return is_two_connected(g)


def search_small_cnd(
    max_order: int, override: bool = False, prune: bool = True, mode: SearchMode | None = None
) -> list[SimpleGraph]:
    """
    Every connected nontraceable detour graph up to `max_order`, by testing
    each connected graph. With `prune` graphs failing a necessary condition
    are skipped without running the engine.
    """
    if max_order > settings.small_cnd_limit and not override:
        raise TooLarge(f"CND search limited to order {settings.small_cnd_limit}, got {max_order}; pass override")
    if max_order < 1:
        raise BadParams(f"max_order must be positive, got {max_order}")
    mode = mode or SearchMode()
    began = time.monotonic()
    levels = graph_levels(max_order, GraphFilter(connected=True))
    found = []
    tested = skipped = 0
    for level in levels[1:]:
        for g in level:
            if prune and not _may_be_cnd(g):
                skipped += 1
                continue
            tested += 1
            if classify.is_cnd(g, mode):
                logger.info("CND graph of order %d found: %s", g.n, g.to_graph6())
                found.append(g)
    logger.info(
        "CND search to order %d: %d tested, %d pruned, %d found in %.1fs",
        max_order,
        tested,
        skipped,
        len(found),
        time.monotonic() - began,
    )
    return found
