"""
The CND constructions.

- One: inflate every vertex of a cubic admissible multigraph with an
  I-type block; tau = 2 - k + sum |V(G_i)| for base order k.
- Two: inflate every vertex v with K_n (n >= deg v) and insert an HCTV
  block of common order m in every edge of an admissible multigraph;
  tau = |V(F)| - (|E(L)| - t(L)) * m.
- Three: as Two with R-type blocks on a cubic admissible base.
- Four: inflate every vertex of a presentable multigraph with a U-type
  block; tau = sum |V(G_i)| - k + 2.
- F: inflate each vertex of C_n with an inflator of common drop m and
  insert an HCTV block in each former cycle edge;
  tau = sum k_i + sum |V(M_i)| - (n-1) m.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

from detourkit.construction.blocks import Block, BlockKind
from detourkit.construction.operators import inflate_clique, inflate_vertex, insert_on_edge
from detourkit.construction.report import ConstructionReport, Prediction, verify_construction
from detourkit.detour import classify, trails
from detourkit.detour.modes import SearchMode
from detourkit.errors import BadBase, BadBlock, BadRecipe, DropMismatch, Refuted
from detourkit.graphs.multigraph import MultiGraph, cycle_multigraph
from detourkit.graphs.simple import SimpleGraph, build_simple

logger = logging.getLogger(__name__)


class Variant(str, Enum):
    ONE = "one"
    TWO = "two"
    THREE = "three"
    FOUR = "four"
    F = "f"


VERTEX_KIND = {
    Variant.ONE: BlockKind.ITYPE,
    Variant.THREE: BlockKind.RTYPE,
    Variant.FOUR: BlockKind.UTYPE,
    Variant.F: BlockKind.INFLATOR,
}


@dataclass(frozen=True)
class Recipe:
    """
    For One to Four `base` is the multigraph to inflate. For F the base is
    the cycle C_n with n = cycle_len, vertex_blocks[i] inflating v_i and
    edge_inserts[i] going into the edge v_i v_(i+1).
    """

    variant: Variant
    base: MultiGraph | None = None
    cycle_len: int | None = None
    vertex_blocks: dict[int, Block | int] = field(default_factory=dict)
    edge_inserts: dict[int, Block] = field(default_factory=dict)


def uniform_recipe(
    variant: Variant,
    base: MultiGraph,
    block: Block | int | None = None,
    insert: Block | None = None,
) -> Recipe:
    """Same block on every vertex (for Two, None means K_deg(v)) and the same insert in every edge."""
    if block is None:
        if variant is not Variant.TWO:
            raise BadRecipe(f"variant {variant.value} needs a vertex block")
        blocks: dict[int, Block | int] = {v: base.degree(v) for v in range(base.n)}
    else:
        blocks = {v: block for v in range(base.n)}
    inserts = {e: insert for e in range(base.size)} if insert is not None else {}
    return Recipe(variant, base=base, vertex_blocks=blocks, edge_inserts=inserts)


def _require_block(b: Block | int, kind: BlockKind, where: str) -> Block:
    if not isinstance(b, Block):
        raise BadBlock(f"{where}: expected a {kind.value} block, got {b!r}")
    if b.kind is not kind:
        raise BadBlock(f"{where}: expected a {kind.value} block, got {b.kind.value}")
    if not b.verified:
        raise BadBlock(f"{where}: {kind.value} block has not been verified")
    return b


def _common_insert_order(inserts: list[Block]) -> int:
    for i, b in enumerate(inserts):
        _require_block(b, BlockKind.HCTV, f"insert {i}")
    orders = {b.order for b in inserts}
    if len(orders) > 1:
        raise BadBlock(f"HCTV blocks must share one order, got {sorted(orders)}")
    return orders.pop() if orders else 0


def _finish(mg: MultiGraph) -> SimpleGraph:
    if mg.has_parallel_or_loop():
        raise BadBase("construction leaves parallel edges or loops; inflate every vertex of the base")
    return build_simple(mg.n, mg.edges)


def _check_coverage(r: Recipe, base: MultiGraph, needs_inserts: bool) -> None:
    missing = [v for v in range(base.n) if v not in r.vertex_blocks]
    if missing:
        raise BadRecipe(f"vertices {missing} have no block")
    if needs_inserts:
        bare = [e for e in range(base.size) if e not in r.edge_inserts]
        if bare:
            raise BadRecipe(f"edges {bare} have no insert")
    elif r.edge_inserts:
        raise BadRecipe(f"variant {r.variant.value} takes no edge inserts")


def _check_base(r: Recipe, base: MultiGraph) -> int:
    """Admissibility or presentability of the base; returns t(base)."""
    if r.variant in (Variant.ONE, Variant.THREE) and not base.is_cubic():
        raise BadBase(f"variant {r.variant.value} needs a cubic base")
    if r.variant is Variant.FOUR:
        check = trails.is_presentable(base)
        if not check:
            raise BadBase(f"base is not presentable: {check.failures[:3]}")
        return check.trail_length
    check = trails.is_admissible(base)
    if not check:
        raise BadBase(f"base is not admissible: {check.failures[:3]}")
    return check.trail_length


def assemble(r: Recipe) -> tuple[SimpleGraph, Prediction]:
    """Build the graph of a recipe and its predicted order, size and detour order."""
    if r.variant is Variant.F:
        return _assemble_f(r)
    base = r.base
    if base is None:
        raise BadRecipe(f"variant {r.variant.value} needs a base multigraph")
    two_or_three = r.variant in (Variant.TWO, Variant.THREE)
    _check_coverage(r, base, needs_inserts=two_or_three)
    t = _check_base(r, base)

    mg = base
    order = size = 0
    for v in range(base.n):
        b = r.vertex_blocks[v]
        if r.variant is Variant.TWO:
            if not isinstance(b, int):
                raise BadBlock(f"vertex {v}: variant two inflates with clique sizes, got {b!r}")
            mg = inflate_clique(mg, v, b)
            order += b
            size += b * (b - 1) // 2
        else:
            block = _require_block(b, VERTEX_KIND[r.variant], f"vertex {v}")
            mg = inflate_vertex(mg, v, block)
            order += block.order
            size += block.graph.size
    size += base.size

    if two_or_three:
        m = _common_insert_order([r.edge_inserts[e] for e in range(base.size)])
        for e in range(base.size):
            ins = r.edge_inserts[e]
            mg = insert_on_edge(mg, e, ins)
            order += ins.order
            size += ins.graph.size + 1
        tau = order - (base.size - t) * m
    else:
        tau = order - base.n + 2
    logger.info("Assembled %s construction over a %d-vertex base: order %d", r.variant.value, base.n, order)
    return _finish(mg), Prediction(order, size, tau)


def _assemble_f(r: Recipe) -> tuple[SimpleGraph, Prediction]:
    n = r.cycle_len
    if n is None or n < 2:
        raise BadRecipe(f"variant f needs a cycle of length >= 2, got {n}")
    if sorted(r.vertex_blocks) != list(range(n)) or sorted(r.edge_inserts) != list(range(n)):
        raise BadRecipe(f"variant f needs one inflator and one insert per cycle position 0..{n - 1}")
    inflators = [_require_block(r.vertex_blocks[i], BlockKind.INFLATOR, f"vertex {i}") for i in range(n)]
    drops = {b.drop for b in inflators}
    if len(drops) != 1:
        raise DropMismatch(f"inflators must share one drop, got {sorted(drops)}")
    m = drops.pop()
    if m + 2 > min(b.order for b in inflators):
        raise DropMismatch(f"drop {m} needs every inflator of order at least {m + 2}")
    inserts = [r.edge_inserts[i] for i in range(n)]
    for i, b in enumerate(inserts):
        _require_block(b, BlockKind.HCTV, f"insert {i}")
        if b.order < m:
            raise BadBlock(f"insert {i} has order {b.order}, below the drop {m}")

    mg = cycle_multigraph(n)
    for i, b in enumerate(inflators):
        mg = inflate_vertex(mg, i, b)
    for i, b in enumerate(inserts):
        mg = insert_on_edge(mg, i, b)
    order = sum(b.order for b in inflators) + sum(b.order for b in inserts)
    size = n + sum(b.graph.size for b in inflators) + sum(b.graph.size + 1 for b in inserts)
    return _finish(mg), Prediction(order, size, order - (n - 1) * m)


def construct(r: Recipe, certify: bool = False, mode: SearchMode | None = None) -> ConstructionReport:
    g, predicted = assemble(r)
    return verify_construction(g, predicted, certify=certify, mode=mode)


def construct_f(
    inflators: list[Block], hctvs: list[Block], certify: bool = False, mode: SearchMode | None = None
) -> ConstructionReport:
    """F(G_1..G_n, M_1..M_n) around a cycle of length n = len(inflators)."""
    if len(inflators) != len(hctvs):
        raise BadRecipe(f"{len(inflators)} inflators but {len(hctvs)} HCTV blocks")
    n = len(inflators)
    r = Recipe(Variant.F, cycle_len=n, vertex_blocks=dict(enumerate(inflators)), edge_inserts=dict(enumerate(hctvs)))
    return construct(r, certify=certify, mode=mode)


def nhht_from_inflator(b: Block, mode: SearchMode | None = None) -> SimpleGraph:
    """The inflator plus a vertex x joined to both distinguished vertices."""
    _require_block(b, BlockKind.INFLATOR, "nhht_from_inflator")
    mode = mode or SearchMode()
    a, c = b.distinguished
    x = b.graph.n
    h = build_simple(x + 1, b.graph.edges() + [(a, x), (c, x)])
    if mode.use_table(h.n):
        flags = classify.traceability_suite(h, mode)
        if not flags.nhht:
            raise Refuted("NHHT", detail=f"flags {flags.as_dict()}")
    return h
