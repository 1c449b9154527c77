"""
Named graphs.

Each entry builds its graph from integer parameters and re-checks the
invariants it promises (order, size, girth, regularity and, for blocks, the
defining conditions of the block kind) before handing the graph out. A
failed recheck is a bug in the builder, reported as CorruptCatalog.

Vertex numbering is fixed per entry so distinguished vertices can be given
by id:

- petersen: outer cycle 0..4, spokes i - i+5, inner pentagram i+5 - (i+2)%5+5
- petersen_deleted: petersen minus vertex 0, relabelled down; D = (0, 3, 4)
- flower_snark(k): star i has centre 4i and leaves 4i+1 (u), 4i+2 (v), 4i+3 (w)
- coxeter: a_i = i, b_i = 7+i, c_i = 14+i, d_i = 21+i
- inflator_g: triangles 0,1,2 and 3,4,5, vertex 6 on 1 and 4, vertex 7 on 2 and 5
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from detourkit.construction.blocks import Block, BlockKind, verify_block
from detourkit.construction.recipes import Variant, assemble, construct_f, nhht_from_inflator, uniform_recipe
from detourkit.detour import engine
from detourkit.detour.modes import SearchMode
from detourkit.errors import BadParams, CorruptCatalog, NotInCatalog, Refuted
from detourkit.graphs.multigraph import MultiGraph, build_multigraph, from_simple, prism_multigraph
from detourkit.graphs.simple import (
    SimpleGraph,
    build_simple,
    cartesian_product,
    complete_graph,
    cycle_graph,
    path_graph,
)
from detourkit.graphs.structure import girth
from detourkit.sequences.formulas import complete_multipartite, two_clique_graph

logger = logging.getLogger(__name__)

Params = tuple[int, ...]


@dataclass(frozen=True)
class CatalogEntry:
    """
    `params` names the parameters; a trailing "*" on the last name makes it
    variadic. `expect` maps parameters to the invariants to recheck, with
    keys among order, size, girth, regular and hamiltonian. `blocks` maps
    parameters to the block kinds the graph carries, with their
    distinguished vertices and drop.
    """

    name: str
    builder: Callable[..., SimpleGraph | MultiGraph]
    params: tuple[str, ...] = ()
    expect: Callable[..., dict] = lambda *p: {}
    blocks: Callable[..., dict[BlockKind, tuple[tuple[int, ...], int | None]]] = lambda *p: {}
    description: str = ""

    @property
    def variadic(self) -> bool:
        return bool(self.params) and self.params[-1].endswith("*")

    def check_params(self, params: Params) -> None:
        if self.variadic:
            if len(params) < len(self.params):
                raise BadParams(f"{self.name} takes at least {len(self.params)} parameters, got {len(params)}")
        elif len(params) != len(self.params):
            raise BadParams(f"{self.name} takes {len(self.params)} parameters {list(self.params)}, got {len(params)}")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "params": list(self.params),
            "description": self.description,
        }


def _petersen() -> SimpleGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return build_simple(10, edges)


def _flower_snark(k: int) -> SimpleGraph:
    if k < 3:
        raise BadParams(f"flower snark needs k >= 3, got {k}")
    edges = []
    for i in range(k):
        c, u, v, w = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(c, u), (c, v), (c, w)]
        edges.append((u, 4 * ((i + 1) % k) + 1))
        if i < k - 1:
            edges += [(v, 4 * (i + 1) + 2), (w, 4 * (i + 1) + 3)]
    # the v and w paths close up crossed, into one cycle of length 2k
    edges += [(4 * (k - 1) + 2, 3), (4 * (k - 1) + 3, 2)]
    return build_simple(4 * k, edges)


def _coxeter() -> SimpleGraph:
    edges = []
    for i in range(7):
        edges += [(i, (i + 1) % 7), (7 + i, 7 + (i + 2) % 7), (14 + i, 14 + (i + 3) % 7)]
        edges += [(21 + i, i), (21 + i, 7 + i), (21 + i, 14 + i)]
    return build_simple(28, edges)


def _prism(n: int) -> SimpleGraph:
    return cartesian_product(cycle_graph(n), complete_graph(2))


def _net() -> SimpleGraph:
    return build_simple(6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)])


def _complete_bipartite(a: int, b: int) -> SimpleGraph:
    return complete_multipartite([a, b])


def _inflator_g() -> SimpleGraph:
    return build_simple(8, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 1), (6, 4), (7, 2), (7, 5)])


def _k1_hctv() -> Block:
    return verify_block(complete_graph(1), (), BlockKind.HCTV, name="K1")


def _graph_a() -> SimpleGraph:
    """Base K4: every vertex inflated to a triangle, K1 inserted in every edge."""
    recipe = uniform_recipe(Variant.TWO, from_simple(complete_graph(4)), insert=_k1_hctv())
    return assemble(recipe)[0]


def _graph_b() -> SimpleGraph:
    """Base C2 x K2 (a 4-cycle with two opposite edges doubled): triangles at the vertices, K1 in every edge."""
    return assemble(uniform_recipe(Variant.TWO, prism_multigraph(2), insert=_k1_hctv()))[0]


def _graph_a_star() -> SimpleGraph:
    from detourkit.construction.mnt import mnt_degree2_closure

    return mnt_degree2_closure(named_graph("graph_A"))


def _graph_b_star() -> SimpleGraph:
    from detourkit.construction.mnt import mnt_completion

    return mnt_completion(named_graph("graph_B"))


def _inflator_cycle(n: int) -> SimpleGraph:
    """F(n, inflator_g, K1): the inflator around C_n with K1 in every cycle edge."""
    if n < 2:
        raise BadParams(f"inflator cycle needs n >= 2, got {n}")
    g_dot = named_block("inflator_g", (), BlockKind.INFLATOR)
    return construct_f([g_dot] * n, [_k1_hctv()] * n).graph


def _nhht9() -> SimpleGraph:
    return nhht_from_inflator(named_block("inflator_g", (), BlockKind.INFLATOR))


def _k4_minus_e() -> SimpleGraph:
    return build_simple(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def _multigraph_k4() -> MultiGraph:
    return build_multigraph(4, complete_graph(4).edges())


_ENTRIES = [
    CatalogEntry(
        "complete",
        lambda n: complete_graph(n),
        ("n",),
        lambda n: {"order": n, "size": n * (n - 1) // 2, "regular": n - 1},
        lambda n: {BlockKind.HCTV: ((0, 1) if n > 1 else (), None)} if n else {},
        "complete graph K_n",
    ),
    CatalogEntry(
        "complete_bipartite",
        _complete_bipartite,
        ("a", "b"),
        lambda a, b: {"order": a + b, "size": a * b},
        lambda a, b: {BlockKind.HCTV: ((0, a), None)} if a == b else {},
        "complete bipartite graph K(a, b); part a is 0..a-1",
    ),
    CatalogEntry(
        "complete_multipartite",
        lambda *parts: complete_multipartite(list(parts)),
        ("parts*",),
        lambda *parts: {"order": sum(parts), "size": (sum(parts) ** 2 - sum(p * p for p in parts)) // 2},
        description="complete multipartite graph K(n_1, ..., n_p), parts consecutive",
    ),
    CatalogEntry(
        "cycle",
        lambda n: cycle_graph(n),
        ("n",),
        lambda n: {"order": n, "size": n, "girth": n, "regular": 2},
        description="cycle C_n",
    ),
    CatalogEntry(
        "path",
        lambda n: path_graph(n),
        ("n",),
        lambda n: {"order": n, "size": max(n - 1, 0)},
        description="path P_n",
    ),
    CatalogEntry(
        "net",
        _net,
        expect=lambda: {"order": 6, "size": 6, "girth": 3},
        blocks=lambda: {BlockKind.ITYPE: ((3, 4, 5), None)},
        description="triangle with a pendant vertex at each corner; I-type on the leaves",
    ),
    CatalogEntry(
        "claw",
        lambda: build_simple(4, [(0, 1), (0, 2), (0, 3)]),
        expect=lambda: {"order": 4, "size": 3},
        description="K(1, 3) with centre 0",
    ),
    CatalogEntry(
        "petersen",
        _petersen,
        expect=lambda: {"order": 10, "size": 15, "girth": 5, "regular": 3, "hamiltonian": False},
        description="Petersen graph",
    ),
    CatalogEntry(
        "petersen_deleted",
        lambda: _petersen().remove_vertex(0),
        expect=lambda: {"order": 9, "size": 12, "girth": 5},
        blocks=lambda: {BlockKind.ITYPE: ((0, 3, 4), None), BlockKind.UTYPE: ((0, 3, 4), None)},
        description="Petersen graph minus vertex 0; D is the former neighbourhood",
    ),
    CatalogEntry(
        "coxeter",
        _coxeter,
        expect=lambda: {"order": 28, "size": 42, "girth": 7, "regular": 3},
        description="Coxeter graph",
    ),
    CatalogEntry(
        "flower_snark",
        _flower_snark,
        ("k",),
        lambda k: {
            "order": 4 * k,
            "size": 6 * k,
            "regular": 3,
            **({"girth": 6} if k >= 7 else {"girth": 5} if k == 5 else {}),
            **({"hamiltonian": False} if k in (5, 7) else {}),
        },
        description="flower snark J_k",
    ),
    CatalogEntry(
        "prism",
        _prism,
        ("n",),
        lambda n: {"order": 2 * n, "size": 3 * n, "regular": 3, "girth": 4 if n > 3 else 3},
        description="prism C_n x K_2; vertex (i, j) is 2i + j",
    ),
    CatalogEntry(
        "prism_multigraph",
        lambda n: prism_multigraph(n),
        ("n",),
        lambda n: {"order": 2 * n, "size": 3 * n, "regular": 3},
        description="C_n x K_2 as a multigraph (n = 2 gives doubled rungs)",
    ),
    CatalogEntry(
        "k4_multigraph",
        _multigraph_k4,
        expect=lambda: {"order": 4, "size": 6, "regular": 3},
        description="K_4 as a multigraph base",
    ),
    CatalogEntry(
        "two_clique",
        lambda n, m: two_clique_graph(n, m),
        ("n", "m"),
        lambda n, m: {"order": n + m - 1, "size": n * (n - 1) // 2 + m * (m - 1) // 2},
        description="K_n and K_m sharing vertex 0",
    ),
    CatalogEntry(
        "inflator_g",
        _inflator_g,
        expect=lambda: {"order": 8, "size": 10, "girth": 3},
        blocks=lambda: {BlockKind.INFLATOR: ((0, 3), 1)},
        description="smallest inflator, drop 1, distinguished (0, 3)",
    ),
    CatalogEntry(
        "inflator_cycle",
        _inflator_cycle,
        ("n",),
        lambda n: {"order": 9 * n, "size": 12 * n},
        description="inflator_g around C_n with K1 inserted in every cycle edge",
    ),
    CatalogEntry(
        "nhht9",
        _nhht9,
        expect=lambda: {"order": 9, "size": 12, "hamiltonian": False},
        description="inflator_g plus a vertex on both distinguished vertices",
    ),
    CatalogEntry(
        "k4_minus_e",
        _k4_minus_e,
        expect=lambda: {"order": 4, "size": 5},
        blocks=lambda: {BlockKind.HCTV: ((0, 1), None)},
        description="K_4 minus the edge 01; HCTV on anchors 0 and 1",
    ),
    CatalogEntry(
        "graph_A",
        _graph_a,
        expect=lambda: {"order": 18, "size": 24},
        description="CND graph: K4 with K3 inflations and K1 in every edge",
    ),
    CatalogEntry(
        "graph_B",
        _graph_b,
        expect=lambda: {"order": 18, "size": 24},
        description="CND graph: C2 x K2 with K3 inflations and K1 in every edge",
    ),
    CatalogEntry(
        "graph_A_star",
        _graph_a_star,
        expect=lambda: {"order": 18, "size": 30},
        description="graph_A with the neighbours of every degree-2 vertex joined",
    ),
    CatalogEntry(
        "graph_B_star",
        _graph_b_star,
        expect=lambda: {"order": 18},
        description="maximal nontraceable supergraph of graph_B",
    ),
]

CATALOG: dict[str, CatalogEntry] = {e.name: e for e in _ENTRIES}


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise NotInCatalog(f"no catalog entry named {name!r}") from None


def list_catalog() -> list[CatalogEntry]:
    return sorted(CATALOG.values(), key=lambda e: e.name)


def _recheck(entry: CatalogEntry, g: SimpleGraph | MultiGraph, params: Params) -> None:
    expect = entry.expect(*params)
    problems = []
    if "order" in expect and g.n != expect["order"]:
        problems.append(f"order {g.n}, expected {expect['order']}")
    if "size" in expect and g.size != expect["size"]:
        problems.append(f"size {g.size}, expected {expect['size']}")
    if "regular" in expect and any(d != expect["regular"] for d in g.degrees):
        problems.append(f"not {expect['regular']}-regular")
    if isinstance(g, SimpleGraph):
        if "girth" in expect and girth(g) != expect["girth"]:
            problems.append(f"girth {girth(g)}, expected {expect['girth']}")
        if "hamiltonian" in expect:
            mode = SearchMode.certified(override=True)
            if engine.is_hamiltonian(g, mode) != expect["hamiltonian"]:
                problems.append(f"hamiltonicity differs from {expect['hamiltonian']}")
    if problems:
        raise CorruptCatalog(f"{entry.name}{list(params)}: {'; '.join(problems)}")


@lru_cache(maxsize=256)
def _build(name: str, params: Params) -> SimpleGraph | MultiGraph:
    entry = catalog_entry(name)
    entry.check_params(params)
    g = entry.builder(*params)
    _recheck(entry, g, params)
    logger.debug("Built catalog graph %s%s: order %d, size %d", name, list(params), g.n, g.size)
    return g


def named_graph(name: str, params: Params | list[int] = ()) -> SimpleGraph | MultiGraph:
    """The catalog graph `name` built with `params`, invariants rechecked."""
    return _build(name, tuple(params))


@lru_cache(maxsize=64)
def _block(name: str, params: Params, kind: BlockKind) -> Block:
    entry = catalog_entry(name)
    entry.check_params(params)
    declared = entry.blocks(*params)
    if kind not in declared:
        raise BadParams(f"{name}{list(params)} is not catalogued as a {kind.value} block")
    distinguished, drop = declared[kind]
    g = named_graph(name, params)
    try:
        return verify_block(g, distinguished, kind, drop=drop, name=name)
    except Refuted as e:
        raise CorruptCatalog(f"{name}{list(params)} fails its {kind.value} conditions: {e}") from e


def named_block(name: str, params: Params | list[int] = (), kind: BlockKind | str | None = None) -> Block:
    """
    The catalog graph as a verified block. With one declared kind `kind`
    may be omitted.
    """
    entry = catalog_entry(name)
    params = tuple(params)
    if kind is None:
        kinds = list(entry.blocks(*params))
        if len(kinds) != 1:
            raise BadParams(f"{name} carries block kinds {[k.value for k in kinds]}; name one")
        kind = kinds[0]
    return _block(name, params, BlockKind(kind))


def block_kinds(name: str, params: Params | list[int] = ()) -> list[BlockKind]:
    return list(catalog_entry(name).blocks(*tuple(params)))


def catalog_as_dict() -> list[dict]:
    """Listing for the CLI; block kinds are shown for parameterless entries only."""
    out = []
    for entry in list_catalog():
        row = entry.as_dict()
        row["blocks"] = [] if entry.params else [k.value for k in entry.blocks()]
        out.append(row)
    return out
