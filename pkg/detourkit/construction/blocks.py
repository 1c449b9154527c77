"""
Building blocks for the CND constructions and their exhaustive verification.

Every kind is checked against its defining conditions with per-source
endpoint tables up to the certified limit. Above it U-type and HCTV
blocks can be checked by exhaustive search when the mode allows it, and
blocks derived from large maximal hypohamiltonian graphs can be admitted
on trust instead (see `derive_utype`).

Kinds and their distinguished vertices:
- ITYPE, RTYPE, UTYPE: three vertices D = {a, b, c}
- HCTV: two anchors x, y (none for K1)
- INFLATOR: two vertices a, b, with the drop m = |V| - tau(a, b)
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

import numpy as np

from detourkit.detour import search, tables
from detourkit.detour.classify import hypohamiltonicity_suite
from detourkit.detour.modes import PathWitness, SearchMode
from detourkit.errors import BadBlock, BadVertex, NotHypohamiltonian, Refuted, TooLarge
from detourkit.graphs.simple import SimpleGraph, bits_of, iter_bits

logger = logging.getLogger(__name__)


class BlockKind(str, Enum):
    ITYPE = "itype"
    RTYPE = "rtype"
    UTYPE = "utype"
    HCTV = "hctv"
    INFLATOR = "inflator"


ARITY = {
    BlockKind.ITYPE: 3,
    BlockKind.RTYPE: 3,
    BlockKind.UTYPE: 3,
    BlockKind.HCTV: 2,
    BlockKind.INFLATOR: 2,
}


@dataclass(frozen=True)
class Block:
    graph: SimpleGraph
    distinguished: tuple[int, ...]
    kind: BlockKind
    drop: int | None = None
    verified: bool = False
    trusted: bool = False
    name: str = ""
    witnesses: dict[str, tuple[PathWitness, ...]] = field(default_factory=dict, compare=False, repr=False)

    @property
    def order(self) -> int:
        return self.graph.n

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind.value,
            "order": self.graph.n,
            "size": self.graph.size,
            "distinguished": list(self.distinguished),
            "drop": self.drop,
            "verified": self.verified,
            "trusted": self.trusted,
            "graph6": self.graph.to_graph6(),
        }


class PathTables:
    """Lazily built single-source endpoint tables of one graph."""

    def __init__(self, g: SimpleGraph):
        self.g = g
        self.full = g.full_mask
        self.masks = np.arange(1 << g.n, dtype=np.int64)
        self._source: dict[int, np.ndarray] = {}

    def source(self, s: int) -> np.ndarray:
        if s not in self._source:
            self._source[s] = tables.endpoint_table(self.g.adj, 1 << s).astype(np.int64)
        return self._source[s]

    def ham(self, u: int, v: int, within: int) -> bool:
        """G[within] has a hamiltonian u-v path."""
        if u == v:
            return within == 1 << u
        return bool(int(self.source(u)[within]) >> v & 1)

    def traceable_from(self, u: int, within: int) -> bool:
        return int(self.source(u)[within]) != 0

    def pair_order(self, u: int, v: int) -> int:
        """tau(u, v); 0 when no u-v path exists."""
        hits = self.masks[(self.source(u) >> v & 1) != 0]
        if hits.size == 0:
            return 0
        return int(tables.popcount(hits).max())

    def trace(self, u: int, v: int, within: int) -> PathWitness:
        """A hamiltonian u-v path of G[within], read back from u's table."""
        src = self.source(u)
        path = [v]
        rest = within
        cur = v
        while cur != u:
            rest ^= 1 << cur
            options = self.g.adj[cur] & rest
            cur = next(w for w in iter_bits(options) if int(src[rest]) >> w & 1)
            path.append(cur)
        return PathWitness(tuple(reversed(path)))

    def trace_any(self, u: int, within: int) -> PathWitness:
        ends = int(self.source(u)[within])
        return self.trace(u, (ends & -ends).bit_length() - 1, within)

    def split(self, v: int, d: int, rest: tuple[int, ...]) -> int | None:
        """
        A vertex set X holding a hamiltonian v-d path, avoiding `rest`, whose
        complement is covered by a path between the two vertices of `rest`
        (or, with one vertex in `rest`, a path starting there).
        """
        avoid = bits_of(rest)
        if v == d:
            candidates = np.array([1 << v], dtype=np.int64)
        else:
            m = self.masks
            ok = (m >> v & 1 != 0) & (m >> d & 1 != 0) & (m & avoid == 0) & (self.source(v) >> d & 1 != 0)
            candidates = m[ok]
        if candidates.size == 0:
            return None
        others = self.full ^ candidates
        q = self.source(rest[0])[others]
        hit = (q >> rest[1] & 1) != 0 if len(rest) == 2 else q != 0
        found = candidates[hit]
        return int(found[0]) if found.size else None


class SearchPaths:
    """
    The PathTables queries the U-type and HCTV checks need, answered by
    exhaustive search for graphs above the table limit.
    """

    def __init__(self, g: SimpleGraph):
        self.g = g
        self.full = g.full_mask
        self._paths: dict[tuple[int, int, int], PathWitness | None] = {}

    def _between(self, u: int, v: int, within: int) -> PathWitness | None:
        key = (u, v, within)
        if key not in self._paths:
            outcome = search.hamiltonian_path_search(self.g.adj, u, v, within=within)
            self._paths[key] = PathWitness(tuple(outcome.path)) if outcome.path else None
        return self._paths[key]

    def _from(self, u: int, within: int) -> PathWitness | None:
        key = (u, -1, within)
        if key not in self._paths:
            outcome = search.longest_path_search(self.g.adj, u, within=within, warnsdorff=True)
            self._paths[key] = PathWitness(tuple(outcome.path)) if outcome.order == within.bit_count() else None
        return self._paths[key]

    def ham(self, u: int, v: int, within: int) -> bool:
        return self._between(u, v, within) is not None

    def trace(self, u: int, v: int, within: int) -> PathWitness:
        return self._between(u, v, within)

    def traceable_from(self, u: int, within: int) -> bool:
        return self._from(u, within) is not None

    def trace_any(self, u: int, within: int) -> PathWitness:
        return self._from(u, within)


SEARCHABLE = (BlockKind.UTYPE, BlockKind.HCTV)


def _check_arity(g: SimpleGraph, distinguished: tuple[int, ...], kind: BlockKind) -> None:
    for v in distinguished:
        if not 0 <= v < g.n:
            raise BadVertex(f"distinguished vertex {v} out of range for n={g.n}")
    if len(set(distinguished)) != len(distinguished):
        raise BadBlock(f"distinguished vertices must be distinct, got {list(distinguished)}")
    if kind is BlockKind.HCTV and g.n == 1:
        if distinguished:
            raise BadBlock("K1 as an HCTV block has no anchors")
        return
    if len(distinguished) != ARITY[kind]:
        raise BadBlock(f"{kind.value} block needs {ARITY[kind]} distinguished vertices, got {len(distinguished)}")
    if kind is BlockKind.INFLATOR and g.n < 3:
        raise BadBlock(f"an inflator needs at least 3 vertices, got {g.n}")


def _no_spanning_path_in(pt: PathTables | SearchPaths, d: tuple[int, ...], condition: str) -> None:
    for x, y in combinations(d, 2):
        if pt.ham(x, y, pt.full):
            raise Refuted(condition, x, f"spanning path from {x} to {y} ({list(pt.trace(x, y, pt.full).vertices)})")


def _paths_cover(pt: PathTables, d: tuple[int, ...], condition: str, witnesses: dict) -> None:
    """For every v: a path v..d with d in D plus a disjoint path joining the other two span G."""
    for v in pt.g.vertices:
        for x in d:
            rest = tuple(y for y in d if y != x)
            if v in rest:
                continue
            found = pt.split(v, x, rest)
            if found is not None:
                witnesses[f"{condition}:{v}"] = (
                    pt.trace(v, x, found) if v != x else PathWitness((v,)),
                    pt.trace(rest[0], rest[1], pt.full ^ found),
                )
                break
        else:
            raise Refuted(condition, v, "no spanning pair of paths")


def _pairwise_hamiltonian(pt: PathTables, d: tuple[int, ...], witnesses: dict) -> None:
    for x, y in combinations(d, 2):
        if not pt.ham(x, y, pt.full):
            raise Refuted("R-1", x, f"no hamiltonian path between {x} and {y}")
        witnesses[f"R-1:{x},{y}"] = (pt.trace(x, y, pt.full),)


def _utype(pt: PathTables | SearchPaths, d: tuple[int, ...], witnesses: dict) -> None:
    full = pt.full
    for x, y in combinations(d, 2):
        (z,) = set(d) - {x, y}
        within = full ^ (1 << z)
        if not pt.ham(x, y, within):
            raise Refuted("U-1", x, f"no {x}-{y} path covering all but {z}")
        witnesses[f"U-1:{x},{y}"] = (pt.trace(x, y, within),)
    _no_spanning_path_in(pt, d, "U-2")
    for x in d:
        if not pt.traceable_from(x, full):
            raise Refuted("U-3", x, "not traceable from this vertex")
        witnesses[f"U-3:{x}"] = (pt.trace_any(x, full),)
    for v in pt.g.vertices:
        if v in d:
            continue
        end = next((x for x in d if pt.ham(v, x, full)), None)
        if end is None:
            raise Refuted("U-4", v, "no spanning path to a distinguished vertex")
        witnesses[f"U-4:{v}"] = (pt.trace(v, end, full),)


def _hctv(pt: PathTables | SearchPaths, d: tuple[int, ...], witnesses: dict) -> None:
    for v in pt.g.vertices:
        end = next((x for x in d if pt.ham(v, x, pt.full)), None)
        if end is None:
            raise Refuted("HCTV", v, "no hamiltonian path to an anchor")
        witnesses[f"HCTV:{v}"] = (pt.trace(v, end, pt.full),)


def _inflator(pt: PathTables, d: tuple[int, ...], drop: int | None, witnesses: dict) -> int:
    a, b = d
    k = pt.g.n
    full = pt.full
    m = k - pt.pair_order(a, b)
    if not 1 <= m <= k - 2:
        raise Refuted("D-1", a, f"tau({a},{b}) = {k - m} gives drop {m} outside 1..{k - 2}")
    if drop is not None and m != drop:
        raise Refuted("D-1", a, f"drop is {m}, expected {drop}")
    for x, y in ((a, b), (b, a)):
        within = full ^ (1 << y)
        if not pt.traceable_from(x, within):
            raise Refuted("D-2", x, f"no path from {x} covering all but {y}")
        witnesses[f"D-2:{x}"] = (pt.trace_any(x, within),)
        if not pt.traceable_from(x, full):
            raise Refuted("D-3", x, "not traceable from this vertex")
        witnesses[f"D-3:{x}"] = (pt.trace_any(x, full),)
    for v in pt.g.vertices:
        if v in d:
            continue
        for x, y in ((a, b), (b, a)):
            found = pt.split(v, x, (y,))
            if found is not None:
                witnesses[f"D-4:{v}"] = (pt.trace(v, x, found), pt.trace_any(y, full ^ found))
                break
        else:
            raise Refuted("D-4", v, "no path to a distinguished vertex leaves a path from the other")
    return m


def verify_block(
    g: SimpleGraph,
    distinguished: list[int] | tuple[int, ...],
    kind: BlockKind,
    drop: int | None = None,
    name: str = "",
    mode: SearchMode | None = None,
) -> Block:
    """Check every defining condition of `kind`; raise Refuted on the first failure."""
    mode = mode or SearchMode()
    d = tuple(distinguished)
    _check_arity(g, d, kind)
    pt: PathTables | SearchPaths
    if mode.use_table(g.n):
        pt = PathTables(g)
    elif kind in SEARCHABLE and mode.is_certified and mode.override:
        logger.info("Verifying an order-%d %s block by exhaustive search", g.n, kind.value)
        pt = SearchPaths(g)
    else:
        raise TooLarge(f"{kind.value} verification limited to {mode.certified_limit} vertices, got {g.n}")
    witnesses: dict[str, tuple[PathWitness, ...]] = {}
    found_drop = None
    match kind:
        case BlockKind.ITYPE:
            _no_spanning_path_in(pt, d, "I-1")
            _paths_cover(pt, d, "I-2", witnesses)
        case BlockKind.RTYPE:
            _pairwise_hamiltonian(pt, d, witnesses)
            _paths_cover(pt, d, "R-2", witnesses)
        case BlockKind.UTYPE:
            _utype(pt, d, witnesses)
        case BlockKind.HCTV:
            if g.n > 1:
                _hctv(pt, d, witnesses)
        case BlockKind.INFLATOR:
            found_drop = _inflator(pt, d, drop, witnesses)
    logger.debug("Verified %s block of order %d with D=%s", kind.value, g.n, list(d))
    return Block(g, d, kind, drop=found_drop, verified=True, name=name, witnesses=witnesses)


def derive_utype(h: SimpleGraph, w: int, trust: bool = False, mode: SearchMode | None = None) -> Block:
    """
    U-type block H - w with D = N(w), for a maximal hypohamiltonian H and a
    cubic vertex w. Within the certified limit H and the block are both
    checked; above it both are either certified by exhaustive search (slow)
    or, with trust=True, taken as given.
    """
    mode = mode or SearchMode()
    if not 0 <= w < h.n:
        raise BadVertex(f"vertex {w} out of range for n={h.n}")
    if h.degree(w) != 3:
        raise BadVertex(f"vertex {w} has degree {h.degree(w)}, need 3")
    if mode.use_table(h.n) or not trust:
        check_mode = mode if mode.use_table(h.n) else SearchMode.certified(override=True)
        flags = hypohamiltonicity_suite(h, check_mode)
        if not flags.maximal_hypohamiltonian:
            raise NotHypohamiltonian(f"order-{h.n} graph is not maximal hypohamiltonian")
    else:
        logger.warning("Trusting maximal hypohamiltonicity of an order-%d graph", h.n)
    g = h.remove_vertex(w)
    d = tuple(u if u < w else u - 1 for u in h.neighbors(w))
    if mode.use_table(g.n):
        return verify_block(g, d, BlockKind.UTYPE, mode=mode)
    if trust:
        return Block(g, d, BlockKind.UTYPE, verified=True, trusted=True)
    return verify_block(g, d, BlockKind.UTYPE, mode=SearchMode.certified(override=True))
