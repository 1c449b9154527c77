"""
Graph isomorphism by colour refinement plus backtracking.

Vertices start coloured by degree and the colours are refined by the
multiset of neighbour colours until stable; the search then maps vertices
of g to same-coloured vertices of h, checking adjacency against every
vertex mapped so far.
"""

from dataclasses import dataclass

from detourkit.config import settings
from detourkit.errors import TooLarge
from detourkit.graphs.simple import SimpleGraph, iter_bits


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    mapping: list[int] | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def refine_colours(graphs: list[SimpleGraph], seeds: list[list] | None = None) -> list[list[int]]:
    """
    Joint colour refinement of several graphs, so colour ids are comparable
    across them. `seeds` gives optional initial labels per vertex.
    """
    if seeds is None:
        colours: list[list] = [[g.degree(v) for v in g.vertices] for g in graphs]
    else:
        colours = [[(s[v], g.degree(v)) for v in g.vertices] for g, s in zip(graphs, seeds)]
    while True:
        signatures = []
        for g, col in zip(graphs, colours):
            signatures.append(
                [(col[v], tuple(sorted(col[u] for u in iter_bits(g.adj[v])))) for v in g.vertices]
            )
        palette = {sig: i for i, sig in enumerate(sorted({s for sigs in signatures for s in sigs}))}
        refined = [[palette[s] for s in sigs] for sigs in signatures]
        if all(len(set(r)) == len(set(c)) for r, c in zip(refined, colours)):
            return refined
        colours = refined


def invariant_key(g: SimpleGraph) -> tuple:
    """Cheap isomorphism invariant: order, size and sorted (degree, neighbour degrees)."""
    degs = g.degrees
    local = sorted((degs[v], tuple(sorted(degs[u] for u in iter_bits(g.adj[v])))) for v in g.vertices)
    return g.n, g.size, tuple(local)


def _search_order(g: SimpleGraph, colour: list[int]) -> list[int]:
    """Rarest colour first, then stay connected to already-placed vertices."""
    counts: dict[int, int] = {}
    for c in colour:
        counts[c] = counts.get(c, 0) + 1
    placed: list[int] = []
    placed_mask = 0
    remaining = set(g.vertices)
    while remaining:
        touching = [v for v in remaining if g.adj[v] & placed_mask]
        pool = touching or list(remaining)
        v = min(pool, key=lambda x: (counts[colour[x]], -(g.adj[x] & placed_mask).bit_count(), x))
        placed.append(v)
        placed_mask |= 1 << v
        remaining.discard(v)
    return placed


def _match(g: SimpleGraph, h: SimpleGraph, cg: list[int], ch: list[int]) -> list[int] | None:
    if sorted(cg) != sorted(ch):
        return None
    order = _search_order(g, cg)
    by_colour: dict[int, list[int]] = {}
    for v in h.vertices:
        by_colour.setdefault(ch[v], []).append(v)
    mapping = [-1] * g.n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == g.n:
            return True
        v = order[depth]
        for w in by_colour[cg[v]]:
            if used >> w & 1:
                continue
            if any(g.has_edge(v, p) != h.has_edge(w, mapping[p]) for p in order[:depth]):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    return mapping if extend(0) else None


def _check_size(*graphs: SimpleGraph) -> None:
    limit = settings.isomorphism_limit
    n = max(g.n for g in graphs)
    if n > limit:
        raise TooLarge(f"isomorphism limited to {limit} vertices, got {n}")


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> IsomorphismResult:
    """Return a certified bijection g -> h when one exists."""
    _check_size(g, h)
    if g.n != h.n or g.size != h.size or sorted(g.degrees) != sorted(h.degrees):
        return IsomorphismResult(False)
    if g.n == 0:
        return IsomorphismResult(True, [])
    cg, ch = refine_colours([g, h])
    mapping = _match(g, h, cg, ch)
    if mapping is None:
        return IsomorphismResult(False)
    assert all(g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v]) for u, v in g.edges())
    return IsomorphismResult(True, mapping)


def maps_vertex(g: SimpleGraph, v: int, w: int) -> bool:
    """True if some automorphism of g sends v to w."""
    return maps_vertex_set(g, [v], [w])


def maps_vertex_set(g: SimpleGraph, vs: list[int], ws: list[int]) -> bool:
    """True if some automorphism of g sends the set vs onto the set ws."""
    _check_size(g)
    if len(set(vs)) != len(set(ws)):
        return False
    seed_v = [int(u in vs) for u in g.vertices]
    seed_w = [int(u in ws) for u in g.vertices]
    cg, ch = refine_colours([g, g], [seed_v, seed_w])
    return _match(g, g, cg, ch) is not None


def automorphism_orbits(g: SimpleGraph) -> list[list[int]]:
    """Vertex orbits under the automorphism group."""
    colour = refine_colours([g])[0]
    orbit_of = list(g.vertices)
    for v in g.vertices:
        if orbit_of[v] != v:
            continue
        for w in range(v + 1, g.n):
            if orbit_of[w] == w and colour[w] == colour[v] and maps_vertex(g, v, w):
                orbit_of[w] = v
    orbits: dict[int, list[int]] = {}
    for v in g.vertices:
        orbits.setdefault(orbit_of[v], []).append(v)
    return list(orbits.values())
