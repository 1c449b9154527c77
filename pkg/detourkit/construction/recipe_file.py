"""
Recipe text files.

    variant two
    base k4_multigraph            # catalog name, or a graph file
    inflate * 3                   # variant two: clique order (or complete(3))
    insert * complete(1)

    variant f
    cycle 2
    inflate * inflator_g
    insert * complete(1)

`*` applies a line to every vertex or edge; a numeric target applies it to
one and overrides `*` whatever the line order. Block names are catalog
entries, optionally with parameters in parentheses. For variant two a
missing `inflate` means K_deg(v) at every vertex. Lines are whitespace
separated and `#` starts a comment.
"""

import re
from pathlib import Path

from detourkit.catalog.named import CATALOG, named_block, named_graph
from detourkit.construction.blocks import Block, BlockKind
from detourkit.construction.recipes import VERTEX_KIND, Recipe, Variant
from detourkit.errors import BadRecipe, DetourError
from detourkit.graphs.io import load_multigraph
from detourkit.graphs.multigraph import MultiGraph, from_simple

_NAMED = re.compile(r"^([A-Za-z_]\w*)(?:\(([\d,\s]*)\))?$")


def _parse_named(token: str, lineno: int) -> tuple[str, tuple[int, ...]]:
    match = _NAMED.match(token)
    if not match:
        raise BadRecipe(f"line {lineno}: cannot read {token!r} as name(params)")
    name, args = match.groups()
    params = tuple(int(p) for p in args.split(",") if p.strip()) if args else ()
    return name, params


def _base(token: str, base_dir: Path, lineno: int) -> MultiGraph:
    match = _NAMED.match(token)
    if match and match.group(1) in CATALOG:
        name, params = _parse_named(token, lineno)
        g = named_graph(name, params)
        return g if isinstance(g, MultiGraph) else from_simple(g)
    path = base_dir / token
    if not path.is_file():
        raise BadRecipe(f"line {lineno}: {token!r} is neither a catalog name nor a file")
    return load_multigraph(path)


def _vertex_block(token: str, variant: Variant, lineno: int) -> Block | int:
    if variant is Variant.TWO:
        if token.isdigit():
            return int(token)
        name, params = _parse_named(token, lineno)
        if name != "complete" or len(params) != 1:
            raise BadRecipe(f"line {lineno}: variant two inflates with cliques, got {token!r}")
        return params[0]
    name, params = _parse_named(token, lineno)
    return named_block(name, params, VERTEX_KIND[variant])


def _targets(token: str, lineno: int) -> int | None:
    if token == "*":
        return None
    if not token.isdigit():
        raise BadRecipe(f"line {lineno}: target must be an id or *, got {token!r}")
    return int(token)


def _spread(assigned: dict[int | None, tuple[str, int]], count: int, what: str) -> dict[int, tuple[str, int]]:
    stray = [i for i in assigned if i is not None and not 0 <= i < count]
    if stray:
        raise BadRecipe(f"{what} ids {stray} out of range for {count}")
    out = {}
    for i in range(count):
        if i in assigned:
            out[i] = assigned[i]
        elif None in assigned:
            out[i] = assigned[None]
    return out


def _resolve(token: str, lineno: int, variant: Variant | None) -> Block | int:
    """A vertex block for `variant`, or an HCTV insert when variant is None."""
    try:
        if variant is None:
            name, params = _parse_named(token, lineno)
            return named_block(name, params, BlockKind.HCTV)
        return _vertex_block(token, variant, lineno)
    except BadRecipe:
        raise
    except DetourError as e:
        raise BadRecipe(f"line {lineno}: block {token!r}: {e}") from e


def parse_recipe(text: str, base_dir: str | Path = ".") -> Recipe:
    base_dir = Path(base_dir)
    variant = None
    base = None
    cycle_len = None
    inflates: dict[int | None, tuple[str, int]] = {}
    inserts: dict[int | None, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        try:
            match words:
                case ["variant", value]:
                    variant = Variant(value.lower())
                case ["base", token]:
                    base = _base(token, base_dir, lineno)
                case ["cycle", value] if value.isdigit():
                    cycle_len = int(value)
                case ["inflate", target, block]:
                    inflates[_targets(target, lineno)] = (block, lineno)
                case ["insert", target, block]:
                    inserts[_targets(target, lineno)] = (block, lineno)
                case _:
                    raise BadRecipe(f"line {lineno}: cannot parse {raw.strip()!r}")
        except BadRecipe:
            raise
        except ValueError as e:
            raise BadRecipe(f"line {lineno}: {e}") from e
    if variant is None:
        raise BadRecipe("recipe has no variant line")

    if variant is Variant.F:
        if cycle_len is None:
            raise BadRecipe("variant f needs a cycle line")
        count = edge_count = cycle_len
    else:
        if base is None:
            raise BadRecipe(f"variant {variant.value} needs a base line")
        count, edge_count = base.n, base.size

    if variant is Variant.TWO and not inflates:
        vertex_blocks: dict[int, Block | int] = {v: base.degree(v) for v in range(base.n)}
    else:
        vertex_blocks = {v: _resolve(tok, ln, variant) for v, (tok, ln) in _spread(inflates, count, "vertex").items()}
    edge_inserts = {e: _resolve(tok, ln, None) for e, (tok, ln) in _spread(inserts, edge_count, "edge").items()}
    return Recipe(variant, base=base, cycle_len=cycle_len, vertex_blocks=vertex_blocks, edge_inserts=edge_inserts)


def load_recipe(path: str | Path) -> Recipe:
    """Read a recipe file; relative base paths resolve against its directory."""
    path = Path(path)
    return parse_recipe(path.read_text(), path.parent)
