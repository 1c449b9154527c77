"""
File loading for the CLI: graph6 (one graph per line) or the plain
multigraph text format, told apart by the `multigraph` header.
"""

import logging
from pathlib import Path

from detourkit.errors import BadFormat
from detourkit.graphs.graph6 import decode_graph6
from detourkit.graphs.multigraph import MultiGraph, from_simple, read_multigraph_text
from detourkit.graphs.simple import SimpleGraph

logger = logging.getLogger(__name__)


def parse_graph_text(text: str) -> SimpleGraph | MultiGraph:
    stripped = [ln for ln in text.splitlines() if ln.split("#", 1)[0].strip()]
    if not stripped:
        raise BadFormat("no graph found in input")
    if stripped[0].split()[0] == "multigraph":
        return read_multigraph_text(text)
    if len(stripped) > 1:
        logger.warning("Input holds %d graph6 lines; using the first", len(stripped))
    return decode_graph6(stripped[0])


def load_graph(path: str | Path) -> SimpleGraph | MultiGraph:
    return parse_graph_text(Path(path).read_text())


def load_simple(path: str | Path) -> SimpleGraph:
    """Load a graph and reduce a multigraph to its underlying simple graph."""
    g = load_graph(path)
    if isinstance(g, MultiGraph):
        if g.has_parallel_or_loop():
            logger.warning("Dropping loops and parallel edges from %s", path)
        return g.to_simple()
    return g


def load_multigraph(path: str | Path) -> MultiGraph:
    g = load_graph(path)
    return g if isinstance(g, MultiGraph) else from_simple(g)
