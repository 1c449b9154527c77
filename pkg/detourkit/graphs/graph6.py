"""
graph6 codec.

The header is n+63 for n <= 62, `~` plus 18 bits for n <= 258047, and `~~`
plus 36 bits beyond. The body packs the upper triangle column by column,
x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per character, each +63,
zero-padded on the right.
"""

from collections.abc import Iterable, Iterator

from detourkit.errors import BadGraph6
from detourkit.graphs.simple import SimpleGraph, build_simple


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def encode_graph6(g: SimpleGraph) -> str:
    bits = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(value)
    return "".join(chr(c + 63) for c in _encode_n(g.n) + body)


def decode_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise BadGraph6("empty graph6 string")
    data = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise BadGraph6(f"character {ch!r} outside the graph6 range")
        data.append(c)
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for c in data[2:8]:
            n = (n << 6) | c
        body = data[8:]
    else:
        raise BadGraph6(f"truncated graph6 header in {s!r}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise BadGraph6(f"graph6 body has {len(body)} characters, expected {need} for n={n}")
    bits = []
    for c in body:
        bits.extend((c >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_simple(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[SimpleGraph]:
    """One graph per nonblank line."""
    for line in lines:
        if line.strip():
            yield decode_graph6(line)


def write_graph6_lines(graphs: Iterable[SimpleGraph]) -> str:
    return "".join(encode_graph6(g) + "\n" for g in graphs)
