"""
Subset DP over (vertex set, endpoint) reachability.

table[X] is a bitset of the vertices v in X such that G[X] has a
hamiltonian path ending at v that starts in `starts`. With starts = V the
table answers "which vertices end (equivalently begin) a hamiltonian path
of G[X]"; with starts = {s} it answers "which vertices end an s-path that
visits exactly X".

The table is filled layer by layer in popcount order so each layer is one
vectorized numpy pass per vertex.
"""

import logging
import time
from functools import lru_cache

import numpy as np

from detourkit.errors import TooLarge
from detourkit.graphs.simple import iter_bits

logger = logging.getLogger(__name__)

MAX_TABLE_ORDER = 30

_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def popcount(arr: np.ndarray) -> np.ndarray:
    a = arr.astype(np.int64)
    out = np.zeros(a.shape, dtype=np.int64)
    while np.any(a):
        out += _POPCOUNT8[a & 0xFF]
        a = a >> 8
    return out


@lru_cache(maxsize=8)
def layer_masks(n: int) -> tuple[np.ndarray, ...]:
    """All subsets of range(n) grouped by size, ascending within each group."""
    if n > MAX_TABLE_ORDER:
        raise TooLarge(f"subset tables are limited to {MAX_TABLE_ORDER} vertices, got {n}")
    masks = np.arange(1 << n, dtype=np.int32)
    sizes = popcount(masks)
    order = np.argsort(sizes, kind="stable")
    bounds = np.concatenate(([0], np.cumsum(np.bincount(sizes, minlength=n + 1))))
    ordered = masks[order]
    del order
    return tuple(ordered[bounds[k] : bounds[k + 1]] for k in range(n + 1))


def endpoint_table(adj: tuple[int, ...] | list[int], starts: int | None = None) -> np.ndarray:
    """Fill the endpoint table; `starts` defaults to every vertex."""
    n = len(adj)
    full = (1 << n) - 1
    starts = full if starts is None else starts
    layers = layer_masks(n)
    began = time.monotonic()
    table = np.zeros(1 << n, dtype=np.uint32)
    for v in iter_bits(starts):
        table[1 << v] = 1 << v
    single = starts.bit_count() == 1
    for k in range(2, n + 1):
        layer = layers[k]
        if single:
            layer = layer[(layer & starts) != 0]
        for v in range(n):
            bit = 1 << v
            if single and bit == starts:
                continue
            sel = layer[(layer & bit) != 0]
            hit = (table[sel ^ bit] & adj[v]) != 0
            table[sel[hit]] |= bit
    if n >= 16:
        logger.info("Endpoint table for n=%d filled in %.2fs", n, time.monotonic() - began)
    return table


def layer_unions(table: np.ndarray, n: int) -> list[int]:
    """unions[k] = OR of table[X] over all X with |X| = k."""
    layers = layer_masks(n)
    unions = [0] * (n + 1)
    for k in range(1, n + 1):
        vals = table[layers[k]]
        if vals.size:
            unions[k] = int(np.bitwise_or.reduce(vals))
    return unions


def orders_from_unions(unions: list[int], n: int) -> list[int]:
    """Largest k with v in unions[k], per vertex; 0 when v never appears."""
    orders = [0] * n
    for k in range(1, len(unions)):
        for v in iter_bits(unions[k]):
            orders[v] = k
    return orders


def lex_least_path(table: np.ndarray, adj, v: int, k: int) -> list[int]:
    """
    Lexicographically least path of order k starting at v, using an
    any-start table. Candidates are the k-sets X with v an endpoint of a
    hamiltonian path of G[X]; each step keeps the candidates in which the
    smallest feasible next vertex can still continue.
    """
    n = len(adj)
    layer = layer_masks(n)[k]
    candidates = layer[(table[layer] & (1 << v)) != 0]
    if candidates.size == 0:
        raise ValueError(f"no path of order {k} starts at {v}")
    path = [v]
    placed = 1 << v
    cur = v
    for _ in range(k - 1):
        rest = candidates ^ placed
        reachable = int(np.bitwise_or.reduce(table[rest]))
        options = reachable & adj[cur] & ~placed
        nxt = (options & -options).bit_length() - 1
        keep = (table[rest] & (1 << nxt)) != 0
        candidates = candidates[keep]
        path.append(nxt)
        placed |= 1 << nxt
        cur = nxt
    return path


def source_unions(adj, s: int) -> tuple[np.ndarray, list[int]]:
    table = endpoint_table(adj, 1 << s)
    return table, layer_unions(table, len(adj))


def hamiltonian_cycle_exists(adj) -> bool:
    n = len(adj)
    if n < 3:
        return False
    table = endpoint_table(adj, 1)
    return bool(int(table[(1 << n) - 1]) & adj[0] & ~1)


def circumference_table(adj) -> int:
    """Longest cycle order; each cycle is counted at its smallest vertex."""
    n = len(adj)
    best = 0
    for s in range(n):
        if n - s <= best:
            break
        keep = list(range(s, n))
        mask = ((1 << n) - 1) & ~((1 << s) - 1)
        sub = [(adj[a] & mask) >> s for a in keep]
        if sub[0].bit_count() < 2:
            continue
        table = endpoint_table(sub, 1)
        layers = layer_masks(len(sub))
        close = sub[0] & ~1
        for k in range(len(sub), max(best, 2), -1):
            vals = table[layers[k]]
            if np.any((vals & close) != 0):
                best = k
                break
    return best


def induced_orders(adj) -> np.ndarray:
    """orders[X] = tau(G[X]) for every vertex subset X (0 for the empty set)."""
    n = len(adj)
    table = endpoint_table(adj)
    masks = np.arange(1 << n, dtype=np.int64)
    orders = np.where(table != 0, popcount(masks), 0).astype(np.int16)
    for v in range(n):
        bit = 1 << v
        sel = masks[(masks & bit) != 0]
        orders[sel] = np.maximum(orders[sel], orders[sel ^ bit])
    return orders
