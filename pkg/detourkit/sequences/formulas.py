"""
Closed-form detour sequences for paths, two cliques sharing a vertex and
complete multipartite graphs, with builders for the graphs themselves so
the formulas can be checked against the engine.
"""

import math

from detourkit.errors import BadParams, Empty
from detourkit.graphs.simple import SimpleGraph, build_simple
from detourkit.sequences.sequence import DetourSequence


def path_sequence(n: int) -> DetourSequence:
    """(a)_k,(a+1)_2,...,(n)_2 with a = ceil((n+1)/2), k = 1 for odd n and 2 for even n."""
    if n < 1:
        raise Empty(f"a path needs at least one vertex, got {n}")
    a = math.ceil((n + 1) / 2)
    k = 1 if n % 2 else 2
    return DetourSequence.from_runs([(a, k)] + [(v, 2) for v in range(a + 1, n + 1)])


def _check_two_clique(n: int, m: int) -> None:
    if not 1 < m <= n:
        raise BadParams(f"two-clique graph needs 1 < m <= n, got n={n}, m={m}")


def two_clique_sequence(n: int, m: int) -> DetourSequence:
    """n,(n+m-1)_(n+m-2): the shared vertex reaches only one clique."""
    _check_two_clique(n, m)
    return DetourSequence.from_runs([(n, 1), (n + m - 1, n + m - 2)])


def two_clique_graph(n: int, m: int) -> SimpleGraph:
    """K_n and K_m sharing vertex 0; K_n is 0..n-1, K_m is 0 plus n..n+m-2."""
    _check_two_clique(n, m)
    big = list(range(n))
    small = [0] + list(range(n, n + m - 1))
    edges = [(u, v) for part in (big, small) for i, u in enumerate(part) for v in part[i + 1 :]]
    return build_simple(n + m - 1, edges)


def _parts(parts: list[int]) -> list[int]:
    if any(p < 0 for p in parts):
        raise BadParams(f"part sizes must be nonnegative, got {parts}")
    kept = [p for p in parts if p]
    if len(kept) < 2:
        raise BadParams(f"a complete multipartite graph needs at least two nonempty parts, got {parts}")
    return kept


def multipartite_sequence(parts: list[int]) -> DetourSequence:
    """
    Detour sequence of K(n_1,...,n_p) with N vertices and largest part n_p:
    (N)_N when 2*n_p <= N, otherwise (2(N-n_p))_(N-n_p),(2(N-n_p)+1)_(n_p).
    """
    kept = _parts(parts)
    total = sum(kept)
    largest = max(kept)
    if 2 * largest <= total:
        return DetourSequence.from_runs([(total, total)])
    rest = total - largest
    return DetourSequence.from_runs([(2 * rest, rest), (2 * rest + 1, largest)])


def complete_multipartite(parts: list[int]) -> SimpleGraph:
    """Parts occupy consecutive vertex ids in the order given."""
    kept = _parts(parts)
    label = []
    for i, p in enumerate(kept):
        label += [i] * p
    n = len(label)
    return build_simple(n, [(u, v) for u in range(n) for v in range(u + 1, n) if label[u] != label[v]])


def classify_multipartite_sequence(d: DetourSequence) -> bool:
    """Whether d has one of the two shapes a complete multipartite graph can have."""
    runs = d.runs
    if len(runs) == 1:
        value, mult = runs[0]
        return value == mult and value >= 2
    if len(runs) == 2:
        (low, n_low), (high, n_high) = runs
        return low == 2 * n_low and high == low + 1 and n_high > n_low
    return False
