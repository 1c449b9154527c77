"""
Detour sequences of trees: the characterisation and its realisation.

A sequence belongs to a tree exactly when it is 1, or 2,2, or
(a)_k,(a+1)_k1,...,(m)_kl with m >= 3, a = ceil((m+1)/2), every k_j >= 2
and k = 1 for odd m, 2 for even m. The realising tree is the path
v_1..v_m with k_j - 2 leaves hung on v_(a+j-1).
"""

import math

from detourkit.errors import Unrealizable
from detourkit.graphs.simple import SimpleGraph, build_simple, path_graph
from detourkit.sequences.sequence import DetourSequence


def is_tree_sequence(d: DetourSequence) -> bool:
    if d.terms in ((1,), (2, 2)):
        return True
    runs = d.runs
    if not runs:
        return False
    m = runs[-1][0]
    if m < 3:
        return False
    a = math.ceil((m + 1) / 2)
    if [value for value, _ in runs] != list(range(a, m + 1)):
        return False
    first = 1 if m % 2 else 2
    return runs[0][1] == first and all(mult >= 2 for _, mult in runs[1:])


def realize_tree(d: DetourSequence) -> SimpleGraph:
    """Path on vertices 0..m-1 followed by the hung leaves."""
    if not is_tree_sequence(d):
        raise Unrealizable(f"{d} is not the detour sequence of a tree")
    if d.terms == (1,):
        return path_graph(1)
    if d.terms == (2, 2):
        return path_graph(2)
    runs = d.runs
    m = runs[-1][0]
    a = runs[0][0]
    edges = [(i, i + 1) for i in range(m - 1)]
    n = m
    for j, (_, mult) in enumerate(runs[1:], start=1):
        # v_(a+j-1) in 1-based path positions
        anchor = a + j - 2
        for _ in range(mult - 2):
            edges.append((anchor, n))
            n += 1
    return build_simple(n, edges)
