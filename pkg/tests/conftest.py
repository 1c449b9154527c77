import os
import random

import hypothesis
import pytest

from detourkit.catalog.named import named_block, named_graph
from detourkit.construction.blocks import BlockKind
from detourkit.graphs.simple import SimpleGraph, build_simple
from detourkit.graphs.structure import is_connected

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None, derandomize=True)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    return build_simple(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    """A random spanning tree plus G(n, p) edges."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_simple(n, edges)


@pytest.fixture(scope="session")
def corpus() -> list[SimpleGraph]:
    """Seeded connected graphs of order 2..16."""
    rng = random.Random(20240611)
    graphs = []
    while len(graphs) < 500:
        n = rng.randint(2, 16)
        g = random_connected_graph(rng, n, rng.choice([0.05, 0.15, 0.3, 0.5]))
        assert is_connected(g)
        graphs.append(g)
    return graphs


@pytest.fixture(scope="session")
def small_corpus(corpus) -> list[SimpleGraph]:
    return [g for g in corpus if g.n <= 10][:120]


@pytest.fixture(scope="session")
def petersen() -> SimpleGraph:
    return named_graph("petersen")


@pytest.fixture(scope="session")
def graph_a() -> SimpleGraph:
    return named_graph("graph_A")


@pytest.fixture(scope="session")
def graph_b() -> SimpleGraph:
    return named_graph("graph_B")


@pytest.fixture(scope="session")
def inflator_g():
    return named_block("inflator_g", (), BlockKind.INFLATOR)


@pytest.fixture(scope="session")
def k1_hctv():
    return named_block("complete", (1,), BlockKind.HCTV)
