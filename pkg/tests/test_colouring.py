import pytest

from detourkit.catalog.search import GraphFilter, graph_levels
from detourkit.colouring.colouring import (
    chromatic_number,
    exact_detour_chromatic,
    exact_detour_colouring,
    greedy_detour_colouring,
    is_pnfree_set,
    maximal_pnfree_sets,
    new_colour_bound,
    old_colour_bound,
    verify_colouring_theorems,
)
from detourkit.detour import engine
from detourkit.errors import BadParams, BadVertex, TooLarge
from detourkit.graphs.simple import complete_graph, cycle_graph, empty_graph, path_graph
from detourkit.sequences.formulas import complete_multipartite


def test_pnfree_sets():
    g = path_graph(4)
    assert not is_pnfree_set(g, [0, 1, 2], 2)
    assert is_pnfree_set(g, [0, 1, 2], 3)
    assert is_pnfree_set(g, [0, 1, 3], 2)
    assert is_pnfree_set(g, [], 1)
    with pytest.raises(BadVertex):
        is_pnfree_set(g, [4], 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_greedy_colouring_is_valid(small_corpus, n):
    for g in small_corpus[:40]:
        colouring = greedy_detour_colouring(g, n)
        assert colouring.is_valid(g)
        assert sorted(v for cls in colouring.classes for v in cls) == list(g.vertices)


def test_greedy_needs_n_at_least_two():
    with pytest.raises(BadParams):
        greedy_detour_colouring(cycle_graph(5), 1)
    with pytest.raises(BadParams):
        greedy_detour_colouring(empty_graph(0), 2)


@pytest.mark.parametrize(
    "g, chi",
    [
        (empty_graph(0), 0),
        (empty_graph(3), 1),
        (path_graph(5), 2),
        (cycle_graph(5), 3),
        (complete_graph(4), 4),
        (complete_multipartite([2, 3, 1]), 3),
    ],
)
def test_chromatic_number(g, chi):
    assert chromatic_number(g) == chi


def test_petersen_chromatic_number(petersen):
    assert chromatic_number(petersen) == 3
    assert exact_detour_chromatic(petersen, 1) == 3


def test_exact_detour_colouring():
    assert exact_detour_chromatic(complete_graph(4), 2) == 2
    assert exact_detour_chromatic(cycle_graph(5), 2) == 2
    assert exact_detour_chromatic(path_graph(6), 6) == 1
    colouring = exact_detour_colouring(complete_graph(5), 2)
    assert colouring.is_valid(complete_graph(5))
    assert colouring.colour_count == 3


def test_exact_colouring_limits():
    with pytest.raises(BadParams):
        exact_detour_colouring(path_graph(3), 0)
    with pytest.raises(TooLarge):
        exact_detour_colouring(path_graph(13), 2)


def test_maximal_free_sets():
    assert maximal_pnfree_sets(complete_graph(3), 1) == [[0], [1], [2]]
    assert maximal_pnfree_sets(path_graph(4), 1) == [[0, 2], [0, 3], [1, 3]]
    assert maximal_pnfree_sets(path_graph(4), 4) == [[0, 1, 2, 3]]


def test_colour_bounds():
    assert new_colour_bound(17, 2) == 9
    assert new_colour_bound(10, 4) == 3
    assert new_colour_bound(5, 6) == 1
    assert old_colour_bound(17, 2) == 9
    assert old_colour_bound(20, 5) == 9


def test_theorem_report_on_petersen(petersen):
    report = verify_colouring_theorems(petersen, 2)
    assert report.ok, report.failures
    assert report.tau == 10
    assert report.exact <= report.new_bound
    assert report.as_dict()["ok"]


def test_theorem_report_rejects_small_n():
    with pytest.raises(BadParams):
        verify_colouring_theorems(cycle_graph(5), 1)


@pytest.fixture(scope="module")
def connected_graphs_to_eight():
    return [g for level in graph_levels(8, GraphFilter(connected=True)) for g in level if g.n >= 2]


@pytest.mark.slow
def test_theorems_hold_on_all_small_connected_graphs(connected_graphs_to_eight):
    for g in connected_graphs_to_eight:
        tau = max(engine.vertex_orders(g))
        for n in range(2, tau):
            report = verify_colouring_theorems(g, n)
            assert report.ok, (g.to_graph6(), n, report.failures)
            assert report.greedy >= report.exact
