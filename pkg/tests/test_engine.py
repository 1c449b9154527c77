import numpy as np
import pytest
from hypothesis import given
from strategies import brute_vertex_orders, graphs

from detourkit.detour import engine, search, tables
from detourkit.detour.classify import kapoor_bound
from detourkit.detour.modes import Mode, PathWitness, SearchMode
from detourkit.errors import BadVertex, BudgetExceeded
from detourkit.graphs.simple import build_simple, complete_graph, cycle_graph, disjoint_union, path_graph
from detourkit.graphs.structure import is_connected


@given(graphs(max_n=7))
def test_vertex_orders_match_brute_force(g):
    assert engine.vertex_orders(g) == brute_vertex_orders(g)


@given(graphs(max_n=9, connected=True))
def test_dp_agrees_with_exhaustive_search(g):
    orders = engine.vertex_orders(g)
    for v in g.vertices:
        outcome = search.longest_path_search(g.adj, v)
        assert outcome.complete
        assert outcome.order == orders[v]


@given(graphs(max_n=9, connected=True))
def test_longest_path_witness_is_valid(g):
    for v in g.vertices:
        result = engine.longest_path_from(g, v)
        assert result.exact
        assert result.witness.is_valid(g)
        assert result.witness.vertices[0] == v
        assert result.order == result.witness.order


def test_lex_least_path_on_cycle():
    result = engine.longest_path_from(cycle_graph(5), 0)
    assert result.witness.vertices == (0, 1, 2, 3, 4)


@given(graphs(max_n=8, connected=True))
def test_pair_orders_match_search(g):
    for u in g.vertices:
        orders = engine.pair_orders(g, u)
        for v in g.vertices:
            if v == u:
                continue
            outcome = search.longest_path_between_search(g.adj, u, v)
            assert orders[v] == outcome.order


@given(graphs(max_n=8))
def test_hamiltonian_path_search_matches_pair_orders(g):
    for u in g.vertices:
        for v in g.vertices:
            if v == u:
                continue
            outcome = search.hamiltonian_path_search(g.adj, u, v)
            assert outcome.complete
            assert bool(outcome.path) == (engine.longest_path_between(g, u, v) == g.n)
            if outcome.path:
                path = PathWitness(tuple(outcome.path))
                assert path.is_valid(g) and path.order == g.n
                assert (path.vertices[0], path.vertices[-1]) == (u, v)


def test_hamiltonian_path_search_inside_a_subset():
    g = cycle_graph(6)
    outcome = search.hamiltonian_path_search(g.adj, 1, 5, within=0b111110)
    assert outcome.path == [1, 2, 3, 4, 5]
    assert search.hamiltonian_path_search(g.adj, 1, 4, within=0b111110).path == []
    assert search.hamiltonian_path_search(g.adj, 0, 2, within=0b111110).path == []


def test_longest_path_between_rejects_same_vertex():
    with pytest.raises(BadVertex):
        engine.longest_path_between(path_graph(3), 1, 1)


def test_longest_path_between_on_path():
    g = path_graph(6)
    assert engine.longest_path_between(g, 0, 5) == 6
    assert engine.longest_path_between(g, 2, 3) == 2


@given(graphs(max_n=9, connected=True))
def test_kapoor_bound_and_distinct_orders(g):
    profile = engine.detour_profile(g)
    assert profile.tau >= kapoor_bound(g)
    assert min(profile.per_vertex) >= (profile.tau + 2) // 2


def test_edge_addition_never_lowers_orders(corpus):
    for g in corpus[:60]:
        if g.n > 14 or not g.non_edges():
            continue
        u, v = g.non_edges()[0]
        before = engine.vertex_orders(g)
        after = engine.vertex_orders(g.add_edges([(u, v)]))
        assert all(b <= a for b, a in zip(before, after))


def test_profile_of_complete_graph():
    profile = engine.detour_profile(complete_graph(5))
    assert profile.tau == 5
    assert profile.constant
    assert profile.deficiency == 0
    assert profile.sequence.format() == "(5)x5"


def test_profile_of_disconnected_graph_is_per_component():
    g = disjoint_union(complete_graph(3), path_graph(2))
    profile = engine.detour_profile(g)
    assert not profile.connected
    assert profile.per_vertex == [3, 3, 3, 2, 2]
    assert profile.tau == 3


def test_profile_rejects_empty_graph():
    with pytest.raises(BadVertex):
        engine.detour_profile(build_simple(0, []))


def test_certified_mode_refuses_large_graphs_without_override():
    mode = SearchMode(Mode.CERTIFIED, certified_limit=6)
    with pytest.raises(BudgetExceeded):
        engine.detour_profile(cycle_graph(8), mode)


def test_certified_limit_applies_per_component():
    mode = SearchMode(Mode.CERTIFIED, certified_limit=6)
    profile = engine.detour_profile(disjoint_union(cycle_graph(4), cycle_graph(5)), mode)
    assert profile.per_vertex == [4] * 4 + [5] * 5
    assert profile.exact and not profile.connected
    with pytest.raises(BudgetExceeded):
        engine.detour_profile(disjoint_union(cycle_graph(8), path_graph(2)), mode)


def test_certified_override_runs_the_search():
    mode = SearchMode(Mode.CERTIFIED, certified_limit=6, override=True)
    profile = engine.detour_profile(cycle_graph(8), mode)
    assert profile.exact
    assert profile.per_vertex == [8] * 8


def test_witnessed_mode_reports_lower_bounds():
    mode = SearchMode(Mode.WITNESSED, certified_limit=4, node_budget=50)
    g = complete_graph(9)
    profile = engine.detour_profile(g, mode)
    # a hamiltonian path is found greedily, so the bound is tight here
    assert profile.tau == 9
    assert profile.exact


def test_witnessed_path_of_order():
    g = cycle_graph(30)
    found = engine.path_of_order(g, 3, 30, SearchMode.witnessed())
    assert found is not None
    assert found.order == 30 and found.is_valid(g)
    assert engine.path_of_order(g, 3, 31, SearchMode.witnessed()) is None


def test_traceable_and_hamiltonian():
    assert engine.is_traceable(path_graph(6))
    assert not engine.is_hamiltonian(path_graph(6))
    assert engine.is_hamiltonian(cycle_graph(6))
    star = build_simple(4, [(0, 1), (0, 2), (0, 3)])
    assert not engine.is_traceable(star)
    assert engine.is_hamiltonian(complete_graph(2))


def test_hamiltonian_with_forced_prefix():
    g = cycle_graph(5)
    assert engine.is_hamiltonian(g, prefix=[0, 1])
    assert not engine.is_hamiltonian(g, prefix=[0, 2])


def test_traceability_above_the_limit_by_search():
    mode = SearchMode(Mode.CERTIFIED, certified_limit=8, override=True)
    assert engine.is_traceable(cycle_graph(12), mode)
    star = build_simple(10, [(0, v) for v in range(1, 10)])
    assert not engine.is_traceable(star, mode)


def test_circumference(petersen):
    assert engine.circumference(petersen) == 9
    assert engine.circumference(path_graph(5)) == 0
    assert engine.circumference(complete_graph(6)) == 6


def test_circumference_by_search_matches_table(petersen):
    mode = SearchMode(Mode.CERTIFIED, certified_limit=5, override=True)
    assert engine.circumference(petersen, mode) == 9


def test_hamiltonian_cycle_table_agrees_with_search(small_corpus):
    for g in small_corpus:
        if g.n < 3:
            continue
        by_table = tables.hamiltonian_cycle_exists(g.adj)
        by_search = bool(search.hamiltonian_cycle_search(g.adj).path)
        assert by_table == by_search


def test_induced_orders_by_subset():
    g = path_graph(4)
    orders = tables.induced_orders(g.adj)
    assert orders[0] == 0
    assert orders[0b1111] == 4
    assert orders[0b1011] == 2
    assert orders[0b0101] == 1
    assert orders.dtype == np.int16


def test_layer_masks_partition_by_popcount():
    layers = tables.layer_masks(5)
    assert sum(len(layer) for layer in layers) == 32
    for k, layer in enumerate(layers):
        assert all(int(m).bit_count() == k for m in layer)


def test_corpus_profiles_are_consistent(corpus):
    for g in corpus[:100]:
        assert is_connected(g)
        profile = engine.detour_profile(g)
        assert profile.tau == max(profile.per_vertex)
        assert profile.deficiency == g.n - profile.tau
        assert profile.sequence.terms == tuple(sorted(profile.per_vertex))
