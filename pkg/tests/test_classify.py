import pytest
from hypothesis import given
from strategies import graphs

from detourkit.catalog.named import named_graph
from detourkit.detour import classify, engine
from detourkit.errors import TooLarge
from detourkit.graphs.simple import build_simple, complete_graph, cycle_graph, disjoint_union, path_graph
from detourkit.sequences.formulas import complete_multipartite

CLAW = build_simple(4, [(0, 1), (0, 2), (0, 3)])


def test_traceability_of_complete_graph():
    flags = classify.traceability_suite(complete_graph(5))
    assert flags.traceable and flags.hamiltonian
    assert flags.homogeneously_traceable and flags.hamiltonian_connected
    assert not flags.nhht


def test_cycle_is_not_hamiltonian_connected():
    flags = classify.traceability_suite(cycle_graph(5))
    assert flags.hamiltonian and flags.homogeneously_traceable
    assert not flags.hamiltonian_connected


def test_disconnected_graph_has_no_flags():
    flags = classify.traceability_suite(disjoint_union(complete_graph(3), complete_graph(3)))
    assert flags.as_dict() == {
        "traceable": False,
        "hamiltonian": False,
        "homogeneously_traceable": False,
        "hamiltonian_connected": False,
    }


def test_petersen_is_nhht_and_maximal_hypohamiltonian(petersen):
    assert classify.traceability_suite(petersen).nhht
    flags = classify.hypohamiltonicity_suite(petersen)
    assert flags.hypohamiltonian
    assert flags.maximal_hypohamiltonian


def test_hamiltonian_graph_is_not_hypohamiltonian():
    flags = classify.hypohamiltonicity_suite(complete_graph(4))
    assert not flags.hypohamiltonian and not flags.maximal_hypohamiltonian


def test_nhht9():
    g = named_graph("nhht9")
    flags = classify.traceability_suite(g)
    assert flags.nhht
    assert not flags.hamiltonian_connected


def test_graph_a_is_cnd(graph_a):
    report = classify.is_cnd(graph_a)
    assert report
    assert report.profile.tau == 17
    assert report.connected and not report.traceable and report.constant


def test_graph_b_is_cnd(graph_b):
    assert classify.is_cnd(graph_b).profile.tau == 17
    assert classify.is_cnd(graph_b).is_cnd


def test_traceable_graphs_are_not_cnd(petersen):
    report = classify.is_cnd(petersen)
    assert not report
    assert report.traceable and report.constant


def test_detour_graphs():
    assert classify.is_detour_graph(complete_graph(4))
    assert classify.is_detour_graph(named_graph("petersen"))
    assert not classify.is_detour_graph(complete_multipartite([2, 3]))
    assert not classify.is_detour_graph(path_graph(3))


@given(graphs(min_n=2, max_n=9, connected=True))
def test_homogeneously_traceable_iff_detour_and_traceable(g):
    flags = classify.traceability_suite(g)
    profile = engine.detour_profile(g)
    assert flags.traceable == (profile.deficiency == 0)
    assert flags.homogeneously_traceable == (profile.constant and profile.deficiency == 0)


def test_kapoor_bound():
    assert classify.kapoor_bound(complete_graph(5)) == 5
    assert classify.kapoor_bound(cycle_graph(9)) == 5
    assert classify.kapoor_bound(path_graph(7)) == 3


def test_claw_is_maximal_nontraceable():
    assert classify.is_mnt(CLAW)
    assert classify.nontraceable_additions(CLAW) == []


def test_star_with_four_leaves_is_not_mnt():
    star = build_simple(5, [(0, v) for v in range(1, 5)])
    assert not classify.is_mnt(star)
    assert (1, 2) in classify.nontraceable_additions(star)


def test_traceable_graph_is_not_mnt():
    assert not classify.is_mnt(path_graph(4))


def test_one_toughness():
    assert classify.is_1_tough(cycle_graph(8))
    assert classify.is_1_tough(named_graph("petersen"))
    assert not classify.is_1_tough(CLAW)
    assert not classify.is_1_tough(complete_multipartite([2, 3]))
    assert not classify.is_1_tough(disjoint_union(complete_graph(2), complete_graph(2)))


def test_one_toughness_size_limit():
    with pytest.raises(TooLarge):
        classify.is_1_tough(path_graph(21))


@pytest.mark.slow
def test_a_star_is_one_tough():
    assert classify.is_1_tough(named_graph("graph_A_star"))
