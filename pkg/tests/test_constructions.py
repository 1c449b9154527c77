from dataclasses import replace

import pytest

from detourkit.catalog.named import named_block, named_graph
from detourkit.colouring.colouring import chromatic_number
from detourkit.construction.blocks import Block, BlockKind, verify_block
from detourkit.construction.conditions import cnd_necessary_conditions
from detourkit.construction.operators import inflate_clique, inflate_vertex, insert_on_edge
from detourkit.construction.recipes import (
    Recipe,
    Variant,
    assemble,
    construct,
    construct_f,
    nhht_from_inflator,
    uniform_recipe,
)
from detourkit.detour.classify import traceability_suite
from detourkit.detour.modes import Mode
from detourkit.errors import BadBase, BadBlock, BadMatching, BadRecipe, DropMismatch
from detourkit.graphs.isomorphism import is_isomorphic
from detourkit.graphs.multigraph import cycle_multigraph, prism_multigraph
from detourkit.graphs.simple import complete_graph
from detourkit.graphs.structure import girth, is_claw_free, is_two_connected
from detourkit.sequences.formulas import two_clique_graph


@pytest.fixture(scope="module")
def k2_hctv():
    return named_block("complete", (2,), BlockKind.HCTV)


@pytest.fixture(scope="module")
def net_block():
    return named_block("net", (), BlockKind.ITYPE)


def test_insert_k1_makes_a_degree_two_vertex(k1_hctv):
    mg = insert_on_edge(complete_graph(3), 0, k1_hctv)
    assert mg.n == 4 and mg.size == 4
    assert mg.degree(3) == 2
    assert mg.edges[0] == (0, 3)


def test_insert_k2_adds_two_vertices_and_a_net_edge(k2_hctv):
    mg = insert_on_edge(complete_graph(3), 1, k2_hctv)
    assert mg.n == 5 and mg.size == 5
    assert mg.to_simple().has_edge(3, 4)


def test_insert_needs_hctv(inflator_g):
    with pytest.raises(BadBlock):
        insert_on_edge(complete_graph(3), 0, inflator_g)


def test_inflate_cubic_vertex_with_net(net_block):
    mg = inflate_vertex(named_graph("k4_multigraph"), 0, net_block)
    assert mg.n == 9 and mg.size == 12
    # the three former edges of vertex 0 now end on the net's leaves
    assert [mg.edges[e][0] for e in range(3)] == [6, 7, 8]
    assert sorted(mg.degrees) == [2, 2, 2, 3, 3, 3, 3, 3, 3]


def test_inflation_matching_must_be_a_bijection(net_block):
    with pytest.raises(BadMatching):
        inflate_vertex(named_graph("k4_multigraph"), 0, net_block, {0: 3, 1: 3, 2: 4})
    with pytest.raises(BadMatching):
        inflate_vertex(named_graph("k4_multigraph"), 0, named_block("k4_minus_e"))


def test_inflation_needs_a_verified_block():
    raw = Block(complete_graph(3), (0, 1, 2), BlockKind.RTYPE)
    with pytest.raises(BadBlock):
        inflate_vertex(named_graph("k4_multigraph"), 0, raw)


def test_clique_inflation_keeps_prism_cubic():
    mg = inflate_clique(prism_multigraph(3), 0, 3)
    assert mg.n == 8 and mg.size == 12
    assert mg.is_cubic()
    with pytest.raises(BadMatching):
        inflate_clique(prism_multigraph(3), 0, 2)
    with pytest.raises(BadMatching):
        inflate_clique(cycle_multigraph(1), 0, 3)


def test_graph_a(graph_a, k1_hctv):
    assert graph_a.n == 18 and graph_a.size == 24
    report = construct(uniform_recipe(Variant.TWO, named_graph("k4_multigraph"), insert=k1_hctv))
    assert report.ok, report.failures
    assert report.verification is Mode.CERTIFIED
    assert report.predicted.tau == 17 and report.predicted.deficiency == 1
    assert report.profile.sequence.format() == "(17)x18"
    assert is_claw_free(graph_a) and is_two_connected(graph_a)
    assert is_isomorphic(report.graph, graph_a)


def test_graph_b(graph_b, k1_hctv):
    report = construct(uniform_recipe(Variant.TWO, prism_multigraph(2), insert=k1_hctv))
    assert report.ok, report.failures
    assert report.profile.tau == 17
    assert report.graph.n == 18 and report.graph.size == 24
    assert is_isomorphic(report.graph, graph_b)
    assert is_claw_free(graph_b) and is_two_connected(graph_b)
    assert not is_isomorphic(graph_b, named_graph("graph_A"))


def test_third_construction_with_triangles_gives_graph_a(graph_a, k1_hctv):
    triangle = verify_block(complete_graph(3), (0, 1, 2), BlockKind.RTYPE)
    g, predicted = assemble(uniform_recipe(Variant.THREE, named_graph("k4_multigraph"), triangle, k1_hctv))
    assert predicted.tau == 17
    assert is_isomorphic(g, graph_a)


def test_inflator_cycle_of_two_is_one_of_the_smallest(inflator_g, k1_hctv, graph_a, graph_b):
    report = construct_f([inflator_g] * 2, [k1_hctv] * 2)
    assert report.ok, report.failures
    assert report.predicted.tau == 17
    g = report.graph
    assert bool(is_isomorphic(g, graph_a)) != bool(is_isomorphic(g, graph_b))
    assert is_isomorphic(g, graph_b)


def test_inflator_cycle_checks(inflator_g, k1_hctv):
    with pytest.raises(BadRecipe):
        construct_f([inflator_g] * 2, [k1_hctv])
    with pytest.raises(DropMismatch):
        construct_f([inflator_g, replace(inflator_g, drop=2)], [k1_hctv] * 2)
    with pytest.raises(DropMismatch):
        construct_f([replace(inflator_g, drop=7)] * 2, [k1_hctv] * 2)
    with pytest.raises(BadBlock):
        construct_f([replace(inflator_g, drop=2)] * 2, [k1_hctv] * 2)


def test_recipe_checks(k1_hctv, k2_hctv):
    with pytest.raises(BadBase):
        assemble(uniform_recipe(Variant.TWO, cycle_multigraph(4), insert=k1_hctv))
    with pytest.raises(BadBase):
        assemble(uniform_recipe(Variant.ONE, cycle_multigraph(3), named_block("net")))
    with pytest.raises(BadRecipe):
        uniform_recipe(Variant.ONE, named_graph("k4_multigraph"))
    base = named_graph("k4_multigraph")
    mixed = {e: (k1_hctv if e else k2_hctv) for e in range(base.size)}
    with pytest.raises(BadBlock):
        assemble(Recipe(Variant.TWO, base=base, vertex_blocks={v: 3 for v in range(4)}, edge_inserts=mixed))
    with pytest.raises(BadRecipe):
        assemble(Recipe(Variant.TWO, base=base, vertex_blocks={0: 3}, edge_inserts=mixed))


def test_nhht_from_inflator(inflator_g):
    h = nhht_from_inflator(inflator_g)
    assert h.n == 9 and h.size == 12
    assert traceability_suite(h).nhht


def test_graph_a_meets_necessary_conditions(graph_a):
    checklist = cnd_necessary_conditions(graph_a)
    assert checklist.ok, checklist.failures
    assert checklist["size"].detail == "24 edges, need 23"


def test_cut_vertex_fails_two_connectivity():
    checklist = cnd_necessary_conditions(two_clique_graph(4, 4))
    assert not checklist["two_connected"].ok
    assert "two_connected" in checklist.failures


@pytest.mark.slow
def test_inflator_cycle_with_triangles_has_chromatic_number_three(inflator_g):
    k3 = named_block("complete", (3,), BlockKind.HCTV)
    report = construct_f([inflator_g] * 2, [k3] * 2)
    assert report.ok, report.failures
    assert report.predicted.deficiency == 1
    assert chromatic_number(report.graph) == 3


@pytest.mark.slow
def test_second_construction_over_the_triangular_prism(k2_hctv):
    report = construct(uniform_recipe(Variant.TWO, prism_multigraph(3), insert=k2_hctv))
    assert report.graph.n == 36 and report.graph.size == 45
    assert report.predicted.tau == 32
    assert report.verification is Mode.WITNESSED
    assert report.ok, report.failures
    assert len(report.witnesses) == 36


@pytest.mark.slow
def test_first_construction_over_k4_with_deleted_petersen():
    block = named_block("petersen_deleted", (), BlockKind.ITYPE)
    report = construct(uniform_recipe(Variant.ONE, named_graph("k4_multigraph"), block))
    g = report.graph
    assert g.n == 36 and g.is_regular(3) and girth(g) == 5
    assert report.predicted.tau == 34
    assert report.ok, report.failures
    assert cnd_necessary_conditions(g).ok


@pytest.mark.slow
def test_fourth_construction_over_k4():
    block = named_block("petersen_deleted", (), BlockKind.UTYPE)
    report = construct(uniform_recipe(Variant.FOUR, named_graph("k4_multigraph"), block))
    assert report.graph.n == 36
    assert report.predicted.tau == 34
    assert report.ok, report.failures
