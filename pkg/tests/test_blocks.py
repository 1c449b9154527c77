import pytest

from detourkit.catalog.named import named_block, named_graph
from detourkit.construction.blocks import BlockKind, derive_utype, verify_block
from detourkit.detour.classify import hypohamiltonicity_suite
from detourkit.detour.modes import Mode, SearchMode
from detourkit.errors import BadBlock, BadVertex, NotHypohamiltonian, Refuted, TooLarge
from detourkit.graphs.simple import complete_graph, cycle_graph


def _covers_once(block, key_prefix):
    for key, paths in block.witnesses.items():
        if not key.startswith(key_prefix):
            continue
        assert all(p.is_valid(block.graph) for p in paths)
        covered = [v for p in paths for v in p.vertices]
        assert sorted(covered) == list(block.graph.vertices)


def test_net_is_itype():
    block = verify_block(named_graph("net"), (3, 4, 5), BlockKind.ITYPE)
    assert block.verified and block.kind is BlockKind.ITYPE
    _covers_once(block, "I-2:")
    assert len([k for k in block.witnesses if k.startswith("I-2:")]) == 6


def test_deleted_petersen_is_itype_and_utype():
    g = named_graph("petersen_deleted")
    assert verify_block(g, (0, 3, 4), BlockKind.ITYPE).verified
    assert verify_block(g, (0, 3, 4), BlockKind.UTYPE).verified


@pytest.mark.parametrize("d", [(0, 1, 2), (1, 2, 3)])
def test_complete_graphs_are_rtype(d):
    block = verify_block(complete_graph(4), d, BlockKind.RTYPE)
    _covers_once(block, "R-2:")


def test_triangle_is_rtype():
    assert verify_block(complete_graph(3), (0, 1, 2), BlockKind.RTYPE).verified


@pytest.mark.parametrize("name, params", [("complete", (5,)), ("complete_bipartite", (3, 3)), ("k4_minus_e", ())])
def test_hctv_blocks(name, params):
    block = named_block(name, params, BlockKind.HCTV)
    assert block.verified
    for key, (path,) in block.witnesses.items():
        assert path.order == block.order
        assert path.vertices[-1] in block.distinguished


def test_k1_is_hctv(k1_hctv):
    assert k1_hctv.order == 1
    assert k1_hctv.distinguished == ()


def test_inflator_g_has_drop_one(inflator_g):
    assert inflator_g.drop == 1
    assert inflator_g.distinguished == (0, 3)
    assert inflator_g.graph.size == 10


def test_inflator_with_wrong_drop_is_refuted():
    with pytest.raises(Refuted) as e:
        verify_block(named_graph("inflator_g"), (0, 3), BlockKind.INFLATOR, drop=2)
    assert e.value.condition == "D-1"


def test_hamiltonian_connected_graph_is_no_inflator():
    with pytest.raises(Refuted) as e:
        verify_block(complete_graph(4), (0, 1), BlockKind.INFLATOR)
    assert e.value.condition == "D-1"


def test_complete_graph_is_not_itype():
    with pytest.raises(Refuted) as e:
        verify_block(complete_graph(4), (0, 1, 2), BlockKind.ITYPE)
    assert e.value.condition == "I-1"


def test_cycle_is_not_hctv_on_far_anchors():
    # a hamiltonian path of C6 ends next to its start, never opposite it
    with pytest.raises(Refuted) as e:
        verify_block(cycle_graph(6), (0, 3), BlockKind.HCTV)
    assert e.value.condition == "HCTV"


def test_bad_distinguished_sets():
    net = named_graph("net")
    with pytest.raises(BadBlock):
        verify_block(net, (3, 4), BlockKind.ITYPE)
    with pytest.raises(BadBlock):
        verify_block(net, (3, 3, 4), BlockKind.ITYPE)
    with pytest.raises(BadVertex):
        verify_block(net, (3, 4, 9), BlockKind.ITYPE)
    with pytest.raises(BadBlock):
        verify_block(complete_graph(1), (0,), BlockKind.HCTV)


def test_block_as_dict(inflator_g):
    out = inflator_g.as_dict()
    assert out["kind"] == "inflator"
    assert out["drop"] == 1
    assert out["order"] == 8


def test_derive_utype_from_petersen(petersen):
    block = derive_utype(petersen, 0)
    assert block.kind is BlockKind.UTYPE
    assert block.order == 9
    assert block.distinguished == (0, 3, 4)
    assert not block.trusted


def test_derive_utype_rejects_hamiltonian_graph():
    with pytest.raises(NotHypohamiltonian):
        derive_utype(complete_graph(4), 0)


def test_derive_utype_needs_a_cubic_vertex():
    with pytest.raises(BadVertex):
        derive_utype(complete_graph(5), 0)


def test_derive_utype_trusting_coxeter():
    block = derive_utype(named_graph("coxeter"), 0, trust=True)
    assert block.order == 27
    assert block.trusted
    assert len(block.distinguished) == 3


def test_utype_above_the_table_limit_by_search():
    g = named_graph("petersen_deleted")
    mode = SearchMode(Mode.CERTIFIED, certified_limit=5, override=True)
    block = verify_block(g, (0, 3, 4), BlockKind.UTYPE, mode=mode)
    assert block.verified and not block.trusted
    for key, (path,) in block.witnesses.items():
        assert path.is_valid(g), key
    assert block.witnesses["U-3:0"][0].order == 9
    assert {block.witnesses["U-1:0,3"][0].vertices[0], block.witnesses["U-1:0,3"][0].vertices[-1]} == {0, 3}
    assert block.witnesses["U-1:0,3"][0].order == 8


def test_search_verification_needs_override():
    mode = SearchMode(Mode.CERTIFIED, certified_limit=5)
    with pytest.raises(TooLarge):
        verify_block(named_graph("petersen_deleted"), (0, 3, 4), BlockKind.UTYPE, mode=mode)
    with pytest.raises(TooLarge):
        verify_block(named_graph("net"), (3, 4, 5), BlockKind.ITYPE, mode=SearchMode(Mode.CERTIFIED, 5, override=True))


def test_complete_graph_is_no_utype_by_search():
    mode = SearchMode(Mode.CERTIFIED, certified_limit=3, override=True)
    with pytest.raises(Refuted) as exc:
        verify_block(complete_graph(5), (0, 1, 2), BlockKind.UTYPE, mode=mode)
    assert exc.value.condition == "U-2"


def test_hctv_by_search():
    mode = SearchMode(Mode.CERTIFIED, certified_limit=3, override=True)
    block = verify_block(named_graph("complete_bipartite", (3, 3)), (0, 3), BlockKind.HCTV, mode=mode)
    assert len(block.witnesses) == 6
    _covers_once(block, "HCTV:")
    with pytest.raises(Refuted) as exc:
        verify_block(cycle_graph(6), (0, 3), BlockKind.HCTV, mode=mode)
    assert exc.value.condition == "HCTV"


@pytest.mark.slow
def test_flower_snark_j7_is_maximal_hypohamiltonian():
    flags = hypohamiltonicity_suite(named_graph("flower_snark", (7,)), SearchMode.certified(override=True))
    assert flags.hypohamiltonian
    assert flags.maximal_hypohamiltonian


@pytest.mark.slow
def test_derive_utype_from_j7_is_searched():
    j7 = named_graph("flower_snark", (7,))
    mode = SearchMode.certified(override=True)
    block = derive_utype(j7, 0, mode=mode)
    assert block.order == 27
    assert block.verified and not block.trusted
    assert verify_block(block.graph, block.distinguished, BlockKind.UTYPE, mode=mode).verified
