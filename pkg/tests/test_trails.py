import pytest

from detourkit.catalog.named import named_graph
from detourkit.detour.trails import is_admissible, is_presentable, longest_trail, parity_bound
from detourkit.errors import BadStart, BadVertex
from detourkit.graphs.multigraph import build_multigraph, cycle_multigraph, from_simple, prism_multigraph


@pytest.mark.parametrize(
    "mg, expected",
    [
        (cycle_multigraph(3), 3),
        (cycle_multigraph(1), 1),
        (prism_multigraph(2), 5),
        (prism_multigraph(3), 7),
        (named_graph("k4_multigraph"), 5),
    ],
)
def test_longest_trail_lengths(mg, expected):
    result = longest_trail(mg)
    assert result.length == expected
    assert result.witness.length == expected
    assert result.witness.is_valid(mg)
    assert result.spanning


def test_parity_bound():
    assert parity_bound(named_graph("k4_multigraph")) == 5
    assert parity_bound(cycle_multigraph(5)) == 5
    assert parity_bound(prism_multigraph(3)) == 7


def test_trail_with_forced_first_step():
    mg = cycle_multigraph(4)
    result = longest_trail(mg, (0, 0))
    assert result.length == 4
    assert result.witness.steps[:3] == (0, 0, 1)


def test_forced_step_must_be_incident():
    mg = cycle_multigraph(4)
    with pytest.raises(BadStart):
        longest_trail(mg, (0, 2))
    with pytest.raises(BadVertex):
        longest_trail(mg, (9, 0))


def test_trail_uses_parallel_edges():
    mg = build_multigraph(2, [(0, 1), (0, 1), (0, 1)])
    assert longest_trail(mg).length == 3


@pytest.mark.parametrize("name, params", [("k4_multigraph", ()), ("prism_multigraph", (2,)), ("prism_multigraph", (3,)), ("prism_multigraph", (4,))])
def test_admissible_bases(name, params):
    mg = named_graph(name, params)
    check = is_admissible(mg)
    assert check.ok, check.failures
    assert check.trail_length < mg.size
    assert len(check.certificate) == sum(mg.degrees)
    for (v, e), trail in check.certificate.items():
        assert trail.steps[:2] == (v, e)
        assert trail.length == check.trail_length
        assert trail.is_valid(mg)
        assert set(trail.vertices) == set(range(mg.n))


def test_even_cycle_is_not_admissible():
    check = is_admissible(cycle_multigraph(4))
    assert not check
    assert check.trail_length == 4
    assert check.failures


def test_k4_is_presentable():
    check = is_presentable(named_graph("k4_multigraph"))
    assert check.ok, check.failures


def test_triangle_is_not_presentable():
    check = is_presentable(cycle_multigraph(3))
    assert not check
    assert check.failures == ["not cubic"]


@pytest.mark.slow
def test_petersen_is_presentable(petersen):
    check = is_presentable(from_simple(petersen))
    assert check.ok, check.failures
