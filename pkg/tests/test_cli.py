import json

import pytest

from detourkit.catalog.named import named_graph
from detourkit.cli import EXIT_ERROR, EXIT_OK, EXIT_REFUTED, main
from detourkit.graphs.simple import complete_graph, cycle_graph, disjoint_union, path_graph


def _write(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(g.to_graph6() + "\n")
    return str(path)


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


def test_catalog_to_file_then_analyze(tmp_path, capsys):
    out = tmp_path / "a.g6"
    assert main(["catalog", "graph_A", "--out", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert main(["analyze", str(out), "--json"]) == EXIT_OK
    report = _json_out(capsys)
    assert report["tau"] == 17
    assert report["order"] == 18 and report["size"] == 24
    assert report["is_cnd"]
    assert report["sequence"] == "(17)x18"
    assert report["warnings"] == []
    assert "report" in report


def test_analyze_text_summary(tmp_path, capsys):
    path = _write(tmp_path, "c5.g6", cycle_graph(5))
    assert main(["analyze", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "tau 5" in out
    assert "sequence (5)x5" in out
    assert "nontraceable" not in out


def test_analyze_disconnected_graph_warns(tmp_path, capsys):
    path = _write(tmp_path, "two.g6", disjoint_union(complete_graph(3), path_graph(2)))
    assert main(["analyze", path, "--json"]) == EXIT_OK
    report = _json_out(capsys)
    assert report["per_vertex"] == [3, 3, 3, 2, 2]
    assert not report["is_cnd"]
    assert any("disconnected" in w for w in report["warnings"])
    assert "report" not in report


def test_analyze_witnessed_mode(tmp_path, capsys):
    path = _write(tmp_path, "k6.g6", complete_graph(6))
    assert main(["analyze", path, "--mode", "witnessed", "--json"]) == EXIT_OK
    assert _json_out(capsys)["tau"] == 6


def test_missing_file_is_an_error(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "absent.g6")]) == EXIT_ERROR
    assert "error:" in capsys.readouterr().err


def test_garbage_input_is_an_error(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("D?\n")
    assert main(["analyze", str(path)]) == EXIT_ERROR
    assert "error:" in capsys.readouterr().err


def test_verify_block_accepts_the_net(tmp_path, capsys):
    path = _write(tmp_path, "net.g6", named_graph("net"))
    assert main(["verify-block", "--kind", "itype", "--graph", path, "--distinguished", "3,4,5"]) == EXIT_OK
    out = _json_out(capsys)
    assert out["ok"]
    assert out["name"] == "net"
    assert out["distinguished"] == [3, 4, 5]


def test_verify_block_reports_a_refutation(tmp_path, capsys):
    path = _write(tmp_path, "k4.g6", complete_graph(4))
    assert main(["verify-block", "--kind", "itype", "--graph", path, "--distinguished", "0,1,2"]) == EXIT_REFUTED
    out = _json_out(capsys)
    assert out["ok"] is False
    assert out["condition"] == "I-1"


def test_verify_block_rejects_unknown_kind(tmp_path):
    path = _write(tmp_path, "k4.g6", complete_graph(4))
    with pytest.raises(SystemExit) as exc:
        main(["verify-block", "--kind", "vtype", "--graph", path])
    assert exc.value.code == 2


def test_catalog_listing(capsys):
    assert main(["catalog"]) == EXIT_OK
    rows = {row["name"]: row for row in _json_out(capsys)}
    assert rows["net"]["blocks"] == ["itype"]
    assert rows["cycle"]["params"] == ["n"]
    assert rows["cycle"]["blocks"] == []


def test_catalog_prints_multigraph_text(capsys):
    assert main(["catalog", "prism_multigraph", "2"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("multigraph 4 6")


def test_catalog_unknown_name(capsys):
    assert main(["catalog", "no_such_graph"]) == EXIT_ERROR
    assert "error:" in capsys.readouterr().err


def test_search_cnd_finds_nothing_small(capsys):
    assert main(["search", "cnd", "--max-order", "5"]) == EXIT_OK
    assert _json_out(capsys) == {"max_order": 5, "found": []}


def test_search_hctv_blocks(capsys):
    assert main(["search", "block", "--kind", "hctv", "--max-order", "2"]) == EXIT_OK
    blocks = _json_out(capsys)
    assert [b["order"] for b in blocks] == [1, 2]
    assert all(b["kind"] == "hctv" for b in blocks)


def test_colour_greedy_and_exact(tmp_path, capsys):
    path = _write(tmp_path, "c5.g6", cycle_graph(5))
    assert main(["color", "-n", "2", path]) == EXIT_OK
    greedy = _json_out(capsys)
    assert greedy["n"] == 2
    assert greedy["colouring"]["colour_count"] >= 2
    assert main(["color", "-n", "2", path, "--exact"]) == EXIT_OK
    exact = _json_out(capsys)
    assert exact["colouring"]["colour_count"] == 2
    assert exact["theorems"]["ok"]


def test_construct_from_recipe(tmp_path, capsys):
    recipe = tmp_path / "a.recipe"
    recipe.write_text("variant two\nbase k4_multigraph\ninsert * complete(1)\n")
    out = tmp_path / "a.g6"
    assert main(["construct", "--recipe", str(recipe), "--out", str(out)]) == EXIT_OK
    report = _json_out(capsys)
    assert report["ok"]
    assert report["predicted"] == {"order": 18, "size": 24, "tau": 17, "deficiency": 1}
    assert report["profile"]["sequence"] == "(17)x18"
    assert out.read_text().strip() == report["graph6"]


def test_construct_with_a_bad_recipe(tmp_path, capsys):
    recipe = tmp_path / "bad.recipe"
    recipe.write_text("base k4_multigraph\n")
    assert main(["construct", "--recipe", str(recipe)]) == EXIT_ERROR
    assert "no variant" in capsys.readouterr().err
