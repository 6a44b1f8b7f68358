import json
import subprocess
import sys

import pytest

from linkless import complete_graph, from_graph6, petersen_family, to_graph6
from linkless.cli import EXIT_CAP, EXIT_OK, EXIT_PARSE, RunConfig, main, run
from linkless.io import format_edge_list


@pytest.fixture
def k6_file(tmp_path):
    p = tmp_path / "k6.txt"
    p.write_text("# K6\n" + format_edge_list(complete_graph(6)))
    return str(p)


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text("10 11\n11 12\n12 13\n13 10\n")
    return str(p)


def test_decide_k6(k6_file):
    status, out = run(RunConfig("decide", [k6_file]))
    data = json.loads(out)
    assert status == EXIT_OK
    assert list(data) == ["embeddable", "family_member", "branch_sets", "edge_map"]
    assert data["embeddable"] is False and data["family_member"] == 1
    assert sorted(map(tuple, data["branch_sets"])) == [(v,) for v in range(6)]
    assert len(data["edge_map"]) == 15


def test_decide_c4_uses_input_labels(c4_file):
    status, out = run(RunConfig("decide", [c4_file]))
    assert status == EXIT_OK
    assert json.loads(out) == {"embeddable": True, "family_member": None, "branch_sets": [], "edge_map": []}
    status, out = run(RunConfig("minor", [c4_file, c4_file]))
    data = json.loads(out)
    assert data["minor"] and sorted(x for b in data["branch_sets"] for x in b) == [10, 11, 12, 13]


def test_family_lines_and_json():
    status, out = run(RunConfig("family"))
    lines = out.splitlines()
    assert status == EXIT_OK and len(lines) == 7
    assert lines == [to_graph6(g) for g in petersen_family()]
    assert [from_graph6(x).m for x in lines] == [15] * 7
    data = json.loads(run(RunConfig("family", output="json"))[1])
    assert [m["vertices"] for m in data["members"]] == [6, 7, 7, 8, 8, 9, 10]
    assert data["members"][-1]["degree_sequence"] == [3] * 10


def test_invariant_k6(k6_file):
    status, out = run(RunConfig("invariant", [k6_file], seed=0, output="text"))
    assert (status, out) == (EXIT_OK, "1\n")
    data = json.loads(run(RunConfig("invariant", [k6_file], over_rule="random", seed=3))[1])
    assert data["conway_gordon_sum"] == 1 and data["disjoint_cycle_pairs"] == 10
    assert len(data["diagram"]["crossings"]) == 15


def test_invariant_with_assignment(tmp_path, k6_file):
    a = tmp_path / "a.json"
    a.write_text(json.dumps(["b"] * 15))
    status, out = run(RunConfig("invariant", [k6_file], assignment=str(a), order=[5, 3, 1, 0, 2, 4]))
    assert status == EXIT_OK and json.loads(out)["diagram"]["order"] == [5, 3, 1, 0, 2, 4]
    d = tmp_path / "d.json"
    d.write_text(json.dumps(json.loads(out)["diagram"]))
    status, out2 = run(RunConfig("invariant", [k6_file], assignment=str(d)))
    assert status == EXIT_OK and json.loads(out2) == json.loads(out)
    a.write_text(json.dumps(["b"] * 3))
    assert run(RunConfig("invariant", [k6_file], assignment=str(a)))[0] == EXIT_PARSE


def test_web_and_cycles(tmp_path, k6_file):
    dot = tmp_path / "w.dot"
    data = json.loads(run(RunConfig("web", [k6_file], dot=str(dot)))[1])
    assert len(data["nodes"]) == 76 and data["connected"] and data["vertex_connectivity"] == 5
    assert dot.read_text().count(" -- ") == len(data["adjacency"])
    data = json.loads(run(RunConfig("cycles", [k6_file]))[1])
    assert data["count"] == len(data["cycles"]) and sum(len(c) == 3 for c in data["cycles"]) == 20


def test_exit_codes(tmp_path, k6_file):
    bad = tmp_path / "bad.g6"
    bad.write_text("E~~x\n")
    status, out = run(RunConfig("decide", [str(bad)]))
    assert status == EXIT_PARSE and "offset 3" in out
    status, _ = run(RunConfig("decide", [str(tmp_path / "missing.txt")]))
    assert status == EXIT_PARSE
    big = tmp_path / "c20.txt"
    big.write_text("".join(f"{i} {(i + 1) % 20}\n" for i in range(20)))
    assert run(RunConfig("decide", [str(big)]))[0] == EXIT_CAP
    assert run(RunConfig("web", [k6_file], cap_vertices=5))[0] == EXIT_CAP
    assert run(RunConfig("minor", [k6_file]))[0] == EXIT_PARSE
    with pytest.raises(ValueError):
        RunConfig("decide", cap_vertices=0)


def test_byte_identical_output(k6_file):
    for cmd in ("decide", "web", "invariant", "cycles", "family"):
        assert run(RunConfig(cmd, [k6_file])) == run(RunConfig(cmd, [k6_file]))


def test_main_and_env_override(k6_file, monkeypatch, capsys):
    assert main(["invariant", k6_file, "--output", "text"]) == EXIT_OK
    assert capsys.readouterr().out == "1\n"
    monkeypatch.setenv("LINKLESS_CAP_VERTICES", "4")
    assert main(["decide", k6_file]) == EXIT_CAP
    assert main(["decide", k6_file, "--cap-vertices", "6"]) == EXIT_OK
    monkeypatch.setenv("LINKLESS_OUTPUT", "text")
    assert main(["decide", k6_file, "--cap-vertices", "6"]) == EXIT_OK
    assert "member 1" in capsys.readouterr().out


def test_console_entry_point(k6_file):
    proc = subprocess.run([sys.executable, "-m", "linkless.cli", "decide", k6_file],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["family_member"] == 1
    proc = subprocess.run([sys.executable, "-m", "linkless.cli", "decide", "-", "--format", "graph6"],
                          input="E~~w\n", capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["embeddable"] is False
