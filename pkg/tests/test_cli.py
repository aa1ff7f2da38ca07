import json
import subprocess
import sys

import pytest

from wcomplexity import cli
from wcomplexity.detfun import CheckReport
from wcomplexity.graph import WeightedGraph, complete_graph, dumps_graph


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def walk(x):
    if isinstance(x, dict):
        for v in x.values():
            yield from walk(v)
    elif isinstance(x, list):
        for v in x:
            yield from walk(v)
    else:
        yield x


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.json"):
        p = tmp_path / name
        p.write_text(dumps_graph(g))
        return str(p)

    return write


@pytest.fixture
def k3w_file(graph_file, k3w):
    return graph_file(k3w, "k3w.json")


def test_kappa(capsys, k3w_file):
    code, rep, _ = run(capsys, "kappa", k3w_file)
    assert code == 0 and rep["results"]["kappa"] == "11"
    assert set(rep) == {"command", "inputs", "results", "checks", "warnings"}
    code, rep, _ = run(capsys, "kappa", k3w_file, "--method", "enumerate")
    assert rep["results"] == {"kappa": "11", "tree_count": "3"}
    code, rep, _ = run(capsys, "kappa", k3w_file, "--index", "2", "3")
    assert rep["results"]["kappa"] == "11"


def test_kappa_disconnected_warns(capsys, graph_file):
    f = graph_file(WeightedGraph.from_edges(4, [(1, 2), (3, 4)]))
    code, rep, _ = run(capsys, "kappa", f)
    assert code == 0 and rep["results"]["kappa"] == "0" and rep["warnings"]


def test_kappa_sigma(capsys, k3w_file):
    code, rep, _ = run(capsys, "kappa-sigma", k3w_file)
    assert code == 0 and rep["results"] == {"kappa_sigma": "12", "kappa_underlying": "3"}
    code, rep, _ = run(capsys, "kappa-sigma", k3w_file, "--method", "enumerate")
    assert rep["results"]["kappa_sigma"] == "12"


def test_budget_refusal_exits_1(capsys, graph_file):
    f = graph_file(complete_graph(8))
    code, rep, err = run(capsys, "kappa", f, "--method", "enumerate")
    assert code == 1 and rep is None and "budget is 24" in err
    code, rep, _ = run(capsys, "--budget", "28", "kappa", f, "--method", "enumerate")
    assert code == 0 and rep["results"]["tree_count"] == str(8**6)


def test_detfun_preset(capsys, graph_file):
    f = graph_file(complete_graph(4))
    code, rep, _ = run(capsys, "detfun", f, "gencharpoly", "partial", "mu")
    assert code == 0 and rep["results"]["partial"] == "192"
    assert [c["name"] for c in rep["checks"]] == ["theorem1", "gencharpoly"]
    assert all(c["equal"] for c in rep["checks"])
    code, rep, _ = run(capsys, "detfun", f, "northshield", "eval", "1", "0")
    assert rep["results"]["phi"] == "0"
    code, rep, _ = run(capsys, "detfun", f, "northshield", "mixed", "lambda")
    assert code == 0 and rep["checks"][0]["name"] == "theorem2"


def test_detfun_bartholdi_warns(capsys, graph_file):
    f = graph_file(complete_graph(4))
    code, rep, _ = run(capsys, "detfun", f, "bartholdi", "partial", "u")
    assert code == 0 and len(rep["warnings"]) == 1
    assert rep["checks"][-1]["name"] == "bartholdi-u" and rep["checks"][-1]["lhs"] == "64"


def test_detfun_spec_file(capsys, tmp_path, k3w_file):
    spec = {
        "f": [{"coef": "1", "dl": 1, "dm": 0}],
        "g": [{"coef": "1", "dl": 0, "dm": 1}],
        "h": [{"coef": "-1", "dl": 0, "dm": 0}],
        "anchor": ["0", "1"],
    }
    p = tmp_path / "spec.json"
    p.write_text(json.dumps(spec))
    code, rep, _ = run(capsys, "detfun", k3w_file, str(p), "partial", "mu")
    assert code == 0 and rep["inputs"]["anchor"] == ["0", "1"]
    spec["anchor"] = ["1", "0"]
    p.write_text(json.dumps(spec))
    code, _, err = run(capsys, "detfun", k3w_file, str(p), "partial", "mu")
    assert code == 1 and "invalid anchor" in err


def test_detfun_usage_errors(capsys, k3w_file):
    assert run(capsys, "detfun", k3w_file, "nosuch", "eval", "1", "0")[0] == 1
    assert run(capsys, "detfun", k3w_file, "northshield", "eval", "1")[0] == 1
    assert run(capsys, "detfun", k3w_file, "northshield", "partial", "x")[0] == 1


def test_failed_check_exits_2(capsys, k3w_file, monkeypatch):
    monkeypatch.setattr(cli, "verify_theorem1", lambda *a, **k: CheckReport("theorem1", 1, 2, False))
    code, rep, _ = run(capsys, "detfun", k3w_file, "mizuno-sato", "partial", "lambda")
    assert code == 2 and rep["checks"][0]["equal"] is False


def test_bad_args_exit_1(capsys, tmp_path):
    with pytest.raises(SystemExit) as info:
        cli.main(["kappa"])
    assert info.value.code == 1
    assert run(capsys, "kappa", str(tmp_path / "missing.json"))[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{\n "vertex_count": 2,\n "edges": [{"u": 0, "v": 0}]\n}')
    code, _, err = run(capsys, "kappa", str(bad))
    assert code == 1 and "line 3" in err


@pytest.mark.parametrize("suite", ["lemma1", "lemma2", "theorem1", "theorem2", "corollaries"])
def test_verify_suites(capsys, suite):
    code, rep, _ = run(capsys, "verify", suite, "--count", "3", "--seed", "5")
    assert code == 0
    assert rep["results"][f"{suite}_failures"] == "0"
    assert int(rep["results"][f"{suite}_cases"]) >= 3


def test_verify_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        cli.main(["verify", "theorem2", "--count", "4", "--seed", "11"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_verify_corollaries_on_graph(capsys, graph_file):
    f = graph_file(complete_graph(4))
    code, rep, _ = run(capsys, "verify", "corollaries", "--graph", f)
    assert code == 0 and len(rep["checks"]) == 5 and len(rep["warnings"]) == 1
    assert rep["results"]["bartholdi_anchor"]["nominal"]["valid"] is False
    assert rep["results"]["bartholdi_u_identity"]["equal"] is True


def test_no_floats_anywhere(capsys, k3w_file):
    for argv in (
        ["kappa", k3w_file],
        ["detfun", k3w_file, "mizuno-sato", "partial", "l"],
        ["hamming", "2,3", "spectrum", "--w", "1/2,3", "--check"],
        ["verify", "lemma1", "--count", "2"],
    ):
        _, rep, _ = run(capsys, *argv)
        assert not any(isinstance(v, float) for v in walk(rep))


@pytest.mark.parametrize(
    "argv, counts",
    [
        (["gen", "complete", "4"], (4, 6)),
        (["gen", "hypercube", "3"], (8, 12)),
        (["gen", "hamming", "2,3"], (6, 9)),
    ],
)
def test_gen(capsys, argv, counts):
    code, rep, _ = run(capsys, *argv)
    assert code == 0
    assert (rep["results"]["nu"], rep["results"]["eps"]) == counts
    assert rep["results"]["omega"] == str(counts[1])


def test_gen_to_file_roundtrip(capsys, tmp_path):
    out = tmp_path / "q.json"
    run(capsys, "gen", "hypercube", "3", "--w", "1,2,3", "-o", str(out))
    code, rep, _ = run(capsys, "kappa", str(out))
    assert code == 0 and rep["results"]["kappa"] == str(2**4 * 1 * 2 * 3 * 3 * 4 * 5 * 6)


def test_hamming(capsys, tmp_path):
    assert run(capsys, "hamming", "2,2,2", "kappa", "--check")[1]["results"]["kappa"] == "384"
    code, rep, _ = run(capsys, "hamming", "2,2,2", "kappa-sigma", "--check")
    assert code == 0 and rep["results"]["kappa_sigma"] == "2688" and rep["checks"][0]["equal"]
    _, rep, _ = run(capsys, "hamming", "2,2", "spectrum", "--w", "1,2")
    assert [s["eigenvalue"] for s in rep["results"]["spectrum"]] == ["0", "2", "4", "6"]
    _, rep, _ = run(capsys, "hamming", "2,2,2", "mst", "--w", "3,1,2", "--check")
    assert rep["results"]["mst"] == "11" and rep["checks"][0]["equal"]
    _, rep, _ = run(capsys, "hamming", "3,3,3", "kappa", "--check")
    assert "check_skipped" in rep["results"] and rep["checks"] == []
    spec = tmp_path / "h.json"
    spec.write_text('{"sizes": [3, 3]}')
    assert run(capsys, "hamming", str(spec), "kappa")[1]["results"]["kappa"] == "11664"


def test_hamming_errors(capsys):
    assert run(capsys, "hamming", "2,3", "mst")[0] == 1
    assert run(capsys, "hamming", "2,3", "kappa", "--w", "1")[0] == 1
    assert run(capsys, "hamming", "2,x", "kappa")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wcomplexity", "hamming", "3,3", "kappa"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["kappa"] == "11664"
