import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from resgraph.cli import main

ROOT = Path(__file__).resolve().parent.parent
GRAPHS = ROOT / "graphs"
SCHEMA = json.loads((ROOT / "docs" / "report_schema.json").read_text())


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc, err


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", GRAPHS / "genus1_chain.graph")
    assert code == 0
    assert "chi(Z_num) = 0" in out and "m+1 = 3" in out and "Z_K = (3,2,1)" in out


def test_classify_json(capsys):
    code, doc, _ = run_json(capsys, "classify", GRAPHS / "genus1_chain.graph", "--assume-gorenstein")
    c = doc["classification"]
    assert code == 0 and c["z_num"] == [1, 1, 1] and c["z_k"] == [3, 2, 1] and c["m_plus_one"] == 3
    assert [s["cycle"] for s in doc["sequence"]] == [[1, 1, 1], [1, 1, 0], [1, 0, 0]]
    assert doc["invariants"]["p_g"] == {"kind": "range", "lo": 2, "hi": 3, "note": doc["invariants"]["p_g"]["note"]}


def test_classify_non_integral_zk(capsys):
    code, doc, _ = run_json(capsys, "classify", GRAPHS / "not_gorenstein.graph")
    assert code == 0
    assert all(isinstance(x, str) for x in doc["classification"]["z_k"])


def test_invariants_cusp_chain(capsys):
    code, out, _ = run(capsys, "invariants", GRAPHS / "cuspchain.graph", "--assume-gorenstein")
    assert code == 0
    assert "p_g = exact(2)" in out and "multiplicity = 2" in out and "embdim = 3" in out


def test_invariants_json(capsys):
    code, doc, _ = run_json(capsys, "invariants", GRAPHS / "cusp_e3.graph", "--assume-gorenstein")
    inv = doc["invariants"]
    assert code == 0 and inv["multiplicity"] == 3 and inv["emb_dim"] == 3
    assert inv["hilbert_samuel"]["values"][:3] == [[1, 3], [4, 6], [10, 9]]


def test_hilbert(capsys):
    code, doc, _ = run_json(capsys, "hilbert", GRAPHS / "cusp_e3.graph", "--k", 3, "--assume-gorenstein")
    assert code == 0 and doc["result"] == {"k": 3, "colength": 10, "graded_piece": 9}


def test_sequence(capsys):
    code, out, _ = run(capsys, "sequence", GRAPHS / "genus1_chain.graph")
    assert code == 0 and "m = 2" in out


def test_verify(capsys):
    code, doc, _ = run_json(capsys, "verify", GRAPHS / "kodaira_star_m2.graph")
    assert code == 0 and all(r["passed"] for r in doc["oracle"])


def test_verify_explicit_cap(capsys):
    code, out, _ = run(capsys, "verify", GRAPHS / "genus1_chain.graph", "--oracle-cap", "4,3,2")
    assert code == 0 and "FAIL" not in out


def test_batch(capsys):
    code, out, _ = run(capsys, "batch", GRAPHS)
    lines = out.splitlines()
    assert code == 0 and len(lines) == len(list(GRAPHS.glob("*.graph")))
    assert lines == sorted(lines)


def test_batch_json_lines(capsys):
    code, out, _ = run(capsys, "batch", GRAPHS, "--json")
    assert code == 0
    for line in out.splitlines():
        doc = json.loads(line)
        doc.pop("file")
        jsonschema.validate(doc, SCHEMA)


def test_batch_reports_invalid(tmp_path, capsys):
    (tmp_path / "bad.graph").write_text("vertex v0 e=0\n")
    (tmp_path / "ok.graph").write_text("vertex v0 e=-2\n")
    code, out, _ = run(capsys, "batch", tmp_path)
    assert code == 1 and "bad.graph: invalid" in out and "ok.graph: rational" in out


@pytest.mark.parametrize("argv, status, fragment", [
    (["hilbert", GRAPHS / "a1.graph", "--k", "2"], 2, "graph is rational"),
    (["hilbert", GRAPHS / "cuspchain.graph", "--k", "2", "--assume-gorenstein"], 2, "Z_num^2 <= -3"),
    (["hilbert", GRAPHS / "cusp_e3.graph", "--k", "2"], 2, "gorenstein"),
    (["invariants", GRAPHS / "not_gorenstein.graph", "--assume-gorenstein"], 2, "numerically Gorenstein"),
    (["invariants", GRAPHS / "genus1_chain.graph", "--assume-gorenstein"], 2, "p_g = m+1"),
    (["sequence", GRAPHS / "a1.graph"], 2, "hypothesis not satisfied"),
    (["hilbert", GRAPHS / "cusp_e3.graph", "--k", "0"], 3, "positive"),
    (["classify", GRAPHS / "missing.graph"], 3, "cannot read"),
    (["verify", GRAPHS / "a1.graph", "--oracle-cap", "1,2"], 2, "cap has 2 entries"),
])
def test_exit_codes(capsys, argv, status, fragment):
    code, _, err = run(capsys, *argv)
    assert code == status and fragment in err


def test_invalid_graph(tmp_path, capsys):
    p = tmp_path / "x.graph"
    p.write_text("vertex v0 e=-1\n")
    code, _, err = run(capsys, "classify", p)
    assert code == 1 and "contractible" in err
    code, _, err = run(capsys, "classify", p, "--allow-nonminimal")
    assert code == 0 and "warning" in err


def test_validate(tmp_path, capsys):
    p = tmp_path / "x.graph"
    p.write_text("vertex v0 e=0\n")
    code, out, _ = run(capsys, "validate", p)
    assert code == 1 and "not negative definite" in out
    code, out, _ = run(capsys, "validate", GRAPHS / "d4.graph")
    assert code == 0 and out.strip() == "valid"


def test_syntax_error(tmp_path, capsys):
    p = tmp_path / "x.graph"
    p.write_text("vertex v0 e=-2\nedge v0 v0\n")
    code, _, err = run(capsys, "classify", p)
    assert code == 1 and "line 2" in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 3
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 3
    with pytest.raises(SystemExit) as info:
        main(["hilbert", str(GRAPHS / "a1.graph")])
    assert info.value.code == 3


@pytest.mark.parametrize("argv", [
    ["classify", "genus1_chain.graph", "--json"],
    ["invariants", "cuspchain.graph", "--assume-gorenstein"],
    ["verify", "genus1_chain.graph", "--json"],
])
def test_byte_identical_runs(argv):
    cmd = [sys.executable, "-m", "resgraph", *argv]
    outs = [subprocess.run(cmd, cwd=GRAPHS, capture_output=True, check=False).stdout for _ in range(3)]
    assert outs[0] and outs[0] == outs[1] == outs[2]
