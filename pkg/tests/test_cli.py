import io as stdio
import json
from importlib.resources import files

from polaris import io
from polaris.cli import run
from polaris.lattice import DownEdge
from polaris.polarization import random_family, standard_family

DATA = files("polaris") / "data"


def call(*argv):
    buf = stdio.StringIO()
    code = run(list(argv), out=buf)
    text = buf.getvalue()
    return code, text


def test_check_standard_fixture():
    code, text = call("check", "--family", str(DATA / "std_3_3.json"), "--cross-check")
    assert code == 0
    rep = json.loads(text)
    assert rep["verdicts"] == {"spanningTree": True, "tabSpan": True, "oracle": True}


def test_infer_l_complex_graph_fails():
    code, text = call("infer", "--graph", str(DATA / "lcomplex_4_2.json"))
    assert code == 1
    rep = json.loads(text)
    assert rep["diagnostics"][0]["condition"] in {"G1", "G2", "G3", "G4"}


def test_infer_round_trip(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(io.dumps(io.graph_to_json(io.graph_from_json(json.loads((DATA / "isotone_chains_3_3.json").read_text())))))
    code, text = call("infer", "--graph", str(p))
    assert code == 0
    chi = io.family_from_json(json.loads(text)["family"])
    assert chi.X(0, (1, 0, 2)) == {3}


def test_morse():
    code, text = call("morse", "--n", "3", "--d", "3", "--check-iso")
    rep = json.loads(text)
    assert code == 0 and rep["criticalCounts"] == [10, 15, 6] and rep["verdicts"]["isomorphic"]


def test_exit_codes(tmp_path, monkeypatch):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("check", "--family", str(bad))[0] == 2
    assert call("check", "--family", str(tmp_path / "missing.json"))[0] == 2
    assert call("infer", "--graph", str(bad))[0] == 2
    assert call("frobnicate")[0] == 2
    monkeypatch.setenv("POLARIS_GUARD_GENERATORS", "3")
    assert call("betti", "--n", "3", "--d", "2")[0] == 3
    assert call("enumerate", "--n", "5", "--d", "3")[0] == 3


def test_failing_family_exits_one(tmp_path):
    from test_oracle import first_non_polarization

    chi = first_non_polarization(3, 2)
    p = tmp_path / "f.json"
    p.write_text(io.dumps(io.family_to_json(chi)))
    code, text = call("check", "--family", str(p), "--cross-check")
    assert code == 1
    assert json.loads(text)["witnesses"]["failingApex"] == [1, 1, 1]


def test_reports_are_deterministic():
    a = call("check", "--n", "3", "--d", "3", "--seed", "5", "--cross-check")
    b = call("check", "--n", "3", "--d", "3", "--seed", "5", "--cross-check")
    assert a == b


def test_enumerate_writes_manifest(tmp_path):
    code, _ = call("enumerate", "--n", "3", "--d", "2", "--out", str(tmp_path))
    assert code == 0
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["count"] == 4 and len(list(tmp_path.glob("result_*.json"))) == 4


def test_export_formats():
    code, text = call("export", "--n", "3", "--d", "2", "--format", "dot")
    assert code == 0 and text.startswith("graph skeleton")
    code, text = call("export", "--n", "3", "--d", "2", "--what", "lcomplex")
    assert code == 0 and json.loads(text)["degrees"][0]["cells"][0]["key"] == "R"


def test_restricted_and_lcomplex():
    code, text = call("restricted", "--u", "1,1,1,1", "--d", "2")
    rep = json.loads(text)
    assert code == 0 and rep["ranks"] == rep["betti"] == [6, 8, 3]
    assert call("lcomplex", "--n", "3", "--d", "2")[0] == 0
    assert call("hypersimplex", "--n", "3", "--d", "3")[0] == 0
    assert call("--timings", "restricted", "--u", "1,1,1,1", "--d", "2")[0] == 0


def test_json_round_trips():
    import random

    chi = random_family(3, 3, random.Random(1))
    assert io.family_from_json(json.loads(io.dumps(io.family_to_json(chi)))).key() == chi.key()
    e = DownEdge((1, 1, 1), 0, 2)
    assert io.edge_from_json(io.edge_to_json(e)) == e
    assert io.edge_to_json(e) == {"apex": [1, 1, 1], "i": 1, "j": 3}
