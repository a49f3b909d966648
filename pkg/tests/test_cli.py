import json
import math
import subprocess
import sys
from fractions import Fraction

import pytest

from dotgraph.cli import main
from dotgraph.constructors import ArcSet, CapSet, DiskSet, save_geometry
from dotgraph.graph import gen_anticycle, gen_named, load_graph, save_graph
from dotgraph.model import load_model


@pytest.fixture
def run(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)

    def _run(*argv):
        code = main([str(a) for a in argv])
        out = capsys.readouterr()
        return code, out.out, out.err

    return _run


def test_a6_pipeline(run):
    assert run("construct", "a6", "-o", "a6.model")[0] == 0
    assert run("gen", "anticycle", "3", "-o", "a6.graph")[0] == 0
    code, out, _ = run("verify", "a6.model", "a6.graph")
    assert code == 0
    assert "verdict: accept" in out and "min_nonedge_deficit: 1/6" in out
    assert "min_edge_margin: 0 at (v2, w2)" in out


def test_matching_pow2_fails_at_v1_v2(run):
    code, out, _ = run("construct", "matching-paper", "2")
    assert code == 2
    assert "(v1, v2) expected edge, dot 1/3" in out


def test_matching_pow2_m1_ok(run):
    assert run("construct", "matching-paper", "1")[0] == 0


def test_matching_corrected_with_extra(run):
    code, out, _ = run("construct", "matching", "4", "--extra", "3", "-o", "m.model")
    assert code == 0
    assert len(load_model("m.model").vectors) == 11


@pytest.mark.parametrize("kind", ["claw", "bi4wheel", "j3d"])
def test_fixed_constructions(run, kind):
    assert run("construct", kind)[0] == 0


def test_refute_a8(run):
    run("gen", "anticycle", "4", "-o", "a8.graph")
    code, out, _ = run("refute", "a8.graph")
    assert code == 3
    assert out.startswith("REFUTED")
    assert "unconditional" in out


def test_refute_survivors_inconclusive(run):
    run("gen", "cycle", "4", "-o", "c4.graph")
    code, out, _ = run("refute", "c4.graph")
    assert code == 4 and out.startswith("SURVIVORS")


def test_refute_log_is_json(run):
    run("gen", "anticycle", "3", "-o", "a6.graph")
    code, out, _ = run("refute", "a6.graph", "--log", "-o", "cert.json")
    doc = json.loads(out)
    assert code == 4 and "log" in doc and len(doc["log"]) == doc["pruned_prefixes"]
    assert json.loads(open("cert.json").read()) == doc


def test_refute_size_cap(run):
    run("gen", "cycle", "9", "-o", "c9.graph")
    code, _, err = run("refute", "c9.graph", "--max-n", "8")
    assert code == 6 and "8 vertices" in err


def test_search_found_and_reverifies(run):
    run("gen", "cycle", "5", "-o", "c5.graph")
    code, out, _ = run("search", "c5.graph", "--dim", "2", "-o", "c5.model")
    assert code == 0 and "FOUND" in out
    assert run("verify", "c5.model", "c5.graph")[0] == 0


def test_search_not_found(run):
    run("gen", "anticycle", "4", "-o", "a8.graph")
    code, out, _ = run("search", "a8.graph", "--dim", "2", "--restarts", "5", "--iters", "200")
    assert code == 4 and out.startswith("NOT_FOUND")


def test_search_deterministic_bytes(run, tmp_path):
    run("gen", "cycle", "8", "-o", "c8.graph")
    run("search", "c8.graph", "--dim", "2", "--seed", "5", "-o", "a.model")
    run("search", "c8.graph", "--dim", "2", "--seed", "5", "-o", "b.model")
    assert (tmp_path / "a.model").read_bytes() == (tmp_path / "b.model").read_bytes()


def test_refute_deterministic_bytes(run, tmp_path):
    run("gen", "J", "-o", "j.graph")
    run("refute", "j.graph", "-o", "a.json")
    run("refute", "j.graph", "--workers", "2", "-o", "b.json")
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_induce(run):
    run("construct", "j3d", "-o", "j.model")
    assert run("induce", "j.model", "-o", "j.graph")[0] == 0
    assert load_graph("j.graph") == gen_named("J")


def test_recognize(run):
    run("gen", "path", "4", "-o", "p4.graph")
    code, out, _ = run("recognize", "--dim1", "p4.graph")
    assert code == 2 and "no" in out
    run("gen", "complete", "4", "-o", "k4.graph")
    code, out, _ = run("recognize", "--dim1", "k4.graph")
    assert code == 0 and "yes" in out


def test_gen_forms(run):
    run("gen", "complete-minus-matching", "6", "3", "-o", "a.graph")
    run("gen", "grid(3,3)", "-o", "b.graph")
    assert load_graph("a.graph").m == 12
    assert load_graph("b.graph").n == 9


@pytest.mark.parametrize(
    "geom, kind",
    [
        (CapSet({"a": (1.0, 0.0, 0.0), "b": (0.0, 1.0, 0.0), "c": (0.8, 0.6, 0.0)}, 0.7), "caps"),
        (ArcSet({str(i): 2 * math.pi * i / 8 for i in range(8)}, 1.2 * math.pi / 4), "arcs"),
        (DiskSet({"a": (0.0, 0.0), "b": (1.5, 0.0), "c": (5.0, 0.0)}), "disks"),
    ],
)
def test_construct_geometry(run, geom, kind):
    save_geometry(geom, "g.geom")
    code, out, _ = run("construct", kind, "g.geom", "-o", "g.model")
    assert code == 0, out
    assert load_model("g.model").dim == (3 if kind != "arcs" else 2)


def test_touching_arcs_inconclusive(run):
    save_geometry(ArcSet({str(i): 2 * math.pi * i / 8 for i in range(8)}, math.pi / 4), "g.geom")
    code, out, _ = run("construct", "arcs", "g.geom")
    assert code == 4 and "boundary-ambiguous" in out


def test_band_flag(run):
    run("construct", "a6", "-o", "a6.model")
    run("gen", "anticycle", "3", "-o", "a6.graph")
    with open("a6.model") as fh:
        doc = json.load(fh)
    # (v2, w2) sits 1e-12 above the threshold
    doc["t"] = 1.0 - 1e-12
    doc["vectors"] = {k: [float(Fraction(x)) for x in v] for k, v in doc["vectors"].items()}
    with open("f.model", "w") as fh:
        json.dump(doc, fh)
    code, out, _ = run("verify", "f.model", "a6.graph")
    assert code == 4 and "boundary pairs: (v2, w2)" in out
    assert run("verify", "f.model", "a6.graph", "--band", "1e-14")[0] == 0
    assert run("verify", "f.model", "a6.graph", "--band", "0")[0] == 5


def test_geometry_kind_mismatch(run):
    save_geometry(ArcSet({"a": 0.0}, 0.5), "g.geom")
    code, _, err = run("construct", "caps", "g.geom")
    assert code == 5 and "kind" in err


def test_wide_arcs_rejected(run):
    save_geometry(ArcSet({"a": 0.0, "b": 1.0}, 1.8), "g.geom")
    code, _, err = run("construct", "arcs", "g.geom")
    assert code == 5 and "quarter" in err


def test_mode_mix_exit(run):
    with open("mix.model", "w") as fh:
        json.dump({"dim": 1, "t": "1/1", "vectors": {"a": [0.5]}}, fh)
    code, _, err = run("induce", "mix.model", "-o", "x.graph")
    assert code == 7 and "mixed" in err


def test_malformed_graph(run):
    with open("bad.graph", "w") as fh:
        fh.write('{"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}')
    run("construct", "claw", "-o", "c.model")
    code, _, err = run("verify", "c.model", "bad.graph")
    assert code == 5 and "duplicate" in err


def test_missing_file(run):
    code, _, err = run("verify", "nope.model", "nope.graph")
    assert code == 5 and "nope.model" in err


def test_verify_reject_and_json(run):
    save_graph(gen_anticycle(3), "a6.graph")
    run("construct", "a6", "-o", "a6.model")
    run("gen", "cycle", "6", "-o", "c6.graph")
    code, _, err = run("verify", "a6.model", "c6.graph")
    assert code == 5 and "vertex sets differ" in err
    code, out, _ = run("verify", "a6.model", "a6.graph", "--json")
    assert code == 0 and json.loads(out)["min_nonedge_deficit"] == "1/6"


def test_corpus_check_subset(run):
    code, out, _ = run("corpus-check", "--only", "1,2,3", "-v")
    assert code == 0
    assert out.splitlines()[-1] == "3/3 criteria pass"


def test_corpus_check_bad_criterion(run):
    assert run("corpus-check", "--only", "12")[0] == 5


def test_separate_process_reverify(tmp_path):
    # construct and verify in different interpreters: nothing shared in memory
    cmd = [sys.executable, "-m", "dotgraph"]
    subprocess.run(cmd + ["construct", "bi4wheel", "-o", "b.model"], cwd=tmp_path, check=True, capture_output=True)
    subprocess.run(cmd + ["gen", "bi4wheel", "-o", "b.graph"], cwd=tmp_path, check=True, capture_output=True)
    res = subprocess.run(cmd + ["verify", "b.model", "b.graph"], cwd=tmp_path, capture_output=True, text=True)
    assert res.returncode == 0 and "accept" in res.stdout
