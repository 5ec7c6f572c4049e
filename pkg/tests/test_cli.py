import json
import subprocess
import sys

import pytest

from aclab.cli import main
from aclab.reporting import ResultCache, canonical_json, digest


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_wreath_verify(capsys):
    code, doc = run_json(capsys, "wreath", "verify", "2,3")
    assert code == 0 and doc["result"]["pass"]
    assert doc["manifest"]["output_digest"] == digest(doc["result"])


def test_global_flag_before_command(capsys):
    code, out, _ = run(capsys, "--json", "bs-coessential", "11")
    doc = json.loads(out)
    assert doc["result"]["image"] == [1, 9] and doc["result"]["verdict"] == "not-surjective"


def test_bs_range(capsys):
    code, doc = run_json(capsys, "bs-coessential", "--range", "2..30")
    assert 11 in doc["result"]["not_surjective"] and 6 not in doc["result"]["not_surjective"]


def test_nielsen_classes(capsys):
    code, doc = run_json(capsys, "nielsen", "classes", "--group", "abelian: 5,5", "-n", "2")
    r = doc["result"]
    assert r["invariants"] == [5, 5] and r["class_count"] == 2 and len(r["representatives"]) == 2


@pytest.mark.parametrize("sub", ["components", "diameter", "gacc1"])
def test_graph_commands(capsys, sub):
    code, doc = run_json(capsys, "graph", sub, "-g", "builtin: symmetric(3)", "-n", "2")
    assert code == 0


def test_graph_rec_and_w1(capsys):
    code, doc = run_json(capsys, "graph", "rec", "-g", "perm d=3: (0 1), (0 1 2)", "--tuple-perm", "(0 1)|(0 1)")
    assert doc["result"]["recalcitrance"] == 1
    code, doc = run_json(capsys, "graph", "w1", "-g", "builtin: affine(5)")
    assert doc["result"]["satisfies_gacc1_1"]


def test_moves_flag(capsys):
    code, doc = run_json(capsys, "graph", "diameter", "-g", "builtin: quaternion8", "-n", "2", "--moves", "m")
    assert doc["result"]["moves"] == "m" and doc["result"]["component_count"] == 1


def test_group_info_and_text_output(capsys):
    code, out, _ = run(capsys, "group", "info", "-g", "builtin: symmetric(4)")
    assert code == 0 and "order: 24" in out and "weight: 1" in out


def test_cyclotomic(capsys):
    code, doc = run_json(capsys, "cyclotomic", "xi", "9", "2")
    assert doc["result"]["is_unit"]
    code, doc = run_json(capsys, "cyclotomic", "phi", "12")
    assert doc["result"]["phi"] == [1, 0, -1, 0, 1]


def test_parse_error_exit(capsys):
    code, out, err = run(capsys, "group", "info", "-g", "perm d=3: (0 7)")
    assert code == 2 and "line 1, column" in err


def test_group_file(tmp_path, capsys):
    f = tmp_path / "g.spec"
    f.write_text("# dihedral group\nbuiltin: dihedral(4)\n")
    code, doc = run_json(capsys, "group", "info", "-g", str(f))
    assert doc["result"]["order"] == 8


def test_cache_hit_reproduces_digest(tmp_path, capsys, monkeypatch):
    argv = ["graph", "diameter", "-g", "builtin: dihedral(4)", "-n", "2", "--cache-dir", str(tmp_path)]
    _, cold = run_json(capsys, *argv)
    _, warm = run_json(capsys, *argv)
    assert not cold["manifest"]["cache_hit"] and warm["manifest"]["cache_hit"]
    assert cold["manifest"]["output_digest"] == warm["manifest"]["output_digest"]
    monkeypatch.setenv("AC_LAB_CACHE", str(tmp_path))
    _, env = run_json(capsys, *argv[:-2])
    assert env["manifest"]["cache_hit"]


def test_digest_stable_across_processes():
    cmd = [sys.executable, "-m", "aclab.cli", "--json", "graph", "gacc1", "-g", "builtin: dihedral(4)", "-n", "2"]
    a, b = (json.loads(subprocess.run(cmd, capture_output=True, text=True, check=True).stdout) for _ in range(2))
    assert a["result"] == b["result"]
    assert a["manifest"]["output_digest"] == b["manifest"]["output_digest"]


def test_suite_exit_codes(tmp_path, capsys):
    cat = tmp_path / "c.json"
    cat.write_text(json.dumps({"checks": [{"check": "gacc1", "group": "builtin: symmetric(5)", "n": 2}]}))
    code, doc = run_json(capsys, "suite", "run", "--catalog", str(cat), "--out", str(tmp_path / "out"))
    assert code == 0 and doc["result"]["skipped"] == 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"checks": [{"check": "bs_prime_powers", "n": [16]}]}))
    code, doc = run_json(capsys, "suite", "run", "--catalog", str(bad))
    assert code == 1 and doc["result"]["failed"] == 1


def test_canonical_json_sorted():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_result_cache_roundtrip(tmp_path):
    c = ResultCache(tmp_path)
    k = ResultCache.key("h", "op", {"n": 2})
    assert c.get(k) is None
    c.put(k, {"x": 1})
    assert c.get(k) == {"x": 1}
    assert k != ResultCache.key("h", "op", {"n": 3})
