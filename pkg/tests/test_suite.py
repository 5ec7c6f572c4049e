import json

from aclab.suite import default_catalog, run_acceptance_suite, run_check


def test_empty_catalog_is_vacuous(tmp_path):
    s = run_acceptance_suite({"checks": []}, tmp_path)
    assert (s["total"], s["passed"], s["failed"]) == (0, 0, 0)
    assert json.loads((tmp_path / "summary.json").read_text())["total"] == 0


def test_non_soluble_gacc1_is_skipped_with_reason():
    r = run_check({"check": "gacc1", "group": "builtin: symmetric(5)", "n": 2})
    assert r["passed"] is None and "soluble" in r["skipped"]


def test_unknown_check_skipped():
    assert run_check({"check": "nope"})["skipped"]


def test_reports_written(tmp_path):
    cat = {"checks": [{"check": "wreath", "orders": [2, 3]}, {"check": "bs_certificate"}]}
    s = run_acceptance_suite(cat, tmp_path, jobs=2)
    assert s["passed"] == 2
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["000_wreath.json", "001_bs_certificate.json", "summary.json", "timings.json"]


def test_default_catalog_covers_every_check():
    kinds = {e["check"] for e in default_catalog()["checks"]}
    assert kinds == {"nielsen_bfs", "gacc1", "recalcitrance", "bs_certificate", "bs_prime_powers", "wreath",
                     "w_structure", "move_equivalence", "diameter_inequality", "cyclotomic"}
