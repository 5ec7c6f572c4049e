"""Catalog-driven runner for the acceptance checks.

A catalog is a JSON object ``{"checks": [...]}``; each entry names a check
kind plus its parameters, e.g.
``{"check": "gacc1", "group": "builtin: symmetric(3)", "n": 2}``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import graphs
from .abelian import class_count, invariant_factors, nielsen_class
from .graphs import MoveSet
from .groups import is_soluble, prime_power, quotient, rank, w_subgroup, weight
from .reporting import canonical_json
from .specparse import parse_group_spec
from .units import bs_coessential, bs_scan, phi_at_1, xi_unit_check
from .wreath import wreath_weight_one_verify

ABELIAN_FACTOR_LISTS = [[d] for d in range(2, 31)] + [[2, 4], [3, 9], [5, 5], [2, 2, 2]]

SOLUBLE_CATALOG = [
    "builtin: symmetric(3)",
    "builtin: dihedral(4)",
    "builtin: dihedral(6)",
    "builtin: quaternion8",
    "builtin: heisenberg(3)",
    "builtin: affine(5)",
    "abelian: 5,5",
    "wreath: 2,3",
    "builtin: symmetric(4)",
    "builtin: affine(4)",
    "abelian: 2,4",
    "builtin: cyclic(6)",
]
CATALOG = SOLUBLE_CATALOG + ["builtin: symmetric(5)"]
NILPOTENT = {"builtin: dihedral(4)", "builtin: quaternion8", "builtin: heisenberg(3)",
             "abelian: 5,5", "abelian: 2,4", "builtin: cyclic(6)"}
BS_PRIME_POWERS = [11, 13, 25, 27, 32, 49, 81]


def _result(entry, passed, **details):
    return {"entry": entry, "passed": passed, "skipped": None, "details": details}


def _skip(entry, reason):
    return {"entry": entry, "passed": None, "skipped": reason, "details": {}}


def check_nielsen_bfs(entry):
    """BFS components under Nielsen moves versus the class count and the delta labels."""
    A = parse_group_spec(entry["group"])
    inv, _ = invariant_factors(A)
    rows = []
    for n in entry["n"]:
        g = graphs.transformation_graph(A, n, MoveSet.NIELSEN)
        labels = [nielsen_class(A, g.tuple_at(i), check=False) for i in range(len(g))]
        per_comp = [{labels[i] for i in g.members(c)} for c in range(g.component_count)]
        consistent = all(len(s) == 1 for s in per_comp)
        separated = len({next(iter(s)) for s in per_comp}) == g.component_count if consistent else False
        expected = class_count(inv, n)
        rows.append({"n": n, "components": g.component_count, "class_count": expected,
                     "labels_constant": consistent, "labels_separate": separated,
                     "ok": consistent and separated and g.component_count == expected})
    return _result(entry, all(r["ok"] for r in rows), invariants=list(inv.factors), rows=rows)


def check_gacc1(entry):
    G = parse_group_spec(entry["group"])
    if not is_soluble(G):
        return _skip(entry, "group is not soluble; gacc1 precondition fails")
    r = graphs.gacc1_check(G, entry["n"])
    return _result(entry, r.passed, **r.as_dict())


def check_recalcitrance(entry):
    G = parse_group_spec(entry["group"])
    if not is_soluble(G):
        return _skip(entry, "group is not soluble")
    n = rank(G)
    coessential = graphs.abelianization_coessential(G, n)
    rep = graphs.recalcitrance_group(G, n)
    ok = True
    if coessential:
        ok = rep.value <= 2 * n - 1
    if entry.get("nilpotent"):
        ok = ok and rep.value == 0
    return _result(entry, ok, coessential=coessential, bound=2 * n - 1, **rep.as_dict())


def check_bs_certificate(entry):
    c11, c2, c6 = bs_coessential(11), bs_coessential(2), bs_coessential(6)
    t0 = time.perf_counter()
    scan = bs_scan(2, 100)
    elapsed = time.perf_counter() - t0
    small = [c for c in scan if c.modulus in (1, 2, 3, 4, 6)]
    ok = (not c11.surjective and c11.image == (1, 9) and c11.witness in (3, 7)
          and c2.surjective and c6.surjective and elapsed < 1.0 and all(c.surjective for c in small))
    return _result(entry, ok, bs11=c11.as_dict(), scan_seconds=round(elapsed, 4),
                   small_modulus_surjective=all(c.surjective for c in small))


def _enumerated_image(n):
    m = n - 1
    gens = [(-1) % m] + [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    seen = {1 % m}
    for _ in range(m):
        seen |= {x * g % m for x in seen for g in gens}
    return sorted(seen)


def check_bs_prime_powers(entry):
    rows = []
    for n in entry.get("n", BS_PRIME_POWERS):
        c = bs_coessential(n)
        independent = _enumerated_image(n)
        rows.append({"n": n, "verdict": c.verdict, "image_matches_closure": list(c.image) == independent,
                     "ok": (not c.surjective) and list(c.image) == independent})
    c16 = bs_coessential(16)
    return _result(entry, all(r["ok"] for r in rows), rows=rows,
                   n16={"verdict": c16.verdict, "flags": c16.notes})


def check_wreath(entry):
    r = wreath_weight_one_verify(entry["orders"])
    return _result(entry, r.passed, **r.as_dict())


def check_w_structure(entry):
    G = parse_group_spec(entry["group"])
    if not is_soluble(G):
        return _skip(entry, "group is not soluble")
    W = w_subgroup(G)
    Q, _ = quotient(G, W)
    w_g = weight(G)
    w_q = weight(Q) if not W.is_whole else None
    ok = Q.is_abelian and (W.is_whole or w_g == w_q)
    return _result(entry, ok, w_size=W.size, quotient_abelian=Q.is_abelian, weight=w_g, weight_quotient=w_q)


def check_move_equivalence(entry):
    G = parse_group_spec(entry["group"])
    ok = graphs.move_equivalence_check(G, entry["n"])
    return _result(entry, ok)


def check_diameter_inequality(entry):
    G = parse_group_spec(entry["group"])
    w = weight(G)
    if entry["n"] <= w:
        return _skip(entry, f"n={entry['n']} does not exceed w(G)={w}")
    r = graphs.diameter_inequality_report(G, entry["n"])
    return _result(entry, r.passed, **r.as_dict())


def check_cyclotomic(entry):
    limit = entry.get("prime_power_limit", 64)
    bad = []
    count = 0
    for n in range(2, limit + 1):
        if prime_power(n) is None:
            continue
        for a in range(1, n):
            if np.gcd(a, n) == 1:
                r = xi_unit_check(n, a)
                count += 1
                if not (r.is_unit and r.residue == a % r.modulus):
                    bad.append([n, a])
    phi_bad = [n for n in range(2, entry.get("phi_limit", 200) + 1)
               if phi_at_1(n) != (prime_power(n) or (1,))[0]]
    return _result(entry, not bad and not phi_bad, xi_checked=count, failures=bad, phi_failures=phi_bad)


CHECKS = {
    "nielsen_bfs": check_nielsen_bfs,
    "gacc1": check_gacc1,
    "recalcitrance": check_recalcitrance,
    "bs_certificate": check_bs_certificate,
    "bs_prime_powers": check_bs_prime_powers,
    "wreath": check_wreath,
    "w_structure": check_w_structure,
    "move_equivalence": check_move_equivalence,
    "diameter_inequality": check_diameter_inequality,
    "cyclotomic": check_cyclotomic,
}


def default_catalog() -> dict:
    checks = []
    for f in ABELIAN_FACTOR_LISTS:
        order = int(np.prod(f))
        ns = [n for n in range(len(f), 4) if order**n <= 10**6]
        checks.append({"check": "nielsen_bfs", "group": "abelian: " + ",".join(map(str, f)), "n": ns})
    for spec in ["builtin: symmetric(3)", "builtin: dihedral(4)", "builtin: dihedral(6)",
                 "builtin: quaternion8", "builtin: heisenberg(3)", "builtin: affine(5)",
                 "abelian: 5,5", "wreath: 2,3"]:
        checks.append({"check": "gacc1", "group": spec, "n": 2})
    for spec in ["builtin: symmetric(3)", "builtin: dihedral(4)"]:
        checks.append({"check": "gacc1", "group": spec, "n": 3})
    for spec in SOLUBLE_CATALOG:
        checks.append({"check": "recalcitrance", "group": spec, "nilpotent": spec in NILPOTENT})
    checks.append({"check": "bs_certificate"})
    checks.append({"check": "bs_prime_powers", "n": BS_PRIME_POWERS})
    for orders in ([2, 3], [3, 2], [2, 5], [3, 4]):
        checks.append({"check": "wreath", "orders": orders})
    for spec in SOLUBLE_CATALOG:
        checks.append({"check": "w_structure", "group": spec})
    for spec in CATALOG:
        checks.append({"check": "move_equivalence", "group": spec, "n": 2})
    for spec in ["builtin: symmetric(3)", "builtin: quaternion8", "builtin: dihedral(4)"]:
        checks.append({"check": "diameter_inequality", "group": spec, "n": 2})
    checks.append({"check": "cyclotomic", "prime_power_limit": 64, "phi_limit": 200})
    return {"checks": checks}


def run_check(entry):
    t0 = time.perf_counter()
    fn = CHECKS.get(entry.get("check"))
    if fn is None:
        out = _skip(entry, f"unknown check {entry.get('check')!r}")
    else:
        out = fn(entry)
    out["elapsed"] = round(time.perf_counter() - t0, 4)
    return out


def run_acceptance_suite(catalog=None, output_dir=None, jobs: int = 1) -> dict:
    """Run every catalog entry, write one report per check plus ``summary.json``.

    ``catalog`` is a path to a JSON catalog, a dict, or ``None`` for the
    built-in default.  Returns the summary; ``summary["failed"]`` is nonzero
    when any check failed.
    """
    if catalog is None:
        cat = default_catalog()
    elif isinstance(catalog, dict):
        cat = catalog
    else:
        cat = json.loads(Path(catalog).read_text())
    entries = cat.get("checks", [])
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_check, entries))
    else:
        results = [run_check(e) for e in entries]
    summary = {
        "total": len(results),
        "passed": sum(r["passed"] is True for r in results),
        "failed": sum(r["passed"] is False for r in results),
        "skipped": sum(r["passed"] is None for r in results),
        "checks": [{"check": r["entry"].get("check"), "group": r["entry"].get("group"),
                    "passed": r["passed"], "skipped": r["skipped"]} for r in results],
    }
    if output_dir is not None:
        out = Path(output_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, r in enumerate(results):
            payload = {k: v for k, v in r.items() if k != "elapsed"}
            (out / f"{i:03d}_{r['entry'].get('check', 'unknown')}.json").write_text(canonical_json(payload, indent=2))
        (out / "summary.json").write_text(canonical_json(summary, indent=2))
        (out / "timings.json").write_text(canonical_json([r["elapsed"] for r in results], indent=2))
    return summary
