"""``ac-lab`` command line.

Every command builds a JSON-able ``result``; ``--json`` prints it together
with a run manifest, otherwise a plain rendering is printed.  The output
digest covers ``result`` only, so it is stable across reruns and cache hits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections import Counter
from pathlib import Path

from . import __version__, graphs
from .abelian import class_count, class_representatives, invariant_factors
from .errors import ACLabError
from .graphs import MoveSet
from .groups import (
    DEFAULT_ORDER_CAP,
    abelianization,
    derived_series,
    is_soluble,
    rank,
    w_subgroup,
    weight,
)
from .moves import DEFAULT_STATE_CAP
from .reporting import ResultCache, RunManifest, canonical_json, digest
from .specparse import parse_group_spec, parse_tuple, spec_hash
from .suite import run_acceptance_suite
from .units import bs_coessential, bs_scan, cyclotomic_poly, phi_at_1, xi_unit_check
from .wreath import wreath_weight_one_verify

LATTICE_LIMIT = 512


def _spec_text(value: str) -> str:
    """``--group`` takes a spec or the path of a file holding one."""
    if os.path.isfile(value):
        return Path(value).read_text()
    return value


def _load(args):
    text = _spec_text(args.group)
    return parse_group_spec(text, cap=args.order_cap), spec_hash(text)


def _int_range(text: str):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like a..b")
    return int(lo), int(hi)


def _orders(text: str):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad order list {text!r}") from None


# commands


def cmd_group_info(args):
    G, h = _load(args)
    A, _ = abelianization(G)
    inv, _ = invariant_factors(A)
    out = {
        "group": G.name,
        "order": G.order,
        "abelian": G.is_abelian,
        "exponent": G.exponent,
        "element_orders": {str(k): v for k, v in sorted(Counter(G.element_orders.tolist()).items())},
        "conjugacy_classes": int(len(set(G.conjugacy_class_ids.tolist()))),
        "abelianization": list(inv.factors),
        "soluble": is_soluble(G),
        "derived_series": [S.size for S in derived_series(G)],
    }
    if G.order <= LATTICE_LIMIT:
        out.update(rank=rank(G), weight=weight(G), w_subgroup_order=w_subgroup(G).size)
    return out, h


def cmd_nielsen_classes(args):
    A, h = _load(args)
    inv, _ = invariant_factors(A)
    reps = class_representatives(A, args.n)
    return {
        "group": A.name,
        "invariants": list(inv.factors),
        "n": args.n,
        "class_count": class_count(inv, args.n),
        "representatives": [list(r) for r in reps],
    }, h


def _tuple_arg(args, G):
    if args.tuple is None and args.tuple_perm is None:
        return None
    return parse_tuple(G, ids=args.tuple, perms=args.tuple_perm)


def cmd_graph(args):
    G, h = _load(args)
    kind = args.graph_command
    cap = args.state_cap
    if kind in ("components", "diameter"):
        rep = graphs.components(G, args.n, MoveSet.parse(args.moves), diameters=kind == "diameter", state_cap=cap)
        out = rep.as_dict()
        if kind == "components":
            for c in out["components"]:
                c.pop("diameter", None)
                c.pop("approximate", None)
            out.pop("d_n")
            out.pop("approximate")
        return out, h
    if kind == "rec":
        t = _tuple_arg(args, G)
        if t is not None:
            return {"group": G.name, "tuple": list(t),
                    "recalcitrance": graphs.recalcitrance(G, t, state_cap=cap)}, h
        return graphs.recalcitrance_group(G, args.n, state_cap=cap).as_dict(), h
    if kind == "gacc1":
        if not is_soluble(G):
            print(f"warning: {G.name} is not soluble; the gacc1 theorem does not apply", file=sys.stderr)
        return graphs.gacc1_check(G, args.n, state_cap=cap).as_dict(), h
    return graphs.weight_one_classes(G).as_dict(), h


def cmd_bs(args):
    if args.range is not None:
        lo, hi = args.range
        certs = bs_scan(lo, hi)
        return {"range": [lo, hi], "certificates": [c.as_dict() for c in certs],
                "not_surjective": [c.n for c in certs if not c.surjective]}, None
    if args.N is None:
        raise ACLabError("give N or --range a..b")
    return bs_coessential(args.N).as_dict(), None


def cmd_cyclotomic(args):
    if args.cyclotomic_command == "phi":
        return {"n": args.N, "phi": cyclotomic_poly(args.N), "phi_at_1": phi_at_1(args.N)}, None
    return xi_unit_check(args.N, args.A).as_dict(), None


def cmd_wreath(args):
    return wreath_weight_one_verify(args.orders, cap=args.order_cap).as_dict(), None


def cmd_suite(args):
    summary = run_acceptance_suite(args.catalog, args.out, jobs=args.jobs)
    return summary, None


CACHEABLE = {cmd_group_info, cmd_nielsen_classes, cmd_graph}


def _params(args):
    skip = {"func", "json", "jobs", "cache_dir", "group"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _render(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, str)) for x in v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _scalar(v):
    if isinstance(v, list):
        return "[" + ", ".join(map(str, v)) + "]"
    return canonical_json(v) if not isinstance(v, str) else v


def _common(defaults: bool) -> argparse.ArgumentParser:
    # Shared flags; subcommands re-declare them with SUPPRESS so that both
    # ``ac-lab --json wreath verify 2,3`` and ``ac-lab wreath verify 2,3 --json`` work.
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d(False), help="print JSON with a run manifest")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes (suite run)")
    p.add_argument("--state-cap", type=int, default=d(DEFAULT_STATE_CAP), help="largest tuple space to enumerate")
    p.add_argument("--order-cap", type=int, default=d(DEFAULT_ORDER_CAP), help="largest group to build")
    p.add_argument("--cache-dir", default=d(None), help="result cache directory (default: $AC_LAB_CACHE)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(False)
    parser = argparse.ArgumentParser(prog="ac-lab", parents=[_common(True)],
                                     description="Nielsen and Andrews-Curtis classes in finite groups.")
    parser.add_argument("--version", action="version", version=f"ac-lab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_arg(p):
        p.add_argument("--group", "-g", required=True, help="group spec, or a file containing one")

    grp = sub.add_parser("group", help="group structure").add_subparsers(dest="group_command", required=True)
    p = grp.add_parser("info", parents=[common], help="order, series, rank, weight")
    group_arg(p)
    p.set_defaults(func=cmd_group_info)

    nie = sub.add_parser("nielsen", help="abelian Nielsen classes").add_subparsers(dest="nielsen_command", required=True)
    p = nie.add_parser("classes", parents=[common], help="class count and representatives")
    group_arg(p)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_nielsen_classes)

    gr = sub.add_parser("graph", help="transformation graphs").add_subparsers(dest="graph_command", required=True)
    for name, hlp in [("components", "component partition"), ("diameter", "components with diameters"),
                      ("rec", "recalcitrance of a tuple or the group"), ("gacc1", "AC components vs Nielsen classes"),
                      ("w1", "AC classes of weight elements")]:
        p = gr.add_parser(name, parents=[common], help=hlp)
        group_arg(p)
        p.add_argument("-n", type=int, required=name in ("components", "diameter", "gacc1"))
        if name in ("components", "diameter"):
            p.add_argument("--moves", default="ac", choices=[m.value for m in MoveSet])
        if name == "rec":
            p.add_argument("--tuple", help="element ids, e.g. 1,3")
            p.add_argument("--tuple-perm", help="permutations in cycle form separated by '|'")
        p.set_defaults(func=cmd_graph)

    p = sub.add_parser("bs-coessential", parents=[common], help="unit-map certificate for BS(1,N)")
    p.add_argument("N", type=int, nargs="?")
    p.add_argument("--range", type=_int_range, help="scan a..b")
    p.set_defaults(func=cmd_bs)

    cy = sub.add_parser("cyclotomic", help="cyclotomic arithmetic").add_subparsers(dest="cyclotomic_command", required=True)
    p = cy.add_parser("xi", parents=[common], help="unit check for 1 + x + ... + x^(A-1) mod Phi_N")
    p.add_argument("N", type=int)
    p.add_argument("A", type=int)
    p.set_defaults(func=cmd_cyclotomic)
    p = cy.add_parser("phi", parents=[common], help="Phi_N and Phi_N(1)")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_cyclotomic)

    wr = sub.add_parser("wreath", help="iterated wreath products").add_subparsers(dest="wreath_command", required=True)
    p = wr.add_parser("verify", parents=[common], help="weight-one verification")
    p.add_argument("orders", type=_orders)
    p.set_defaults(func=cmd_wreath)

    su = sub.add_parser("suite", help="acceptance suite").add_subparsers(dest="suite_command", required=True)
    p = su.add_parser("run", parents=[common], help="run every catalog check")
    p.add_argument("--catalog", help="JSON catalog (default: built-in)")
    p.add_argument("--out", help="directory for per-check reports")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    cache = ResultCache.from_option(args.cache_dir)
    try:
        result, h, hit = None, None, False
        if cache is not None and args.func in CACHEABLE:
            h = spec_hash(_spec_text(args.group))
            key = ResultCache.key(h, args.func.__name__, _params(args))
            result = cache.get(key)
            hit = result is not None
        if result is None:
            result, h = args.func(args)
            result = json.loads(canonical_json(result))
            if cache is not None and args.func in CACHEABLE:
                cache.put(key, result)
    except ACLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    manifest = RunManifest(
        command=["ac-lab", *(argv if argv is not None else sys.argv[1:])],
        spec_hash=h,
        caps={"state_cap": args.state_cap, "order_cap": args.order_cap},
        jobs=args.jobs,
        elapsed=round(time.perf_counter() - t0, 6),
        output_digest=digest(result),
        cache_hit=hit,
    )
    if args.json:
        print(canonical_json({"result": result, "manifest": manifest.as_dict()}, indent=2))
    else:
        print("\n".join(_render(result)))
    if args.func is cmd_suite and result.get("failed", 0):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
