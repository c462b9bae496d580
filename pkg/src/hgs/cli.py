"""Command-line interface.

Exit codes: 0 success, 1 check failure, 2 usage or parse error, 3 infeasible
(a size cap was exceeded).  HGS_MAX_TABLE overrides the Cayley-table cap and
HGS_JOBS sets the default worker count; results never depend on the worker
count.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import SpecError, catalog_list, resolve_spec
from .counting import (
    count_brute_force,
    count_byott,
    count_fpf_inner_holomorph,
    count_product_type,
    count_self_type,
)
from .groups import CapExceededError, GroupError, center
from .morphisms import are_isomorphic
from .parallel import default_jobs
from .report import emit_report
from .screening import classify_group, screen_candidate
from .verify import SUITE_NAMES, run_verify_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgs",
        description="Count Hopf-Galois structures on finite groups by "
                    "formula, holomorph enumeration, or brute force.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="classify a group and print censuses")
    p_info.add_argument("-G", required=True, metavar="SPEC")
    p_info.add_argument("--json", action="store_true")

    p_count = sub.add_parser("count", help="count structures of type N on G")
    p_count.add_argument("-G", required=True, metavar="SPEC")
    p_count.add_argument("-N", required=True, metavar="SPEC")
    p_count.add_argument("--method", required=True,
                         choices=["formula", "byott", "brute", "fpf"])
    p_count.add_argument("--resume", metavar="CKPT", default=None,
                         help="checkpoint file for byott runs")
    p_count.add_argument("--jobs", type=int, default=None)
    p_count.add_argument("--json", action="store_true")
    p_count.add_argument("--allow-order-12", action="store_true",
                         help="lift the brute-force cap from 8 to 12 (slow)")

    p_screen = sub.add_parser("screen", help="necessary-condition screen of N against G")
    p_screen.add_argument("-G", required=True, metavar="SPEC")
    p_screen.add_argument("-N", required=True, metavar="SPEC")
    p_screen.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("--suite", required=True, choices=list(SUITE_NAMES))
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--jobs", type=int, default=None)
    p_verify.add_argument("--checkpoint-dir", default=None)

    p_catalog = sub.add_parser("catalog", help="catalog utilities")
    p_catalog.add_argument("action", choices=["list"])
    return parser


def _cmd_info(args) -> int:
    G = resolve_spec(args.G)
    cls = classify_group(G)
    import json as _json

    import numpy as np
    orders, counts = np.unique(G.elt_order, return_counts=True)
    census = {int(k): int(v) for k, v in zip(orders, counts)}
    payload = {
        "spec": args.G,
        "order": G.order,
        "classification": cls.kind,
        "center_order": center(G).size,
        "socle_order": cls.socle.size if cls.socle is not None else None,
        "socle_index": cls.prime,
        "element_order_census": census,
    }
    if args.json:
        print(_json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return EXIT_OK


def _cmd_count(args) -> int:
    G = resolve_spec(args.G)
    N = resolve_spec(args.N)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if args.method == "formula":
        cls = classify_group(G)
        if cls.kind != "almost-simple":
            print("formula methods need an almost simple G with prime-index socle",
                  file=sys.stderr)
            return EXIT_USAGE
        if are_isomorphic(G, N) is not None:
            result = count_self_type(G, g_label=args.G)
        else:
            cls_n = classify_group(N)
            if (cls_n.kind == "direct-product-simple-cyclic"
                    and cls_n.prime == cls.prime
                    and are_isomorphic(cls_n.socle_group, cls.socle_group) is not None):
                result = count_product_type(G, g_label=args.G, n_label=args.N)
            else:
                print("no closed-form formula applies to this (G, N); "
                      "use --method byott", file=sys.stderr)
                return EXIT_USAGE
    elif args.method == "byott":
        ckpt = Path(args.resume) if args.resume else None
        result = count_byott(G, N, g_label=args.G, n_label=args.N,
                             checkpoint_path=ckpt, jobs=jobs)
    elif args.method == "fpf":
        result = count_fpf_inner_holomorph(G, N, g_label=args.G, n_label=args.N)
    else:  # brute
        brute = count_brute_force(G, {args.N: N}, g_label=args.G,
                                  allow_order_12=args.allow_order_12)
        value = brute.counts.get(args.N, 0)
        from .counting import METHOD_BRUTE, CountResult
        result = CountResult(args.G, args.N, METHOD_BRUTE, value,
                             brute.runtime_ms)
    print(emit_report([result], "json" if args.json else "table"))
    return EXIT_OK


def _cmd_screen(args) -> int:
    G = resolve_spec(args.G)
    N = resolve_spec(args.N)
    report = screen_candidate(G, N, args.G, args.N)
    if args.json:
        print(report.to_json())
    else:
        print(f"G = {args.G}, N = {args.N}")
        print(f"verdict: {report.shape_verdict}")
        if report.reason:
            print(f"reason: {report.reason}")
        for key, cond in report.conditions.items():
            print(f"{key}: {cond.status} {cond.witness}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    ckdir = Path(args.checkpoint_dir) if args.checkpoint_dir else None
    log = None if args.json else print
    report = run_verify_suite(args.suite, jobs=jobs, checkpoint_dir=ckdir, log=log)
    if args.json:
        print(emit_report(report, "json"))
    else:
        status = "all passed" if report.ok else "FAILURES PRESENT"
        print(f"suite {report.suite}: {len(report.items)} checks, {status} "
              f"({report.runtime_ms} ms)")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "info":
            return _cmd_info(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "screen":
            return _cmd_screen(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "catalog":
            for line in catalog_list():
                print(line)
            return EXIT_OK
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except SpecError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
