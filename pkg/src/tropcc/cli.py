"""Command-line interface.

Subcommands: census | conf | compute | verify.
Exit codes: 0 ok, 1 golden mismatch, 2 bad arguments, 3 invariant breach,
4 cache corruption.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .config_complex import ModelViolationError
from .exact_linalg import ActionViolationError, LinAlgError
from .graph_complex import (AssemblyError, DegenerationError,
                            EulerMismatchError)
from .multigraph import GraphError, UnsupportedGenus
from .pipeline import (CacheCorruptionError, CacheStore, JobError, JobSpec,
                       census_report, compute, conf_report, default_cache_dir,
                       verify)

EXIT_OK = 0
EXIT_GOLDEN_MISMATCH = 1
EXIT_BAD_ARGS = 2
EXIT_INVARIANT_BREACH = 3
EXIT_CACHE_CORRUPTION = 4


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tropcc",
        description="Equivariant weight-0 cohomology of tropical moduli of "
                    "curves via graph complexes of configuration spaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cache-dir", default=None,
                       help="cache directory (default: $TROPCC_CACHE or "
                            "./.tropcc-cache)")
        p.add_argument("--format", choices=("json", "table"), default="table")

    pc = sub.add_parser("census", help="enumerate the stable graph census")
    pc.add_argument("--g", type=int, required=True)
    pc.add_argument("--all-stable", action="store_true",
                    help="drop the 2-connectivity reduction")
    common(pc)

    pf = sub.add_parser("conf", help="H_c of configuration spaces per graph")
    pf.add_argument("--g", type=int, required=True)
    pf.add_argument("--n", type=int, required=True)
    pf.add_argument("--graph", default=None, help="census key, e.g. g3_e6_i0")
    common(pf)

    pm = sub.add_parser("compute", help="equivariant cohomology tables")
    pm.add_argument("--g", type=int, required=True)
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--route", choices=("total", "e1", "e1-pruned"),
                    default="e1-pruned")
    pm.add_argument("--isotypic", default="all",
                    help="all | trivial | sign | semicolon-separated "
                         "partitions like '3,1;2,2'")
    pm.add_argument("--jobs", type=int, default=1)
    pm.add_argument("--certify", action="store_true",
                    help="exact elimination for every rank (no modular "
                         "fast path)")
    pm.add_argument("--force", action="store_true",
                    help="override the feasibility guardrails")
    pm.add_argument("--out", default=None, help="write the result JSON here")
    common(pm)

    pv = sub.add_parser("verify", help="recompute and diff against the "
                                       "bundled reference tables")
    pv.add_argument("--scope", default="default",
                    help="census | structure | g3-full-nK | g3-trivial-nK | "
                         "g3-sign-nK | g2-nK | default")
    pv.add_argument("--route", choices=("total", "e1", "e1-pruned"),
                    default="e1-pruned")
    pv.add_argument("--jobs", type=int, default=1)
    common(pv)
    return ap


def _emit(data, fmt: str, human: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=1, sort_keys=True))
    else:
        print(human if human is not None
              else json.dumps(data, indent=1, sort_keys=True))


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except (JobError, UnsupportedGenus, GraphError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_ARGS
    except CacheCorruptionError as exc:
        print("cache corruption: %s" % exc, file=sys.stderr)
        return EXIT_CACHE_CORRUPTION
    except (ModelViolationError, AssemblyError, DegenerationError,
            EulerMismatchError, ActionViolationError, LinAlgError) as exc:
        print("invariant breach: %s" % exc, file=sys.stderr)
        return EXIT_INVARIANT_BREACH


def _dispatch(args) -> int:
    cache_dir = args.cache_dir or default_cache_dir()

    if args.command == "census":
        report = census_report(args.g, two_connected=not args.all_stable)
        lines = ["genus %d census (%s)" % (
            args.g, "2-connected" if not args.all_stable else "all stable")]
        lines.append("  classes: %d" % report["classes"])
        for e, c in report["by_edges"].items():
            lines.append("  %s edges: %d classes" % (e, c))
        for key, order in report["aut_orders"].items():
            lines.append("  %s |Aut| = %d -> %s"
                         % (key, order, ", ".join(report["arrows"][key]) or "-"))
        if "stable_weighted_types" in report:
            lines.append("  stable weighted graph types (with the edgeless "
                         "type): %d" % report["stable_weighted_types"])
        _emit(report, args.format, "\n".join(lines))
        return EXIT_OK

    if args.command == "conf":
        cache = CacheStore(cache_dir)
        reports = conf_report(args.g, args.n, args.graph, cache)
        lines = []
        for r in reports:
            dims = ", ".join("H_c^%s = %d" % (q, d)
                             for q, d in r["dims"].items())
            lines.append("%s: %s [euler %s]"
                         % (r["graph"], dims, r["euler_check"]))
            for q, terms in r["characters"].items():
                if terms:
                    desc = " + ".join(
                        ("%d*" % t["mult"] if t["mult"] != 1 else "")
                        + "V" + str(t["partition"]) for t in terms)
                    lines.append("   degree %s: %s" % (q, desc))
        _emit(reports, args.format, "\n".join(lines))
        return EXIT_OK

    if args.command == "compute":
        job = JobSpec(g=args.g, n=args.n, route=args.route,
                      isotypic=args.isotypic, cache_dir=cache_dir,
                      jobs=args.jobs, certify=args.certify, force=args.force)
        table = compute(job)
        payload = table.to_json()
        if args.out:
            with open(args.out, "w") as f:
                json.dump(payload, f, indent=1, sort_keys=True)
        _emit(payload, args.format, table.human_table())
        return EXIT_OK

    if args.command == "verify":
        ok, diffs = verify(args.scope, cache_dir, args.jobs, args.route)
        if ok:
            print("verify %s: pass" % args.scope)
            return EXIT_OK
        print("verify %s: FAIL (%d differences)" % (args.scope, len(diffs)))
        for d in diffs:
            print("  " + d)
        return EXIT_GOLDEN_MISMATCH

    raise JobError("unknown command")


if __name__ == "__main__":
    sys.exit(main())
