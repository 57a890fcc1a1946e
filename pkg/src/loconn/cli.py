"""Command-line interface.

Exit codes: 0 clean, 1 violation or finding, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Dict, List, Optional

from .catalog import CATALOG_ENTRIES, named_graph
from .cycles import girth_circumference, is_fully_cycle_extendable, is_weakly_pancyclic
from .enumeration import MAX_GENERATED_ORDER
from .graph import Graph, degree_profile, is_connected
from .graph6 import Graph6Error, parse_graph6, read_graph6_file, write_graph6
from .induced import find_induced
from .local import (
    is_locally_connected,
    is_locally_dirac,
    is_locally_ore,
    satisfies_common_neighbor_condition,
)
from .sweep import SweepReport, builtin_graphs, conjecture_search, resolve_jobs, verify_sweep
from .theorems import TheoremId, _jsonable, hypothesis_membership

CSV_HEADER = ["record", "theorem", "examined", "applicable", "verified", "violations",
              "graph6", "witness", "detail"]


class UsageError(Exception):
    pass


def check_graph(g: Graph) -> Dict[str, Any]:
    """Every condition flag and cycle statistic for one graph."""
    gc = girth_circumference(g)
    lc = is_locally_connected(g)
    ore = is_locally_ore(g)
    dirac = is_locally_dirac(g)
    cond = satisfies_common_neighbor_condition(g)
    fce = is_fully_cycle_extendable(g)
    dmin, dmax, seq = degree_profile(g)
    free = {}
    for label, pid, n in CATALOG_ENTRIES:
        w = find_induced(g, named_graph(pid, n))
        free[label] = {"free": w is None, "witness": None if w is None else list(w.mapping)}
    return {
        "graph6": write_graph6(g),
        "order": g.n,
        "size": g.edge_count(),
        "degrees": {"min": dmin, "max": dmax, "sequence": list(seq)},
        "connected": is_connected(g),
        "locally_connected": {"holds": lc.holds, "witness": lc.witness},
        "locally_ore": {"holds": ore.holds, "witness": _jsonable(ore.witness)},
        "locally_dirac": {"holds": dirac.holds, "witness": dirac.witness},
        "common_neighbor_condition": {"holds": cond.holds, "witness": _jsonable(cond.witness)},
        "two_min_degree_at_least_order": 2 * dmin >= g.n,
        "girth": gc[0] if gc else None,
        "circumference": gc[1] if gc else None,
        "acyclic": gc is None,
        "weakly_pancyclic": is_weakly_pancyclic(g),
        "fully_cycle_extendable": {"holds": fce.holds, "witness": _jsonable(fce.witness)},
        "induced_free": free,
        "hypotheses": [t.value for t in hypothesis_membership(g)],
    }


def catalog_listing() -> List[Dict[str, Any]]:
    out = []
    for label, pid, n in CATALOG_ENTRIES:
        g = named_graph(pid, n)
        out.append({"name": label, "id": pid.name, "graph6": write_graph6(g), "order": g.n,
                    "size": g.edge_count(), "degrees": list(degree_profile(g)[2])})
    return out


def _flag(v) -> str:
    return "yes" if v else "no"


def _format_check(reports: List[Dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(reports if len(reports) != 1 else reports[0], indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = ["graph6", "order", "size", "connected", "locally_connected", "locally_ore",
                "locally_dirac", "common_neighbor_condition", "two_min_degree_at_least_order",
                "girth", "circumference", "weakly_pancyclic", "fully_cycle_extendable", "hypotheses"]
        w.writerow(cols)
        for r in reports:
            row = []
            for c in cols:
                v = r[c]
                if isinstance(v, dict):
                    v = v["holds"]
                if isinstance(v, list):
                    v = " ".join(v)
                row.append(v)
            w.writerow(row)
        return buf.getvalue().rstrip("\n")
    blocks = []
    for r in reports:
        lines = [f"graph6: {r['graph6']}  order {r['order']}  size {r['size']}",
                 f"degrees: min {r['degrees']['min']} max {r['degrees']['max']} {r['degrees']['sequence']}"]
        lines.append(f"connected: {_flag(r['connected'])}")
        for key in ("locally_connected", "locally_ore", "locally_dirac", "common_neighbor_condition",
                    "fully_cycle_extendable"):
            rep = r[key]
            extra = "" if rep["holds"] else f" (witness {rep['witness']})"
            lines.append(f"{key.replace('_', ' ')}: {_flag(rep['holds'])}{extra}")
        lines.append(f"2*delta >= n: {_flag(r['two_min_degree_at_least_order'])}")
        if r["acyclic"]:
            lines.append("cycles: none (acyclic; weakly pancyclic holds vacuously)")
        else:
            lines.append(f"girth {r['girth']}, circumference {r['circumference']}")
        lines.append(f"weakly pancyclic: {_flag(r['weakly_pancyclic'])}")
        present = [k for k, v in r["induced_free"].items() if not v["free"]]
        lines.append("contains induced: " + (", ".join(present) if present else "none of the catalog"))
        lines.append("theorem hypotheses met: " + (" ".join(r["hypotheses"]) or "none"))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def format_report(report: SweepReport, fmt: str) -> str:
    d = report.to_dict()
    if fmt == "json":
        return json.dumps(d, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for name, c in d["counters"].items():
            w.writerow(["counter", name, c["examined"], c["applicable"], c["verified"],
                        c["violations"], "", "", ""])
        for name, ok in d["checks"].items():
            w.writerow(["check", name, "", "", "", "", "", "", "pass" if ok else "FAIL"])
        for f in d["findings"]:
            w.writerow(["finding", f["theorem"], "", "", "", "", f["graph6"],
                        json.dumps(f["witness"]), f["detail"]])
        return buf.getvalue().rstrip("\n")
    lines = [f"{d['command']}: " + " ".join(f"{k}={v}" for k, v in d["config"].items())]
    lines.append(f"{'theorem':<10} {'examined':>9} {'applicable':>10} {'verified':>9} {'violations':>10}")
    for name, c in d["counters"].items():
        lines.append(f"{name:<10} {c['examined']:>9} {c['applicable']:>10} {c['verified']:>9} "
                     f"{c['violations']:>10}")
    for name, ok in d["checks"].items():
        lines.append(f"check {'pass' if ok else 'FAIL'}: {name}")
    for k, v in d["stats"].items():
        lines.append(f"{k}: {v}")
    if d["findings"]:
        lines.append("findings:")
        for f in d["findings"]:
            lines.append(f"  {f['theorem']} {f['graph6']} witness={json.dumps(f['witness'])} {f['detail']}")
    else:
        lines.append("findings: none")
    lines.append(f"-- wall time {d['footer']['wall_time_s']}s, backend {d['footer']['backend']}")
    return "\n".join(lines)


def _read_inputs(arg: str) -> List[str]:
    if arg.startswith("@"):
        try:
            graphs = read_graph6_file(arg[1:])
        except OSError as exc:
            raise UsageError(f"cannot read {arg[1:]}: {exc}") from None
        return [write_graph6(g) for g in graphs]
    parse_graph6(arg)
    return [arg.rstrip("\r\n")]


def _source_lines(source: Optional[str], n_min: int, n_max: int) -> List[str]:
    if source is None or source == "builtin":
        if not 1 <= n_max <= MAX_GENERATED_ORDER:
            raise UsageError(f"--n-max must lie in 1..{MAX_GENERATED_ORDER} for the built-in generator")
        return builtin_graphs(n_min, n_max)
    if not source.startswith("@"):
        raise UsageError("--source must be 'builtin' or @path")
    lines = _read_inputs(source)
    return [ln for ln in lines if n_min <= parse_graph6(ln).n <= n_max]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker processes (default: $LOCONN_JOBS, else all cores)")

    p = argparse.ArgumentParser(prog="loconn", parents=[common],
                                description="Local connectivity and cycle extendability checks")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="report every property of a graph6 graph")
    c.add_argument("graph", help="graph6 string or @file")

    v = sub.add_parser("verify", parents=[common], help="sweep theorems over small graphs")
    v.add_argument("--theorem", default="all",
                   help="theorem id (" + ", ".join(t.value for t in TheoremId) + ") or all")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--n-min", type=int, default=3)
    v.add_argument("--source", default="builtin", help="builtin or @graph6-file")

    s = sub.add_parser("search", parents=[common], help="hunt counterexamples to a conjecture")
    s.add_argument("--conjecture", choices=["ryjacek"], default="ryjacek")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--source", default="builtin", help="builtin or @graph6-file")

    sub.add_parser("catalog", parents=[common], help="list the named graphs")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "text")
    try:
        jobs = resolve_jobs(getattr(args, "jobs", None))
        if args.command == "check":
            reports = [check_graph(parse_graph6(ln)) for ln in _read_inputs(args.graph)]
            print(_format_check(reports, fmt))
            return 0
        if args.command == "catalog":
            rows = catalog_listing()
            if fmt == "json":
                print(json.dumps(rows, indent=2))
            elif fmt == "csv":
                print("name,id,graph6,order,size,degrees")
                for r in rows:
                    print(f"{r['name']},{r['id']},{r['graph6']},{r['order']},{r['size']},"
                          f"{' '.join(map(str, r['degrees']))}")
            else:
                for r in rows:
                    print(f"{r['name']:<16} {r['graph6']:<8} order {r['order']:<2} size {r['size']:<3} "
                          f"degrees {r['degrees']}")
            return 0
        if args.command == "verify":
            if args.theorem == "all":
                theorems = list(TheoremId)
            else:
                try:
                    theorems = [TheoremId(args.theorem)]
                except ValueError:
                    raise UsageError(f"unknown theorem id {args.theorem!r}") from None
            lines = _source_lines(args.source, args.n_min, args.n_max)
            config = {"theorem": args.theorem, "n_min": args.n_min, "n_max": args.n_max,
                      "source": args.source, "graphs": len(lines)}
            report = verify_sweep(lines, theorems, jobs, config)
        else:
            lines = _source_lines(args.source, args.n_min, args.n_max)
            config = {"conjecture": args.conjecture, "n_min": args.n_min, "n_max": args.n_max,
                      "source": args.source, "graphs": len(lines)}
            report = conjecture_search(lines, jobs, config)
        print(format_report(report, fmt))
        return 0 if report.clean else 1
    except (UsageError, Graph6Error, ValueError) as exc:
        print(f"loconn: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
