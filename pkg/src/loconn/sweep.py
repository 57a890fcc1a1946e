"""Exhaustive sweeps: theorem verification and the weak-pancyclicity conjecture search.

Work is fanned out over worker processes in contiguous chunks and merged
back in input order, so reports do not depend on the number of workers.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Dict, List, Optional, Sequence

from . import kernels
from .cycles import cycle_spectrum, is_weakly_pancyclic, missing_cycle_orders
from .enumeration import canonical_form, enumerate_graphs
from .graph import Graph, is_connected
from .graph6 import parse_graph6, write_graph6
from .local import is_locally_connected
from .theorems import (
    Status,
    TheoremId,
    describe_witness,
    proposition_lattice_checks,
    verify_all,
)

JOBS_ENV = "LOCONN_JOBS"


def report_schema() -> Dict[str, Any]:
    """JSON schema that every serialized :class:`SweepReport` satisfies."""
    return json.loads(resources.files("loconn").joinpath("data/sweep_report.schema.json").read_text())


def resolve_jobs(flag: Optional[int]) -> int:
    if flag is not None:
        jobs = flag
    elif os.environ.get(JOBS_ENV):
        jobs = int(os.environ[JOBS_ENV])
    else:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    return jobs


@dataclass
class Counter:
    examined: int = 0
    applicable: int = 0
    verified: int = 0
    violations: int = 0


@dataclass
class SweepReport:
    command: str
    config: Dict[str, Any]
    counters: Dict[str, Counter] = field(default_factory=dict)
    findings: List[Dict[str, Any]] = field(default_factory=list)
    checks: Dict[str, bool] = field(default_factory=dict)
    stats: Dict[str, int] = field(default_factory=dict)
    wall_time_s: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.findings and all(self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "config": self.config,
            "counters": {k: vars(c) for k, c in self.counters.items()},
            "checks": self.checks,
            "stats": self.stats,
            "findings": self.findings,
            "clean": self.clean,
            "footer": {"wall_time_s": round(self.wall_time_s, 3), "backend": kernels.BACKEND},
        }


def builtin_graphs(n_min: int, n_max: int) -> List[str]:
    """graph6 lines of every connected graph with ``n_min <= n <= n_max``."""
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(write_graph6(g) for g in enumerate_graphs(n, connected_only=True))
    return out


def _canonical_line(g: Graph) -> str:
    return write_graph6(canonical_form(g)) if g.n <= kernels.MAX_CANON_ORDER else write_graph6(g)


def _verify_chunk(args):
    lines, names = args
    theorems = [TheoremId(nm) for nm in names]
    out = []
    for line in lines:
        g = parse_graph6(line)
        verdicts = verify_all(g, theorems)
        row = {}
        for t, v in verdicts.items():
            entry = [v.status.value]
            if v.status is Status.VIOLATION:
                found = describe_witness(g, v)
                found["canonical_graph6"] = _canonical_line(g)
                entry.append(found)
            row[t.value] = entry
        out.append(row)
    return out


def _search_chunk(lines):
    out = []
    for line in lines:
        g = parse_graph6(line)
        if g.n < 1 or not is_connected(g) or not is_locally_connected(g):
            out.append(None)
            continue
        orders = cycle_spectrum(g)
        hit = None
        if not is_weakly_pancyclic(g):
            hit = {"graph6": line, "canonical_graph6": _canonical_line(g), "witness": list(missing_cycle_orders(g)),
                   "detail": f"girth {orders[0]}, circumference {orders[-1]}, missing cycle orders"}
        out.append({"acyclic": not orders, "hit": hit})
    return out


def _chunks(seq: Sequence[str], size: int):
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def _run(fn, chunks, jobs):
    if jobs == 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, chunks))


def verify_sweep(lines: Sequence[str], theorems: Sequence[TheoremId], jobs: int = 1,
                 config: Optional[Dict[str, Any]] = None) -> SweepReport:
    start = time.perf_counter()
    names = [t.value for t in theorems]
    report = SweepReport("verify", dict(config or {}))
    report.counters = {nm: Counter() for nm in names}
    chunk_size = max(1, min(500, len(lines) // (4 * jobs) or 1))
    results = _run(_verify_chunk, [(c, names) for c in _chunks(list(lines), chunk_size)], jobs)
    for chunk in results:
        for row in chunk:
            for nm in names:
                entry = row[nm]
                cnt = report.counters[nm]
                cnt.examined += 1
                if entry[0] == Status.NOT_APPLICABLE.value:
                    continue
                cnt.applicable += 1
                if entry[0] == Status.VERIFIED.value:
                    cnt.verified += 1
                else:
                    cnt.violations += 1
                    report.findings.append({"theorem": nm, **entry[1]})
    report.findings.sort(key=lambda f: names.index(f["theorem"]))
    if any(t in (TheoremId.P1, TheoremId.P2) for t in theorems):
        report.checks = proposition_lattice_checks()
    report.wall_time_s = time.perf_counter() - start
    return report


def conjecture_search(lines: Sequence[str], jobs: int = 1,
                      config: Optional[Dict[str, Any]] = None) -> SweepReport:
    """Connected locally connected graphs that are not weakly pancyclic."""
    start = time.perf_counter()
    report = SweepReport("search", dict(config or {}))
    cnt = Counter()
    acyclic = 0
    chunk_size = max(1, min(500, len(lines) // (4 * jobs) or 1))
    for chunk in _run(_search_chunk, _chunks(list(lines), chunk_size), jobs):
        for row in chunk:
            cnt.examined += 1
            if row is None:
                continue
            cnt.applicable += 1
            acyclic += row["acyclic"]
            if row["hit"] is None:
                cnt.verified += 1
            else:
                cnt.violations += 1
                report.findings.append({"theorem": "ryjacek", **row["hit"]})
    report.counters = {"ryjacek": cnt}
    report.stats["acyclic_locally_connected"] = acyclic
    report.wall_time_s = time.perf_counter() - start
    return report
