#!/usr/bin/env python3
"""Compare the compiled search kernel against the pure-Python fallback.

Runs identical search programs through both backends and reports wall time
and speedup.  Workloads:

  oracle-trefoil      exhaustive 24^3 scan, matrix group target
  oracle-fig8         exhaustive 24^4 scan (skipped unless --full)
  backtracking-sweep  dihedral counting sweep over the whole catalog
  backtracking-6_1    the largest catalog knot, matrix group target

Usage: python benchmarks/bench_kernels.py [--full] [--json] [--repeats N]
"""

from __future__ import annotations

import argparse
import json
import math
import time

from twistspin import _searchkernel_py
from twistspin.catalog import CATALOG, get_knot
from twistspin.enumerator import _compile_backtracking, _compile_oracle
from twistspin.groups import DihedralGroup, Sl2z3Group
from twistspin.presentations import build_bts

try:
    from twistspin import _searchkernel

    COMPILED = _searchkernel.run_program
except ImportError:
    COMPILED = None

PURE = _searchkernel_py.run_program


def kernel_args(group, program, witness_limit=0):
    return (
        group.mul_table,
        group.inv_table,
        group.identity_index,
        program.init_vals,
        program.kinds,
        program.args,
        program.data_off,
        program.data_len,
        program.data,
        witness_limit,
    )


def workload_oracle(knot: str):
    group = Sl2z3Group()
    bts = build_bts(get_knot(knot), 2, 1)
    program = _compile_oracle(bts, group, group.minus_identity.index)
    return [kernel_args(group, program)]


def workload_backtracking_sweep():
    jobs = []
    for k in range(1, 13):
        group = DihedralGroup(k)
        h = group.central_rotation.index
        for name in CATALOG:
            pres = get_knot(name)
            for m in range(-12, 13):
                if abs(m) >= 2 and math.gcd(m, 1) != 1:
                    continue
                bts = build_bts(pres, m, 1)
                jobs.append(kernel_args(group, _compile_backtracking(bts, group, h)))
    return jobs


def workload_backtracking_6_1():
    group = Sl2z3Group()
    jobs = []
    for m in range(-12, 13):
        bts = build_bts(get_knot("6_1"), m, 1)
        jobs.append(
            kernel_args(group, _compile_backtracking(bts, group, group.minus_identity.index))
        )
    return jobs


def run_jobs(kernel, jobs) -> tuple[float, int]:
    t0 = time.perf_counter()
    total = 0
    for job in jobs:
        count, _ = kernel(*job)
        total += count
    return time.perf_counter() - t0, total


def bench(name: str, jobs, repeats: int) -> dict:
    row: dict = {"workload": name, "jobs": len(jobs)}
    pure_best = min(run_jobs(PURE, jobs)[0] for _ in range(repeats))
    counts = run_jobs(PURE, jobs)[1]
    row["pure_ms"] = round(pure_best * 1e3, 2)
    row["solutions"] = counts
    if COMPILED is not None:
        compiled_best = min(run_jobs(COMPILED, jobs)[0] for _ in range(repeats))
        compiled_counts = run_jobs(COMPILED, jobs)[1]
        assert compiled_counts == counts, "backends disagree"
        row["compiled_ms"] = round(compiled_best * 1e3, 2)
        row["speedup"] = round(pure_best / compiled_best, 1) if compiled_best else None
    return row


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the 24^4 oracle scan")
    parser.add_argument("--json", action="store_true", dest="as_json")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    workloads = [("oracle-trefoil", workload_oracle("trefoil"))]
    if args.full:
        workloads.append(("oracle-fig8", workload_oracle("figure-eight")))
    workloads.append(("backtracking-sweep", workload_backtracking_sweep()))
    workloads.append(("backtracking-6_1", workload_backtracking_6_1()))

    rows = [bench(name, jobs, args.repeats) for name, jobs in workloads]
    if args.as_json:
        print(json.dumps({"compiled_available": COMPILED is not None, "results": rows}, indent=2))
        return 0

    print(f"compiled kernel available: {COMPILED is not None}")
    header = f"{'workload':22s} {'jobs':>5s} {'solutions':>9s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for row in rows:
        compiled = f"{row['compiled_ms']:.1f} ms" if "compiled_ms" in row else "-"
        speedup = f"x{row['speedup']}" if row.get("speedup") else "-"
        print(
            f"{row['workload']:22s} {row['jobs']:5d} {row['solutions']:9d} "
            f"{row['pure_ms']:8.1f} ms {compiled:>10s} {speedup:>8s}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
