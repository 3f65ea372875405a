#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same workloads through both backends in subprocesses (the
backend is chosen at import time via QAPPELL_KERNELS) and prints a
timing table.  Workloads:

  build    full family construction at the given degree
  core     lowering + k-fold + numbers + slice checks
  search   recurrence variant search (full space)

Usage:
  python benchmarks/bench_kernels.py [--degree 16] [--q 2/3] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from qappell import QContext, make_family
from qappell.kernels import BACKEND
from qappell.verify import (ResidualEngine, check_kfold, check_lowering,
                            check_numbers, check_slice_1d,
                            search_recurrence_variants)

degree = int(sys.argv[1])
q = sys.argv[2]
repeat = int(sys.argv[3])

def best(fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)

ctx = QContext(q)
timings = {"backend": BACKEND}
timings["build"] = best(lambda: make_family("bernoulli", ctx, degree))
fam = make_family("bernoulli", ctx, degree)

def core():
    assert check_lowering(fam).passed
    assert check_kfold(fam).passed
    assert check_numbers(fam).passed
    assert check_slice_1d(fam).passed

timings["core"] = best(core)
timings["search"] = best(
    lambda: search_recurrence_variants(fam, engine=ResidualEngine(fam))
)
print(json.dumps(timings))
"""


def run_backend(backend: str, degree: int, q: str, repeat: int) -> dict:
    env = dict(os.environ, QAPPELL_KERNELS=backend)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(degree), q, str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=16)
    ap.add_argument("--q", default="2/3")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    results = {}
    for backend in ("py", "c"):
        try:
            results[backend] = run_backend(backend, args.degree, args.q, args.repeat)
        except subprocess.CalledProcessError as exc:
            sys.stderr.write(f"{backend} backend failed:\n{exc.stderr}\n")
            if backend == "c":
                sys.stderr.write("is the extension built? (pip install -e .)\n")
            return 1

    print(f"degree={args.degree} q={args.q} best-of-{args.repeat}")
    print(f"{'workload':<10} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>9}")
    for work in ("build", "core", "search"):
        py = results["py"][work]
        cy = results["c"][work]
        print(f"{work:<10} {py:>12.4f} {cy:>13.4f} {py / cy:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
