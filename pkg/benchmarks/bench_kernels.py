#!/usr/bin/env python3
"""Compare the compiled LR kernel with the plain-Python fallback.

Each variant runs in its own interpreter, since the backend is picked at
import time from SCHURPOS_DISABLE_NUMBA.  The kernel is called directly so the
product memo does not hide repeated work.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = """
import json, sys, time
from schurpos import _kernels
from schurpos.partitions import Partition

cases = [((3, 2, 1), (2, 1)), ((4, 3, 2, 1), (3, 2, 1)), ((5, 3, 2, 1), (4, 2, 1)),
         ((6, 4, 3, 2, 1), (4, 3, 2, 1))]

def run():
    leaves = 0
    for mu, nu in cases:
        R, C = len(mu) + len(nu), len(nu)
        n, _ = _kernels.run_lr(mu + (0,) * len(nu), (0,) * R, nu, R, C, False, True)
        leaves += n
    return leaves

t0 = time.perf_counter()
leaves = run()  # includes jit compilation or cache load
first = time.perf_counter() - t0
best = float("inf")
for _ in range(int(sys.argv[1])):
    t0 = time.perf_counter()
    run()
    best = min(best, time.perf_counter() - t0)
print(json.dumps({"numba": _kernels.USE_NUMBA, "leaves": leaves, "first": first, "best": best}))
"""


def measure(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("SCHURPOS_DISABLE_NUMBA", None)
    if disable:
        env["SCHURPOS_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = measure(False, args.repeat), measure(True, args.repeat)
    if fast["leaves"] != slow["leaves"]:
        sys.exit(f"backends disagree: {fast['leaves']} vs {slow['leaves']} leaves")
    print(f"{'backend':<10}{'first call':>12}{'best':>12}")
    for name, r in (("numba" if fast["numba"] else "python", fast), ("python", slow)):
        print(f"{name:<10}{r['first']:>11.3f}s{r['best']:>11.4f}s")
    print(f"leaves per run: {fast['leaves']}, speedup {slow['best'] / fast['best']:.1f}x")


if __name__ == "__main__":
    main()
