"""Timing comparison of the numba and pure-Python kernel backends.

Run as a script:

    python benchmarks/bench_kernels.py

The backend is fixed at import time by environment variable, so the script
re-executes itself once with SATFORGE_BACKEND=python to collect the fallback
numbers, then prints both columns side by side.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
import time


def _workload():
    from satforge import kernels
    from satforge.construction import build_construction
    from satforge.graph import Graph

    cases = []
    for n in (12, 18, 24, 33):
        g, _ = build_construction(n)
        cases.append((f"saturation_scan n={n}", lambda g=g: kernels.saturation_scan(g.adj, g.n, 6)))
    dense = Graph.complete(14)
    cases.append(("has_cycle k=7 K14", lambda: kernels.has_cycle(dense.adj, dense.n, 7)))
    g24, _ = build_construction(24)
    cases.append(("has_path len=5 x400", lambda: [
        kernels.has_path(g24.adj, g24.n, u, v, 5)
        for u in range(20) for v in range(u + 1, 20)
    ]))
    return kernels.BACKEND, cases


def run_backend():
    backend, cases = _workload()
    results = {}
    for name, fn in cases:
        fn()  # warm up (jit compilation for the numba backend)
        reps = 3
        best = min(_time_once(fn) for _ in range(reps))
        results[name] = best
    return backend, results


def _time_once(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    if os.environ.get("_BENCH_CHILD"):
        backend, results = run_backend()
        print(json.dumps({"backend": backend, "results": results}))
        return

    rows = {}
    for backend_env in ("numba", "python"):
        env = dict(os.environ, _BENCH_CHILD="1", SATFORGE_BACKEND=backend_env)
        out = subprocess.run([sys.executable, __file__], env=env,
                             capture_output=True, text=True, check=True)
        payload = json.loads(out.stdout.strip().splitlines()[-1])
        rows[payload["backend"]] = payload["results"]

    names = list(next(iter(rows.values())))
    cols = list(rows)
    print(f"{'case':<28}" + "".join(f"{c:>12}" for c in cols) + f"{'speedup':>10}")
    for name in names:
        times = [rows[c][name] for c in cols]
        ratio = times[-1] / times[0] if times[0] > 0 else float("inf")
        cells = "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        print(f"{name:<28}{cells}{ratio:>9.1f}x")


if __name__ == "__main__":
    main()
