"""Benchmark the numba rotation kernels against the pure-numpy fallback.

Runs a fixed Jacobi workload (random Hamiltonian, a few sweeps) in two child
processes, one per backend, and reports wall times.  Usage:

    python3 benchmarks/bench_backends.py [--n 40] [--sweeps 5]
"""
import argparse
import os
import subprocess
import sys
from pathlib import Path

SRC = str(Path(__file__).resolve().parent.parent / "src")

_WORKLOAD = r"""
import json
import time

import structnorm as sn
from structnorm import _kernels

n = {n}
sweeps = {sweeps}
a = sn.gen_structured(sn.StructureTag.HAMILTONIAN, n, 1234)
config = sn.SolverConfig(max_sweeps=sweeps, tol=1e-30, trace=False)
warmup = sn.gen_structured(sn.StructureTag.HAMILTONIAN, 4, 0)
sn.solve(warmup, sn.StructureTag.HAMILTONIAN,
         sn.SolverConfig(max_sweeps=1, trace=False))  # compile the kernels
t0 = time.perf_counter()
res = sn.solve(a, sn.StructureTag.HAMILTONIAN, config)
elapsed = time.perf_counter() - t0
print(json.dumps({{"backend": _kernels.BACKEND, "seconds": elapsed,
                   "sweeps": res.sweeps, "diag_norm_sq": res.diag_norm_sq}}))
"""


def run_backend(pure_numpy: bool, n: int, sweeps: int) -> dict:
    import json

    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    env["STRUCTNORM_PURE_NUMPY"] = "1" if pure_numpy else "0"
    proc = subprocess.run(
        [sys.executable, "-c", _WORKLOAD.format(n=n, sweeps=sweeps)],
        capture_output=True, text=True, env=env, check=True)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=40,
                        help="half-dimension of the 2n x 2n fixture")
    parser.add_argument("--sweeps", type=int, default=5)
    args = parser.parse_args()

    results = [run_backend(False, args.n, args.sweeps),
               run_backend(True, args.n, args.sweeps)]
    print(f"workload: random hamiltonian 2n x 2n, n={args.n}, "
          f"{args.sweeps} sweeps")
    for r in results:
        print(f"  {r['backend']:>6}: {r['seconds']:8.3f} s "
              f"(diag_norm_sq {r['diag_norm_sq']:.6f})")
    if results[0]["backend"] == results[1]["backend"]:
        print("note: numba unavailable, both runs used the numpy fallback")
    else:
        speedup = results[1]["seconds"] / results[0]["seconds"]
        print(f"  numba speedup over numpy: {speedup:.2f}x")
        drift = abs(results[0]["diag_norm_sq"] - results[1]["diag_norm_sq"])
        print(f"  objective agreement: |delta| = {drift:.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
