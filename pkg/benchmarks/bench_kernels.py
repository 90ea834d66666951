"""Time the cycle detector with numba kernels against the interpreted fallback.

Each backend runs in its own subprocess because the backend is chosen from
PLANTURAN_DISABLE_NUMBA at import time.

    python3 benchmarks/bench_kernels.py --k 13 --sizes 60 120 240
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = """
import json, sys, time
from planturan.constructions import counterexample_Ck
from planturan.detectors import contains_cycle_k
k, n, reps = map(int, sys.argv[1:4])
g = counterexample_Ck(k, n)
contains_cycle_k(g, k)  # warm-up (compilation or cache load)
t = time.perf_counter()
for _ in range(reps):
    found = contains_cycle_k(g, k)
print(json.dumps({"n": n, "edges": g.edge_count(), "found": found,
                  "seconds": (time.perf_counter() - t) / reps}))
"""


def run(k, n, reps, disable):
    env = dict(os.environ)
    env["PLANTURAN_DISABLE_NUMBA"] = "1" if disable else "0"
    out = subprocess.run([sys.executable, "-c", CHILD, str(k), str(n), str(reps)],
                         env=env, check=True, capture_output=True, text=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=13)
    ap.add_argument("--sizes", type=int, nargs="+", default=[60, 120, 240])
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()
    print(f"{'n':>6} {'edges':>6} {'numba s':>10} {'python s':>10} {'speedup':>8}")
    for n in args.sizes:
        fast = run(args.k, n, args.reps, disable=False)
        slow = run(args.k, n, 1, disable=True)
        assert fast["found"] == slow["found"]
        print(f"{n:>6} {fast['edges']:>6} {fast['seconds']:>10.4f} {slow['seconds']:>10.4f} "
              f"{slow['seconds'] / max(fast['seconds'], 1e-9):>8.1f}")


if __name__ == "__main__":
    main()
