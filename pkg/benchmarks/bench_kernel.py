"""Compare the compiled and pure-Python echelon kernels.

Runs each workload in a fresh interpreter so the kernel is chosen at import:

    python3 benchmarks/bench_kernel.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "weyl l2=5 (1024 dims)": "from sl12fusion.fusion import fuse, weyl_spec; fuse(weyl_spec(1, 5))",
    "cv (3,2,1) (384 dims)": "from sl12fusion.fusion import fuse, cv_spec; fuse(cv_spec(0, (3, 2, 1)))",
    "sparse echelon 300x400": (
        "import random; from sl12fusion.kernel import Echelon; r = random.Random(7); e = Echelon(400)\n"
        "for _ in range(300):\n"
        "    v = [0] * 400\n"
        "    for j in r.sample(range(400), 3): v[j] = r.choice((-2, -1, 1, 2))\n"
        "    e.add(v)"
    ),
}

PROBE = """
import time, json
t = time.perf_counter()
{code}
dt = time.perf_counter() - t
from sl12fusion.kernel import COMPILED
print(json.dumps({{"seconds": dt, "compiled": COMPILED}}))
"""


def run(code: str, pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["SL12FUSION_PURE"] = "1"
    else:
        env.pop("SL12FUSION_PURE", None)
    out = subprocess.run([sys.executable, "-c", PROBE.format(code=code)], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':<26} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    for name, code in WORKLOADS.items():
        fast = min(run(code, False)["seconds"] for _ in range(args.repeat))
        probe = run(code, False)
        slow = min(run(code, True)["seconds"] for _ in range(args.repeat))
        label = f"{fast:.3f}s" if probe["compiled"] else "n/a"
        print(f"{name:<26} {label:>10} {slow:>9.3f}s {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()
