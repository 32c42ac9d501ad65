#!/usr/bin/env python3
"""Reproduce the minimal-certificate-degree grid for complete graphs.

For each k, tests K_{k+1} for non-k-colorability over small prime fields by
invoking the `cert` CLI verb and reports the minimal certificate degree per
field.  The quick cells finish in seconds; pass --slow to add the heavy
cells (minutes to hours).  Cliques K_8 and beyond are out of desk range and
are deliberately not listed.

Usage: python scripts/min_degree_grid.py [--slow] [--k K] [--p P]
"""

import argparse
import json
import subprocess
import sys
import tempfile
import time
from pathlib import Path

QUICK = [(3, 2), (3, 5), (3, 7), (4, 3), (4, 5), (4, 7), (5, 2), (5, 3)]
SLOW = [(5, 7), (6, 5), (6, 7)]


def dimacs_clique(n: int) -> str:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    lines = [f"p edge {n} {len(edges)}"] + [f"e {u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def run_cell(graph_path: str, k: int, p: int) -> tuple[str, float]:
    cmd = [
        sys.executable, "-m", "chromideal", "cert",
        graph_path, "--k", str(k), "--p", str(p), "--d-max", str(3 * k + 1),
    ]
    start = time.monotonic()
    proc = subprocess.run(cmd, capture_output=True, text=True)
    elapsed = time.monotonic() - start
    if proc.returncode == 0:
        degree = json.loads(proc.stdout)["degree"]
        return str(degree), elapsed
    if proc.returncode == 1:
        return "none<=bound", elapsed
    raise RuntimeError(f"cert failed ({proc.returncode}): {proc.stderr.strip()}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--slow", action="store_true", help="include the heavy cells")
    parser.add_argument("--k", type=int, help="restrict to one color count")
    parser.add_argument("--p", type=int, help="restrict to one field modulus")
    args = parser.parse_args()

    cells = QUICK + (SLOW if args.slow else [])
    cells = [(k, p) for k, p in cells
             if (args.k is None or k == args.k) and (args.p is None or p == args.p)]
    if not cells:
        print("nothing to do for this filter", file=sys.stderr)
        return 2

    print(f"{'graph':>6} {'k':>2} {'field':>6} {'min degree':>11} {'seconds':>9}")
    with tempfile.TemporaryDirectory() as tmp:
        for k, p in cells:
            n = k + 1
            graph_path = Path(tmp) / f"k{n}.col"
            graph_path.write_text(dimacs_clique(n))
            degree, elapsed = run_cell(str(graph_path), k, p)
            print(f"{'K_' + str(n):>6} {k:>2} {'GF(' + str(p) + ')':>6} "
                  f"{degree:>11} {elapsed:>9.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
