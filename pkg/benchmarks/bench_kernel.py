"""Compare the compiled and pure-Python feasibility kernels.

Times ``branch_and_bound`` on seeded random systems shaped like the cone
membership queries (up to 3 rows, up to 6 columns, every column capped by
its integer hull box).  Both backends must return identical results.
"""

from __future__ import annotations

import argparse
import random
import time

from qoab import _kernel_py
from qoab.exactlin import IntMatrix, integer_hull_box, solve_integer_linear


def make_cases(n_cases: int, seed: int) -> list:
    rng = random.Random(seed)
    cases = []
    while len(cases) < n_cases:
        m, n = rng.randint(1, 3), rng.randint(2, 6)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        b = [rng.randint(-10, 10) for _ in range(m)]
        A = IntMatrix.from_rows(rows)
        if solve_integer_linear(A, b) is None:
            continue
        box = integer_hull_box(A, b)
        if box is None:
            continue
        cases.append((rows, b, box))
    return cases


def run(impl, cases, repeats: int) -> tuple[float, list]:
    best = float("inf")
    results = []
    for _ in range(repeats):
        start = time.perf_counter()
        results = [impl.branch_and_bound(rows, b, box, 10 ** 9) for rows, b, box in cases]
        best = min(best, time.perf_counter() - start)
    return best, results


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", type=int, default=300)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    cases = make_cases(args.cases, args.seed)
    t_py, r_py = run(_kernel_py, cases, args.repeats)
    print(f"python  {t_py * 1e3:9.1f} ms  ({len(cases)} systems)")
    try:
        from qoab import _kernel
    except ImportError:
        print("cython  not built (install with Cython available to compile it)")
        return
    t_cy, r_cy = run(_kernel, cases, args.repeats)
    print(f"cython  {t_cy * 1e3:9.1f} ms  speedup {t_py / t_cy:.1f}x")
    if r_py != r_cy:
        raise SystemExit("backends disagree")
    nodes = sum(n for _, n in r_py)
    feasible = sum(1 for w, _ in r_py if w is not None)
    print(f"agree   {feasible} feasible, {nodes} search nodes in total")


if __name__ == "__main__":
    main()
