#!/usr/bin/env python3
"""Build, verify, and cache every constructible design on a small grid.

Usage: build_catalog.py CACHE_DIR [N_MAX] [T_MAX] [M_MAX]  (defaults 9 10 6)

Every design that the planner can execute within a fixed per-target budget
is written into CACHE_DIR (the same store `forge --cache-dir` reads), and a
one-line outcome is printed per target.
"""

import sys
import time

sys.path.insert(0, "src")

from designforge.engine import (  # noqa: E402
    PlanNotExecutable,
    Status,
    execute_plan,
    plan,
)
from designforge.search import SearchBudget, cache_put  # noqa: E402


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__, file=sys.stderr)
        return 2
    cache_dir = sys.argv[1]
    n_max = int(sys.argv[2]) if len(sys.argv) > 2 else 9
    t_max = int(sys.argv[3]) if len(sys.argv) > 3 else 10
    m_max = int(sys.argv[4]) if len(sys.argv) > 4 else 6
    budget = SearchBudget(max_nodes=2_000_000, wall_s=20.0)
    built = skipped = 0
    for n in range(3, n_max + 1):
        for t in range(3, t_max + 1):
            for m in range(1, m_max + 1):
                node = plan(n, m, t)
                if node.status is not Status.EXISTS:
                    continue
                t0 = time.monotonic()
                try:
                    res = execute_plan(node, budget=budget,
                                       cache_dir=cache_dir)
                except PlanNotExecutable as exc:
                    print(f"({n},{m},{t})  refused: {exc}")
                    continue
                if res.design is None:
                    skipped += 1
                    print(f"({n},{m},{t})  skipped: {'; '.join(res.skipped)}")
                    continue
                cache_put(res.design, cache_dir)
                built += 1
                print(f"({n},{m},{t})  {len(res.design.base_blocks)} blocks "
                      f"({time.monotonic() - t0:.1f}s)")
    print(f"\nbuilt {built}, skipped {skipped}; catalog in {cache_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
