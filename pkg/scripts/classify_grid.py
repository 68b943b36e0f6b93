#!/usr/bin/env python3
"""Walk a parameter grid and tabulate the planner's verdicts.

Usage: classify_grid.py [N_MAX] [T_MAX] [M_MAX]   (defaults 30 30 12)

Prints one line per (n, m, t) whose verdict is not a plain necessity
failure, then a verdict histogram.
"""

import sys

sys.path.insert(0, "src")

from designforge.core import necessary_conditions  # noqa: E402
from designforge.engine import Status, plan  # noqa: E402


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 30
    t_max = int(sys.argv[2]) if len(sys.argv) > 2 else 30
    m_max = int(sys.argv[3]) if len(sys.argv) > 3 else 12
    counts = {s: 0 for s in Status}
    for n in range(3, n_max + 1):
        for t in range(3, t_max + 1):
            for m in range(1, m_max + 1):
                node = plan(n, m, t)
                counts[node.status] += 1
                if node.status is Status.NOT_EXISTS:
                    if not necessary_conditions(n, m, t).ok:
                        continue  # plain necessity failures are noise
                    print(f"({n:>2},{m:>2},{t:>2})  not-exists  {node.reason}")
                elif node.status is Status.OPEN:
                    print(f"({n:>2},{m:>2},{t:>2})  open        {node.reason}")
    total = sum(counts.values())
    print(f"\n{total} triples: " + ", ".join(
        f"{s.value}={c}" for s, c in counts.items()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
