"""Wall-clock and counter scaling of the exact selector on random instances.

    python3 scripts/dp_scaling.py --sizes 100 200 400 800 --k 10
"""

import argparse
import time

import numpy as np

from solowline import LineInstance, solve_with_table, state_transition_counts


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400, 800])
    ap.add_argument("--k", type=int, default=10)
    ap.add_argument("--beta", type=float, default=1.0)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    print(f"{'n':>6}{'states':>10}{'transitions':>14}{'seconds':>10}{'D':>14}")
    for n in args.sizes:
        inst = LineInstance.dedupe_then_build(rng.uniform(0.0, 2.0, size=n))
        t0 = time.perf_counter()
        sel, table = solve_with_table(inst, args.k, args.beta)
        dt = time.perf_counter() - t0
        assert (table.states, table.transitions) == tuple(state_transition_counts(len(inst), args.k).values())
        print(f"{len(inst):>6}{table.states:>10}{table.transitions:>14}{dt:>10.3f}{sel.value.value:>14.10f}")


if __name__ == "__main__":
    main()
