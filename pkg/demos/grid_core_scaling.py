"""Compare the two ways of building a grid core matrix.

The generic construction runs one forcing pass per ZFS column, O(mk) total.
On an n×n grid that is O(n^4); the chase-power route needs only O(log n)
dense products of order 2n on packed words.
"""

import time

from zfsolve import GridSpec, compute_core, forcing_plan, grid_core, \
    grid_matrix, pattern_graph


def main():
    print(f"{'n':>5} {'generic_s':>10} {'chase_s':>9} {'identical':>10}")
    for n in (16, 32, 64, 128):
        g = grid_matrix(GridSpec(n, n))
        plan = forcing_plan(pattern_graph(g), range(n))
        t0 = time.perf_counter()
        generic = compute_core(g, plan)
        t_generic = time.perf_counter() - t0

        t0 = time.perf_counter()
        fast = grid_core(n)
        t_fast = time.perf_counter() - t0
        print(f"{n:>5} {t_generic:>10.4f} {t_fast:>9.4f} {str(fast == generic):>10}")

    for n in (256, 512):
        t0 = time.perf_counter()
        grid_core(n)
        print(f"{n:>5} {'-':>10} {time.perf_counter() - t0:>9.4f}")


if __name__ == "__main__":
    main()
