"""Compare the compiled counting kernel with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

from permutoria import kernels


def run(label, fn, *args):
    start = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()

    big = 8 if args.quick else 9
    workloads = [
        ("S_n(123), n=%d" % (big + 1), ((1, 2, 3),), big + 1, kernels.count_avoiders_py, "avoiders"),
        ("S_n(1234), n=%d" % big, ((1, 2, 3, 4),), big, kernels.count_avoiders_py, "avoiders"),
        ("S_n(1324), n=%d" % big, ((1, 3, 2, 4),), big, kernels.count_avoiders_py, "avoiders"),
        ("S_n(213,4123), n=%d" % (big + 1), ((2, 1, 3), (4, 1, 2, 3)), big + 1, None, "avoiders"),
        ("DA_n(2413), n=%d" % (big + 3), ((2, 4, 1, 3),), big + 3, None, "da"),
        ("DA_n, n=%d" % (big + 2), (), big + 2, None, "da"),
    ]

    if not kernels.HAVE_SPEEDUPS:
        print("compiled kernel not available; timing the pure fallback only")

    print(f"{'workload':28s} {'value':>10s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>8s}")
    for label, patterns, n, _, mode in workloads:
        pure_fn = kernels.count_avoiders_py if mode == "avoiders" else kernels.count_da_py
        value_pure, t_pure = run(label, pure_fn, n, patterns)
        if kernels.HAVE_SPEEDUPS:
            fast_fn = (
                kernels._speedups.count_avoiders
                if mode == "avoiders"
                else kernels._speedups.count_da
            )
            value_fast, t_fast = run(label, fast_fn, n, patterns)
            assert value_fast == value_pure, (label, value_fast, value_pure)
            print(
                f"{label:28s} {value_pure:>10d} {t_pure:>10.3f} {t_fast:>13.3f} "
                f"{t_pure / max(t_fast, 1e-9):>7.1f}x"
            )
        else:
            print(f"{label:28s} {value_pure:>10d} {t_pure:>10.3f} {'-':>13s} {'-':>8s}")


if __name__ == "__main__":
    main()
