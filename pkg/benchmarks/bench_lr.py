"""Compare the compiled and pure-Python LR tableau kernels.

    python benchmarks/bench_lr.py [--repeat N]
"""
import argparse
import importlib
import time

from polymology import _lr_py

CASES = [
    ((2, 1), (2, 1), 3),
    ((3, 2, 1), (2, 1), 4),
    ((4, 2, 1), (3, 2), 5),
    ((4, 3, 2, 1), (3, 2, 1), 6),
    ((6, 4, 3, 1), (5, 3, 2, 1), 8),
]


def bench(fn, lam, mu, rows, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        table = fn(lam, mu, rows)
        best = min(best, time.perf_counter() - start)
    return best, table


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    try:
        compiled = importlib.import_module("polymology._lrkernel").lr_product_table
    except ImportError:
        compiled = None
        print("compiled kernel not built; timing the Python kernel only")
    print(f"{'lambda':>14} {'mu':>14} {'rows':>4} {'terms':>6} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for lam, mu, rows in CASES:
        t_py, table = bench(_lr_py.lr_product_table, lam, mu, rows, args.repeat)
        if compiled is None:
            print(f"{str(lam):>14} {str(mu):>14} {rows:>4} {len(table):>6} {t_py:>10.4f}")
            continue
        t_c, table_c = bench(compiled, lam, mu, rows, args.repeat)
        assert table_c == table, "kernels disagree"
        print(f"{str(lam):>14} {str(mu):>14} {rows:>4} {len(table):>6} {t_py:>10.4f} {t_c:>11.4f} "
              f"{t_py / max(t_c, 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()
