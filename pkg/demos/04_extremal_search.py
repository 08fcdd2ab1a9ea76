#!/usr/bin/env python3
"""Exhaustive extremal search: how large can a sparse set get?

For every small board the brute-force oracle reports the true maximum size of
a c-sparse and a weak-c-sparse set next to the proven upper bounds n+m-1
(also 2n-1 on squares) and n+2m-2.  Single-column boards attain the bounds;
wider boards may or may not.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from dicolor import Board, bruteforce_max_sparse


def main():
    print(f"{'board':>9}  {'max c-sparse':>12}  {'n+m-1':>6}  {'max weak':>8}  {'n+2m-2':>6}")
    for n in range(1, 9):
        for m in range(1, 9):
            if n * m > 16:
                continue
            size_c, _ = bruteforce_max_sparse(Board(n, m), "c-sparse")
            size_w, _ = bruteforce_max_sparse(Board(n, m), "weak-c-sparse")
            marker = "  <- c-sparse bound attained" if size_c == n + m - 1 else ""
            print(
                f"{n:>3} x {m:<3}  {size_c:>12}  {n + m - 1:>6}  "
                f"{size_w:>8}  {n + 2 * m - 2:>6}{marker}"
            )
    print("\na witness set accompanies every maximum; see bruteforce_max_sparse")


if __name__ == "__main__":
    main()
