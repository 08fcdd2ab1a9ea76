#!/usr/bin/env python3
"""Tour of checkerboard sparsity: the cell order, the two predicates, and
the diagonal-band partition, ending with the classic 7x7 picture as SVG.

Run from the repository root (installs not required):

    python demos/01_sparse_boards.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from dicolor import (
    Board,
    CellSet,
    bruteforce_min_partition,
    diagonal_band,
    is_c_sparse,
    is_weak_c_sparse,
    optimal_c_sparse_partition,
    partition_to_svg,
)


def main():
    print("= Cell order and the sparsity predicates =")
    board = Board(2, 2)
    s = CellSet(board, [(1, 1), (1, 2), (2, 1)])
    print(f"s = {sorted(s.cells)} on a 2x2 board")
    print(f"  c-sparse?      {is_c_sparse(s)}   ((1,2) sits between (1,1) and (2,1))")
    print(f"  weak-c-sparse? {is_weak_c_sparse(s)}  (no row strictly between rows 1 and 2)")

    print("\n= Diagonal bands on the 7x7 board =")
    seven = Board(7, 7)
    for k in range(4):
        band = diagonal_band(seven, k)
        print(f"  band k={k}: {len(band):2d} cells, c-sparse: {is_c_sparse(band)}")

    print("\n= Minimum partitions, constructed vs. brute force =")
    for n in range(1, 6):
        constructed = optimal_c_sparse_partition(Board(n, n))
        count, _ = bruteforce_min_partition(Board(n, n))
        print(
            f"  {n}x{n}: constructed {len(constructed)} classes, "
            f"brute-force minimum {count}, formula floor(n/2)+1 = {n // 2 + 1}"
        )

    out_dir = Path(__file__).resolve().parent / "output"
    out_dir.mkdir(exist_ok=True)
    svg_path = out_dir / "partition_7x7.svg"
    svg_path.write_text(partition_to_svg(optimal_c_sparse_partition(seven)))
    print(f"\nwrote the four-color 7x7 partition to {svg_path}")


if __name__ == "__main__":
    main()
