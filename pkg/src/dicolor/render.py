"""Deterministic SVG rendering of cell partitions.

One 32px square per cell, row 1 at the top, column 1 at the left, fill color
taken from a fixed 8-color palette by class index modulo 8.  Identical input
yields byte-identical output (no timestamps, no randomness).
"""

from __future__ import annotations

from .board import CellPartition

CELL_PIXELS = 32

PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#9c755f",
)


def partition_to_svg(partition: CellPartition) -> str:
    """Render a partition as SVG text with exactly one rect per cell."""
    board = partition.board
    width = board.m * CELL_PIXELS
    height = board.n * CELL_PIXELS
    class_of = partition.class_of()
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for cell in partition.board.cells():
        x = (cell.col - 1) * CELL_PIXELS
        y = (cell.row - 1) * CELL_PIXELS
        fill = PALETTE[class_of[cell] % len(PALETTE)]
        lines.append(
            f'  <rect x="{x}" y="{y}" width="{CELL_PIXELS}" height="{CELL_PIXELS}" '
            f'fill="{fill}" stroke="#222222" stroke-width="1"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
