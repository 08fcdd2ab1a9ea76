"""Digraphs built from checkerboards.

One orientation rule drives every construction: cells in the same column are
joined from the order-smaller to the order-larger cell, cells in different
columns from the order-larger to the order-smaller.  Applying the rule to all
cell pairs of a (2k-1) x (2k-1) board yields a tournament whose dichromatic
number is exactly k; applying it only across rows of an n x m board yields an
oriented complete balanced n-partite graph whose rows are independent sets.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .board import Board, Cell, CellSet
from .digraph import Digraph, UnlabeledDigraphError


def orient_pair(a: Cell, b: Cell) -> tuple[Cell, Cell]:
    """Arc direction (source, target) between two distinct cells."""
    a = Cell(*a)
    b = Cell(*b)
    if a == b:
        raise ValueError(f"cannot orient a cell against itself: {a}")
    if a.col == b.col:
        return (a, b) if a < b else (b, a)
    return (a, b) if a > b else (b, a)


def _board_vertices(n: int, m: int) -> tuple[Board, list[Cell], dict[Cell, int]]:
    board = Board(n, m)
    cells = list(board.cells())
    return board, cells, {cell: v for v, cell in enumerate(cells)}


def tournament_from_board(n: int, m: int) -> Digraph:
    """Orient every cell pair of an n x m board; vertices in cell order.

    The exact-dichromatic-number guarantee holds only for the square
    odd-sided boards produced by build_tournament; other shapes are exposed
    for experimentation.
    """
    _, cells, vertex_of = _board_vertices(n, m)
    arcs = []
    for a, b in combinations(cells, 2):
        src, dst = orient_pair(a, b)
        arcs.append((vertex_of[src], vertex_of[dst]))
    return Digraph(len(cells), arcs, cells)


def build_tournament(k: int) -> Digraph:
    """Tournament on the (2k-1) x (2k-1) board with dichromatic number exactly k."""
    if k < 1:
        raise ValueError(f"tournament parameter must be >= 1, got {k}")
    side = 2 * k - 1
    return tournament_from_board(side, side)


def build_npartite(n: int, m: int) -> Digraph:
    """Oriented complete balanced n-partite graph with parts of size m.

    Vertices are the cells of an n x m board; each row is one independent
    part, and every cross-row pair is oriented by orient_pair.
    """
    if n < 1 or m < 1:
        raise ValueError(f"part count and part size must be >= 1, got n={n}, m={m}")
    _, cells, vertex_of = _board_vertices(n, m)
    arcs = []
    for a, b in combinations(cells, 2):
        if a.row == b.row:
            continue
        src, dst = orient_pair(a, b)
        arcs.append((vertex_of[src], vertex_of[dst]))
    return Digraph(len(cells), arcs, cells)


def cell_of_vertex(g: Digraph, v: int) -> Cell:
    """The cell labeling vertex v of a generated digraph."""
    if g.labels is None:
        raise UnlabeledDigraphError("digraph carries no cell labels")
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} outside 0..{g.vertex_count - 1}")
    return g.labels[v]


def vertex_of_cell(g: Digraph, cell: Cell) -> int:
    """The vertex labeled by a cell; inverse of cell_of_vertex."""
    mapping = g.vertex_by_cell()
    key = Cell(*cell)
    if key not in mapping:
        raise ValueError(f"no vertex is labeled {key}")
    return mapping[key]


def labeled_board(g: Digraph) -> Board:
    """The board whose cells exactly label the digraph's vertices."""
    if g.labels is None:
        raise UnlabeledDigraphError("digraph carries no cell labels")
    if not g.labels:
        raise ValueError("empty digraph has no board")
    board = Board(max(c.row for c in g.labels), max(c.col for c in g.labels))
    if len(g.labels) != board.cell_count:
        raise ValueError("labels do not cover a full board")
    return board


def cell_set_of(g: Digraph, vertices: Iterable[int]) -> CellSet:
    """The cell set labeling a vertex subset, on the digraph's full board."""
    board = labeled_board(g)
    return CellSet(board, (cell_of_vertex(g, v) for v in vertices))
