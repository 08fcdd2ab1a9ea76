"""Checkerboard cells, their row-major order, sparsity predicates, and partitions.

Cells of an n x m board are indexed (row, col) starting at 1 and ordered
row-major: (i1, j1) < (i2, j2) iff i1 < i2, or i1 = i2 and j1 < j2.  A cell
set is *c-sparse* when no member of a different column lies strictly between
two same-column members under that order; the *weak* variant only forbids
members whose row lies strictly between the rows of two same-column members.

The module provides those predicates, the diagonal-band construction that
partitions a square board into floor(n/2)+1 c-sparse classes, deletion of
rows/columns (which preserves c-sparseness), and exhaustive brute-force
oracles for extremal set sizes and minimum partition sizes on small boards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

C_SPARSE = "c-sparse"
WEAK_C_SPARSE = "weak-c-sparse"
SPARSITY_MODES = (C_SPARSE, WEAK_C_SPARSE)

# Hard cap for the exhaustive oracles; beyond this they refuse to run.
MAX_BRUTEFORCE_CELLS = 25


class BoardTooLargeError(ValueError):
    """A brute-force oracle was asked to search more cells than the guard allows."""


class Cell(NamedTuple):
    """A board position with 1-based coordinates.

    Tuple comparison gives exactly the row-major total order used everywhere:
    rows compare first, columns break ties.
    """

    row: int
    col: int


def cell_cmp(a: Cell, b: Cell) -> int:
    """Three-way comparison of cells in row-major order (-1, 0, or 1)."""
    if a == b:
        return 0
    return -1 if a < b else 1


@dataclass(frozen=True)
class Board:
    """An n x m grid of cells (1..n rows, 1..m columns)."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError(f"board dimensions must be >= 1, got {self.n}x{self.m}")

    @property
    def cell_count(self) -> int:
        return self.n * self.m

    def cells(self) -> Iterator[Cell]:
        """All cells in row-major order."""
        for i in range(1, self.n + 1):
            for j in range(1, self.m + 1):
                yield Cell(i, j)

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 1 <= r <= self.n and 1 <= c <= self.m


@dataclass(frozen=True)
class CellSet:
    """A subset of a board's cells."""

    board: Board
    cells: frozenset[Cell]

    def __init__(self, board: Board, cells: Iterable[Cell]) -> None:
        normalized = frozenset(Cell(int(r), int(c)) for r, c in cells)
        for cell in normalized:
            if cell not in board:
                raise ValueError(f"cell {cell} is outside the {board.n}x{board.m} board")
        object.__setattr__(self, "board", board)
        object.__setattr__(self, "cells", normalized)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells())

    def __contains__(self, cell) -> bool:
        return Cell(*cell) in self.cells


@dataclass(frozen=True)
class CellPartition:
    """An ordered partition of a full board into non-empty cell classes."""

    board: Board
    classes: tuple[CellSet, ...]

    def __init__(self, board: Board, classes: Iterable[CellSet]) -> None:
        cls = tuple(classes)
        seen: set[Cell] = set()
        for part in cls:
            if part.board != board:
                raise ValueError("partition class lives on a different board")
            if not part.cells:
                raise ValueError("partition classes must be non-empty")
            if seen & part.cells:
                raise ValueError("partition classes must be pairwise disjoint")
            seen |= part.cells
        if len(seen) != board.cell_count:
            raise ValueError("partition classes must cover every cell of the board")
        object.__setattr__(self, "board", board)
        object.__setattr__(self, "classes", cls)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict[Cell, int]:
        """Map each cell to the index of its class."""
        return {cell: idx for idx, part in enumerate(self.classes) for cell in part.cells}


def is_c_sparse(s: CellSet) -> bool:
    """Whether no member of another column sits strictly between two same-column members.

    Equivalent check: in the row-major ordering of the set, consecutive
    same-column members must be adjacent.  Any violating witness lies between
    some consecutive same-column pair, and everything between a consecutive
    pair belongs to other columns.  Empty sets and singletons pass vacuously.
    """
    last_position: dict[int, int] = {}
    for position, cell in enumerate(s.sorted_cells()):
        previous = last_position.get(cell.col)
        if previous is not None and position - previous > 1:
            return False
        last_position[cell.col] = position
    return True


def is_weak_c_sparse(s: CellSet) -> bool:
    """Whether no member of another column has a row strictly between two same-column rows.

    The row condition is the binding one, so only the per-column row span
    matters.  Every c-sparse set is also weak-c-sparse.
    """
    span: dict[int, tuple[int, int]] = {}
    for row, col in s.cells:
        lo, hi = span.get(col, (row, row))
        span[col] = (min(lo, row), max(hi, row))
    for row, col in s.cells:
        for other, (lo, hi) in span.items():
            if other != col and lo < row < hi:
                return False
    return True


def sparsity_predicate(mode: str):
    """The predicate function for a sparsity mode name."""
    if mode == C_SPARSE:
        return is_c_sparse
    if mode == WEAK_C_SPARSE:
        return is_weak_c_sparse
    raise ValueError(f"unknown sparsity mode {mode!r}; expected one of {SPARSITY_MODES}")


def _require_square(board: Board) -> None:
    if board.n != board.m:
        raise ValueError(f"operation requires a square board, got {board.n}x{board.m}")


def diagonal_set(board: Board, offset: int) -> CellSet:
    """Cells (x, y) of a square board with x - y == offset.

    Empty whenever offset > n-1 or offset < -n+1.
    """
    _require_square(board)
    n = board.n
    lo = max(1, offset + 1)
    hi = min(n, n + offset)
    return CellSet(board, (Cell(x, x - offset) for x in range(lo, hi + 1)))


def diagonal_band(board: Board, k: int) -> CellSet:
    """One class of the optimal construction on an odd square board.

    The band is the union of the diagonals with offsets 2k, 2k+1, 2k-n and
    2k-n-1, i.e. a two-diagonal stripe plus its wrap-around companion.  Each
    band is c-sparse, and the bands for k = 0..(n-1)/2 partition the board.
    """
    _require_square(board)
    n = board.n
    if n % 2 == 0:
        raise ValueError(f"diagonal bands are defined for odd side lengths, got n={n}")
    if not 0 <= k <= (n - 1) // 2:
        raise ValueError(f"band index {k} outside 0..{(n - 1) // 2}")
    cells: set[Cell] = set()
    for offset in (2 * k, 2 * k + 1, 2 * k - n, 2 * k - n - 1):
        cells |= diagonal_set(board, offset).cells
    return CellSet(board, cells)


def restrict(s: CellSet, keep_rows: Iterable[int], keep_cols: Iterable[int]) -> CellSet:
    """Delete all rows/columns outside the keep sets and re-index the survivors.

    Surviving cells are renumbered by the rank of their original row/column
    within the keep sets, so the sub-board ordering is the one induced from
    the original board.  Restriction preserves c-sparseness.
    """
    rows = sorted(set(int(r) for r in keep_rows))
    cols = sorted(set(int(c) for c in keep_cols))
    if not rows or not cols:
        raise ValueError("keep sets must be non-empty")
    if rows[0] < 1 or rows[-1] > s.board.n or cols[0] < 1 or cols[-1] > s.board.m:
        raise ValueError("keep sets must be subsets of the board's row/column ranges")
    row_rank = {r: i + 1 for i, r in enumerate(rows)}
    col_rank = {c: i + 1 for i, c in enumerate(cols)}
    sub = Board(len(rows), len(cols))
    kept = [
        Cell(row_rank[cell.row], col_rank[cell.col])
        for cell in s.cells
        if cell.row in row_rank and cell.col in col_rank
    ]
    return CellSet(sub, kept)


def restrict_partition(
    p: CellPartition, keep_rows: Iterable[int], keep_cols: Iterable[int]
) -> CellPartition:
    """Restrict every class to the kept rows/columns, dropping emptied classes."""
    restricted = [restrict(part, keep_rows, keep_cols) for part in p.classes]
    survivors = [part for part in restricted if part.cells]
    return CellPartition(survivors[0].board, survivors)


def optimal_c_sparse_partition(board: Board) -> CellPartition:
    """A c-sparse partition of a square board into floor(n/2)+1 classes.

    Odd n: the diagonal bands.  Even n: build the partition of the
    (n+1)x(n+1) board, then delete its last row and column (dropping any
    class that empties).  floor(n/2)+1 classes is the optimum.
    """
    _require_square(board)
    n = board.n
    if n % 2 == 1:
        bands = [diagonal_band(board, k) for k in range((n + 1) // 2)]
        return CellPartition(board, bands)
    bigger = Board(n + 1, n + 1)
    keep = range(1, n + 1)
    odd_partition = CellPartition(
        bigger, [diagonal_band(bigger, k) for k in range((n + 2) // 2)]
    )
    return restrict_partition(odd_partition, keep, keep)


def _check_bruteforce_size(board: Board) -> None:
    if board.cell_count > MAX_BRUTEFORCE_CELLS:
        raise BoardTooLargeError(
            f"{board.n}x{board.m} board has {board.cell_count} cells; "
            f"brute force is capped at {MAX_BRUTEFORCE_CELLS}"
        )


def bruteforce_max_sparse(board: Board, mode: str = C_SPARSE) -> tuple[int, CellSet]:
    """Exhaustive maximum-size set satisfying the sparsity predicate.

    Branch and bound over subsets in cell order.  Both predicates are
    antitone (supersets of violating sets violate), so branches extend only
    while the chosen prefix stays feasible; a cardinality bound prunes the
    rest.  Returns the size and the first maximum witness in search order.
    """
    if mode not in SPARSITY_MODES:
        raise ValueError(f"unknown sparsity mode {mode!r}; expected one of {SPARSITY_MODES}")
    _check_bruteforce_size(board)
    cells = list(board.cells())
    if mode == C_SPARSE:
        best = _max_c_sparse(cells)
    else:
        best = _max_weak_sparse(cells)
    return len(best), CellSet(board, best)


def _max_c_sparse(cells: list[Cell]) -> list[Cell]:
    total = len(cells)
    best: list[Cell] = []
    chosen: list[Cell] = []
    # Cells arrive in increasing order, so a new cell keeps the set c-sparse
    # iff its column is unused or that column's previous cell is the current
    # overall maximum of the set.
    col_last: dict[int, Cell] = {}

    def extend(idx: int) -> None:
        nonlocal best
        if len(chosen) + (total - idx) <= len(best):
            return
        if idx == total:
            if len(chosen) > len(best):
                best = chosen[:]
            return
        cell = cells[idx]
        previous = col_last.get(cell.col)
        if previous is None or previous == chosen[-1]:
            col_last[cell.col] = cell
            chosen.append(cell)
            extend(idx + 1)
            chosen.pop()
            if previous is None:
                del col_last[cell.col]
            else:
                col_last[cell.col] = previous
        extend(idx + 1)

    extend(0)
    return best


def _max_weak_sparse(cells: list[Cell]) -> list[Cell]:
    total = len(cells)
    best: list[Cell] = []
    chosen: list[Cell] = []
    # Rows arrive non-decreasing, so the first occurrence of a column is its
    # minimum row.  A new cell (r, c) violates iff some chosen cell of another
    # column has row strictly between that minimum and r.
    col_min: dict[int, int] = {}

    def admissible(cell: Cell) -> bool:
        lo = col_min.get(cell.col)
        if lo is None:
            return True
        return all(x.col == cell.col or not lo < x.row < cell.row for x in chosen)

    def extend(idx: int) -> None:
        nonlocal best
        if len(chosen) + (total - idx) <= len(best):
            return
        if idx == total:
            if len(chosen) > len(best):
                best = chosen[:]
            return
        cell = cells[idx]
        if admissible(cell):
            fresh_col = cell.col not in col_min
            if fresh_col:
                col_min[cell.col] = cell.row
            chosen.append(cell)
            extend(idx + 1)
            chosen.pop()
            if fresh_col:
                del col_min[cell.col]
        extend(idx + 1)

    extend(0)
    return best


def bruteforce_min_partition(board: Board) -> tuple[int, CellPartition]:
    """Exhaustive minimum number of c-sparse classes partitioning the board.

    Iterative deepening on the class count: for t = 1, 2, ... run a complete
    backtracking assignment of cells in cell order, keeping every class
    c-sparse incrementally and breaking symmetry (a cell may open class c
    only if every class below c is already in use).  Returns the least
    feasible count with a witness partition.
    """
    _check_bruteforce_size(board)
    cells = list(board.cells())
    for count in range(1, len(cells) + 1):
        assignment = _partition_into(cells, count)
        if assignment is not None:
            groups: list[list[Cell]] = [[] for _ in range(count)]
            for cell, cls in zip(cells, assignment):
                groups[cls].append(cell)
            partition = CellPartition(board, [CellSet(board, g) for g in groups])
            return count, partition
    raise RuntimeError("unreachable: singleton classes always form a c-sparse partition")


def _partition_into(cells: list[Cell], count: int) -> list[int] | None:
    total = len(cells)
    assign = [-1] * total
    last: list[Cell | None] = [None] * count
    col_last: list[dict[int, Cell]] = [{} for _ in range(count)]

    def place(idx: int, used: int) -> bool:
        if idx == total:
            return True
        cell = cells[idx]
        col = cell.col
        for cls in range(used + 1 if used < count else count):
            previous = col_last[cls].get(col)
            if previous is None or previous == last[cls]:
                saved_last = last[cls]
                col_last[cls][col] = cell
                last[cls] = cell
                assign[idx] = cls
                if place(idx + 1, used + (1 if cls == used else 0)):
                    return True
                last[cls] = saved_last
                if previous is None:
                    del col_last[cls][col]
                else:
                    col_last[cls][col] = previous
        return False

    return assign if place(0, 0) else None


def cell_set_to_json(s: CellSet) -> dict:
    """Serialize a cell set as a one-class partition document."""
    return {
        "n": s.board.n,
        "m": s.board.m,
        "classes": [[[cell.row, cell.col] for cell in s.sorted_cells()]],
    }


def partition_to_json(p: CellPartition) -> dict:
    """Serialize a partition to {"n", "m", "classes"} with 1-based cells."""
    return {
        "n": p.board.n,
        "m": p.board.m,
        "classes": [
            [[cell.row, cell.col] for cell in part.sorted_cells()] for part in p.classes
        ],
    }


def _board_and_classes(doc: dict) -> tuple[Board, list[list[Cell]]]:
    try:
        board = Board(int(doc["n"]), int(doc["m"]))
        classes = [[Cell(int(r), int(c)) for r, c in part] for part in doc["classes"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed cell document: {exc}") from exc
    return board, classes


def partition_from_json(doc: dict) -> CellPartition:
    """Parse and validate a partition document."""
    board, classes = _board_and_classes(doc)
    return CellPartition(board, [CellSet(board, part) for part in classes])


def cell_set_from_json(doc: dict) -> CellSet:
    """Parse a one-class document back into a cell set."""
    board, classes = _board_and_classes(doc)
    if len(classes) != 1:
        raise ValueError(f"expected exactly one class for a cell set, got {len(classes)}")
    return CellSet(board, classes[0])
