import pytest
from hypothesis import given
from hypothesis import strategies as st

from dicolor import (
    Board,
    BoardTooLargeError,
    Cell,
    CellPartition,
    CellSet,
    bruteforce_max_sparse,
    bruteforce_min_partition,
    cell_cmp,
    diagonal_band,
    diagonal_set,
    is_c_sparse,
    is_weak_c_sparse,
    optimal_c_sparse_partition,
    restrict,
)
from oracles import (
    all_subsets,
    c_sparse_by_definition,
    max_sparse_by_enumeration,
    set_partitions,
    weak_c_sparse_by_definition,
)

cells_st = st.builds(Cell, st.integers(1, 6), st.integers(1, 6))


def small_boards(max_cells):
    return [
        Board(n, m)
        for n in range(1, max_cells + 1)
        for m in range(1, max_cells + 1)
        if n * m <= max_cells
    ]


class TestCellOrder:
    def test_row_dominates(self):
        assert cell_cmp(Cell(1, 3), Cell(2, 1)) == -1

    def test_equal(self):
        assert cell_cmp(Cell(2, 2), Cell(2, 2)) == 0

    def test_column_breaks_ties(self):
        assert cell_cmp(Cell(2, 5), Cell(2, 3)) == 1

    @given(cells_st, cells_st)
    def test_antisymmetric_and_total(self, a, b):
        assert cell_cmp(a, b) == -cell_cmp(b, a)
        assert (cell_cmp(a, b) == 0) == (a == b)

    @given(cells_st, cells_st, cells_st)
    def test_transitive(self, a, b, c):
        if cell_cmp(a, b) < 0 and cell_cmp(b, c) < 0:
            assert cell_cmp(a, c) < 0


class TestPredicates:
    def test_between_violation(self):
        s = CellSet(Board(2, 2), [(1, 1), (1, 2), (2, 1)])
        assert not is_c_sparse(s)
        assert is_weak_c_sparse(s)  # no row strictly between 1 and 2

    def test_full_column_is_sparse(self):
        for n in (1, 3, 5):
            s = CellSet(Board(n, 1), [(i, 1) for i in range(1, n + 1)])
            assert is_c_sparse(s)
            assert is_weak_c_sparse(s)

    def test_weak_violation(self):
        s = CellSet(Board(3, 2), [(1, 1), (2, 2), (3, 1)])
        assert not is_weak_c_sparse(s)

    def test_empty_and_singletons(self):
        board = Board(3, 3)
        assert is_c_sparse(CellSet(board, []))
        for cell in board.cells():
            assert is_c_sparse(CellSet(board, [cell]))

    def test_matches_definition_exhaustively(self):
        for board in small_boards(9):
            for cells in all_subsets(board):
                s = CellSet(board, cells)
                assert is_c_sparse(s) == c_sparse_by_definition(s)
                assert is_weak_c_sparse(s) == weak_c_sparse_by_definition(s)

    @given(st.frozensets(st.builds(Cell, st.integers(1, 5), st.integers(1, 5)), max_size=12))
    def test_c_sparse_implies_weak(self, cells):
        s = CellSet(Board(5, 5), cells)
        if is_c_sparse(s):
            assert is_weak_c_sparse(s)

    @given(st.frozensets(st.builds(Cell, st.integers(1, 5), st.integers(1, 5)), min_size=1, max_size=12))
    def test_predicates_antitone_under_deletion(self, cells):
        board = Board(5, 5)
        s = CellSet(board, cells)
        for dropped in cells:
            smaller = CellSet(board, cells - {dropped})
            if is_c_sparse(s):
                assert is_c_sparse(smaller)
            if is_weak_c_sparse(s):
                assert is_weak_c_sparse(smaller)


class TestDiagonals:
    def test_main_diagonal(self):
        s = diagonal_set(Board(3, 3), 0)
        assert s.cells == {Cell(1, 1), Cell(2, 2), Cell(3, 3)}

    def test_corner(self):
        assert diagonal_set(Board(3, 3), 2).cells == {Cell(3, 1)}

    def test_out_of_range_offsets_empty(self):
        board = Board(3, 3)
        assert not diagonal_set(board, 5).cells
        assert not diagonal_set(board, -3).cells

    def test_requires_square(self):
        with pytest.raises(ValueError):
            diagonal_set(Board(3, 2), 0)

    def test_band_k0_on_7x7(self):
        board = Board(7, 7)
        band = diagonal_band(board, 0)
        # offsets -7 and -8 fall outside, leaving the two main stripes
        expected = {c for c in board.cells() if c.row - c.col in (0, 1)}
        assert band.cells == expected
        assert len(band) == 13

    def test_band_k3_on_7x7(self):
        board = Board(7, 7)
        band = diagonal_band(board, 3)
        expected = {c for c in board.cells() if c.row - c.col in (6, 7, -1, -2)}
        assert band.cells == expected

    def test_bands_are_c_sparse(self):
        for n in range(1, 16, 2):
            board = Board(n, n)
            for k in range((n + 1) // 2):
                assert is_c_sparse(diagonal_band(board, k))

    def test_bands_partition_the_board(self):
        for n in range(1, 16, 2):
            board = Board(n, n)
            seen = set()
            for k in range((n + 1) // 2):
                band = diagonal_band(board, k)
                assert not (seen & band.cells)
                seen |= band.cells
            assert seen == set(board.cells())

    def test_band_rejects_even_or_out_of_range(self):
        with pytest.raises(ValueError):
            diagonal_band(Board(4, 4), 0)
        with pytest.raises(ValueError):
            diagonal_band(Board(7, 7), 4)
        with pytest.raises(ValueError):
            diagonal_band(Board(7, 7), -1)


class TestOptimalPartition:
    def test_class_counts(self):
        assert len(optimal_c_sparse_partition(Board(7, 7))) == 4
        assert len(optimal_c_sparse_partition(Board(1, 1))) == 1
        assert len(optimal_c_sparse_partition(Board(4, 4))) == 3

    def test_single_cell(self):
        p = optimal_c_sparse_partition(Board(1, 1))
        assert p.classes[0].cells == {Cell(1, 1)}

    def test_counts_and_sparsity_up_to_15(self):
        for n in range(1, 16):
            p = optimal_c_sparse_partition(Board(n, n))
            assert len(p) == n // 2 + 1
            assert all(is_c_sparse(part) for part in p.classes)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            optimal_c_sparse_partition(Board(3, 4))


class TestRestrict:
    def test_reindexing(self):
        s = CellSet(Board(3, 3), [(1, 1), (2, 1), (3, 1)])
        out = restrict(s, {1, 3}, {1, 2})
        assert out.board == Board(2, 2)
        assert out.cells == {Cell(1, 1), Cell(2, 1)}

    def test_empty_set(self):
        out = restrict(CellSet(Board(3, 3), []), {1, 2}, {2, 3})
        assert not out.cells

    def test_rejects_empty_keep_sets(self):
        s = CellSet(Board(3, 3), [(1, 1)])
        with pytest.raises(ValueError):
            restrict(s, set(), {1})
        with pytest.raises(ValueError):
            restrict(s, {1}, set())

    def test_rejects_out_of_range_keeps(self):
        s = CellSet(Board(3, 3), [(1, 1)])
        with pytest.raises(ValueError):
            restrict(s, {0, 1}, {1})
        with pytest.raises(ValueError):
            restrict(s, {1}, {4})

    def test_preserves_c_sparseness_exhaustively(self):
        board = Board(3, 3)
        keeps = [{1}, {2}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}]
        for cells in all_subsets(board):
            s = CellSet(board, cells)
            if not is_c_sparse(s):
                continue
            for kr in keeps:
                for kc in keeps:
                    assert is_c_sparse(restrict(s, kr, kc))


class TestMaxSparseOracle:
    def test_single_column_attains_size_n(self):
        for n in range(1, 6):
            for mode in ("c-sparse", "weak-c-sparse"):
                size, witness = bruteforce_max_sparse(Board(n, 1), mode)
                assert size == n
                assert len(witness) == n

    def test_single_cell(self):
        for mode in ("c-sparse", "weak-c-sparse"):
            assert bruteforce_max_sparse(Board(1, 1), mode)[0] == 1

    def test_3x3_matches_subset_enumeration(self):
        board = Board(3, 3)
        size_c, _ = bruteforce_max_sparse(board, "c-sparse")
        size_w, _ = bruteforce_max_sparse(board, "weak-c-sparse")
        assert size_c == max_sparse_by_enumeration(board, c_sparse_by_definition) == 5
        assert size_w == max_sparse_by_enumeration(board, weak_c_sparse_by_definition) == 6
        assert size_c <= 5  # 2n-1 and n+m-1 both give 5 here

    def test_matches_enumeration_on_small_boards(self):
        for board in small_boards(9):
            size, witness = bruteforce_max_sparse(board, "c-sparse")
            assert size == max_sparse_by_enumeration(board, c_sparse_by_definition)
            assert is_c_sparse(witness) and len(witness) == size
            size_w, witness_w = bruteforce_max_sparse(board, "weak-c-sparse")
            assert size_w == max_sparse_by_enumeration(board, weak_c_sparse_by_definition)
            assert is_weak_c_sparse(witness_w) and len(witness_w) == size_w

    def test_guard(self):
        with pytest.raises(BoardTooLargeError):
            bruteforce_max_sparse(Board(6, 5))

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            bruteforce_max_sparse(Board(2, 2), "sparse-ish")


class TestMinPartitionOracle:
    def test_known_values(self):
        assert bruteforce_min_partition(Board(1, 1))[0] == 1
        assert bruteforce_min_partition(Board(3, 3))[0] == 2
        assert bruteforce_min_partition(Board(5, 5))[0] == 3

    def test_witness_is_valid(self):
        count, witness = bruteforce_min_partition(Board(4, 4))
        assert len(witness) == count == 3
        assert all(is_c_sparse(part) for part in witness.classes)

    def test_matches_partition_enumeration(self):
        for board in (Board(2, 2), Board(2, 3), Board(3, 2)):
            cells = list(board.cells())
            best = min(
                len(partition)
                for partition in set_partitions(cells)
                if all(c_sparse_by_definition(CellSet(board, block)) for block in partition)
            )
            assert bruteforce_min_partition(board)[0] == best

    def test_guard(self):
        with pytest.raises(BoardTooLargeError):
            bruteforce_min_partition(Board(6, 5))


class TestConstruction:
    def test_board_validation(self):
        with pytest.raises(ValueError):
            Board(0, 3)
        with pytest.raises(ValueError):
            Board(3, -1)

    def test_cellset_bounds(self):
        with pytest.raises(ValueError):
            CellSet(Board(2, 2), [(3, 1)])
        with pytest.raises(ValueError):
            CellSet(Board(2, 2), [(1, 0)])

    def test_partition_validation(self):
        board = Board(2, 1)
        a = CellSet(board, [(1, 1)])
        b = CellSet(board, [(2, 1)])
        CellPartition(board, [a, b])
        with pytest.raises(ValueError):
            CellPartition(board, [a])  # does not cover
        with pytest.raises(ValueError):
            CellPartition(board, [a, a, b])  # overlap
        with pytest.raises(ValueError):
            CellPartition(board, [a, CellSet(board, []), b])  # empty class
