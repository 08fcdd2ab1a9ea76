"""Named claim suites re-checking the library's headline facts at configurable scale.

Each suite instantiates one family of verified facts (order laws, extremal
size bounds, diagonal-band partitions, minimum partition sizes, tournament
dichromatic numbers, the acyclic/c-sparse correspondence, and the n-partite
triangle bound) and reports one pass/fail claim per instance.  Everything is
deterministic given the seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .board import (
    Board,
    CellSet,
    bruteforce_max_sparse,
    bruteforce_min_partition,
    cell_cmp,
    diagonal_band,
    is_c_sparse,
    is_weak_c_sparse,
    optimal_c_sparse_partition,
)
from .digraph import find_directed_triangle, induced, is_acyclic
from .generators import build_npartite, build_tournament, cell_set_of
from .solvers import (
    ACYCLIC,
    OPTIMAL,
    SolveLimits,
    dichromatic_number,
    npartite_lower_bound,
    triangle_free_chromatic,
    verify_coloring,
)

SUITES = ("order", "bounds", "diagonals", "sigma", "tk", "equivalence", "npartite")

DEFAULT_NPARTITE_CASES = ((3, 2), (4, 2), (6, 3))
STRETCH_CASE = (8, 4)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    passed: bool
    detail: str = ""


def _small_boards(max_cells: int) -> list[Board]:
    return [
        Board(n, m)
        for n in range(1, max_cells + 1)
        for m in range(1, max_cells + 1)
        if n * m <= max_cells
    ]


def _all_subsets(board: Board):
    cells = list(board.cells())
    for mask in range(1 << len(cells)):
        yield [cells[i] for i in range(len(cells)) if mask >> i & 1]


def suite_order() -> list[Claim]:
    claims = []

    cells = list(Board(4, 4).cells())
    total_order = all(
        cell_cmp(a, b) == -cell_cmp(b, a) and (cell_cmp(a, b) != 0 or a == b)
        for a in cells
        for b in cells
    ) and all(
        cell_cmp(a, c) < 0
        for a in cells
        for b in cells
        for c in cells
        if cell_cmp(a, b) < 0 and cell_cmp(b, c) < 0
    )
    claims.append(
        Claim("order/total-order", "cell comparison is a strict total order (4x4 exhaustive)", total_order)
    )

    implication = True
    antitone = True
    for board in _small_boards(9):
        for cells_sub in _all_subsets(board):
            s = CellSet(board, cells_sub)
            c = is_c_sparse(s)
            w = is_weak_c_sparse(s)
            if c and not w:
                implication = False
            for dropped in cells_sub:
                smaller = CellSet(board, [x for x in cells_sub if x != dropped])
                if c and not is_c_sparse(smaller):
                    antitone = False
                if w and not is_weak_c_sparse(smaller):
                    antitone = False
    claims.append(
        Claim("order/c-implies-weak", "every c-sparse set is weak-c-sparse (boards n*m <= 9, exhaustive)", implication)
    )
    claims.append(
        Claim("order/antitone", "both sparsity predicates survive deleting any member (boards n*m <= 9)", antitone)
    )
    return claims


def suite_bounds() -> list[Claim]:
    rect_ok = square_ok = weak_ok = tight_ok = True
    for board in _small_boards(16):
        size_c, _ = bruteforce_max_sparse(board, "c-sparse")
        size_w, _ = bruteforce_max_sparse(board, "weak-c-sparse")
        if size_c > board.n + board.m - 1:
            rect_ok = False
        if board.n == board.m and size_c > 2 * board.n - 1:
            square_ok = False
        if size_w > board.n + 2 * board.m - 2:
            weak_ok = False
        if board.m == 1 and board.n <= 5 and not (size_c == board.n == size_w):
            tight_ok = False
    return [
        Claim("bounds/c-sparse-rect", "max c-sparse size <= n+m-1 (all boards with n*m <= 16)", rect_ok),
        Claim("bounds/c-sparse-square", "max c-sparse size <= 2n-1 on square boards", square_ok),
        Claim("bounds/weak", "max weak-c-sparse size <= n+2m-2 (all boards with n*m <= 16)", weak_ok),
        Claim("bounds/tight-single-column", "single-column boards attain both bounds (n <= 5)", tight_ok),
    ]


def suite_diagonals(max_n: int = 15) -> list[Claim]:
    claims = []
    for n in range(1, max_n + 1, 2):
        board = Board(n, n)
        bands = [diagonal_band(board, k) for k in range((n + 1) // 2)]
        sparse = all(is_c_sparse(b) for b in bands)
        covered = set()
        disjoint = True
        for band in bands:
            if covered & band.cells:
                disjoint = False
            covered |= band.cells
        cover = covered == set(board.cells())
        claims.append(
            Claim(
                f"diagonals/n={n:02d}",
                f"the {(n + 1) // 2} diagonal bands of the {n}x{n} board are c-sparse, disjoint, and cover it",
                sparse and disjoint and cover,
            )
        )
    return claims


def suite_sigma(max_n: int = 5) -> list[Claim]:
    claims = []
    for n in range(1, max_n + 1):
        want = n // 2 + 1
        got, witness = bruteforce_min_partition(Board(n, n))
        claims.append(
            Claim(
                f"sigma/bruteforce-n={n}",
                f"minimum c-sparse classes covering the {n}x{n} board == {want}",
                got == want and all(is_c_sparse(c) for c in witness.classes),
                f"got {got}",
            )
        )
    construct_ok = True
    for n in range(1, 16):
        p = optimal_c_sparse_partition(Board(n, n))
        if len(p.classes) != n // 2 + 1 or not all(is_c_sparse(c) for c in p.classes):
            construct_ok = False
    claims.append(
        Claim(
            "sigma/construction-n<=15",
            "constructed partition uses floor(n/2)+1 c-sparse classes for n = 1..15",
            construct_ok,
        )
    )
    return claims


def suite_tk(max_k: int = 3) -> list[Claim]:
    claims = []
    for k in range(1, max_k + 1):
        g = build_tournament(k)
        result = dichromatic_number(g)
        certified = (
            result.status == OPTIMAL
            and result.value == k
            and result.certificate is not None
            and verify_coloring(g, result.certificate, ACYCLIC)
        )
        claims.append(
            Claim(
                f"tk/k={k}",
                f"dichromatic number of the {g.vertex_count}-vertex board tournament == {k}",
                certified,
                f"status {result.status}, value {result.value}",
            )
        )
    return claims


def suite_equivalence(seed: int = 0, samples: int = 10_000) -> list[Claim]:
    g2 = build_tournament(2)
    mismatches = sum(
        1
        for mask in range(1 << 9)
        if is_acyclic(induced(g2, [v for v in range(9) if mask >> v & 1]))
        != is_c_sparse(cell_set_of(g2, [v for v in range(9) if mask >> v & 1]))
    )
    claims = [
        Claim(
            "equivalence/t2-exhaustive",
            "acyclic induced subtournament <=> c-sparse cell set (all 512 subsets, k=2)",
            mismatches == 0,
            f"{mismatches} mismatches",
        )
    ]
    g3 = build_tournament(3)
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        vs = [v for v in range(25) if rng.random() < 0.5]
        if is_acyclic(induced(g3, vs)) != is_c_sparse(cell_set_of(g3, vs)):
            bad += 1
    claims.append(
        Claim(
            "equivalence/t3-random",
            f"acyclic induced subtournament <=> c-sparse cell set ({samples} seeded subsets, k=3)",
            bad == 0,
            f"{bad} mismatches",
        )
    )
    return claims


def suite_npartite(
    stretch: bool = False, case: tuple[int, int] | None = None
) -> list[Claim]:
    claims = []

    observation_ok = True
    for n in range(1, 4):
        for m in range(1, 4):
            g = build_npartite(n, m)
            for members in map(list, _subsets_of(g.vertex_count)):
                if find_directed_triangle(g, members) is None:
                    if not is_weak_c_sparse(cell_set_of(g, members)):
                        observation_ok = False
    claims.append(
        Claim(
            "npartite/observation",
            "triangle-free induced sub-digraph => weak-c-sparse cells (n,m <= 3, exhaustive)",
            observation_ok,
        )
    )

    cases = [case] if case is not None else list(DEFAULT_NPARTITE_CASES)
    if case is None and stretch:
        cases.append(STRETCH_CASE)
    for n, m in cases:
        bound = npartite_lower_bound(n, m)
        need = math.ceil(bound)
        g = build_npartite(n, m)
        result = triangle_free_chromatic(g, SolveLimits(max_seconds=600))
        if result.status == OPTIMAL:
            ok = result.value >= need
            detail = f"optimal value {result.value} >= ceil({bound}) = {need}"
        else:
            # A non-optimal status still certifies infeasibility below value.
            ok = result.value >= need
            detail = f"{result.status}, certified lower bound {result.value} vs ceil({bound}) = {need}"
        claims.append(
            Claim(
                f"npartite/bound-{n}x{m}",
                f"triangle-free chromatic number of the {n}-partite graph (parts of {m}) >= {need}",
                ok,
                detail,
            )
        )
    return claims


def _subsets_of(n: int):
    for size in range(n + 1):
        yield from combinations(range(n), size)


def run_suites(
    names: list[str],
    *,
    max_n: int | None = None,
    max_k: int | None = None,
    seed: int = 0,
    stretch: bool = False,
    npartite_case: tuple[int, int] | None = None,
) -> list[Claim]:
    """Run the named suites and return their claims sorted by id."""
    wanted = set(SUITES) if "all" in names else set(names)
    unknown = wanted - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}; expected {SUITES} or 'all'")
    claims: list[Claim] = []
    if "order" in wanted:
        claims += suite_order()
    if "bounds" in wanted:
        claims += suite_bounds()
    if "diagonals" in wanted:
        claims += suite_diagonals(max_n or 15)
    if "sigma" in wanted:
        claims += suite_sigma(max_n or 5)
    if "tk" in wanted:
        claims += suite_tk(max_k or 3)
    if "equivalence" in wanted:
        claims += suite_equivalence(seed)
    if "npartite" in wanted:
        claims += suite_npartite(stretch, npartite_case)
    return sorted(claims, key=lambda c: c.claim_id)
