"""Exact directed-coloring solvers with certificates and resource limits.

Two constraints are supported for color classes: "acyclic" (no monochromatic
directed cycle; the minimum is the dichromatic number) and "triangle-free"
(no monochromatic directed triangle).  The search is iterative deepening on
the color count: each level runs a complete backtracking assignment of
vertices in index order with symmetry breaking, so the first feasible level
is the optimum.  A greedy coloring seeds the upper end of the range.

Feasibility of a class is maintained incrementally.  Tournaments and the
triangle-free constraint use a bitmask "forbidden vertex" scheme (a class of
a tournament is acyclic iff it has no directed triangle); general digraphs
under the acyclic constraint fall back to full cycle detection per insertion.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, find_directed_triangle, induced, is_acyclic, is_tournament

ACYCLIC = "acyclic"
TRIANGLE_FREE = "triangle-free"
CONSTRAINTS = (ACYCLIC, TRIANGLE_FREE)

OPTIMAL = "optimal"
LOWER_BOUND_ONLY = "lower_bound_only"
ABORTED_AT_LIMIT = "aborted_at_limit"


@dataclass(frozen=True)
class Coloring:
    """An assignment of 0-based color indices to every vertex of a digraph."""

    graph: Digraph
    color_of: tuple[int, ...]
    num_colors: int

    def __post_init__(self) -> None:
        if len(self.color_of) != self.graph.vertex_count:
            raise ValueError("coloring length does not match the vertex count")
        used = set(self.color_of)
        if used != set(range(self.num_colors)):
            raise ValueError("colors must be exactly 0..num_colors-1 with no empty class")

    def color_classes(self) -> list[list[int]]:
        classes: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.color_of):
            classes[c].append(v)
        return classes


@dataclass(frozen=True)
class SolveLimits:
    """Search budget: node count, wall-clock seconds, optional color cap.

    With max_colors set, deepening stops after that many colors even if no
    feasible coloring was found; the result is then a certified lower bound.
    """

    max_nodes: int = 10**8
    max_seconds: float = 60.0
    max_colors: int | None = None

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")
        if self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")
        if self.max_colors is not None and self.max_colors < 1:
            raise ValueError("max_colors must be >= 1 when given")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    status "optimal": value is the exact minimum and certificate witnesses it.
    status "lower_bound_only": deepening was capped; value is a certified
    lower bound (every smaller color count was proven infeasible).
    status "aborted_at_limit": the node/time budget ran out; value is the
    best proven lower bound at that point.
    """

    status: str
    value: int
    certificate: Coloring | None
    nodes_explored: int
    elapsed: float

    def __post_init__(self) -> None:
        if self.status == OPTIMAL:
            if self.certificate is None or self.certificate.num_colors != self.value:
                raise ValueError("optimal results require a matching certificate")


class _LimitHit(Exception):
    pass


class _Budget:
    __slots__ = ("max_nodes", "deadline", "nodes")

    def __init__(self, limits: SolveLimits) -> None:
        self.max_nodes = limits.max_nodes
        self.deadline = time.perf_counter() + limits.max_seconds
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _LimitHit
        if self.nodes % 2048 == 0 and time.perf_counter() > self.deadline:
            raise _LimitHit


def _class_feasible(g: Digraph, constraint: str, members: list[int]) -> bool:
    if constraint == TRIANGLE_FREE:
        return find_directed_triangle(g, members) is None
    return is_acyclic(induced(g, members))


def _check_constraint(constraint: str) -> None:
    if constraint not in CONSTRAINTS:
        raise ValueError(f"unknown constraint {constraint!r}; expected one of {CONSTRAINTS}")


def greedy_upper_bound(g: Digraph, constraint: str) -> Coloring:
    """First-fit coloring in vertex order; a feasible upper bound for the solvers.

    Each vertex takes the least color whose class stays feasible, opening a
    new color when none fits.  Feasibility is checked with the plain digraph
    primitives, independently of the exact search.
    """
    _check_constraint(constraint)
    classes: list[list[int]] = []
    color_of: list[int] = []
    for v in range(g.vertex_count):
        for c, members in enumerate(classes):
            members.append(v)
            if _class_feasible(g, constraint, members):
                color_of.append(c)
                break
            members.pop()
        else:
            classes.append([v])
            color_of.append(len(classes) - 1)
    return Coloring(g, tuple(color_of), len(classes))


def verify_coloring(g: Digraph, coloring: Coloring, constraint: str) -> bool:
    """Certificate check: does every color class satisfy the constraint?

    Uses only digraph primitives so it stays independent of the search.
    """
    _check_constraint(constraint)
    if len(coloring.color_of) != g.vertex_count:
        raise ValueError("coloring shape does not match the digraph")
    return all(
        _class_feasible(g, constraint, members) for members in coloring.color_classes()
    )


def _search_triangle_classes(
    n: int, t: int, out_mask: list[int], in_mask: list[int], budget: _Budget
) -> list[int] | None:
    """Feasibility search where a class fails exactly when it gains a directed triangle.

    danger[c] is the set (as a bitmask) of vertices that would close a
    triangle with some arc already inside class c, maintained incrementally:
    an internal arc a->b forbids every x with b->x and x->a.
    """
    member = [0] * t
    danger = [0] * t
    assign = [-1] * n
    tick = budget.tick

    def extend(i: int, used: int) -> bool:
        tick()
        if i == n:
            return True
        bit = 1 << i
        in_i = in_mask[i]
        out_i = out_mask[i]
        for c in range(used + 1 if used < t else t):
            old = danger[c]
            if old & bit:
                continue
            m = member[c]
            d = old
            a = m & in_i
            while a:
                lsb = a & -a
                d |= out_i & in_mask[lsb.bit_length() - 1]
                a ^= lsb
            b = m & out_i
            while b:
                lsb = b & -b
                d |= out_mask[lsb.bit_length() - 1] & in_i
                b ^= lsb
            danger[c] = d
            member[c] = m | bit
            assign[i] = c
            if extend(i + 1, used + (1 if c == used else 0)):
                return True
            danger[c] = old
            member[c] = m
        return False

    return assign if extend(0, 0) else None


def _search_general_acyclic(g: Digraph, t: int, budget: _Budget) -> list[int] | None:
    """Feasibility search with full cycle detection per class insertion."""
    n = g.vertex_count
    out = [g.out_neighbors(v) for v in range(n)]
    members: list[list[int]] = [[] for _ in range(t)]
    assign = [-1] * n
    tick = budget.tick

    def stays_acyclic(cls: int, v: int) -> bool:
        verts = members[cls] + [v]
        inside = set(verts)
        indeg = dict.fromkeys(verts, 0)
        for u in verts:
            for w in out[u]:
                if w in inside:
                    indeg[w] += 1
        stack = [u for u in verts if indeg[u] == 0]
        removed = 0
        while stack:
            u = stack.pop()
            removed += 1
            for w in out[u]:
                if w in inside:
                    indeg[w] -= 1
                    if indeg[w] == 0:
                        stack.append(w)
        return removed == len(verts)

    def extend(i: int, used: int) -> bool:
        tick()
        if i == n:
            return True
        for c in range(used + 1 if used < t else t):
            if stays_acyclic(c, i):
                members[c].append(i)
                assign[i] = c
                if extend(i + 1, used + (1 if c == used else 0)):
                    return True
                members[c].pop()
        return False

    return assign if extend(0, 0) else None


def _masks(g: Digraph) -> tuple[list[int], list[int]]:
    out_mask = [0] * g.vertex_count
    in_mask = [0] * g.vertex_count
    for u, v in g.arcs:
        out_mask[u] |= 1 << v
        in_mask[v] |= 1 << u
    return out_mask, in_mask


def _solve(g: Digraph, constraint: str, limits: SolveLimits | None) -> SolveResult:
    _check_constraint(constraint)
    limits = limits or SolveLimits()
    start = time.perf_counter()
    n = g.vertex_count
    if n == 0:
        return SolveResult(OPTIMAL, 0, Coloring(g, (), 0), 0, time.perf_counter() - start)

    greedy = greedy_upper_bound(g, constraint)
    ub = greedy.num_colors
    cap = ub if limits.max_colors is None else min(ub, limits.max_colors)
    # A class of a tournament is acyclic iff it contains no directed
    # triangle, so tournaments share the triangle fast path.
    triangle_path = constraint == TRIANGLE_FREE or is_tournament(g)
    if triangle_path:
        out_mask, in_mask = _masks(g)

    budget = _Budget(limits)
    for t in range(1, cap + 1):
        if t == ub:
            # Every smaller count is proven infeasible and the greedy
            # coloring witnesses feasibility at ub.
            return SolveResult(
                OPTIMAL, t, greedy, budget.nodes, time.perf_counter() - start
            )
        try:
            if triangle_path:
                assignment = _search_triangle_classes(n, t, out_mask, in_mask, budget)
            else:
                assignment = _search_general_acyclic(g, t, budget)
        except _LimitHit:
            return SolveResult(
                ABORTED_AT_LIMIT, t, None, budget.nodes, time.perf_counter() - start
            )
        if assignment is not None:
            certificate = Coloring(g, tuple(assignment), t)
            return SolveResult(
                OPTIMAL, t, certificate, budget.nodes, time.perf_counter() - start
            )
    return SolveResult(
        LOWER_BOUND_ONLY, cap + 1, None, budget.nodes, time.perf_counter() - start
    )


def dichromatic_number(g: Digraph, limits: SolveLimits | None = None) -> SolveResult:
    """Minimum colors such that every color class induces an acyclic sub-digraph."""
    return _solve(g, ACYCLIC, limits)


def triangle_free_chromatic(g: Digraph, limits: SolveLimits | None = None) -> SolveResult:
    """Minimum colors such that no color class contains a directed triangle.

    Never larger than the dichromatic number: acyclic classes are in
    particular triangle-free.
    """
    return _solve(g, TRIANGLE_FREE, limits)


def npartite_lower_bound(n: int, m: int) -> Fraction:
    """Exact rational n*m / (n + 2m - 2).

    Its ceiling lower-bounds the triangle-free chromatic number of the
    generated n-partite digraph with parts of size m, and therefore also that
    digraph's dichromatic number.
    """
    if n < 1 or m < 1:
        raise ValueError(f"part count and part size must be >= 1, got n={n}, m={m}")
    return Fraction(n * m, n + 2 * m - 2)


def solve_result_to_json(result: SolveResult) -> dict:
    """Serialize to {"status", "value", "colors"?, "nodes", "millis"}."""
    doc: dict = {
        "status": result.status,
        "value": result.value,
        "nodes": result.nodes_explored,
        "millis": int(round(result.elapsed * 1000)),
    }
    if result.certificate is not None:
        doc["colors"] = list(result.certificate.color_of)
    return doc
