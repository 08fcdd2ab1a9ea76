"""Finite oriented graphs: arc storage, acyclicity, and directed triangles.

Vertices are dense integers 0..vertex_count-1; an arc set may contain at most
one of (u, v) and (v, u) for any pair and no self-loops.  Graphs built from
checkerboards carry an optional per-vertex cell label.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .board import Cell


class UnlabeledDigraphError(ValueError):
    """An operation needed cell labels on a digraph that has none."""


class Digraph:
    """Immutable oriented graph.

    Labels, when present, assign a distinct cell to every vertex; generated
    instances label vertices with the cells of a full board in row-major
    order.  Instances are safe to share across threads once constructed.
    """

    __slots__ = ("vertex_count", "arcs", "labels", "_out", "_in", "_vertex_by_cell")

    def __init__(
        self,
        vertex_count: int,
        arcs: Iterable[tuple[int, int]],
        labels: Sequence[Cell] | None = None,
    ) -> None:
        n = int(vertex_count)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        out: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for u, v in arc_set:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (v, u) in arc_set:
                raise ValueError(f"two-cycle between {u} and {v}; orientations allow one arc per pair")
            out[u].append(v)
            inc[v].append(u)
        self.vertex_count = n
        self.arcs = arc_set
        self._out = tuple(tuple(sorted(vs)) for vs in out)
        self._in = tuple(tuple(sorted(vs)) for vs in inc)
        if labels is None:
            self.labels: tuple[Cell, ...] | None = None
            self._vertex_by_cell: dict[Cell, int] = {}
        else:
            lab = tuple(Cell(int(r), int(c)) for r, c in labels)
            if len(lab) != n:
                raise ValueError(f"expected {n} labels, got {len(lab)}")
            if len(set(lab)) != n:
                raise ValueError("vertex labels must be distinct cells")
            self.labels = lab
            self._vertex_by_cell = {cell: v for v, cell in enumerate(lab)}

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def vertex_by_cell(self) -> Mapping[Cell, int]:
        if self.labels is None:
            raise UnlabeledDigraphError("digraph carries no cell labels")
        return self._vertex_by_cell

    def __repr__(self) -> str:
        tag = ", labeled" if self.labels is not None else ""
        return f"Digraph({self.vertex_count} vertices, {len(self.arcs)} arcs{tag})"


def is_acyclic(g: Digraph) -> bool:
    """Exact test for the absence of directed cycles (source elimination)."""
    indegree = [0] * g.vertex_count
    for _, v in g.arcs:
        indegree[v] += 1
    stack = [v for v in range(g.vertex_count) if indegree[v] == 0]
    removed = 0
    while stack:
        v = stack.pop()
        removed += 1
        for w in g.out_neighbors(v):
            indegree[w] -= 1
            if indegree[w] == 0:
                stack.append(w)
    return removed == g.vertex_count


def _validated_members(g: Digraph, members: Iterable[int] | None) -> list[int]:
    if members is None:
        return list(range(g.vertex_count))
    vs = sorted(set(int(v) for v in members))
    if vs and not (0 <= vs[0] and vs[-1] < g.vertex_count):
        raise ValueError("vertex set contains indices outside the digraph")
    return vs


def find_directed_triangle(
    g: Digraph, within: Iterable[int] | None = None
) -> tuple[int, int, int] | None:
    """First directed triangle (u, v, w) with arcs u->v, v->w, w->u, or None.

    Candidates are scanned in lexicographic vertex order, so the result is
    deterministic.
    """
    vs = _validated_members(g, within)
    arcs = g.arcs
    for a, b, c in combinations(vs, 3):
        if (a, b) in arcs and (b, c) in arcs and (c, a) in arcs:
            return (a, b, c)
        if (a, c) in arcs and (c, b) in arcs and (b, a) in arcs:
            return (a, c, b)
    return None


def induced(g: Digraph, members: Iterable[int]) -> Digraph:
    """Sub-digraph induced by a vertex set, re-indexed in increasing order."""
    vs = _validated_members(g, members)
    index = {v: i for i, v in enumerate(vs)}
    arcs = [(index[u], index[v]) for u, v in g.arcs if u in index and v in index]
    labels = tuple(g.labels[v] for v in vs) if g.labels is not None else None
    return Digraph(len(vs), arcs, labels)


def is_tournament(g: Digraph) -> bool:
    """Whether every vertex pair is joined by exactly one arc."""
    n = g.vertex_count
    return len(g.arcs) == n * (n - 1) // 2


def tournament_is_acyclic(g: Digraph) -> bool:
    """Fast acyclicity for tournaments: acyclic iff no directed triangle."""
    if not is_tournament(g):
        raise ValueError("triangle-based acyclicity applies to tournaments only")
    return find_directed_triangle(g) is None


def digraph_to_json(g: Digraph) -> dict:
    """Serialize to {"vertices", "arcs", "labels"?}; vertices 0-based, cells 1-based."""
    doc: dict = {
        "vertices": g.vertex_count,
        "arcs": [[u, v] for u, v in sorted(g.arcs)],
    }
    if g.labels is not None:
        doc["labels"] = {str(v): [cell.row, cell.col] for v, cell in enumerate(g.labels)}
    return doc


def digraph_from_json(doc: dict) -> Digraph:
    """Parse a digraph document, validating the orientation invariants."""
    try:
        n = int(doc["vertices"])
        arcs = [(int(u), int(v)) for u, v in doc["arcs"]]
        raw_labels = doc.get("labels")
        labels = None
        if raw_labels is not None:
            labels = [Cell(int(raw_labels[str(v)][0]), int(raw_labels[str(v)][1])) for v in range(n)]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed digraph document: {exc}") from exc
    return Digraph(n, arcs, labels)


def _vertex_name(g: Digraph, v: int) -> str:
    if g.labels is not None:
        cell = g.labels[v]
        return f"r{cell.row}c{cell.col}"
    return f"v{v}"


def digraph_to_dot(g: Digraph) -> str:
    """DOT text with one node line per vertex and one edge line per arc."""
    lines = ["digraph {"]
    for v in range(g.vertex_count):
        lines.append(f'  "{_vertex_name(g, v)}";')
    for u, v in sorted(g.arcs):
        lines.append(f'  "{_vertex_name(g, u)}" -> "{_vertex_name(g, v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
