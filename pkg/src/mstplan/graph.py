"""Graph representation with stable and unstable edges, plus union-find.

A graph here is mostly static: every edge weight is fixed except for a small
set of designated "unstable" edges whose current values may be replaced at any
time via :func:`set_unstable_weight`. Parallel edges are allowed, self-loops
are not, and the full edge set must connect all vertices.

Graphs are safe to share read-only across threads; weight replacement needs
exclusive access. There is no internal locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable

from .errors import (
    DisconnectedGraphError,
    Error,
    NonFiniteWeightError,
    NotUnstableError,
    SelfLoopError,
    UnknownEdgeError,
    VertexOutOfRangeError,
)


class EdgeKind(Enum):
    STABLE = "stable"
    UNSTABLE = "unstable"


@dataclass(frozen=True, slots=True)
class Edge:
    """One undirected edge. For unstable edges, ``weight`` is the current value."""

    id: int
    u: int
    v: int
    weight: float
    kind: EdgeKind


class DisjointSetUnion:
    """Union-find over ``n`` elements with path halving and union by rank."""

    __slots__ = ("parent", "rank", "components")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.components = n

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        """Merge the sets holding ``a`` and ``b``; False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.components -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


@dataclass
class WeaklyDynamicGraph:
    """A weighted undirected multigraph whose unstable edges may change value.

    ``edges`` is indexed by dense edge id (input order); ``unstable_ids``
    enumerates the edges whose weights are replaceable.
    """

    n: int
    edges: list[Edge]
    unstable_ids: tuple[int, ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge(self, edge_id: int) -> Edge:
        if not 0 <= edge_id < len(self.edges):
            raise UnknownEdgeError(f"no edge with id {edge_id}")
        return self.edges[edge_id]

    def weight(self, edge_id: int) -> float:
        return self.edge(edge_id).weight

    def copy(self) -> "WeaklyDynamicGraph":
        """Independent copy; mutating one graph's weights leaves the other alone."""
        return WeaklyDynamicGraph(self.n, list(self.edges), self.unstable_ids)


def _coerce_kind(kind) -> EdgeKind:
    if isinstance(kind, EdgeKind):
        return kind
    if isinstance(kind, str):
        try:
            return EdgeKind(kind.lower())
        except ValueError:
            pass
    raise Error(f"invalid edge kind: {kind!r}")


def build_graph(
    n: int,
    edge_specs: Iterable[tuple[int, int, float, EdgeKind | str]],
) -> WeaklyDynamicGraph:
    """Build and validate a graph from ``(u, v, weight, kind)`` tuples.

    Edge ids are assigned densely in input order. The graph restricted to all
    edges must be connected.
    """
    if n < 1:
        raise Error(f"vertex count must be >= 1, got {n}")
    edges: list[Edge] = []
    unstable: list[int] = []
    for u, v, weight, kind in edge_specs:
        eid = len(edges)
        kind = _coerce_kind(kind)
        _validate_edge(n, u, v, weight)
        edges.append(Edge(eid, u, v, float(weight), kind))
        if kind is EdgeKind.UNSTABLE:
            unstable.append(eid)
    g = WeaklyDynamicGraph(n, edges, tuple(unstable))
    if not is_connected(g, frozenset()):
        raise DisconnectedGraphError(
            f"graph on {n} vertices is not connected by its full edge set"
        )
    return g


def _validate_edge(n: int, u: int, v: int, weight: float) -> None:
    if not (isinstance(u, int) and isinstance(v, int)):
        raise VertexOutOfRangeError(f"endpoints must be integers, got ({u!r}, {v!r})")
    if not (0 <= u < n and 0 <= v < n):
        raise VertexOutOfRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    if not math.isfinite(weight):
        raise NonFiniteWeightError(f"edge ({u}, {v}) has non-finite weight {weight!r}")


def is_connected(g: WeaklyDynamicGraph, excluded: frozenset[int] | set[int]) -> bool:
    """True iff the graph minus ``excluded`` edge ids spans all vertices."""
    for eid in excluded:
        g.edge(eid)  # raises UnknownEdgeError on bad ids
    if g.n == 1:
        return True
    dsu = DisjointSetUnion(g.n)
    for e in g.edges:
        if e.id in excluded:
            continue
        if dsu.union(e.u, e.v) and dsu.components == 1:
            return True
    return dsu.components == 1


def set_unstable_weight(
    g: WeaklyDynamicGraph, edge_id: int, new_x: float
) -> WeaklyDynamicGraph:
    """Replace the current value of an unstable edge, in place.

    Only that edge's weight changes; ids, endpoints and every other weight are
    untouched. Returns the same graph for convenience.
    """
    e = g.edge(edge_id)
    if e.kind is not EdgeKind.UNSTABLE:
        raise NotUnstableError(f"edge {edge_id} is stable; its weight is immutable")
    if not math.isfinite(new_x):
        raise NonFiniteWeightError(f"new value for edge {edge_id} is not finite: {new_x!r}")
    g.edges[edge_id] = replace(e, weight=float(new_x))
    return g


def unstable_values(g: WeaklyDynamicGraph) -> dict[int, float]:
    """Current values of all unstable edges, keyed by edge id."""
    return {eid: g.edges[eid].weight for eid in g.unstable_ids}
