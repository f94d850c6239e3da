"""Edge-constrained minimum and maximum spanning trees.

Two algorithms solve the same problem: find an extreme-weight spanning tree
that contains every edge of a mandatory set and avoids every edge of a
forbidden set.

* :func:`constrained_mst_kruskal` seeds the forest with all mandatory edges,
  then scans the remaining non-forbidden edges in sorted order.
* :func:`constrained_mst_prim` handles the single-mandatory-edge case by
  starting the usual tree growth from both endpoints of the seed edge, with
  the seed edge already in the tree.

Both return an :class:`Infeasible` value (never raise) when no such tree
exists: either the mandatory set already contains a cycle, or removing the
forbidden set disconnects the graph. All functions are pure with respect to
the graph and safe to call concurrently on a shared snapshot.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from .errors import InvalidConstraintsError, UnknownEdgeError
from .graph import DisjointSetUnion, EdgeKind, WeaklyDynamicGraph


class OptimizationSense(Enum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


@dataclass(frozen=True)
class Constraints:
    """Disjoint mandatory and forbidden edge-id sets."""

    mandatory: frozenset[int] = frozenset()
    forbidden: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "mandatory", frozenset(self.mandatory))
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))

    def validate(self, g: WeaklyDynamicGraph) -> None:
        for eid in self.mandatory | self.forbidden:
            g.edge(eid)
        overlap = self.mandatory & self.forbidden
        if overlap:
            raise InvalidConstraintsError(
                f"edges both mandatory and forbidden: {sorted(overlap)}"
            )


@dataclass(frozen=True, slots=True)
class SpanningTree:
    """An edge-id set forming a spanning tree, with its stable weight cached.

    ``stable_sum`` is accumulated over stable member edges in ascending id
    order, so recomputing it reproduces the same float bit for bit.
    ``unstable_members`` are the member edges whose weights may still move.
    """

    edge_ids: frozenset[int]
    stable_sum: float
    unstable_members: frozenset[int]

    @classmethod
    def from_edge_ids(
        cls, g: WeaklyDynamicGraph, ids: Iterable[int]
    ) -> "SpanningTree":
        ids = frozenset(ids)
        stable_sum = 0.0
        unstable = []
        for eid in sorted(ids):
            e = g.edge(eid)
            if e.kind is EdgeKind.UNSTABLE:
                unstable.append(eid)
            else:
                stable_sum += e.weight
        return cls(ids, stable_sum, frozenset(unstable))


MANDATORY_CYCLE = "mandatory-cycle"
FORBIDDEN_DISCONNECTS = "forbidden-disconnects"


@dataclass(frozen=True, slots=True)
class Infeasible:
    """No constrained spanning tree exists; ``reason`` says why."""

    reason: str


MstResult = Union[SpanningTree, Infeasible]


def _sort_sign(sense: OptimizationSense) -> float:
    # Maximize is minimize on negated weights.
    return 1.0 if sense is OptimizationSense.MINIMIZE else -1.0


def constrained_mst_kruskal(
    g: WeaklyDynamicGraph,
    constraints: Constraints = Constraints(),
    sense: OptimizationSense = OptimizationSense.MINIMIZE,
) -> MstResult:
    """Extreme-weight spanning tree containing all mandatory, no forbidden edges.

    Unstable edges participate at their current weights. Ties are broken by
    edge id, so the result is deterministic.
    """
    constraints.validate(g)
    dsu = DisjointSetUnion(g.n)
    chosen: list[int] = []
    for eid in sorted(constraints.mandatory):
        e = g.edges[eid]
        if not dsu.union(e.u, e.v):
            return Infeasible(MANDATORY_CYCLE)
        chosen.append(eid)

    sign = _sort_sign(sense)
    skip = constraints.mandatory | constraints.forbidden
    order = sorted(
        (sign * e.weight, e.id) for e in g.edges if e.id not in skip
    )
    need = g.n - 1
    edges = g.edges
    for _, eid in order:
        if len(chosen) == need:
            break
        e = edges[eid]
        if dsu.union(e.u, e.v):
            chosen.append(eid)

    if len(chosen) != need:
        return Infeasible(FORBIDDEN_DISCONNECTS)
    return SpanningTree.from_edge_ids(g, chosen)


def constrained_mst_prim(
    g: WeaklyDynamicGraph,
    seed_edge: int,
    forbidden: frozenset[int] | set[int] = frozenset(),
    sense: OptimizationSense = OptimizationSense.MINIMIZE,
) -> MstResult:
    """Single-mandatory-edge variant: grow the tree from the seed edge.

    Starts with both endpoints of ``seed_edge`` in the visited set and the
    seed edge in the tree, then repeatedly adds the cheapest (per ``sense``)
    non-forbidden edge leaving the visited set.
    """
    seed = g.edge(seed_edge)
    forbidden = frozenset(forbidden)
    for eid in forbidden:
        g.edge(eid)
    if seed_edge in forbidden:
        raise InvalidConstraintsError(f"seed edge {seed_edge} is forbidden")

    sign = _sort_sign(sense)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e in g.edges:
        if e.id in forbidden:
            continue
        adj[e.u].append((e.id, e.v))
        adj[e.v].append((e.id, e.u))

    in_tree = bytearray(g.n)
    in_tree[seed.u] = in_tree[seed.v] = 1
    chosen = [seed_edge]
    edges = g.edges
    heap: list[tuple[float, int, int]] = []
    push = heapq.heappush

    def add_frontier(vertex: int) -> None:
        for eid, other in adj[vertex]:
            if not in_tree[other]:
                push(heap, (sign * edges[eid].weight, eid, other))

    add_frontier(seed.u)
    add_frontier(seed.v)
    need = g.n - 1
    while heap and len(chosen) < need:
        _, eid, target = heapq.heappop(heap)
        if in_tree[target]:
            continue
        in_tree[target] = 1
        chosen.append(eid)
        add_frontier(target)

    if len(chosen) != need:
        return Infeasible(FORBIDDEN_DISCONNECTS)
    return SpanningTree.from_edge_ids(g, chosen)


def tree_total_weight(t: SpanningTree, g: WeaklyDynamicGraph) -> float:
    """Cached stable sum plus the current weights of unstable members."""
    total = t.stable_sum
    for eid in sorted(t.unstable_members):
        total += g.edges[eid].weight
    return total
