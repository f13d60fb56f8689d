"""Mixed graph data model.

A mixed graph has undirected edges and directed arcs on vertices ``0..n-1``.
Opposite arc pairs (digons) are always stored as a single edge, so the
associated digraph ``G*`` (every edge replaced by a digon) is recovered
without loss by :func:`associated_digraph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

Pair = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex references."""


class DegreeTriple(NamedTuple):
    d: int
    d_out: int
    d_in: int


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range 0..{n - 1}")


@dataclass(frozen=True)
class Digraph:
    """Plain digraph; digons are allowed and kept as two arcs."""

    n: int
    arcs: frozenset[Pair]
    labels: tuple | None = None

    def __post_init__(self):
        for u, v in self.arcs:
            if u == v:
                raise GraphError(f"loop at {u}")
            _check_vertex(self.n, u)
            _check_vertex(self.n, v)
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label table length does not match vertex count")

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(x)) for x in inn)

    @property
    def edges(self) -> frozenset[Pair]:
        return frozenset()

    def out_degree(self, v: int) -> int:
        return len(self.succ[v])

    def in_degree(self, v: int) -> int:
        return len(self.pred[v])


@dataclass(frozen=True)
class MixedGraph:
    """Simple mixed graph.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``; ``arcs`` holds ordered
    pairs. Construct through :func:`build` unless the input is already
    normalized.
    """

    n: int
    edges: frozenset[Pair]
    arcs: frozenset[Pair]
    labels: tuple | None = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        for u, v in self.edges:
            if u >= v:
                raise GraphError(f"edge {(u, v)} is a loop or not stored as u < v")
            _check_vertex(self.n, u)
            _check_vertex(self.n, v)
        for u, v in self.arcs:
            if u == v:
                raise GraphError(f"loop at {u}")
            _check_vertex(self.n, u)
            _check_vertex(self.n, v)
            if (v, u) in self.arcs:
                raise GraphError(f"digon {(u, v)} must be stored as an edge")
            if (min(u, v), max(u, v)) in self.edges:
                raise GraphError(f"arc {(u, v)} parallel to an edge")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label table length does not match vertex count")

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Undirected neighbours of each vertex."""
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def arc_succ(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def arc_pred(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(x)) for x in inn)

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        """Out-neighbours in the associated digraph (edges count both ways)."""
        return tuple(
            tuple(sorted(self.neighbors[v] + self.arc_succ[v])) for v in range(self.n)
        )

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(sorted(self.neighbors[v] + self.arc_pred[v])) for v in range(self.n)
        )

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        """True if one step from ``u`` to ``v`` is allowed."""
        return (u, v) in self.arcs or self.has_edge(u, v)


def build(
    n: int,
    edges: Iterable[Sequence[int]] = (),
    arcs: Iterable[Sequence[int]] = (),
    labels: Sequence | None = None,
) -> MixedGraph:
    """Validate raw adjacency lists and return a normalized :class:`MixedGraph`.

    Arc pairs ``(u, v), (v, u)`` are merged into the edge ``{u, v}``. Loops,
    out-of-range endpoints and parallel adjacencies raise :class:`GraphError`.
    """
    if n < 0:
        raise GraphError("negative vertex count")
    edge_set: set[Pair] = set()
    for e in edges:
        u, v = (int(x) for x in e)
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v:
            raise GraphError(f"loop edge at {u}")
        key = (min(u, v), max(u, v))
        if key in edge_set:
            raise GraphError(f"duplicate edge {key}")
        edge_set.add(key)

    arc_set: set[Pair] = set()
    for a in arcs:
        u, v = (int(x) for x in a)
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v:
            raise GraphError(f"loop arc at {u}")
        if (u, v) in arc_set:
            raise GraphError(f"duplicate arc {(u, v)}")
        arc_set.add((u, v))

    for u, v in list(arc_set):
        if (u, v) not in arc_set or (v, u) not in arc_set:
            continue
        key = (min(u, v), max(u, v))
        if key in edge_set:
            raise GraphError(f"digon {key} duplicates an existing edge")
        arc_set.discard((u, v))
        arc_set.discard((v, u))
        edge_set.add(key)

    for u, v in arc_set:
        if (min(u, v), max(u, v)) in edge_set:
            raise GraphError(f"arc {(u, v)} conflicts with edge {{{u}, {v}}}")

    return MixedGraph(
        n,
        frozenset(edge_set),
        frozenset(arc_set),
        tuple(labels) if labels is not None else None,
    )


def degrees(G: MixedGraph, v: int) -> DegreeTriple:
    _check_vertex(G.n, v)
    return DegreeTriple(len(G.neighbors[v]), len(G.arc_succ[v]), len(G.arc_pred[v]))


def degree_extremes(G: MixedGraph) -> tuple[int, int, int]:
    """Return ``(max d, max d+, max d-)`` over all vertices."""
    if G.n == 0:
        return (0, 0, 0)
    return (
        max(len(x) for x in G.neighbors),
        max(len(x) for x in G.arc_succ),
        max(len(x) for x in G.arc_pred),
    )


def total_regularity(G: MixedGraph) -> tuple[int, int] | None:
    """Return ``(r, z)`` if every vertex has ``d = r`` and ``d+ = d- = z``."""
    if G.n == 0:
        return None
    r = len(G.neighbors[0])
    z = len(G.arc_succ[0])
    for v in range(G.n):
        if (
            len(G.neighbors[v]) != r
            or len(G.arc_succ[v]) != z
            or len(G.arc_pred[v]) != z
        ):
            return None
    return (r, z)


def associated_digraph(G: MixedGraph) -> Digraph:
    arcs = set(G.arcs)
    for u, v in G.edges:
        arcs.add((u, v))
        arcs.add((v, u))
    return Digraph(G.n, frozenset(arcs), G.labels)


def from_digraph(D: Digraph) -> MixedGraph:
    edges = set()
    arcs = set()
    for u, v in D.arcs:
        if (v, u) in D.arcs:
            edges.add((min(u, v), max(u, v)))
        else:
            arcs.add((u, v))
    return MixedGraph(D.n, frozenset(edges), frozenset(arcs), D.labels)


def as_digraph(G: MixedGraph | Digraph) -> Digraph:
    return G if isinstance(G, Digraph) else associated_digraph(G)


def as_mixed(G: MixedGraph | Digraph) -> MixedGraph:
    return G if isinstance(G, MixedGraph) else from_digraph(G)


def adjacency_matrix(G: MixedGraph | Digraph) -> np.ndarray:
    A = np.zeros((G.n, G.n), dtype=np.int64)
    for u, v in G.arcs:
        A[u, v] = 1
    for u, v in G.edges:
        A[u, v] = 1
        A[v, u] = 1
    return A


def relabel(G: MixedGraph, labels: Sequence | None) -> MixedGraph:
    return MixedGraph(G.n, G.edges, G.arcs, tuple(labels) if labels is not None else None)
