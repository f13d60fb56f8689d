"""Distances, diameter and exact average distance on mixed graphs.

Edges are traversable both ways and arcs forward only, i.e. all traversals
run on the associated digraph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .core import Digraph, GraphError, MixedGraph

UNREACHABLE = -1

AnyGraph = MixedGraph | Digraph


@dataclass(frozen=True)
class DistanceReport:
    """All-pairs distances of a graph.

    ``dist[u, v]`` is ``UNREACHABLE`` when no walk exists. ``diameter`` and
    ``avg`` are ``None`` unless the graph is strongly connected.
    """

    dist: np.ndarray
    diameter: int | None
    avg: Fraction | None
    layers: tuple[tuple[int, ...], ...]

    @property
    def strongly_connected(self) -> bool:
        return self.diameter is not None


def distances_from(G: AnyGraph, s: int) -> list[int]:
    if not 0 <= s < G.n:
        raise GraphError(f"vertex {s} out of range")
    succ = G.succ
    dist = [UNREACHABLE] * G.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in succ[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def layer_counts(G: AnyGraph, s: int) -> list[int]:
    dist = distances_from(G, s)
    top = max(dist)
    counts = [0] * (top + 1)
    for x in dist:
        if x != UNREACHABLE:
            counts[x] += 1
    return counts


def _csr(G: AnyGraph) -> csr_matrix:
    rows, cols = [], []
    for u, nbrs in enumerate(G.succ):
        rows.extend([u] * len(nbrs))
        cols.extend(nbrs)
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(G.n, G.n))


def all_pairs(G: AnyGraph) -> DistanceReport:
    n = G.n
    if n == 0:
        return DistanceReport(np.zeros((0, 0), dtype=np.int64), None, None, ())
    raw = shortest_path(_csr(G), method="D", directed=True, unweighted=True)
    finite = np.isfinite(raw)
    dist = np.where(finite, raw, UNREACHABLE).astype(np.int64)
    layers = []
    for row in dist:
        reach = row[row != UNREACHABLE]
        layers.append(tuple(int(c) for c in np.bincount(reach)))
    if finite.all():
        diameter = int(dist.max())
        avg = Fraction(int(dist.sum()), n * n)
    else:
        diameter = None
        avg = None
    return DistanceReport(dist, diameter, avg, tuple(layers))


def diameter(G: AnyGraph, block: int = 4096) -> int | None:
    """Diameter via packed-bitset reachability; ``None`` if not strongly connected.

    Keeps one bit row per vertex and ORs in the rows of out-neighbours until
    every row is full, so memory is ``n**2 / 8`` bytes and no distance matrix
    is materialized. Suited to graphs too large for :func:`all_pairs`.
    """
    n = G.n
    if n == 0:
        return None
    words = (n + 63) // 64
    full = np.full(words, np.uint64(0xFFFFFFFFFFFFFFFF), dtype=np.uint64)
    if n % 64:
        full[-1] = np.uint64((1 << (n % 64)) - 1)

    succ = G.succ
    width = max(len(x) for x in succ)
    # pad with self-index; OR with own row is a no-op
    nbr = np.empty((n, max(width, 1)), dtype=np.int64)
    for u, row in enumerate(succ):
        nbr[u, : len(row)] = row
        nbr[u, len(row):] = u

    reach = np.zeros((n, words), dtype=np.uint64)
    idx = np.arange(n)
    reach[idx, idx // 64] = np.left_shift(np.uint64(1), (idx % 64).astype(np.uint64))

    steps = 0
    while True:
        if (reach == full).all():
            return steps
        if steps >= n:
            return None
        nxt = reach.copy()
        for lo in range(0, n, block):
            hi = min(lo + block, n)
            acc = nxt[lo:hi]
            for j in range(nbr.shape[1]):
                acc |= reach[nbr[lo:hi, j]]
        if np.array_equal(nxt, reach):
            return None
        reach = nxt
        steps += 1


def average_distance(G: AnyGraph) -> Fraction | None:
    return all_pairs(G).avg
