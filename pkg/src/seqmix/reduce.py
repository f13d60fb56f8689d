"""Degree reduction of sequence mixed graphs through an r'-factor.

Among the arc-shift adjacencies of the walks that use an arc (the set V2),
pick a spanning r'-regular subdigraph and turn its arcs into edges. The
order is unchanged, the diameter cannot grow, and the directed out-degree
drops by r'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .core import (
    Digraph,
    GraphError,
    MixedGraph,
    degree_extremes,
    total_regularity,
)
from .lineage import Base, WalkLabel, sequence_mixed_direct
from .metrics import diameter as _diameter
from .moore import moore_bound


@dataclass(frozen=True)
class FactorAssignment:
    arcs: frozenset[tuple[int, int]]
    r_prime: int


def _base_regularity(G: Base) -> tuple[int, int]:
    """``(r, z)`` of a totally regular base; plain digraphs must be out/in regular."""
    if isinstance(G, Digraph):
        outs = {len(x) for x in G.succ}
        ins = {len(x) for x in G.pred}
        if len(outs) != 1 or outs != ins:
            raise GraphError("base digraph is not regular")
        return 0, outs.pop()
    reg = total_regularity(G)
    if reg is None:
        raise GraphError("base graph is not totally regular")
    return reg


def _regular_factor(n: int, arcs: list[tuple[int, int]], k: int) -> frozenset | None:
    """A spanning ``k``-regular subset of ``arcs`` via max flow, or ``None``."""
    src, snk = 2 * n, 2 * n + 1
    rows = [u for u, _ in arcs] + [src] * n + list(range(n, 2 * n))
    cols = [n + v for _, v in arcs] + list(range(n)) + [snk] * n
    cap = np.array([1] * len(arcs) + [k] * (2 * n), dtype=np.int32)
    A = csr_matrix((cap, (rows, cols)), shape=(2 * n + 2, 2 * n + 2))
    res = maximum_flow(A, src, snk)
    if res.flow_value != k * n:
        return None
    F = res.flow.tocoo()
    return frozenset((int(u), int(v) - n) for u, v, f in zip(F.row, F.col, F.data)
                     if f > 0 and u < n and n <= v < 2 * n)


def v2_subdigraph(S: MixedGraph, G: Base, length: int) -> Digraph:
    """The ``z``-regular digraph on V2 whose arcs may be converted to edges.

    For ``length == 1`` this is the subdigraph induced by V2. For longer
    walks on a pure digraph base it keeps the shifts that append a base arc.
    With undirected base edges the induced subdigraph is not regular (walks
    whose only arc is at one end lose their V1 neighbours), so a ``z``-factor
    of it is taken by max flow. Vertices are numbered in V2 order; ``labels``
    carries the walk labels of ``S``.
    """
    if S.labels is None:
        raise GraphError("sequence graph must be labelled")
    r, z = _base_regularity(G)
    v2 = [i for i, lab in enumerate(S.labels) if not lab.undirected]
    if not v2:
        raise GraphError("V2 is empty")
    local = {s_id: k for k, s_id in enumerate(v2)}
    if length > 1 and r == 0:
        s_index = {lab: i for i, lab in enumerate(S.labels)}
        arcs = set()
        for s_id in v2:
            w = S.labels[s_id].seq
            for x in G.succ[w[-1]]:
                t = s_index[WalkLabel(w[1:] + (x,), False)]
                arcs.add((local[s_id], local[t]))
        arcs = frozenset(arcs)
    else:
        arcs = frozenset((local[a], local[b]) for a, b in S.arcs if a in local and b in local)
        if length > 1:
            arcs = _regular_factor(len(v2), sorted(arcs), z)
            if arcs is None:
                raise GraphError(f"V2 arcs contain no {z}-regular spanning subdigraph")
    D = Digraph(len(v2), arcs, tuple(S.labels[i] for i in v2))
    bad = [v for v in range(D.n) if len(D.succ[v]) != z or len(D.pred[v]) != z]
    if bad:
        raise GraphError(f"V2 subdigraph is not {z}-regular at {len(bad)} vertices")
    return D


def _perfect_matching(n: int, adj: list[list[int]], locked: dict[int, int] | None = None) -> list[int] | None:
    """Perfect matching of a bipartite graph (left ``u`` to right ``adj[u]``).

    Greedy lowest-id seeding followed by augmenting paths, scanning left
    vertices and candidates in ascending order. ``locked`` pre-assigns left
    vertices that augmenting paths may not re-route. Returns ``match[u]`` or
    ``None`` if no perfect matching exists.
    """
    match_l = [-1] * n
    match_r = [-1] * n
    locked = locked or {}
    for u, v in locked.items():
        match_l[u] = v
        match_r[v] = u
    for u in range(n):
        if match_l[u] == -1:
            for v in adj[u]:
                if match_r[v] == -1:
                    match_l[u] = v
                    match_r[v] = u
                    break

    for root in range(n):
        if match_l[root] != -1:
            continue
        # iterative DFS for an augmenting path from root
        parent = {}
        seen_r = set()
        stack = [(root, iter(adj[root]))]
        end = -1
        while stack and end == -1:
            u, it = stack[-1]
            for v in it:
                if v in seen_r:
                    continue
                seen_r.add(v)
                w = match_r[v]
                if w == -1:
                    parent[v] = u
                    end = v
                    break
                if w in locked:
                    continue
                parent[v] = u
                stack.append((w, iter(adj[w])))
                break
            else:
                stack.pop()
        if end == -1:
            return None
        v = end
        while True:
            u = parent[v]
            prev = match_l[u]
            match_l[u] = v
            match_r[v] = u
            if u == root:
                break
            v = prev
    return match_l


def extract_factor(D: Digraph, r_prime: int, prefer_digons: bool = True) -> FactorAssignment:
    """Spanning ``r_prime``-regular subdigraph of a regular digraph.

    Peels ``r_prime`` perfect matchings off the bipartite out-copy / in-copy
    graph; removing one from a ``k``-regular bipartite graph leaves a
    ``(k-1)``-regular one, so each round succeeds. With ``prefer_digons`` the
    first round tries to keep opposite arc pairs together, so that converting
    the factor to edges does not leave stray digons beside the new edges.
    """
    outs = {len(x) for x in D.succ}
    ins = {len(x) for x in D.pred}
    if len(outs) != 1 or outs != ins:
        raise GraphError("extract_factor needs a regular digraph")
    z = outs.pop()
    if not 1 <= r_prime <= z:
        raise GraphError(f"r' must be in 1..{z}")
    remaining = [list(x) for x in D.succ]
    chosen = set()
    for round_no in range(r_prime):
        match = None
        if round_no == 0 and prefer_digons:
            locked = {}
            used_r = set()
            for u, v in sorted(D.arcs):
                if u < v and (v, u) in D.arcs and u not in locked and v not in locked \
                        and v not in used_r and u not in used_r:
                    locked[u] = v
                    locked[v] = u
                    used_r.update((u, v))
            if locked:
                match = _perfect_matching(D.n, remaining, locked)
        if match is None:
            match = _perfect_matching(D.n, remaining)
        if match is None:
            raise GraphError("no perfect matching; input is not regular bipartite")
        for u, v in enumerate(match):
            chosen.add((u, v))
            remaining[u].remove(v)
    return FactorAssignment(frozenset(chosen), r_prime)


@dataclass(frozen=True)
class Reduction:
    """Reduced graph together with the bookkeeping of the arc-to-edge conversion."""

    graph: MixedGraph
    source: MixedGraph
    factor: FactorAssignment
    already_edges: int
    collapsed_pairs: int

    @property
    def new_edges(self) -> int:
        """Equals ``len(factor.arcs) - already_edges - collapsed_pairs``."""
        return len(self.graph.edges) - len(self.source.edges)


def _check_reduce_args(G: Base, length: int, r_prime: int) -> tuple[int, int]:
    r, z = _base_regularity(G)
    pure = r == 0 and (isinstance(G, Digraph) or not G.edges)
    if pure:
        if length < 2:
            raise GraphError("pure digraph bases need length >= 2")
    elif r <= 1:
        raise GraphError("base must have undirected degree r > 1")
    if not 1 <= r_prime <= z:
        raise GraphError(f"r' must be in 1..{z}")
    return r, z


def reduce_sequence_graph(G: Base, length: int, r_prime: int, S: MixedGraph | None = None) -> Reduction:
    _check_reduce_args(G, length, r_prime)
    if S is None:
        S = sequence_mixed_direct(G, length)
    D = v2_subdigraph(S, G, length)
    factor = extract_factor(D, r_prime)
    s_index = {lab: i for i, lab in enumerate(S.labels)}
    to_s = [s_index[lab] for lab in D.labels]

    edges = set(S.edges)
    arcs = set(S.arcs)
    already = 0
    for a, b in factor.arcs:
        u, v = to_s[a], to_s[b]
        if (u, v) in S.arcs:
            arcs.discard((u, v))
            edges.add((min(u, v), max(u, v)))
        else:
            # one side of a digon, already stored as an edge of S
            already += 1
    collapsed = sum(
        1 for a, b in factor.arcs
        if a < b and (b, a) in factor.arcs and (to_s[a], to_s[b]) in S.arcs
    )
    graph = MixedGraph(S.n, frozenset(edges), frozenset(arcs), S.labels)
    return Reduction(graph, S, factor, already, collapsed)


def seq_mixed_reduced(G: Base, length: int, r_prime: int) -> MixedGraph:
    return reduce_sequence_graph(G, length, r_prime).graph


@dataclass(frozen=True)
class ReductionReport:
    order: int
    diameter: int | None
    delta: int
    delta_out: int
    source_diameter: int | None
    source_delta: int
    source_delta_out: int
    moore_ref: int | None
    source_moore_ref: int | None
    ratio: Fraction | None
    factor_arcs: int
    new_edges: int
    already_edges: int
    collapsed_pairs: int


def reduction_report(G: Base, length: int, r_prime: int, reduction: Reduction | None = None) -> ReductionReport:
    red = reduction or reduce_sequence_graph(G, length, r_prime)
    H, S = red.graph, red.source
    d, do, _ = degree_extremes(H)
    sd, sdo, _ = degree_extremes(S)
    k = _diameter(H)
    sk = _diameter(S)
    ref = moore_bound(d, do, k) if k is not None else None
    sref = moore_bound(sd, sdo, sk) if sk is not None else None
    return ReductionReport(
        order=H.n,
        diameter=k,
        delta=d,
        delta_out=do,
        source_diameter=sk,
        source_delta=sd,
        source_delta_out=sdo,
        moore_ref=ref,
        source_moore_ref=sref,
        ratio=Fraction(ref, H.n) if ref is not None else None,
        factor_arcs=len(red.factor.arcs),
        new_edges=red.new_edges,
        already_edges=red.already_edges,
        collapsed_pairs=red.collapsed_pairs,
    )
