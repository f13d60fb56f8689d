"""Walk-indexed constructions: line digraphs, sequence graphs, sequence mixed graphs.

Every constructed vertex carries a :class:`WalkLabel`. Vertex ids of an
output are assigned in sorted label order, so two constructions that
produce the same labelled graph produce equal :class:`MixedGraph` objects.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Digraph, GraphError, MixedGraph, as_digraph, from_digraph

Base = MixedGraph | Digraph


def _bare_digraph(G: Base) -> Digraph:
    """Associated digraph with labels dropped, so walks are named by vertex ids."""
    D = as_digraph(G)
    return Digraph(D.n, D.arcs) if D.labels is not None else D


@dataclass(frozen=True, order=True)
class WalkLabel:
    seq: tuple[int, ...]
    undirected: bool = False

    def conjugate(self) -> tuple[int, ...]:
        return self.seq[::-1]

    def representatives(self) -> list[tuple[int, ...]]:
        """Walks naming this vertex: the sequence, plus its reversal if undirected."""
        if self.undirected and self.seq[::-1] != self.seq:
            return [self.seq, self.seq[::-1]]
        return [self.seq]

    def __str__(self):
        return ",".join(map(str, self.seq))


def _edge_set(base: Base) -> frozenset:
    return base.edges if isinstance(base, MixedGraph) else frozenset()


def _is_edge(edges: frozenset, u: int, v: int) -> bool:
    return ((u, v) if u < v else (v, u)) in edges


def is_walk(w: tuple[int, ...], base: Base) -> bool:
    succ = base.succ
    if not w or any(not 0 <= x < base.n for x in w):
        return False
    return all(b in succ[a] for a, b in zip(w, w[1:]))


def is_undirected_walk(w: tuple[int, ...], base: Base) -> bool:
    edges = _edge_set(base)
    return all(_is_edge(edges, a, b) for a, b in zip(w, w[1:]))


def canonical_walk(w, base: Base) -> WalkLabel:
    """Canonical name of a walk: undirected walks are identified with their reversal."""
    w = tuple(int(x) for x in w)
    if not is_walk(w, base):
        raise GraphError(f"{w} is not a walk of the base graph")
    if is_undirected_walk(w, base):
        return WalkLabel(min(w, w[::-1]), True)
    return WalkLabel(w, False)


def _canon_fast(w: tuple[int, ...], edges: frozenset) -> WalkLabel:
    for a, b in zip(w, w[1:]):
        if ((a, b) if a < b else (b, a)) not in edges:
            return WalkLabel(w, False)
    r = w[::-1]
    return WalkLabel(r if r < w else w, True)


def enumerate_walks(base: Base, length: int) -> list[tuple[int, ...]]:
    """All walks with ``length`` steps in the associated digraph, in lexicographic order."""
    if length < 0:
        raise GraphError("walk length must be nonnegative")
    succ = base.succ
    walks = [(v,) for v in range(base.n)]
    for _ in range(length):
        walks = [w + (x,) for w in walks for x in succ[w[-1]]]
    return walks


def _base_label(D: Digraph, v: int) -> tuple[int, ...]:
    if D.labels is None:
        return (v,)
    lab = D.labels[v]
    return lab.seq if isinstance(lab, WalkLabel) else tuple(lab)


def line_digraph(D: Digraph) -> Digraph:
    """Vertices are the arcs of ``D``; ``(a, b)`` precedes ``(b, c)``.

    Labels concatenate the walk labels of ``D`` (a plain vertex id if
    unlabelled), so iterating this yields walk labels of growing length.
    """
    arcs = sorted(D.arcs)
    index = {a: i for i, a in enumerate(arcs)}
    out = set()
    succ = D.succ
    for (a, b), i in index.items():
        for c in succ[b]:
            out.add((i, index[(b, c)]))
    labels = tuple(
        WalkLabel(_base_label(D, a) + _base_label(D, b)[-1:], False) for a, b in arcs
    )
    return Digraph(len(arcs), frozenset(out), labels)


def iterated_line_digraph(D: Digraph, length: int) -> Digraph:
    if length < 0:
        raise GraphError("length must be nonnegative")
    for _ in range(length):
        D = line_digraph(D)
    return D


def sequence_graph(G: MixedGraph, length: int) -> MixedGraph:
    """Sequence graph of an undirected graph.

    A walk is adjacent to the walks obtained by dropping one end vertex and
    extending at the other end along an edge; a walk and its reversal name
    the same vertex and self-adjacencies are dropped.
    """
    if G.arcs:
        raise GraphError("sequence_graph needs a graph without arcs")
    if length < 1:
        raise GraphError("length must be at least 1")
    nb = G.neighbors
    verts = sorted({min(w, w[::-1]) for w in enumerate_walks(G, length)})
    index = {w: i for i, w in enumerate(verts)}
    edges = set()
    for w, i in index.items():
        nexts = [w[1:] + (x,) for x in nb[w[-1]]]
        nexts += [(x,) + w[:-1] for x in nb[w[0]]]
        for t in nexts:
            j = index[min(t, t[::-1])]
            if i != j:
                edges.add((min(i, j), max(i, j)))
    labels = tuple(WalkLabel(w, True) for w in verts)
    return MixedGraph(len(verts), frozenset(edges), frozenset(), labels)


def _assemble(labels: list[WalkLabel], edge_pairs, arc_pairs) -> MixedGraph:
    """Index labelled adjacencies and fold opposite arcs into edges."""
    order = sorted(labels)
    index = {lab: i for i, lab in enumerate(order)}
    edges = set()
    for a, b in edge_pairs:
        i, j = index[a], index[b]
        if i != j:
            edges.add((min(i, j), max(i, j)))
    arcs = set()
    for a, b in arc_pairs:
        i, j = index[a], index[b]
        if i != j:
            arcs.add((i, j))
    for i, j in list(arcs):
        if (j, i) in arcs:
            edges.add((min(i, j), max(i, j)))
    arcs = {(i, j) for i, j in arcs if (j, i) not in arcs and (min(i, j), max(i, j)) not in edges}
    return MixedGraph(len(order), frozenset(edges), frozenset(arcs), tuple(order))


def sequence_mixed_direct(G: Base, length: int) -> MixedGraph:
    """Sequence mixed graph built vertex by vertex from walk shifts.

    An undirected walk is joined by edges to its shifts (in either
    orientation) along an edge. Any shift whose combined walk uses an arc
    gives an arc from the shifted-out walk to the shifted-in walk.
    """
    if length < 1:
        raise GraphError("length must be at least 1")
    edges = _edge_set(G)
    succ = G.succ
    classes = {_canon_fast(w, edges) for w in enumerate_walks(G, length)}

    edge_pairs = []
    arc_pairs = []
    for lab in classes:
        for w in lab.representatives():
            for x in succ[w[-1]]:
                t = _canon_fast(w[1:] + (x,), edges)
                if t == lab:
                    continue
                if lab.undirected and _is_edge(edges, w[-1], x):
                    edge_pairs.append((lab, t))
                else:
                    arc_pairs.append((lab, t))
    return _assemble(list(classes), edge_pairs, arc_pairs)


def sequence_mixed_quotient(G: Base, length: int) -> MixedGraph:
    """Sequence mixed graph as a quotient of the iterated line digraph of ``G*``.

    Each vertex of ``L^length(G*)`` is merged with its reversal when its walk
    is undirected; class adjacencies are the images of line-digraph arcs, and
    opposite class arcs become edges.
    """
    if length < 1:
        raise GraphError("length must be at least 1")
    edges = _edge_set(G)
    L = iterated_line_digraph(_bare_digraph(G), length)
    cls = [_canon_fast(lab.seq, edges) for lab in L.labels]
    arc_pairs = {(cls[a], cls[b]) for a, b in L.arcs if cls[a] != cls[b]}
    return _assemble(list(set(cls)), (), arc_pairs)


def check_delta1_isomorphism(G: MixedGraph, length: int) -> bool:
    """Compare the sequence mixed graph with ``L^length(G*)`` when max edge degree is 1.

    The comparison is label-preserving, with digons of the line digraph
    read as edges.
    """
    if not isinstance(G, MixedGraph):
        raise GraphError("expected a MixedGraph")
    if G.n and max(len(x) for x in G.neighbors) != 1:
        raise GraphError("maximum undirected degree must be 1")
    if length < 2 or length % 2:
        raise GraphError("length must be even and at least 2")
    S = sequence_mixed_direct(G, length)
    L = from_digraph(iterated_line_digraph(_bare_digraph(G), length))
    if S.n != L.n:
        return False
    s_seq = [lab.seq for lab in S.labels]
    l_seq = [lab.seq for lab in L.labels]
    if sorted(s_seq) != sorted(l_seq):
        return False
    # map L ids to S ids through the shared walk sequence
    s_index = {w: i for i, w in enumerate(s_seq)}
    m = [s_index[w] for w in l_seq]
    l_edges = {(min(m[u], m[v]), max(m[u], m[v])) for u, v in L.edges}
    l_arcs = {(m[u], m[v]) for u, v in L.arcs}
    return l_edges == set(S.edges) and l_arcs == set(S.arcs)
