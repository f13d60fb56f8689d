"""Shared graph corpus for property and acceptance tests."""

from __future__ import annotations

import random
from functools import lru_cache

from seqmix.core import Digraph, GraphError, build
from seqmix.gen import (
    bosak,
    complete_bipartite,
    complete_symmetric,
    cycle,
    kautz,
    random_regular_digraph,
    random_regular_mixed,
)
from seqmix.metrics import diameter

REGULAR_SPECS = [
    # (n, r, z, seed)
    (6, 1, 1, 1), (8, 1, 1, 2), (10, 1, 1, 3), (14, 1, 1, 4), (20, 1, 1, 5),
    (10, 1, 2, 6), (6, 2, 1, 7), (8, 2, 1, 8), (10, 2, 1, 9), (12, 2, 1, 10),
    (20, 2, 1, 11), (12, 3, 1, 12), (16, 3, 1, 13), (8, 0, 2, 14), (9, 0, 2, 15),
    (7, 2, 2, 16), (8, 3, 0, 17), (10, 3, 0, 18),
]


def random_mixed(n: int, p_edge: float, p_arc: float, seed: int):
    """Random mixed graph with a spanning directed cycle so it is strongly connected."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in arcs or (v, u) in arcs:
                continue
            x = rng.random()
            if x < p_edge:
                edges.add((u, v))
            elif x < p_edge + p_arc:
                arcs.add((u, v) if rng.random() < 0.5 else (v, u))
    return build(n, edges, arcs)


@lru_cache(maxsize=None)
def mixed_corpus() -> tuple:
    """(name, MixedGraph) pairs, all with at most 20 vertices."""
    items = [
        ("K2", build(2, [(0, 1)])),
        ("K3", complete_symmetric(3, "mixed")),
        ("K4", complete_symmetric(4, "mixed")),
        ("K2,2", complete_bipartite(2, 2)),
        ("K2,3", complete_bipartite(2, 3)),
        ("K3,3", complete_bipartite(3, 3)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("dC3", cycle(3, directed=True)),
        ("dC5", cycle(5, directed=True)),
        ("K(2,2)", kautz(2, 2)),
        ("K(3,2)", kautz(3, 2)),
        ("Bosak", bosak()),
        ("edge+dC3", build(4, [(0, 1)], [(1, 2), (2, 3), (3, 1)])),
    ]
    for n, r, z, seed in REGULAR_SPECS:
        items.append((f"reg({n},{r},{z})#{seed}", random_regular_mixed(n, r, z, seed)))
    for i, (n, pe, pa) in enumerate([(6, 0.3, 0.2), (7, 0.2, 0.3), (8, 0.25, 0.15), (9, 0.15, 0.2)]):
        items.append((f"mixed{n}#{i}", random_mixed(n, pe, pa, 100 + i)))
    return tuple(items)


def strongly_connected(G) -> bool:
    return diameter(G) is not None


@lru_cache(maxsize=None)
def regular_digraph_corpus() -> tuple:
    """Strongly connected regular digraphs, none a directed cycle, n <= 15."""
    items = [
        ("K3*", complete_symmetric(3, "digraph")),
        ("K4*", complete_symmetric(4, "digraph")),
        ("K5*", complete_symmetric(5, "digraph")),
        ("Kautz(2,2)", kautz(2, 2, pure_digraph=True)),
        ("Kautz(3,2)", kautz(3, 2, pure_digraph=True)),
        ("Kautz(2,3)", kautz(2, 3, pure_digraph=True)),
        ("circ(7;1,2)", Digraph(7, frozenset((i, (i + s) % 7) for i in range(7) for s in (1, 2)))),
        ("circ(9;1,3)", Digraph(9, frozenset((i, (i + s) % 9) for i in range(9) for s in (1, 3)))),
        ("circ(11;1,5)", Digraph(11, frozenset((i, (i + s) % 11) for i in range(11) for s in (1, 5)))),
    ]
    seed = 0
    while len(items) < 14:
        seed += 1
        n = 6 + seed % 8
        z = 2 + seed % 2
        try:
            D = random_regular_digraph(n, z, seed)
        except GraphError:
            continue
        if strongly_connected(D):
            items.append((f"rdig({n},{z})#{seed}", D))
    return tuple(items)


@lru_cache(maxsize=None)
def nonregular_digraph_corpus() -> tuple:
    """Strongly connected non-regular digraphs (digons allowed), not cycles."""
    items = []
    seed = 0
    while len(items) < 6:
        seed += 1
        rng = random.Random(500 + seed)
        n = rng.randint(4, 9)
        arcs = {(i, (i + 1) % n) for i in range(n)}
        for _ in range(rng.randint(1, n)):
            u, v = rng.sample(range(n), 2)
            arcs.add((u, v))
        D = Digraph(n, frozenset(arcs))
        outs = {len(x) for x in D.succ} | {len(x) for x in D.pred}
        if len(outs) > 1 and strongly_connected(D):
            items.append((f"nrdig{n}#{seed}", D))
    return tuple(items)
