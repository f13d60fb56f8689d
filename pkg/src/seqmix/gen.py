"""Generators for the graph families used throughout the package."""

from __future__ import annotations

import os
import random
from importlib import resources
from itertools import product
from pathlib import Path

from .core import Digraph, GraphError, MixedGraph, build, from_digraph
from .lineage import WalkLabel
from .reduce import _perfect_matching

FIXTURE_ENV = "SEQMIX_FIXTURES"


def kautz_words(d: int, n: int) -> list[tuple[int, ...]]:
    """Words of length ``n`` over ``{0..d}`` with no two equal consecutive letters."""
    return [w for w in product(range(d + 1), repeat=n) if all(a != b for a, b in zip(w, w[1:]))]


def kautz(d: int, n: int, pure_digraph: bool = False) -> MixedGraph | Digraph:
    """Kautz digraph ``K(d, n)``: ``w -> w[1:] + (x,)`` for every ``x != w[-1]``.

    As a mixed graph the digons between alternating words become edges;
    ``pure_digraph=True`` keeps them as arc pairs.
    """
    if d < 1 or n < 1:
        raise GraphError("kautz needs d >= 1 and n >= 1")
    words = kautz_words(d, n)
    index = {w: i for i, w in enumerate(words)}
    arcs = set()
    for w, i in index.items():
        for x in range(d + 1):
            if x != w[-1]:
                arcs.add((i, index[w[1:] + (x,)]))
    D = Digraph(len(words), frozenset(arcs), tuple(WalkLabel(w, False) for w in words))
    return D if pure_digraph else from_digraph(D)


def complete_symmetric(n: int, mode: str = "digraph") -> MixedGraph | Digraph:
    if n < 2:
        raise GraphError("complete_symmetric needs n >= 2")
    if mode == "digraph":
        return Digraph(n, frozenset((u, v) for u in range(n) for v in range(n) if u != v))
    if mode == "mixed":
        return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    raise GraphError(f"unknown mode {mode!r}")


def complete_bipartite(m: int, n: int) -> MixedGraph:
    if m < 1 or n < 1:
        raise GraphError("part sizes must be positive")
    return build(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def cycle(n: int, directed: bool = False) -> MixedGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    pairs = [(i, (i + 1) % n) for i in range(n)]
    return build(n, arcs=pairs) if directed else build(n, edges=pairs)


def _fixture_path(name: str) -> Path:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override) / name
    return Path(str(resources.files("seqmix") / "data" / name))


def bosak() -> MixedGraph:
    """The (3, 1) mixed Moore graph on 18 vertices, loaded from the fixture file.

    The file is not trusted: anything that fails the Moore check is refused.
    """
    from .io import read_graph
    from .moore import MooreStatus, classify_moore

    path = _fixture_path("bosak.txt")
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphError(f"cannot read Bosak fixture {path}: {exc}") from exc
    G = read_graph(text)
    verdict = classify_moore(G)
    if verdict.status is not MooreStatus.MOORE or (verdict.r, verdict.z) != (3, 1):
        raise GraphError(f"fixture {path} is not a (3, 1) mixed Moore graph: {verdict}")
    return G


def random_regular_digraph(n: int, z: int, seed: int | None = None,
                           forbidden: frozenset = frozenset(), max_tries: int = 2_000) -> Digraph:
    """Random ``z``-regular digraph without loops or digons.

    Built as a union of ``z`` permutations. Each one is a perfect matching of
    the still-allowed (tail, head) pairs found from shuffled candidate lists,
    retried if it contains a 2-cycle. ``forbidden`` lists unordered pairs (as
    ``(min, max)``) that may not carry an arc.
    """
    rng = random.Random(seed)
    for _ in range(max_tries):
        arcs: set = set()
        for _ in range(z):
            for _ in range(50):
                adj = []
                for u in range(n):
                    cand = [v for v in range(n) if u != v and (u, v) not in arcs
                            and (v, u) not in arcs and (min(u, v), max(u, v)) not in forbidden]
                    rng.shuffle(cand)
                    adj.append(cand)
                perm = _perfect_matching(n, adj)
                if perm is not None and all(perm[v] != u for u, v in enumerate(perm)):
                    arcs.update(enumerate(perm))
                    break
            else:
                break
        else:
            return Digraph(n, frozenset(arcs))
    raise GraphError(f"could not sample a {z}-regular digraph on {n} vertices")


def random_regular_graph(n: int, r: int, seed: int | None = None, max_tries: int = 10_000) -> set:
    """Edge set of a random simple ``r``-regular graph (pairing model with restarts)."""
    if (n * r) % 2 or r >= n:
        raise GraphError(f"no simple {r}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(r)]
        rng.shuffle(stubs)
        edges = set()
        for a, b in zip(stubs[::2], stubs[1::2]):
            e = (min(a, b), max(a, b))
            if a == b or e in edges:
                break
            edges.add(e)
        else:
            return edges
    raise GraphError(f"could not sample a {r}-regular graph on {n} vertices")


def random_regular_mixed(n: int, r: int, z: int, seed: int | None = None) -> MixedGraph:
    """Random totally ``(r, z)``-regular mixed graph on ``n`` vertices."""
    rng = random.Random(seed)
    edges = random_regular_graph(n, r, rng.randrange(2**32)) if r else set()
    arcs = random_regular_digraph(n, z, rng.randrange(2**32), frozenset(edges)).arcs if z else ()
    return build(n, edges, arcs)
