"""Routing between vertices of a sequence mixed graph by walk shifting.

To go from walk ``u`` to walk ``v`` take a shortest base path from the last
vertex of ``u`` to the first vertex of ``v`` and slide a window of
``length + 1`` vertices along ``u + path + v``. Each slide is one step of the
sequence mixed graph, so the route has ``p + length`` steps where ``p`` is
the base distance used.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import GraphError, MixedGraph
from .lineage import Base, WalkLabel, canonical_walk


@dataclass(frozen=True)
class RoutePath:
    steps: tuple[WalkLabel, ...]
    p: int

    @property
    def length(self) -> int:
        return len(self.steps) - 1


def _shortest_path(G: Base, s: int, t: int) -> list[int] | None:
    """BFS path visiting neighbours in ascending id order."""
    if s == t:
        return [s]
    succ = G.succ
    parent = {s: s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in succ[x]:
            if y not in parent:
                parent[y] = x
                if y == t:
                    path = [t]
                    while path[-1] != s:
                        path.append(parent[path[-1]])
                    return path[::-1]
                queue.append(y)
    return None


def _windows(seq: list[int], length: int, G: Base) -> list[WalkLabel]:
    return [canonical_walk(seq[i:i + length + 1], G) for i in range(len(seq) - length)]


def route(G: Base, length: int, u, v) -> RoutePath:
    """Shift-route from ``u`` to ``v`` in ``S^length(G)``.

    ``u`` and ``v`` may be :class:`WalkLabel` objects or plain walk tuples.
    For undirected endpoints both orientations are tried, and the pair with
    the smallest base distance whose windows never repeat a vertex wins.
    If every shortest base path produces such a repeat (alternating walks
    with odd ``length``), longer base walks are tried in order of length; the
    route then keeps ``length = p + length`` but may exceed ``diam(G) + length``.
    ``u == v`` yields the zero-length route.
    """
    u = canonical_walk(u.seq if isinstance(u, WalkLabel) else u, G)
    v = canonical_walk(v.seq if isinstance(v, WalkLabel) else v, G)
    if len(u.seq) != length + 1 or len(v.seq) != length + 1:
        raise GraphError(f"walks must have {length} steps")
    if u == v:
        return RoutePath((u,), 0)

    candidates = []
    for ur in u.representatives():
        for vr in v.representatives():
            path = _shortest_path(G, ur[-1], vr[0])
            if path is not None:
                candidates.append((len(path) - 1, ur, vr, path))
    if not candidates:
        raise GraphError(f"{v} is unreachable from {u}")
    candidates.sort(key=lambda c: c[0])
    for p, ur, vr, path in candidates:
        steps = _loop_free(ur, path, vr, length, G)
        if steps is not None:
            return RoutePath(steps, p)
    # every shortest path runs into an alternating window; try longer base walks
    p_min = candidates[0][0]
    for p in range(p_min + 1, p_min + G.n + 2 * length + 3):
        for ur in u.representatives():
            for vr in v.representatives():
                for walk in _walks(G, ur[-1], vr[0], p):
                    steps = _loop_free(ur, walk, vr, length, G)
                    if steps is not None:
                        return RoutePath(steps, p)
    raise GraphError(f"no loop-free shift route from {u} to {v}")


def _loop_free(ur, path, vr, length, G) -> tuple[WalkLabel, ...] | None:
    seq = list(ur) + list(path[1:-1]) + list(vr) if len(path) > 1 else list(ur) + list(vr[1:])
    steps = _windows(seq, length, G)
    # a window equal to its predecessor would be a loop, which S^l does not have
    if all(a != b for a, b in zip(steps, steps[1:])):
        return tuple(steps)
    return None


def _walks(G: Base, s: int, t: int, p: int):
    """Walks with exactly ``p`` steps from ``s`` to ``t``, in lexicographic order."""
    succ, pred = G.succ, G.pred
    # dist[x]: shortest distance x -> t, used to prune hopeless prefixes
    dist = {t: 0}
    queue = deque([t])
    while queue:
        x = queue.popleft()
        for y in pred[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    stack = [(s, [s])]
    while stack:
        x, walk = stack.pop()
        left = p - (len(walk) - 1)
        if left == 0:
            if x == t:
                yield walk
            continue
        for y in sorted(succ[x], reverse=True):
            if dist.get(y, p + 1) <= left - 1:
                stack.append((y, walk + [y]))


def route_is_valid(S: MixedGraph, path: RoutePath) -> bool:
    """Check that consecutive steps are adjacencies of ``S`` traversed forward."""
    index = {lab: i for i, lab in enumerate(S.labels)}
    try:
        ids = [index[lab] for lab in path.steps]
    except KeyError:
        return False
    return all(S.adjacent(a, b) for a, b in zip(ids, ids[1:]))
