import random

import pytest

from seqmix.core import GraphError, build
from seqmix.gen import bosak, complete_bipartite, cycle, kautz, random_regular_mixed
from seqmix.lineage import WalkLabel, sequence_mixed_direct
from seqmix.metrics import all_pairs, distances_from
from seqmix.route import RoutePath, route, route_is_valid


def check_pairs(G, length, pairs):
    S = sequence_mixed_direct(G, length)
    dist = all_pairs(S).dist
    kG = all_pairs(G).diameter
    for i, j in pairs:
        path = route(G, length, S.labels[i], S.labels[j])
        assert path.steps[0] == S.labels[i] and path.steps[-1] == S.labels[j]
        assert route_is_valid(S, path)
        assert path.length == path.p + length
        assert path.length <= kG + length
        assert path.length >= dist[i, j]


def test_route_examples():
    G = cycle(6, directed=True)
    p = route(G, 2, (0, 1, 2), (3, 4, 5))
    assert [s.seq for s in p.steps] == [(0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 5)]
    assert p.p == 1 and p.length == 3
    q = route(G, 2, (0, 1, 2), (2, 3, 4))
    assert q.p == 0 and q.length == 2
    assert route(G, 1, (0, 1), (0, 1)) == RoutePath((WalkLabel((0, 1)),), 0)


def test_route_uses_reversal_of_undirected_walks():
    P = cycle(8)
    # (2,1,0) is stored as (0,1,2); its reversal ends next to 3
    p = route(P, 2, (2, 1, 0), (3, 4, 5))
    assert p.p == 1 and p.length == 3
    p = route(P, 2, (2, 1, 0), (2, 3, 4))
    assert p.p == 0 and p.length == 2


def test_route_errors():
    G = build(3, [], [(0, 1), (1, 2)])
    with pytest.raises(GraphError):
        route(G, 1, (1, 2), (0, 1))
    with pytest.raises(GraphError):
        route(G, 1, (0, 1, 2), (0, 1))
    with pytest.raises(GraphError):
        route(G, 1, (0, 2), (0, 1))


def test_route_is_valid_rejects_foreign_steps():
    S = sequence_mixed_direct(kautz(2, 2), 2)
    assert not route_is_valid(S, RoutePath((WalkLabel((9, 9, 9)),), 0))
    bad = RoutePath((S.labels[0], S.labels[0]), 0)
    assert not route_is_valid(S, bad)


@pytest.mark.parametrize("G, length", [
    (kautz(2, 2), 1), (kautz(2, 2), 2), (kautz(3, 2), 2), (bosak(), 1),
    (complete_bipartite(3, 3), 2), (cycle(5), 2), (cycle(6), 4), (random_regular_mixed(8, 2, 1, 3), 2),
])
def test_all_pairs_small(G, length):
    S = sequence_mixed_direct(G, length)
    if S.n > 50:
        rng = random.Random(0)
        pairs = [tuple(rng.sample(range(S.n), 2)) for _ in range(300)]
    else:
        pairs = [(i, j) for i in range(S.n) for j in range(S.n) if i != j]
    check_pairs(G, length, pairs)


def test_route_length_matches_base_distance():
    G = kautz(2, 2)
    S = sequence_mixed_direct(G, 1)
    for i in range(S.n):
        for j in range(S.n):
            if i == j:
                continue
            p = route(G, 1, S.labels[i], S.labels[j])
            best = min(distances_from(G, a[-1])[b[0]]
                       for a in S.labels[i].representatives()
                       for b in S.labels[j].representatives())
            assert p.p >= best


def test_alternating_walk_with_odd_length_needs_a_longer_base_walk():
    # every shortest base path out of (0,1,0,1) shifts back into its own class
    G = cycle(5)
    S = sequence_mixed_direct(G, 3)
    p = route(G, 3, (0, 1, 0, 1), (0, 1, 0, 4))
    assert route_is_valid(S, p) and p.length == p.p + 3
    # the shift scheme needs 6 steps here, above diam(G) + 3 = 5, while S has an arc
    assert p.length == 6
    i = S.labels.index(WalkLabel((0, 1, 0, 1), True))
    j = S.labels.index(WalkLabel((0, 1, 0, 4), True))
    assert all_pairs(S).dist[i, j] == 1


@pytest.mark.parametrize("G", [cycle(5), cycle(6), complete_bipartite(2, 3)])
def test_every_pair_routes_for_odd_length(G):
    S = sequence_mixed_direct(G, 3)
    dist = all_pairs(S).dist
    for i in range(S.n):
        for j in range(S.n):
            if i != j:
                p = route(G, 3, S.labels[i], S.labels[j])
                assert route_is_valid(S, p) and p.length == p.p + 3 >= dist[i, j]
