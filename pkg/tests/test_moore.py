from fractions import Fraction

import numpy as np
import pytest

from seqmix.core import build
from seqmix.gen import bosak, cycle, kautz, complete_symmetric
from seqmix.moore import (
    MooreError,
    MooreStatus,
    classify_moore,
    eigen_parameters,
    moore_bound,
    moore_bound_closed,
    moore_layers,
)
from seqmix.core import degree_extremes

from corpus import mixed_corpus
from seqmix.metrics import diameter


def matrix_form(r, z, k):
    """Exact (1 1)(M^{k+1} - I)(r, 2-r)^T / (r + 2z - 2), a third route."""
    M = [[Fraction(r - 1), Fraction(r)], [Fraction(z), Fraction(z)]]

    def mul(A, B):
        return [[sum(A[i][t] * B[t][j] for t in range(2)) for j in range(2)] for i in range(2)]

    P = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    for _ in range(k + 1):
        P = mul(P, M)
    P[0][0] -= 1
    P[1][1] -= 1
    vec = (r, 2 - r)
    total = sum(P[i][0] * vec[0] + P[i][1] * vec[1] for i in range(2))
    return total / (r + 2 * z - 2)


def test_values_from_bosak_discussion():
    assert moore_bound(4, 4, 3) == 521
    assert moore_bound(4, 3, 3) == 344
    assert moore_bound(4, 3, 2) == 53


@pytest.mark.parametrize("d", range(1, 11))
def test_kautz_diameter_four_polynomial(d):
    assert moore_bound(1, d, 4) == d**4 + 5 * d**3 + 7 * d**2 + 4 * d + 2


def test_table_structure():
    t = moore_layers(3, 1, 4)
    assert t.layers[0] == (0, 1, 1)
    for (R0, Z0, _), (R1, Z1, N1) in zip(t.layers, t.layers[1:]):
        assert (R1, Z1) == (2 * R0 + 3 * Z0, R0 + Z0) and N1 == R1 + Z1
    assert t.total == sum(N for *_, N in t.layers)


def test_big_integers_beyond_64_bits():
    assert moore_bound(20, 20, 14) > 2**63
    assert moore_bound(20, 20, 14) == matrix_form(20, 20, 14)


def test_invalid_parameters():
    with pytest.raises(MooreError):
        moore_layers(0, 0, 2)
    with pytest.raises(MooreError):
        moore_layers(-1, 2, 2)


@pytest.mark.parametrize("r, z", [(0, 1), (2, 0), (1, 0)])
def test_closed_form_forbidden(r, z):
    with pytest.raises(MooreError):
        moore_bound_closed(r, z, 3)
    # the recurrence has no such restriction
    assert moore_layers(r, z, 3).closed_form is None


def test_closed_form_value():
    assert moore_bound_closed(4, 4, 3) == pytest.approx(521.0, abs=1e-6)


@pytest.mark.parametrize("z", range(2, 7))
@pytest.mark.parametrize("k", range(0, 6))
def test_directed_specialization(z, k):
    assert moore_bound(0, z, k) == (z ** (k + 1) - 1) // (z - 1)
    assert moore_bound_closed(0, z, k) == pytest.approx((z ** (k + 1) - 1) / (z - 1), rel=1e-12)


@pytest.mark.parametrize("r", range(3, 8))
@pytest.mark.parametrize("k", range(1, 6))
def test_undirected_specialization(r, k):
    expected = 1 + r * ((r - 1) ** k - 1) // (r - 2)
    assert moore_bound(r, 0, k) == expected
    assert moore_bound_closed(r, 0, k) == pytest.approx(expected, rel=1e-12)


def test_closed_form_grid_up_to_twenty():
    for r in range(0, 21):
        for z in range(0, 21):
            if r + z == 0 or r + 2 * z == 2 or (r, z) == (1, 0):
                continue
            for k in range(0, 11):
                exact = moore_bound(r, z, k)
                approx = moore_bound_closed(r, z, k)
                assert abs(approx - exact) <= 1e-9 * exact


def test_matrix_form_agrees_with_recurrence():
    for r in range(0, 7):
        for z in range(0, 7):
            if r + z == 0 or r + 2 * z == 2:
                continue
            for k in range(0, 7):
                assert matrix_form(r, z, k) == moore_bound(r, z, k)


def test_eigenvalues_are_roots_of_characteristic_polynomial():
    for r in range(0, 7):
        for z in range(0, 7):
            if r + z == 0 or (r, z) == (1, 0):
                continue
            _, u1, u2, _, _ = eigen_parameters(r, z)
            M = np.array([[r - 1, r], [z, z]], dtype=float)
            tr, det = np.trace(M), np.linalg.det(M)
            for u in (u1, u2):
                assert abs(u * u - tr * u + det) < 1e-9
            assert sorted(np.linalg.eigvals(M).real) == pytest.approx(sorted((u1, u2)), abs=1e-9)


def test_displayed_inverse():
    for r in range(0, 7):
        for z in range(0, 7):
            if r + 2 * z == 2:
                continue
            s = Fraction(1, r + 2 * z - 2)
            Minv = [[(1 - z) * s, r * s], [z * s, (2 - r) * s]]
            MI = [[r - 2, r], [z, z - 1]]
            prod = [[sum(MI[i][t] * Minv[t][j] for t in range(2)) for j in range(2)] for i in range(2)]
            assert prod == [[1, 0], [0, 1]]


def test_monotone_in_each_argument():
    for r in range(0, 6):
        for z in range(0, 6):
            if r + z < 2:
                continue
            for k in range(1, 6):
                m = moore_bound(r, z, k)
                assert moore_bound(r + 1, z, k) > m
                assert moore_bound(r, z + 1, k) > m
                assert moore_bound(r, z, k + 1) > m


def test_classify_examples():
    v = classify_moore(bosak())
    assert v.status is MooreStatus.MOORE and (v.r, v.z, v.k, v.bound) == (3, 1, 2, 18)
    for d in (2, 3, 4):
        assert classify_moore(kautz(d, 2)).status is MooreStatus.MOORE
    c = classify_moore(cycle(3, directed=True))
    assert c.status is MooreStatus.MOORE and c.degenerate_cycle and c.bound == 3
    assert classify_moore(build(3, [(0, 1), (1, 2)])).status is MooreStatus.NOT_TOTALLY_REGULAR
    two_triangles = build(6, [], [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert classify_moore(two_triangles).status is MooreStatus.NOT_STRONGLY_CONNECTED


def test_classify_almost_and_below():
    # K4 minus a perfect matching is C4 = K_{2,2}: (2,0), k=2 bound 5, order 4
    from seqmix.gen import complete_bipartite

    v = classify_moore(complete_bipartite(2, 2))
    assert v.status is MooreStatus.ALMOST_MOORE and v.deficit == 1
    v = classify_moore(complete_symmetric(4, "mixed"))
    assert v.status is MooreStatus.MOORE
    v = classify_moore(cycle(7))
    assert v.status is MooreStatus.MOORE and v.degenerate_cycle
    v = classify_moore(complete_bipartite(3, 3))
    assert v.status is MooreStatus.BELOW_BOUND and v.deficit == 10 - 6


@pytest.mark.parametrize("name, G", mixed_corpus(), ids=[n for n, _ in mixed_corpus()])
def test_order_never_exceeds_moore_bound(name, G):
    k = diameter(G)
    if k is None:
        pytest.skip("not strongly connected")
    d, do, _ = degree_extremes(G)
    if d + do == 0:
        pytest.skip("single vertex")
    assert G.n <= moore_bound(d, do, k)
