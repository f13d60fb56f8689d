"""Predicted and measured order / degree profile of sequence mixed graphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import GraphError, MixedGraph


@dataclass(frozen=True)
class CensusPrediction:
    v1: int
    v2: int
    n_total: int
    delta: int
    delta_star: int


def predict_census(n: int, r: int, z: int, length: int) -> CensusPrediction:
    """Order and maximum degrees of ``S^length(G)`` for an ``(r, z)``-regular ``G`` on ``n`` vertices.

    ``v1`` counts all-edge walks up to reversal (palindromes once), ``v2``
    walks using at least one arc. The total is ``v1 + v2``.
    """
    if n < 1 or length < 1:
        raise ValueError("need n >= 1 and length >= 1")
    if r < 0 or z < 0 or r + z == 0:
        raise ValueError("degenerate degrees")
    if length % 2:
        v1 = n * r**length // 2
    else:
        v1 = n * (r**length + r ** (length // 2)) // 2
    v2 = n * ((r + z) ** length - r**length)
    # maxima are taken only over nonempty classes: V1 needs r > 0, V2 needs z > 0
    profiles = []
    if r:
        if r == 1 and length % 2 == 0:
            profiles.append((1, z))
        elif length == 1 or r == 1:
            # for r == 1 and odd length the only edge shift is a dropped loop
            profiles.append((2 * r - 2, 2 * z))
        else:
            profiles.append((2 * r, 2 * z))
    if z:
        profiles.append((0, r + z))
    delta = max(p[0] for p in profiles)
    delta_star = max(p[1] for p in profiles)
    return CensusPrediction(v1, v2, v1 + v2, delta, delta_star)


@dataclass(frozen=True)
class CensusMeasurement:
    v1: int
    v2: int
    n_total: int
    delta: int
    delta_out: int
    delta_in: int
    # (class, d, d+, d-) -> vertex count, class is "V1" or "V2"
    histogram: dict = field(default_factory=dict)

    @property
    def delta_star(self) -> int:
        return max(self.delta_out, self.delta_in)


def measure_census(S: MixedGraph, base_r: int | None = None, base_z: int | None = None) -> CensusMeasurement:
    """Split a labelled sequence mixed graph into V1 / V2 and tally degrees.

    ``base_r`` and ``base_z`` are accepted for symmetry with
    :func:`predict_census`; use :func:`degree_law_violations` to check the
    per-class degree laws against them.
    """
    if S.labels is None:
        raise GraphError("measure_census needs a labelled graph")
    hist: Counter = Counter()
    v1 = 0
    for v, lab in enumerate(S.labels):
        cls = "V1" if lab.undirected else "V2"
        v1 += cls == "V1"
        hist[(cls, len(S.neighbors[v]), len(S.arc_succ[v]), len(S.arc_pred[v]))] += 1
    d = max((len(x) for x in S.neighbors), default=0)
    do = max((len(x) for x in S.arc_succ), default=0)
    di = max((len(x) for x in S.arc_pred), default=0)
    return CensusMeasurement(v1, S.n - v1, S.n, d, do, di, dict(hist))


def degree_law_violations(S: MixedGraph, r: int, z: int, length: int) -> list[tuple]:
    """Vertices whose degrees break the exact laws for a totally ``(r, z)``-regular base.

    Checked laws: V2 vertices have ``d = 0`` and ``d+ = d- = r + z``; for
    ``length == 1`` (or ``r == 1`` and odd length) V1 vertices have
    ``d = 2r - 2`` and ``d+ = d- = 2z``; for ``r == 1`` and even length V1
    vertices have ``d = 1``, ``d+ = d- = z``;
    otherwise V1 vertices satisfy ``d <= 2r`` and ``d+ = d- <= 2z``, with
    palindromes exactly ``(r, z, z)``.
    """
    bad = []
    for v, lab in enumerate(S.labels):
        deg = (len(S.neighbors[v]), len(S.arc_succ[v]), len(S.arc_pred[v]))
        if not lab.undirected:
            ok = deg == (0, r + z, r + z)
        elif r == 1 and length % 2 == 0:
            ok = deg == (1, z, z)
        elif length == 1 or r == 1:
            ok = deg == (2 * r - 2, 2 * z, 2 * z)
        elif lab.seq == lab.seq[::-1]:
            ok = deg == (r, z, z)
        else:
            ok = deg[0] <= 2 * r and deg[1] == deg[2] <= 2 * z
        if not ok:
            bad.append((v, lab, deg))
    return bad
