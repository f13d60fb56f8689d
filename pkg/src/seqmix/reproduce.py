"""Reproduction table: every headline number, recomputed from scratch."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .census import measure_census, predict_census
from .core import degree_extremes, total_regularity
from .gen import bosak, complete_symmetric, kautz
from .lineage import check_delta1_isomorphism, sequence_mixed_direct
from .metrics import diameter
from .moore import MooreStatus, classify_moore, moore_bound
from .reduce import reduce_sequence_graph, reduction_report


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    measured: object

    @property
    def passed(self) -> bool:
        return self.expected == self.measured


def _moore_checks() -> list[Check]:
    out = [
        Check("M(4,4,3)", 521, moore_bound(4, 4, 3)),
        Check("M(4,3,3)", 344, moore_bound(4, 3, 3)),
        Check("M(4,3,2)", 53, moore_bound(4, 3, 2)),
    ]
    poly = [d**4 + 5 * d**3 + 7 * d**2 + 4 * d + 2 for d in range(1, 11)]
    out.append(Check("M(1,d,4) polynomial, d=1..10", poly,
                     [moore_bound(1, d, 4) for d in range(1, 11)]))
    return out


def _bosak_checks() -> list[Check]:
    G = bosak()
    S = sequence_mixed_direct(G, 1)
    d, do, _ = degree_extremes(S)
    pred = predict_census(G.n, 3, 1, 1)
    meas = measure_census(S)
    red = reduce_sequence_graph(G, 1, 1, S)
    rep = reduction_report(G, 1, 1, red)
    return [
        Check("Bosak order", 18, G.n),
        Check("Bosak (r,z)", (3, 1), total_regularity(G)),
        Check("Bosak diameter", 2, diameter(G)),
        Check("Bosak Moore", MooreStatus.MOORE.value, classify_moore(G).status.value),
        Check("|S1(Bosak)|", 45, S.n),
        Check("S1(Bosak) census (V1,V2)", (pred.v1, pred.v2), (meas.v1, meas.v2)),
        Check("S1(Bosak) (D, D*, k)", (4, 4, 3), (d, do, diameter(S))),
        Check("Moore ref of S1(Bosak)", 521, rep.source_moore_ref),
        Check("|S1_m(Bosak)|", 45, rep.order),
        Check("S1_m(Bosak) (D, D*, k)", (4, 3, 3), (rep.delta, rep.delta_out, rep.diameter)),
        Check("Moore ref of S1_m(Bosak)", 344, rep.moore_ref),
    ]


def _kautz_checks() -> list[Check]:
    out = []
    for delta in (2, 3, 4):
        out.append(Check(f"K({delta},2) Moore", MooreStatus.MOORE.value,
                         classify_moore(kautz(delta, 2)).status.value))
    for delta in (2, 3):
        S = sequence_mixed_direct(kautz(delta, 2), 2)
        out.append(Check(f"|S2(K({delta},2))|", delta**3 * (delta + 1), S.n))
    out.append(Check("diam S2(K(2,2))", 4, diameter(sequence_mixed_direct(kautz(2, 2), 2))))
    for delta in (2, 3):
        out.append(Check(f"S2(K({delta},2)) = L2 up to digons", True,
                         check_delta1_isomorphism(kautz(delta, 2), 2)))
    rep = reduction_report(complete_symmetric(9, "digraph"), 2, 1)
    out.append(Check("S2_m(K9*) (D, D*)", (2, 7), (rep.delta, rep.delta_out)))
    return out


def headline_checks() -> list[Check]:
    return _moore_checks() + _bosak_checks() + _kautz_checks()


@dataclass(frozen=True)
class TrendRow:
    d: int
    order: int
    delta: int
    delta_out: int
    diameter: int
    moore_ref: int
    ratio: Fraction
    target: Fraction

    @property
    def gap(self) -> Fraction:
        return abs(self.ratio - self.target)


def ratio_trend(ds=(4, 8, 16, 32), r_prime: int = 1, length: int = 2,
                progress: Callable[[int], None] | None = None) -> list[TrendRow]:
    """Reduced sequence graphs of complete symmetric digraphs on ``d + 1`` vertices."""
    rows = []
    for d in ds:
        if progress:
            progress(d)
        rep = reduction_report(complete_symmetric(d + 1, "digraph"), length, r_prime)
        target = (1 + Fraction(r_prime, d)) ** rep.diameter
        rows.append(TrendRow(d, rep.order, rep.delta, rep.delta_out, rep.diameter,
                             rep.moore_ref, rep.ratio, target))
    return rows


def format_table(checks: list[Check], sep: str = "\t") -> str:
    lines = [sep.join(("check", "expected", "measured", "status"))]
    for c in checks:
        lines.append(sep.join((c.name, str(c.expected), str(c.measured),
                               "PASS" if c.passed else "FAIL")))
    return "\n".join(lines) + "\n"


def format_trend(rows: list[TrendRow], sep: str = "\t") -> str:
    head = ("d", "order", "delta", "delta_out", "diameter", "moore_ref",
            "ratio", "ratio_dec", "target_dec", "gap_dec")
    lines = [sep.join(head)]
    for r in rows:
        lines.append(sep.join(map(str, (
            r.d, r.order, r.delta, r.delta_out, r.diameter, r.moore_ref, r.ratio,
            f"{float(r.ratio):.6f}", f"{float(r.target):.6f}", f"{float(r.gap):.6f}",
        ))))
    return "\n".join(lines) + "\n"
