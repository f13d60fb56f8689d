"""Moore bounds for mixed graphs and Moore / almost-Moore classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import MixedGraph, total_regularity
from .metrics import diameter as _diameter


class MooreError(ValueError):
    pass


@dataclass(frozen=True)
class MooreTable:
    """Per-distance vertex counts of the Moore tree.

    ``layers[i] = (R_i, Z_i, N_i)`` where ``R_i`` counts vertices reached from
    their parent by an edge and ``Z_i`` those reached by an arc.
    """

    r: int
    z: int
    k: int
    layers: tuple[tuple[int, int, int], ...]
    total: int
    closed_form: float | None = None


def moore_layers(r: int, z: int, k: int) -> MooreTable:
    """Moore bound ``M(r, z, k)`` by iterating ``(R, Z) <- (r-1)R + rZ, z(R + Z)``."""
    if r < 0 or z < 0 or k < 0:
        raise MooreError("degrees and diameter must be nonnegative")
    if r + z < 1:
        raise MooreError("at least one of r, z must be positive")
    R, Z = 0, 1
    layers = [(R, Z, R + Z)]
    for _ in range(k):
        R, Z = (r - 1) * R + r * Z, z * (R + Z)
        layers.append((R, Z, R + Z))
    total = sum(N for _, _, N in layers)
    try:
        closed = moore_bound_closed(r, z, k)
    except MooreError:
        closed = None
    return MooreTable(r, z, k, tuple(layers), total, closed)


def moore_bound(r: int, z: int, k: int) -> int:
    return moore_layers(r, z, k).total


def eigen_parameters(r: int, z: int) -> tuple[float, float, float, float, float]:
    """Return ``(v, u1, u2, A, B)``; ``u1, u2`` are the eigenvalues of the layer matrix."""
    v = (z + r) ** 2 + 2 * (z - r) + 1
    sv = math.sqrt(v)
    u1 = 0.5 * (z + r - 1 - sv)
    u2 = 0.5 * (z + r - 1 + sv)
    if sv == 0:
        raise MooreError(f"repeated eigenvalue for (r, z) = ({r}, {z})")
    A = (sv - (z + r + 1)) / (2 * sv)
    B = (sv + (z + r + 1)) / (2 * sv)
    return v, u1, u2, A, B


def moore_bound_closed(r: int, z: int, k: int) -> float:
    """Floating-point closed form of the mixed Moore bound.

    Undefined for ``r + 2z == 2`` (directed and undirected cycles), where an
    eigenvalue equals 1, and for ``(r, z) = (1, 0)`` where the eigenvalues
    coincide.
    """
    if r < 0 or z < 0 or k < 0 or r + z < 1:
        raise MooreError("invalid parameters")
    if r + 2 * z == 2:
        raise MooreError(f"(r, z) = ({r}, {z}) is a cycle case; closed form undefined")
    _, u1, u2, A, B = eigen_parameters(r, z)
    if u1 == 1 or u2 == 1:
        raise MooreError("unit eigenvalue")
    return A * (u1 ** (k + 1) - 1) / (u1 - 1) + B * (u2 ** (k + 1) - 1) / (u2 - 1)


class MooreStatus(enum.Enum):
    MOORE = "moore"
    ALMOST_MOORE = "almost_moore"
    BELOW_BOUND = "below_bound"
    NOT_TOTALLY_REGULAR = "not_totally_regular"
    NOT_STRONGLY_CONNECTED = "not_strongly_connected"


@dataclass(frozen=True)
class MooreVerdict:
    status: MooreStatus
    r: int | None = None
    z: int | None = None
    k: int | None = None
    bound: int | None = None
    deficit: int | None = None
    # cycles attain the bound trivially
    degenerate_cycle: bool = False


def classify_moore(G: MixedGraph) -> MooreVerdict:
    reg = total_regularity(G)
    if reg is None:
        return MooreVerdict(MooreStatus.NOT_TOTALLY_REGULAR)
    r, z = reg
    if r + z == 0:
        return MooreVerdict(MooreStatus.NOT_STRONGLY_CONNECTED, r, z)
    k = _diameter(G)
    if k is None:
        return MooreVerdict(MooreStatus.NOT_STRONGLY_CONNECTED, r, z)
    bound = moore_bound(r, z, k)
    deficit = bound - G.n
    if deficit == 0:
        status = MooreStatus.MOORE
    elif deficit == 1:
        status = MooreStatus.ALMOST_MOORE
    else:
        status = MooreStatus.BELOW_BOUND
    return MooreVerdict(status, r, z, k, bound, deficit, r + 2 * z == 2)
