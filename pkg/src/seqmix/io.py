"""Text and DOT serialization.

Text format::

    # comment
    v 3
    E 0 1
    A 1 2

Label sidecars hold one ``<id> <comma-separated walk> <U|D>`` line per vertex.
"""

from __future__ import annotations

import re

from .core import Digraph, GraphError, MixedGraph, build
from .lineage import WalkLabel


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _parse(text: str):
    n = None
    edges, arcs = [], []
    for lineno, tok in _tokens(text):
        kind = tok[0]
        try:
            if kind == "v" and len(tok) == 2:
                if n is not None:
                    raise GraphError("duplicate 'v' line")
                n = int(tok[1])
            elif kind in ("E", "A") and len(tok) == 3:
                (edges if kind == "E" else arcs).append((int(tok[1]), int(tok[2])))
            else:
                raise GraphError(f"unrecognized line {' '.join(tok)!r}")
        except (ValueError, GraphError) as exc:
            raise GraphError(f"line {lineno}: {exc}") from exc
    if n is None:
        raise GraphError("missing 'v <n>' line")
    return n, edges, arcs


def read_graph(text: str, labels=None) -> MixedGraph:
    n, edges, arcs = _parse(text)
    return build(n, edges, arcs, labels)


def read_digraph(text: str, labels=None) -> Digraph:
    """Read keeping opposite arcs separate; ``E`` lines become arc pairs."""
    n, edges, arcs = _parse(text)
    out = set()
    for u, v in arcs:
        if (u, v) in out:
            raise GraphError(f"duplicate arc {(u, v)}")
        out.add((u, v))
    for u, v in edges:
        if (u, v) in out or (v, u) in out:
            raise GraphError(f"edge {(u, v)} duplicates an arc")
        out.update({(u, v), (v, u)})
    return Digraph(n, frozenset(out), tuple(labels) if labels is not None else None)


def write_graph(G: MixedGraph | Digraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"v {G.n}")
    lines.extend(f"E {u} {v}" for u, v in sorted(G.edges))
    lines.extend(f"A {u} {v}" for u, v in sorted(G.arcs))
    return "\n".join(lines) + "\n"


def write_labels(G: MixedGraph | Digraph) -> str:
    if G.labels is None:
        raise GraphError("graph has no labels")
    out = []
    for i, lab in enumerate(G.labels):
        if isinstance(lab, WalkLabel):
            out.append(f"{i} {lab} {'U' if lab.undirected else 'D'}")
        else:
            out.append(f"{i} {','.join(map(str, lab))} D")
    return "\n".join(out) + "\n"


def read_labels(text: str) -> tuple[WalkLabel, ...]:
    rows = {}
    for lineno, tok in _tokens(text):
        if len(tok) != 3 or tok[2] not in ("U", "D"):
            raise GraphError(f"label line {lineno}: expected '<id> <walk> <U|D>'")
        rows[int(tok[0])] = WalkLabel(parse_walk(tok[1]), tok[2] == "U")
    if sorted(rows) != list(range(len(rows))):
        raise GraphError("label ids must be 0..n-1")
    return tuple(rows[i] for i in range(len(rows)))


def parse_walk(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise GraphError(f"bad walk {text!r}") from exc


def export_dot(G: MixedGraph) -> str:
    """DOT digraph; edges are written once with ``dir=none``."""
    lines = ["digraph G {"]
    for v in range(G.n):
        if G.labels is not None:
            lines.append(f'  {v} [label="{G.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -> {v} [dir=none];" for u, v in sorted(G.edges))
    lines.extend(f"  {u} -> {v};" for u, v in sorted(G.arcs))
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r"^\s*(\d+)\s*(\[.*\])?\s*;\s*$")
_LINK = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*(\[(.*)\])?\s*;\s*$")


def import_dot(text: str) -> MixedGraph:
    """Read back the subset of DOT written by :func:`export_dot` (labels are dropped)."""
    nodes, edges, arcs = set(), [], []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("digraph", "}")):
            continue
        m = _LINK.match(line)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            nodes.update((u, v))
            attrs = m.group(4) or ""
            (edges if "dir=none" in attrs.replace(" ", "") else arcs).append((u, v))
            continue
        m = _NODE.match(line)
        if m:
            nodes.add(int(m.group(1)))
            continue
        raise GraphError(f"unsupported DOT line {line!r}")
    n = max(nodes) + 1 if nodes else 0
    return build(n, edges, arcs)
