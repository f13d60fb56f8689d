import pytest
from hypothesis import given

from seqmix.core import GraphError, build
from seqmix.gen import cycle, kautz
from seqmix.io import (
    export_dot,
    import_dot,
    parse_walk,
    read_digraph,
    read_graph,
    read_labels,
    write_graph,
    write_labels,
)
from seqmix.lineage import sequence_mixed_direct

from corpus import mixed_corpus
from test_core import mixed_graphs


def test_text_format_parses_comments_and_normalizes():
    G = read_graph("# hello\nv 3\nA 0 1  # trailing\nA 1 0\nA 1 2\n")
    assert G == build(3, [(0, 1)], [(1, 2)])


@pytest.mark.parametrize(
    "text",
    ["E 0 1\n", "v 2\nv 2\n", "v 2\nX 0 1\n", "v 2\nE 0 5\n", "v 2\nE 0 0\n", "v two\n", "v 2\nE 0\n"],
)
def test_text_format_rejects(text):
    with pytest.raises(GraphError):
        read_graph(text)


@given(mixed_graphs())
def test_text_round_trip(G):
    assert read_graph(write_graph(G)) == G


def test_read_digraph_keeps_arc_pairs():
    D = read_digraph("v 2\nA 0 1\nA 1 0\n")
    assert D.arcs == {(0, 1), (1, 0)}
    assert read_digraph("v 2\nE 0 1\n").arcs == {(0, 1), (1, 0)}


def test_labels_round_trip():
    S = sequence_mixed_direct(kautz(2, 2), 2)
    labels = read_labels(write_labels(S))
    assert labels == S.labels
    assert read_graph(write_graph(S), labels) == S


def test_parse_walk():
    assert parse_walk("3, 1,2") == (3, 1, 2)
    with pytest.raises(GraphError):
        parse_walk("a,b")


def test_dot_export_examples():
    dot = export_dot(build(2, [(0, 1)]))
    assert dot.count("->") == 1 and "dir=none" in dot
    dot = export_dot(cycle(3, directed=True))
    assert dot.count("->") == 3 and "dir=none" not in dot


@pytest.mark.parametrize("name, G", mixed_corpus(), ids=[n for n, _ in mixed_corpus()])
def test_dot_round_trip(name, G):
    assert import_dot(export_dot(G)) == build(G.n, G.edges, G.arcs)


@given(mixed_graphs())
def test_dot_round_trip_random(G):
    H = import_dot(export_dot(G))
    # isolated trailing vertices are still declared as nodes
    assert H == G
