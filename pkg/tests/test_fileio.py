from fractions import Fraction

import pytest

from pfcond.embedding import PlaneGraph
from pfcond.families import aztec, grid
from pfcond.fileio import (FormatError, format_embedding, format_graph, format_orientation, format_skew,
                           parse_embedding, parse_graph, parse_orientation, parse_skew, read)
from pfcond.kasteleyn import kasteleyn_orient
from pfcond.pfaffian import SkewArray


def test_graph_roundtrip():
    g, _ = grid(2, 3)
    g = g.with_weights({0: Fraction(3, 4), 1: -2})
    assert parse_graph(format_graph(g)) == g


def test_graph_comments_and_default_weight():
    g = parse_graph("# demo\nvertices: a b\n\nedge: a b   # weight defaults to 1\n")
    assert g.edges[0].w == 1 and g.edges[0].eid == 0


@pytest.mark.parametrize("text", [
    "edge: a b\n",
    "vertices: a b\nedge: a\n",
    "vertices: a b\nedge: a b x\n",
    "vertices: a b\nedge: a c\n",
    "vertices: a\nvertices: b\n",
    "vertices: a b\nline: a b\n",
])
def test_bad_graphs(text):
    with pytest.raises(FormatError):
        parse_graph(text)


def test_skew_roundtrip_and_lower_entries():
    a = SkewArray(4, {(0, 1): 2, (2, 3): Fraction(-1, 2)})
    assert parse_skew(format_skew(a)) == a
    assert parse_skew("2\n2 1 5\n").get(0, 1) == -5


@pytest.mark.parametrize("text", ["", "x\n", "2\n1 1 3\n", "2\n1 3 1\n", "2\n1 2\n", "2\n1 2 1\n2 1 1\n"])
def test_bad_skew(text):
    with pytest.raises(FormatError):
        parse_skew(text)


def test_embedding_roundtrip():
    g, emb = aztec(2)
    again = parse_embedding(format_embedding(g, emb))
    assert again.rotation == emb.rotation and again.outer_face == emb.outer_face
    PlaneGraph(g, again)


@pytest.mark.parametrize("text", ["rot: a 0\n", "rot: a 0\nrot: a 1\nouter: 0\n", "rot: a x\nouter: 0\n",
                                  "outer: x\n", "spin: a\nouter: 0\n"])
def test_bad_embedding(text):
    with pytest.raises(FormatError):
        parse_embedding(text)


def test_orientation_roundtrip():
    g, emb = grid(3, 3)
    xi = kasteleyn_orient(PlaneGraph(g, emb))
    assert parse_orientation(format_orientation(xi)) == xi


@pytest.mark.parametrize("text", ["orient: 0 a\n", "orient: x a b\n", "orient: 0 a b\norient: 0 b a\n", "arc: 0 a b\n"])
def test_bad_orientation(text):
    with pytest.raises(FormatError):
        parse_orientation(text)


def test_missing_file(tmp_path):
    with pytest.raises(FormatError):
        read(tmp_path / "nope.graph", parse_graph)
