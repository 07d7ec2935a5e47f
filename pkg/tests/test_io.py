import pytest
from hypothesis import given

from cherrylab.hypergraph import ColouredGraph, Hypergraph3
from cherrylab.io import (FormatError, colouring_from_json, colouring_to_json, parse, parse_colouring,
                          parse_hypergraph, report, serialize)

from conftest import colourings, hypergraphs


def test_parse_examples():
    assert parse("h3 3 1\n0 1 2\n") == Hypergraph3.from_edges(3, [(0, 1, 2)])
    assert parse("cg 2\n0 1 blue\n") == ColouredGraph.all_blue(2)
    assert parse("cg 2\n0 1 red 0\n") == ColouredGraph.from_arcs(2, [(0, 1)])
    assert parse("# a comment\nh3 3 1  # header\n\n2 0 1\n") == Hypergraph3.from_edges(3, [(0, 1, 2)])
    assert parse("cg 3\n1 2 blue\n0 2 red 2\n1 0 red 1\n") == ColouredGraph.from_arcs(3, [(2, 0), (1, 0)])


@pytest.mark.parametrize("text", [
    "", "h4 3 1\n0 1 2\n", "h3 3\n", "h3 3 2\n0 1 2\n", "h3 3 1\n0 1 3\n", "h3 3 1\n0 1 1\n",
    "h3 4 2\n0 1 2\n2 1 0\n", "h3 3 1\n0 1\n", "h3 x 1\n0 1 2\n",
])
def test_bad_hypergraphs(text):
    with pytest.raises(FormatError):
        parse_hypergraph(text)


@pytest.mark.parametrize("text", [
    "cg 3\n0 1 blue\n0 2 blue\n", "cg 2\n0 1 blue\n1 0 blue\n", "cg 2\n0 0 blue\n",
    "cg 2\n0 1 red 5\n", "cg 2\n0 2 blue\n", "cg 2\n0 1 green\n", "cg 2\n0 1 red\n",
])
def test_bad_colourings(text):
    with pytest.raises(FormatError):
        parse_colouring(text)


def test_unknown_header():
    with pytest.raises(FormatError):
        parse("graph 3\n")


@given(hypergraphs(max_n=7))
def test_hypergraph_round_trip(H):
    assert parse(serialize(H)) == H


@given(colourings(max_n=7))
def test_colouring_round_trip(G):
    assert parse(serialize(G)) == G
    assert colouring_from_json(G.n, colouring_to_json(G)) == G


def test_report_shape():
    r = report("detect-odd", 5, 5, (0, 1, 2, 3, 4), extra=1)
    assert r == {"kind": "detect-odd", "n": 5, "value": 5, "witness": [0, 1, 2, 3, 4], "extra": 1}
    assert report("x", 0, None)["witness"] is None
