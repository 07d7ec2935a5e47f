"""Text formats for hypergraphs and coloured graphs, plus JSON report helpers.

Hypergraph::

    h3 <n> <m>
    <a> <b> <c>        # m lines

Coloured graph (every pair exactly once, any order)::

    cg <n>
    <u> <v> blue
    <u> <v> red <from>

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Any, Iterable

from .hypergraph import ColouredGraph, Hypergraph3


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            out.append((no, tokens))
    return out


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {no}: expected an integer, got {tok!r}") from None


def serialize_hypergraph(H: Hypergraph3) -> str:
    body = "".join(f"{a} {b} {c}\n" for a, b, c in H.sorted_edges())
    return f"h3 {H.n} {H.m}\n{body}"


def parse_hypergraph(text: str) -> Hypergraph3:
    lines = _lines(text)
    if not lines or lines[0][1][0] != "h3" or len(lines[0][1]) != 3:
        raise FormatError("expected header 'h3 <n> <m>'")
    no, (_, n_tok, m_tok) = lines[0]
    n, m = _int(n_tok, no), _int(m_tok, no)
    if n < 0 or m < 0:
        raise FormatError(f"line {no}: negative size")
    rows = lines[1:]
    if len(rows) != m:
        raise FormatError(f"header announces {m} edges, found {len(rows)}")
    edges = set()
    for no, tokens in rows:
        if len(tokens) != 3:
            raise FormatError(f"line {no}: an edge needs exactly 3 vertices")
        e = tuple(sorted(_int(t, no) for t in tokens))
        if len(set(e)) != 3:
            raise FormatError(f"line {no}: repeated vertex in edge {e}")
        if e[0] < 0 or e[2] >= n:
            raise FormatError(f"line {no}: vertex out of range in {e}")
        if e in edges:
            raise FormatError(f"line {no}: duplicate edge {e}")
        edges.add(e)
    return Hypergraph3(n, frozenset(edges))


def serialize_colouring(G: ColouredGraph) -> str:
    out = [f"cg {G.n}\n"]
    for u, v in combinations(range(G.n), 2):
        src = G.red_from(u, v)
        out.append(f"{u} {v} blue\n" if src is None else f"{u} {v} red {src}\n")
    return "".join(out)


def parse_colouring(text: str) -> ColouredGraph:
    lines = _lines(text)
    if not lines or lines[0][1][0] != "cg" or len(lines[0][1]) != 2:
        raise FormatError("expected header 'cg <n>'")
    no, (_, n_tok) = lines[0]
    n = _int(n_tok, no)
    if n < 0:
        raise FormatError(f"line {no}: negative size")
    colours: dict[tuple[int, int], int | None] = {}
    for no, tokens in lines[1:]:
        if len(tokens) < 3:
            raise FormatError(f"line {no}: expected '<u> <v> blue' or '<u> <v> red <from>'")
        u, v = _int(tokens[0], no), _int(tokens[1], no)
        if u == v:
            raise FormatError(f"line {no}: self-pair {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {no}: vertex out of range")
        key = (min(u, v), max(u, v))
        if key in colours:
            raise FormatError(f"line {no}: pair {key} listed twice")
        kind = tokens[2]
        if kind == "blue" and len(tokens) == 3:
            colours[key] = None
        elif kind == "red" and len(tokens) == 4:
            src = _int(tokens[3], no)
            if src not in key:
                raise FormatError(f"line {no}: red pair {key} oriented from non-endpoint {src}")
            colours[key] = src
        else:
            raise FormatError(f"line {no}: bad colour specification {' '.join(tokens[2:])!r}")
    missing = n * (n - 1) // 2 - len(colours)
    if missing:
        raise FormatError(f"{missing} pairs are missing")
    return ColouredGraph.from_colours(n, colours)


def parse(text: str) -> Hypergraph3 | ColouredGraph:
    """Dispatch on the header keyword."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input")
    head = lines[0][1][0]
    if head == "h3":
        return parse_hypergraph(text)
    if head == "cg":
        return parse_colouring(text)
    raise FormatError(f"unknown header {head!r}")


def serialize(obj: Hypergraph3 | ColouredGraph) -> str:
    if isinstance(obj, Hypergraph3):
        return serialize_hypergraph(obj)
    if isinstance(obj, ColouredGraph):
        return serialize_colouring(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def colouring_to_json(G: ColouredGraph) -> list[list]:
    """``[[u, v, from_or_null], ...]`` over all pairs u < v."""
    return [[u, v, src] for (u, v), src in G.colours().items()]


def colouring_from_json(n: int, rows: Iterable[list]) -> ColouredGraph:
    return ColouredGraph.from_colours(n, {(int(u), int(v)): (None if s is None else int(s))
                                          for u, v, s in rows})


def report(kind: str, n: int, value: Any, witness: Iterable[int] | None = None,
           **extra: Any) -> dict:
    """A JSON-ready report with the fields ``kind``, ``n``, ``value``, ``witness``."""
    out = {"kind": kind, "n": n, "value": value,
           "witness": None if witness is None else [int(v) for v in witness]}
    out.update(extra)
    return out


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))
