"""Plain-text formats for graphs, skew arrays, embeddings and orientations.

All formats are line based; blank lines and ``#`` comments are ignored.

graph::

    vertices: a b c d
    edge: a b 3        # weight optional (default 1), may be p/q
                       # edge ids are 0, 1, ... in file order

skew array (1-based indices, i != j)::

    4
    1 2 5
    3 4 -1/2

embedding::

    rot: a 0 3         # incident edge ids in cyclic order
    outer: 0           # face index in canonical enumeration

orientation::

    orient: 0 a b      # edge id, tail, head
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .embedding import Embedding
from .graph import Edge, OrderedGraph, format_weight, parse_weight
from .kasteleyn import Orientation
from .pfaffian import SkewArray


class FormatError(ValueError):
    pass


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _keyword(no, parts, key):
    if parts[0] != key + ":":
        raise FormatError(f"line {no}: expected '{key}:', got {parts[0]!r}")
    return parts[1:]


def parse_graph(text: str) -> OrderedGraph:
    vertices = None
    edges = []
    for no, parts in _lines(text):
        if parts[0] == "vertices:":
            if vertices is not None:
                raise FormatError(f"line {no}: duplicate vertices line")
            vertices = parts[1:]
        elif parts[0] == "edge:":
            args = parts[1:]
            if len(args) not in (2, 3):
                raise FormatError(f"line {no}: edge needs 'u v [w]'")
            try:
                w = parse_weight(args[2]) if len(args) == 3 else 1
            except (ValueError, ZeroDivisionError):
                raise FormatError(f"line {no}: bad weight {args[2]!r}") from None
            edges.append(Edge(len(edges), args[0], args[1], w))
        else:
            raise FormatError(f"line {no}: unknown keyword {parts[0]!r}")
    if vertices is None:
        raise FormatError("missing 'vertices:' line")
    try:
        return OrderedGraph(vertices, edges)
    except (KeyError, ValueError) as exc:
        raise FormatError(str(exc)) from None


def format_graph(g: OrderedGraph) -> str:
    out = ["vertices: " + " ".join(g.vertices)]
    for i, e in enumerate(sorted(g.edges, key=lambda e: e.eid)):
        if e.eid != i:
            raise ValueError("edge ids must be 0..m-1 to be written")
        out.append(f"edge: {e.u} {e.v} {format_weight(e.w)}")
    return "\n".join(out) + "\n"


def parse_skew(text: str) -> SkewArray:
    rows = list(_lines(text))
    if not rows:
        raise FormatError("empty skew array file")
    no, head = rows[0]
    if len(head) != 1:
        raise FormatError(f"line {no}: first line must hold n")
    try:
        n = int(head[0])
    except ValueError:
        raise FormatError(f"line {no}: bad size {head[0]!r}") from None
    entries = {}
    for no, parts in rows[1:]:
        if len(parts) != 3:
            raise FormatError(f"line {no}: expected 'i j value'")
        try:
            i, j, v = int(parts[0]) - 1, int(parts[1]) - 1, parse_weight(parts[2])
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"line {no}: bad entry") from None
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise FormatError(f"line {no}: index out of range")
        key = (min(i, j), max(i, j))
        if key in entries:
            raise FormatError(f"line {no}: entry ({i + 1}, {j + 1}) given twice")
        entries[key] = v if i < j else -v
    return SkewArray(n, entries)


def format_skew(a: SkewArray) -> str:
    out = [str(a.n)]
    for (i, j), v in sorted(a.entries.items()):
        out.append(f"{i + 1} {j + 1} {format_weight(v)}")
    return "\n".join(out) + "\n"


def parse_embedding(text: str) -> Embedding:
    rot: dict[str, tuple[int, ...]] = {}
    outer = None
    for no, parts in _lines(text):
        if parts[0] == "rot:":
            if len(parts) < 2:
                raise FormatError(f"line {no}: rot needs a vertex")
            v = parts[1]
            if v in rot:
                raise FormatError(f"line {no}: rotation for {v!r} given twice")
            try:
                rot[v] = tuple(int(x) for x in parts[2:])
            except ValueError:
                raise FormatError(f"line {no}: edge ids must be integers") from None
        elif parts[0] == "outer:":
            if len(parts) != 2:
                raise FormatError(f"line {no}: outer needs one face index")
            try:
                outer = int(parts[1])
            except ValueError:
                raise FormatError(f"line {no}: bad face index") from None
        else:
            raise FormatError(f"line {no}: unknown keyword {parts[0]!r}")
    if outer is None:
        raise FormatError("missing 'outer:' line")
    return Embedding(rot, outer)


def format_embedding(g: OrderedGraph, emb: Embedding) -> str:
    out = [f"rot: {v}" + "".join(f" {e}" for e in emb.rotation.get(v, ())) for v in g.vertices]
    out.append(f"outer: {emb.outer_face}")
    return "\n".join(out) + "\n"


def parse_orientation(text: str) -> Orientation:
    arcs = {}
    for no, parts in _lines(text):
        args = _keyword(no, parts, "orient")
        if len(args) != 3:
            raise FormatError(f"line {no}: expected 'orient: eid tail head'")
        try:
            eid = int(args[0])
        except ValueError:
            raise FormatError(f"line {no}: bad edge id") from None
        if eid in arcs:
            raise FormatError(f"line {no}: edge {eid} oriented twice")
        arcs[eid] = (args[1], args[2])
    return Orientation(arcs)


def format_orientation(xi: Orientation) -> str:
    return "".join(f"orient: {eid} {t} {h}\n" for eid, (t, h) in sorted(xi.arcs.items()))


def read(path: str | Path, parser):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return parser(text)
