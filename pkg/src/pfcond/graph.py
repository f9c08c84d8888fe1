"""Ordered vertex sets and weighted multigraphs over an exact ring.

Weights are Python ``int`` or ``fractions.Fraction``; nothing here ever
rounds.  Every subset of an :class:`OrderedVertexSet` is kept in the
ambient order, which is what makes Pfaffian signs well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Ring = Union[int, Fraction]


def normalize(x: Ring) -> Ring:
    """Demote an integral Fraction to int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def parse_weight(text: str) -> Ring:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return normalize(Fraction(int(num), int(den)))
    return int(text)


def format_weight(w: Ring) -> str:
    w = normalize(w)
    if isinstance(w, Fraction):
        return f"{w.numerator}/{w.denominator}"
    return str(w)


class OrderedVertexSet:
    """A finite set of distinct labels with a fixed total order."""

    __slots__ = ("vertices", "position")

    def __init__(self, vertices: Iterable[str]):
        vertices = tuple(vertices)
        position = {v: i for i, v in enumerate(vertices)}
        if len(position) != len(vertices):
            raise ValueError("vertex labels must be distinct")
        self.vertices = vertices
        self.position = position

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.position

    def __getitem__(self, i: int) -> str:
        return self.vertices[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, OrderedVertexSet):
            return self.vertices == other.vertices
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"OrderedVertexSet({list(self.vertices)!r})"

    def index(self, v: str) -> int:
        try:
            return self.position[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v!r}") from None

    def subset(self, labels: Iterable[str]) -> tuple[str, ...]:
        """Return ``labels`` as a subset in inherited (ambient) order."""
        pos = self.position
        try:
            return tuple(sorted(set(labels), key=pos.__getitem__))
        except KeyError as exc:
            raise KeyError(f"unknown vertex {exc.args[0]!r}") from None

    def restrict(self, labels: Iterable[str]) -> OrderedVertexSet:
        return OrderedVertexSet(self.subset(labels))


@dataclass(frozen=True)
class Edge:
    """A weighted edge.  ``eid`` identifies it among parallel copies."""

    eid: int
    u: str
    v: str
    w: Ring = 1

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"{x!r} is not an endpoint of edge {self.eid}")

    @property
    def ends(self) -> tuple[str, str]:
        return (self.u, self.v)


class OrderedGraph:
    """Loopless weighted multigraph on an ordered vertex set.

    Edges keep their ``eid`` through induced subgraphs, so an edge of
    ``g - S`` can always be traced back to ``g``.
    """

    __slots__ = ("vset", "edges", "_by_id", "_incident")

    def __init__(self, vertices: Iterable[str] | OrderedVertexSet, edges: Iterable = ()):
        self.vset = vertices if isinstance(vertices, OrderedVertexSet) else OrderedVertexSet(vertices)
        built = []
        for i, e in enumerate(edges):
            if not isinstance(e, Edge):
                if len(e) == 2:
                    e = Edge(i, e[0], e[1], 1)
                else:
                    e = Edge(i, e[0], e[1], e[2])
            if e.u == e.v:
                raise ValueError(f"loop at {e.u!r} is not allowed")
            for x in e.ends:
                if x not in self.vset:
                    raise KeyError(f"edge endpoint {x!r} is not a vertex")
            built.append(e)
        self.edges: tuple[Edge, ...] = tuple(built)
        self._by_id = {e.eid: e for e in self.edges}
        if len(self._by_id) != len(self.edges):
            raise ValueError("edge ids must be distinct")
        incident: dict[str, list[Edge]] = {v: [] for v in self.vset}
        for e in self.edges:
            incident[e.u].append(e)
            incident[e.v].append(e)
        self._incident = {v: tuple(es) for v, es in incident.items()}

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.vset.vertices

    def __len__(self) -> int:
        return len(self.vset)

    def __repr__(self) -> str:
        return f"OrderedGraph({len(self.vset)} vertices, {len(self.edges)} edges)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedGraph):
            return NotImplemented
        return self.vset == other.vset and self.edge_multiset() == other.edge_multiset()

    __hash__ = None  # type: ignore[assignment]

    def edge_multiset(self) -> dict[tuple[str, str, Ring], int]:
        counts: dict[tuple[str, str, Ring], int] = {}
        for e in self.edges:
            a, b = sorted(e.ends, key=self.vset.index)
            key = (a, b, normalize(e.w))
            counts[key] = counts.get(key, 0) + 1
        return counts

    def edge(self, eid: int) -> Edge:
        return self._by_id[eid]

    def has_edge_id(self, eid: int) -> bool:
        return eid in self._by_id

    def incident(self, v: str) -> tuple[Edge, ...]:
        return self._incident[v]

    def edges_between(self, u: str, v: str) -> list[Edge]:
        return [e for e in self._incident[u] if e.other(u) == v]

    def pair_weight(self, u: str, v: str) -> Ring:
        """Sum of the weights of all parallel edges joining u and v."""
        return normalize(sum((e.w for e in self.edges_between(u, v)), 0))

    def with_weights(self, weights: dict[int, Ring]) -> OrderedGraph:
        return OrderedGraph(self.vset, [Edge(e.eid, e.u, e.v, weights.get(e.eid, e.w)) for e in self.edges])

    def reordered(self, order: Sequence[str]) -> OrderedGraph:
        """Same graph, new vertex order (must be a permutation)."""
        if sorted(order) != sorted(self.vertices):
            raise ValueError("new order must be a permutation of the vertices")
        return OrderedGraph(order, self.edges)


def induced_delete(g: OrderedGraph, s: Iterable[str]) -> OrderedGraph:
    """The subgraph induced by ``V(g) \\ s`` (written ``g - s``)."""
    s = set(s)
    for v in s:
        if v not in g.vset:
            raise KeyError(f"unknown vertex {v!r}")
    keep = [v for v in g.vertices if v not in s]
    edges = [e for e in g.edges if e.u not in s and e.v not in s]
    return OrderedGraph(keep, edges)


def delete_edges(g: OrderedGraph, eids: Iterable[int]) -> OrderedGraph:
    drop = set(eids)
    return OrderedGraph(g.vset, [e for e in g.edges if e.eid not in drop])


def setsum(x: Iterable[str], m: OrderedVertexSet | Sequence[str]) -> int:
    """Sum of the 1-based positions of the elements of ``x`` inside ``m``."""
    if not isinstance(m, OrderedVertexSet):
        m = OrderedVertexSet(m)
    return sum(m.index(v) + 1 for v in set(x))


def sym_diff(a: Iterable[str], b: Iterable[str], ambient: OrderedVertexSet | Sequence[str]) -> tuple[str, ...]:
    if not isinstance(ambient, OrderedVertexSet):
        ambient = OrderedVertexSet(ambient)
    return ambient.subset(set(a) ^ set(b))


def weight_of_edge_set(edges: Iterable[Edge]) -> Ring:
    w: Ring = 1
    for e in edges:
        w *= e.w
    return normalize(w)
