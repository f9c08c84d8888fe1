"""Bicoloured graphs and superpositions of two matchings.

Given disjoint vertex sets ``red`` and ``blue`` of a graph ``g``, a
superposition is a pair (red matching of ``g - blue``, blue matching of
``g - red``).  It splits into vertex-disjoint alternating paths, whose
ends are exactly the coloured vertices, and even cycles.  Swapping the
colours along one path is a weight-preserving involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .graph import Edge, OrderedGraph, Ring, induced_delete, normalize, weight_of_edge_set
from .matchings import enumerate_matchings
from .pfaffian import IdentityMismatch

RED = "red"
BLUE = "blue"


class ColouredEdge(NamedTuple):
    colour: str
    edge: Edge


@dataclass(frozen=True)
class BicolouredGraph:
    base: OrderedGraph
    red: tuple[str, ...]
    blue: tuple[str, ...]
    red_edges: tuple[ColouredEdge, ...]
    blue_edges: tuple[ColouredEdge, ...]

    @property
    def white(self) -> tuple[str, ...]:
        c = set(self.red) | set(self.blue)
        return tuple(v for v in self.base.vertices if v not in c)

    @property
    def coloured(self) -> tuple[str, ...]:
        return self.base.vset.subset(set(self.red) | set(self.blue))


def build_bicoloured(g: OrderedGraph, red: Iterable[str], blue: Iterable[str]) -> BicolouredGraph:
    red, blue = set(red), set(blue)
    if red & blue:
        raise ValueError(f"red and blue overlap in {sorted(red & blue)}")
    r, b = g.vset.subset(red), g.vset.subset(blue)
    red_edges = tuple(ColouredEdge(RED, e) for e in induced_delete(g, blue).edges)
    blue_edges = tuple(ColouredEdge(BLUE, e) for e in induced_delete(g, red).edges)
    return BicolouredGraph(g, r, b, red_edges, blue_edges)


@dataclass(frozen=True)
class Superposition:
    graph: OrderedGraph
    red: tuple[str, ...]
    blue: tuple[str, ...]
    red_matching: frozenset[Edge]
    blue_matching: frozenset[Edge]

    @property
    def coloured(self) -> tuple[str, ...]:
        return self.graph.vset.subset(set(self.red) | set(self.blue))

    def _memo(self, key: str, compute):
        # instances are immutable, so derived values can be kept
        if key not in self.__dict__:
            object.__setattr__(self, key, compute())
        return self.__dict__[key]

    def weight(self) -> Ring:
        return self._memo("_weight", lambda: normalize(weight_of_edge_set(self.red_matching)
                                                       * weight_of_edge_set(self.blue_matching)))

    def sign(self) -> int:
        """Product of the crossing signs of both matchings, each taken in
        its own ambient vertex order (``V - blue`` resp. ``V - red``).

        Crossings only depend on relative order, so positions in ``V``
        serve for both.
        """
        pos = self.graph.vset.position
        return self._memo("_sign", lambda: _crossing_parity(self.red_matching, pos)
                          * _crossing_parity(self.blue_matching, pos))

    def validate(self) -> None:
        if self.__dict__.get("_valid"):
            return
        red, blue = set(self.red), set(self.blue)
        if red & blue:
            raise ValueError("red and blue overlap")
        everything = set(self.graph.vertices)
        if not _covers(self.graph, self.red_matching, everything - blue):
            raise ValueError("red edges are not a perfect matching of g - blue")
        if not _covers(self.graph, self.blue_matching, everything - red):
            raise ValueError("blue edges are not a perfect matching of g - red")
        object.__setattr__(self, "_valid", True)


def _crossing_parity(m: Iterable[Edge], pos: dict[str, int]) -> int:
    arcs = [(pos[e.u], pos[e.v]) if pos[e.u] < pos[e.v] else (pos[e.v], pos[e.u]) for e in m]
    odd = 0
    for a, (i, j) in enumerate(arcs):
        for k, l in arcs[a + 1:]:
            if i < k < j < l or k < i < l < j:
                odd ^= 1
    return -1 if odd else 1


def _covers(g: OrderedGraph, m: Iterable[Edge], target: set[str]) -> bool:
    """True iff ``m`` is a set of edges of ``g`` covering ``target`` exactly once."""
    seen: set[str] = set()
    for e in m:
        if not g.has_edge_id(e.eid):
            return False
        known = g.edge(e.eid)
        if known is not e and known != e:
            return False
        u, v = e.u, e.v
        if u in seen or v in seen or u not in target or v not in target:
            return False
        seen.add(u)
        seen.add(v)
    return len(seen) == len(target)


def superpositions(g: OrderedGraph, red: Iterable[str], blue: Iterable[str]) -> Iterator[Superposition]:
    red, blue = g.vset.subset(red), g.vset.subset(blue)
    if set(red) & set(blue):
        raise ValueError("red and blue overlap")
    reds = list(enumerate_matchings(induced_delete(g, blue)))
    if not reds:
        return
    blues = list(enumerate_matchings(induced_delete(g, red)))
    for mu, nu in product(reds, blues):
        yield Superposition(g, red, blue, frozenset(mu), frozenset(nu))


@dataclass(frozen=True)
class Path:
    vertices: tuple[str, ...]
    edges: tuple[ColouredEdge, ...]

    @property
    def ends(self) -> tuple[str, str]:
        return (self.vertices[0], self.vertices[-1])

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[str, ...]
    edges: tuple[ColouredEdge, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class PathCycleDecomposition:
    paths: tuple[Path, ...]
    cycles: tuple[Cycle, ...]

    def path_from(self, x: str) -> Path:
        for p in self.paths:
            if x in p.ends:
                return p
        raise KeyError(f"{x!r} is not the end of a bicoloured path")


def _walk_maps(s: Superposition) -> tuple[dict[str, Edge], dict[str, Edge]]:
    return s._memo("_walk", lambda: _build_walk_maps(s))


def _build_walk_maps(s: Superposition) -> tuple[dict[str, Edge], dict[str, Edge]]:
    red_at: dict[str, Edge] = {}
    blue_at: dict[str, Edge] = {}
    for e in s.red_matching:
        red_at[e.u] = red_at[e.v] = e
    for e in s.blue_matching:
        blue_at[e.u] = blue_at[e.v] = e
    return red_at, blue_at


def _trace(red_at: dict[str, Edge], blue_at: dict[str, Edge], start: str) -> tuple[list[str], list[ColouredEdge]]:
    colour = RED if start in red_at else BLUE
    verts, edges = [start], []
    v = start
    while True:
        e = (red_at if colour == RED else blue_at).get(v)
        if e is None:
            return verts, edges
        edges.append(ColouredEdge(colour, e))
        v = e.v if e.u == v else e.u
        verts.append(v)
        colour = BLUE if colour == RED else RED


def _as_path(s: Superposition, verts: list[str], edges: list[ColouredEdge]) -> Path:
    pos = s.graph.vset.position
    if pos[verts[-1]] < pos[verts[0]]:
        verts.reverse()
        edges.reverse()
    return Path(tuple(verts), tuple(edges))


def trace_path(s: Superposition, x: str) -> Path:
    """The bicoloured path ending in the coloured vertex ``x``, without
    decomposing the rest of the superposition."""
    if x not in s.red and x not in s.blue:
        raise ValueError(f"{x!r} is not a coloured vertex")
    s.validate()
    return _as_path(s, *_trace(*_walk_maps(s), x))


def decompose(s: Superposition) -> PathCycleDecomposition:
    """Split a superposition into alternating paths and even cycles.

    Paths start at their lower-indexed end; cycles start at their
    lowest-indexed vertex and leave it along the red edge.
    """
    s.validate()
    red_at, blue_at = _walk_maps(s)
    seen: set[str] = set()
    paths = []
    for start in s.coloured:
        if start in seen:
            continue
        verts, edges = _trace(red_at, blue_at, start)
        seen.update(verts)
        paths.append(_as_path(s, verts, edges))
    cycles = []
    for start in s.graph.vertices:
        if start in seen:
            continue
        verts, edges = [start], []
        v, colour = start, RED
        while True:
            table = red_at if colour == RED else blue_at
            e = table[v]
            edges.append(ColouredEdge(colour, e))
            v = e.other(v)
            colour = BLUE if colour == RED else RED
            if v == start and colour == RED:
                break
            verts.append(v)
        seen.update(verts)
        cycles.append(Cycle(tuple(verts), tuple(edges)))
    return PathCycleDecomposition(tuple(paths), tuple(cycles))


def reassemble(s: Superposition, d: PathCycleDecomposition) -> tuple[frozenset[Edge], frozenset[Edge]]:
    red, blue = set(), set()
    for part in d.paths + d.cycles:
        for ce in part.edges:
            (red if ce.colour == RED else blue).add(ce.edge)
    return frozenset(red), frozenset(blue)


def _swap_along(s: Superposition, p: Path, x: str) -> tuple[Superposition, str]:
    y = p.ends[1] if p.ends[0] == x else p.ends[0]
    path_red, path_blue = set(), set()
    for colour, e in p.edges:
        (path_red if colour == RED else path_blue).add(e)
    red_matching = (s.red_matching - path_red) | path_blue
    blue_matching = (s.blue_matching - path_blue) | path_red
    red, blue = set(s.red), set(s.blue)
    for v in (x, y):
        if v in red:
            red.discard(v)
            blue.add(v)
        else:
            blue.discard(v)
            red.add(v)
    vs = s.graph.vset
    return Superposition(s.graph, vs.subset(red), vs.subset(blue), red_matching, blue_matching), y


def swap_colours(s: Superposition, x: str) -> Superposition:
    """Swap colours along the path ending in ``x``.

    Opposite-coloured ends trade colour classes; same-coloured ends both
    move to the other class.
    """
    return _swap_along(s, trace_path(s, x), x)[0]


def other_end(s: Superposition, x: str) -> str:
    p = trace_path(s, x)
    return p.ends[1] if p.ends[0] == x else p.ends[0]


def swap_with_sign(s: Superposition, x: str) -> tuple[Superposition, int]:
    """The swapped superposition and the factor (-1)^(j-i+1), where i, j
    are the coloured positions of the path ends.

    The relation sgn(mu) sgn(nu) = factor * (signs after the swap) is
    checked against recomputed crossing signs; a mismatch raises
    :class:`IdentityMismatch`.
    """
    t, y = _swap_along(s, trace_path(s, x), x)
    c = s.coloured
    i, j = c.index(x) + 1, c.index(y) + 1
    factor = 1 if (j - i + 1) % 2 == 0 else -1
    if s.sign() != factor * t.sign():
        raise IdentityMismatch(f"sign change at {x!r}: expected factor {factor}")
    return t, factor


def swap_sign_change(s: Superposition, x: str) -> int:
    return swap_with_sign(s, x)[1]


def swap_paths(s: Superposition, starts: Iterable[str]) -> Superposition:
    """Swap along several vertex-disjoint paths, lowest start first.

    A start whose path was already swapped from its other end is
    skipped, so each path is recoloured once.
    """
    pos = s.graph.vset.position
    done: set[str] = set()
    for x in sorted(set(starts), key=pos.__getitem__):
        if x in done:
            continue
        y = other_end(s, x)
        done.update((x, y))
        s = swap_colours(s, x)
    return s
