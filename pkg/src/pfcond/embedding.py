"""Combinatorial plane embeddings (rotation systems).

A rotation lists, for every vertex, the ids of its incident edges in
cyclic order.  Faces are traced dart by dart: after arriving at ``v``
along edge ``e``, leave ``v`` along the edge following ``e`` in the
rotation of ``v``.  With rotations listed counterclockwise every face
walk keeps its face on the right, so bounded faces are walked clockwise
and the outer face counterclockwise.

No planarity testing happens here: embeddings come from the family
generators or from files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import OrderedGraph

Dart = tuple[int, str]  # (edge id, tail vertex)


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    rotation: dict[str, tuple[int, ...]]
    outer_face: int = 0

    def mirrored_rotation(self) -> dict[str, tuple[int, ...]]:
        return {v: tuple(reversed(r)) for v, r in self.rotation.items()}


@dataclass(frozen=True)
class Face:
    fid: int
    darts: tuple[Dart, ...]
    vertices: tuple[str, ...]

    @property
    def eids(self) -> frozenset[int]:
        return frozenset(d[0] for d in self.darts)

    def __len__(self) -> int:
        return len(self.darts)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def components(g: OrderedGraph, eids: Iterable[int] | None = None) -> list[tuple[tuple[str, ...], frozenset[int]]]:
    """Connected components as (vertices in order, edge ids)."""
    edges = g.edges if eids is None else [g.edge(i) for i in eids]
    idx = {v: i for i, v in enumerate(g.vertices)}
    uf = _UnionFind(len(idx))
    for e in edges:
        uf.union(idx[e.u], idx[e.v])
    groups: dict[int, list[str]] = {}
    for v in g.vertices:
        groups.setdefault(uf.find(idx[v]), []).append(v)
    comp_edges: dict[int, set[int]] = {}
    for e in edges:
        comp_edges.setdefault(uf.find(idx[e.u]), set()).add(e.eid)
    return [(tuple(vs), frozenset(comp_edges.get(root, ()))) for root, vs in groups.items()]


class PlaneGraph:
    """A graph together with a rotation system and its traced faces.

    Restricted plane graphs (from :meth:`restrict`) keep a link to the
    root, whose outer face fixes what "inside" means for every cycle.
    """

    def __init__(self, g: OrderedGraph, emb: Embedding, *, _root: PlaneGraph | None = None):
        self.graph = g
        self.embedding = emb
        self.root = _root or self
        self._check_rotation()
        self.faces = self._trace_faces()
        self.face_of: dict[Dart, int] = {d: f.fid for f in self.faces for d in f.darts}
        self._check_euler()
        if _root is None:
            if self.faces and not 0 <= emb.outer_face < len(self.faces):
                raise EmbeddingError(f"outer face {emb.outer_face} does not exist")
            nontrivial = [c for c in components(g) if c[1]]
            if len(nontrivial) > 1:
                raise EmbeddingError("root embeddings must have a single component with edges")
            self.outer_faces = frozenset([emb.outer_face]) if self.faces else frozenset()
        else:
            self.outer_faces = self._locate_outer_faces()

    # construction -----------------------------------------------------

    def _check_rotation(self) -> None:
        g, rot = self.graph, self.embedding.rotation
        for v in g.vertices:
            listed = rot.get(v, ())
            expected = sorted(e.eid for e in g.incident(v))
            if sorted(listed) != expected:
                raise EmbeddingError(f"rotation at {v!r} must list each incident edge once: got {listed}, need {expected}")
        extra = set(rot) - set(g.vertices)
        if extra:
            raise EmbeddingError(f"rotation given for unknown vertices {sorted(extra)}")

    def next_dart(self, d: Dart) -> Dart:
        eid, tail = d
        head = self.graph.edge(eid).other(tail)
        r = self.embedding.rotation[head]
        e2 = r[(r.index(eid) + 1) % len(r)]
        return (e2, head)

    def _trace_faces(self) -> list[Face]:
        g, rot = self.graph, self.embedding.rotation
        seen: set[Dart] = set()
        faces = []
        for v in g.vertices:
            for eid in rot.get(v, ()):
                start = (eid, v)
                if start in seen:
                    continue
                darts, verts = [], []
                d = start
                while d not in seen:
                    seen.add(d)
                    darts.append(d)
                    verts.append(d[1])
                    d = self.next_dart(d)
                if d != start:
                    raise EmbeddingError("malformed rotation: face walk does not close")
                faces.append(Face(len(faces), tuple(darts), tuple(verts)))
        return faces

    def _check_euler(self) -> None:
        for verts, eids in components(self.graph):
            if not eids:
                continue
            nf = len({self.face_of[(eid, self.graph.edge(eid).u)] for eid in eids}
                     | {self.face_of[(eid, self.graph.edge(eid).v)] for eid in eids})
            if len(verts) - len(eids) + nf != 2:
                raise EmbeddingError(f"Euler check failed: V={len(verts)} E={len(eids)} F={nf} is not planar")

    def _locate_outer_faces(self) -> frozenset[int]:
        root = self.root
        outer = set()
        for verts, eids in components(self.graph):
            if not eids:
                continue
            cls = root.region_classes(eids)
            outer_cls = cls[root.embedding.outer_face]
            for f in self.faces:
                if f.darts[0][0] in eids and cls[root.face_of[f.darts[0]]] == outer_cls:
                    outer.add(f.fid)
        return frozenset(outer)

    # queries -----------------------------------------------------------

    @property
    def bounded_faces(self) -> list[Face]:
        return [f for f in self.faces if f.fid not in self.outer_faces]

    def region_classes(self, keep: Iterable[int]) -> list[int]:
        """Merge root faces across every edge not in ``keep``.

        Faces in one class lie in a single region of the plane cut out by
        the kept edges.
        """
        if self.root is not self:
            return self.root.region_classes(keep)
        keep = set(keep)
        uf = _UnionFind(len(self.faces))
        for e in self.graph.edges:
            if e.eid not in keep:
                uf.union(self.face_of[(e.eid, e.u)], self.face_of[(e.eid, e.v)])
        return [uf.find(i) for i in range(len(self.faces))]

    def inside_faces(self, cycle_eids: Iterable[int]) -> set[int]:
        root = self.root
        cls = root.region_classes(cycle_eids)
        outer = cls[root.embedding.outer_face]
        return {i for i, c in enumerate(cls) if c != outer}

    def interior_vertices(self, cycle_eids: Sequence[int]) -> list[str]:
        """Vertices of this graph lying strictly inside the cycle."""
        cycle_vertices(self.root.graph, cycle_eids)
        root = self.root
        inside = self.inside_faces(cycle_eids)
        on_cycle = set()
        for eid in cycle_eids:
            on_cycle.update(root.graph.edge(eid).ends)
        found = []
        for v in self.graph.vertices:
            if v in on_cycle:
                continue
            inc = root.graph.incident(v)
            if inc and root.face_of[(inc[0].eid, v)] in inside:
                found.append(v)
        return found

    def clockwise_darts(self, cycle_eids: Sequence[int]) -> list[Dart]:
        """For each cycle edge, the dart that has the enclosed region on its right."""
        root = self.root
        inside = self.inside_faces(cycle_eids)
        out = []
        for eid in cycle_eids:
            e = root.graph.edge(eid)
            if root.face_of[(eid, e.u)] in inside:
                out.append((eid, e.u))
            elif root.face_of[(eid, e.v)] in inside:
                out.append((eid, e.v))
            else:
                raise ValueError(f"edge {eid} does not bound the region enclosed by the cycle")
        return out

    def restrict(self, h: OrderedGraph) -> PlaneGraph:
        """Inherited embedding of a subgraph (edges identified by id)."""
        keep = {e.eid for e in h.edges}
        for e in h.edges:
            if not self.graph.has_edge_id(e.eid):
                raise KeyError(f"edge {e.eid} is not in the embedded graph")
        rot = {v: tuple(x for x in self.embedding.rotation[v] if x in keep) for v in h.vertices}
        return PlaneGraph(h, Embedding(rot, 0), _root=self.root)

    def mirrored(self) -> PlaneGraph:
        """Reflected embedding: every rotation reversed, same outer face."""
        if self.root is not self:
            raise ValueError("mirror the root embedding")
        rot = self.embedding.mirrored_rotation()
        probe = PlaneGraph(self.graph, Embedding(rot, 0))
        if not self.faces:
            return probe
        eid, tail = self.faces[self.embedding.outer_face].darts[0]
        twin = (eid, self.graph.edge(eid).other(tail))
        return PlaneGraph(self.graph, Embedding(rot, probe.face_of[twin]))

    def face_containing(self, vertices: Sequence[str], cyclic: bool = True) -> Face | None:
        """A face whose boundary meets ``vertices`` in that cyclic order
        (either direction)."""
        want = list(vertices)
        for f in self.faces:
            walk = []
            for v in f.vertices:
                if v in want and v not in walk:
                    walk.append(v)
            if sorted(walk) != sorted(want):
                continue
            if not cyclic or _is_cyclic_rotation(walk, want) or _is_cyclic_rotation(walk[::-1], want):
                return f
        return None


def cycle_vertices(g: OrderedGraph, eids: Sequence[int]) -> list[str]:
    """Vertices of the cycle formed by ``eids`` in walk order.

    Raises ValueError unless the edges form a single cycle (two parallel
    edges count as a cycle of length 2).
    """
    eids = list(eids)
    if len(set(eids)) != len(eids) or len(eids) < 2:
        raise ValueError("a cycle needs at least two distinct edges")
    at: dict[str, list[int]] = {}
    for eid in eids:
        for x in g.edge(eid).ends:
            at.setdefault(x, []).append(eid)
    if any(len(v) != 2 for v in at.values()):
        raise ValueError("edges do not form a cycle: some vertex has degree other than 2")
    first = g.edge(eids[0])
    walk, v, via = [first.u], first.v, eids[0]
    while v != first.u:
        walk.append(v)
        a, b = at[v]
        via = b if a == via else a
        v = g.edge(via).other(v)
    if len(walk) != len(at):
        raise ValueError("edges do not form a single cycle")
    return walk


def _is_cyclic_rotation(a: list, b: list) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    k = a.index(b[0])
    return a[k:] + a[:k] == b


@dataclass(frozen=True)
class Block:
    vertices: tuple[str, ...]
    eids: frozenset[int] = field(default_factory=frozenset)

    @property
    def is_bridge(self) -> bool:
        return len(self.eids) == 1

    @property
    def is_isolated(self) -> bool:
        return not self.eids


def blocks(g: OrderedGraph) -> tuple[list[Block], tuple[str, ...]]:
    """2-connected blocks, bridges and isolated vertices, plus cutvertices.

    Iterative Hopcroft-Tarjan on edge ids, so parallel edges form a
    2-connected block of their own.
    """
    pos = g.vset.position
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    found: list[Block] = []
    cut: set[str] = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        if not g.incident(root):
            disc[root] = counter
            counter += 1
            found.append(Block((root,)))
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[int] = []
        stack = [(root, None, iter(g.incident(root)))]
        root_children = 0
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for e in it:
                if e.eid == via:
                    continue
                w = e.other(v)
                if w not in disc:
                    edge_stack.append(e.eid)
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e.eid, iter(g.incident(w))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e.eid)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                comp: set[int] = set()
                while True:
                    x = edge_stack.pop()
                    comp.add(x)
                    if x == via:
                        break
                verts = set()
                for x in comp:
                    verts.update(g.edge(x).ends)
                found.append(Block(tuple(sorted(verts, key=pos.__getitem__)), frozenset(comp)))
        if root_children > 1:
            cut.add(root)
    return found, tuple(v for v in g.vertices if v in cut)


def embedding_from_coordinates(g: OrderedGraph, coords: dict[str, tuple[float, float]]) -> Embedding:
    """Counterclockwise rotations from straight-line coordinates; the outer face is
    the one whose walk has positive signed area.

    Only used by the family generators, whose drawings are crossing-free.
    Parallel edges keep their input order at both ends.
    """
    import math

    rot = {}
    for v in g.vertices:
        x0, y0 = coords[v]

        def angle(e, v=v, x0=x0, y0=y0):
            x1, y1 = coords[e.other(v)]
            return math.atan2(y1 - y0, x1 - x0)

        rot[v] = tuple(e.eid for e in sorted(g.incident(v), key=lambda e: (angle(e), e.eid)))
    probe = PlaneGraph(g, Embedding(rot, 0))

    def area(f: Face) -> float:
        s = 0.0
        for eid, tail in f.darts:
            head = g.edge(eid).other(tail)
            (x1, y1), (x2, y2) = coords[tail], coords[head]
            s += x1 * y2 - x2 * y1
        return s / 2

    outer = max(probe.faces, key=lambda f: (area(f), -f.fid)).fid if probe.faces else 0
    return Embedding(rot, outer)
