"""Admissible (Kasteleyn) orientations of plane graphs and Pfaffian counting.

An orientation is admissible when every cycle C satisfies
e(C) + p(C) odd, where e(C) counts edges pointing along the clockwise
traversal of C and p(C) counts vertices strictly inside C.  For such an
orientation all terms of the Pfaffian of the signed adjacency array have
the same sign, so that Pfaffian counts perfect matchings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from .embedding import PlaneGraph, blocks, components, cycle_vertices
from .graph import Edge, OrderedGraph, Ring, induced_delete, normalize
from .matchings import enumerate_matchings
from .pfaffian import SkewArray, crossing_sign, pf_eliminate

MODES = ("faces", "all_cycles", "superposition_cycles")
MODE_ALIASES = {"faces": "faces", "all": "all_cycles", "all_cycles": "all_cycles",
                "super": "superposition_cycles", "superposition_cycles": "superposition_cycles"}


class Orientation:
    """Direction (tail, head) for every edge id.

    Parallel edges carry their own direction; ``xi`` on a vertex pair is
    only defined when all edges between the pair agree.
    """

    def __init__(self, arcs: dict[int, tuple[str, str]]):
        self.arcs = dict(arcs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Orientation) and self.arcs == other.arcs

    def __repr__(self) -> str:
        return f"Orientation({self.arcs!r})"

    def tail(self, eid: int) -> str:
        return self.arcs[eid][0]

    def edge_sign(self, e: Edge, lo: str, hi: str) -> int:
        """+1 when ``e`` points from ``lo`` to ``hi``."""
        tail, head = self.arcs[e.eid]
        if {tail, head} != {lo, hi}:
            raise ValueError(f"orientation of edge {e.eid} does not match its endpoints")
        return 1 if tail == lo else -1

    def xi(self, g: OrderedGraph, u: str, v: str) -> int:
        signs = {self.edge_sign(e, u, v) for e in g.edges_between(u, v)}
        if not signs:
            raise KeyError(f"no edge between {u!r} and {v!r}")
        if len(signs) > 1:
            raise ValueError(f"parallel edges between {u!r} and {v!r} are oriented both ways")
        return signs.pop()

    def flipped(self, eid: int) -> Orientation:
        arcs = dict(self.arcs)
        t, h = arcs[eid]
        arcs[eid] = (h, t)
        return Orientation(arcs)

    def restricted(self, g: OrderedGraph) -> Orientation:
        return Orientation({e.eid: self.arcs[e.eid] for e in g.edges})

    def check(self, g: OrderedGraph) -> None:
        for e in g.edges:
            if e.eid not in self.arcs:
                raise ValueError(f"edge {e.eid} is not oriented")
            if set(self.arcs[e.eid]) != {e.u, e.v}:
                raise ValueError(f"orientation of edge {e.eid} does not match its endpoints")


@dataclass(frozen=True)
class ContourCycle:
    """Boundary of a bounded face of a 2-connected block, walked clockwise."""

    vertices: tuple[str, ...]
    eids: tuple[int, ...]
    interior_count: int

    def __len__(self) -> int:
        return len(self.eids)


@dataclass(frozen=True)
class CycleFailure:
    eids: tuple[int, ...]
    vertices: tuple[str, ...]
    co_oriented: int
    interior: int
    reason: str

    def __str__(self) -> str:
        return (f"cycle {'-'.join(self.vertices)} (edges {list(self.eids)}): "
                f"{self.co_oriented} co-oriented, {self.interior} inside; {self.reason}")


@dataclass
class AdmissibilityReport:
    mode: str
    checked: int = 0
    failures: list[CycleFailure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: AdmissibilityReport) -> AdmissibilityReport:
        return AdmissibilityReport(f"{self.mode}+{other.mode}", self.checked + other.checked,
                                   self.failures + other.failures, self.notes + other.notes)


def co_oriented_count(plane: PlaneGraph, cycle_eids: Sequence[int], xi: Orientation) -> int:
    return sum(1 for eid, tail in plane.clockwise_darts(cycle_eids) if xi.tail(eid) == tail)


def interior_count(plane: PlaneGraph, cycle_eids: Sequence[int]) -> int:
    return len(plane.interior_vertices(cycle_eids))


def _block_plane(plane: PlaneGraph, block) -> PlaneGraph:
    g = plane.graph
    return plane.restrict(OrderedGraph(block.vertices, [g.edge(e) for e in sorted(block.eids)]))


def contour_cycles(plane: PlaneGraph) -> list[ContourCycle]:
    found = []
    for block in blocks(plane.graph)[0]:
        if len(block.eids) < 2:
            continue
        bp = _block_plane(plane, block)
        for f in bp.bounded_faces:
            eids = tuple(d[0] for d in f.darts)
            found.append(ContourCycle(f.vertices, eids, interior_count(plane, eids)))
    return found


def _orient_block(plane: PlaneGraph, block, arcs: dict[int, tuple[str, str]]) -> None:
    g = plane.graph
    pos = g.vset.position
    bp = _block_plane(plane, block)
    bounded = {f.fid: f for f in bp.bounded_faces}
    outer = next(iter(bp.outer_faces))
    sides = {}
    for eid in block.eids:
        e = g.edge(eid)
        sides[eid] = (bp.face_of[(eid, e.u)], bp.face_of[(eid, e.v)])

    def stays_connected(nodes: set[int]) -> bool:
        # remaining faces plus the outer face, linked across unoriented edges
        if not nodes:
            return True
        start = outer if outer in nodes else next(iter(nodes))
        seen, todo = {start}, [start]
        adj: dict[int, list[int]] = {}
        for eid, (a, b) in sides.items():
            if eid not in arcs and a in nodes and b in nodes:
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
        while todo:
            x = todo.pop()
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return seen == nodes

    # breadth-first rank of bounded faces from the lowest-id face
    rank: dict[int, int] = {}
    if bounded:
        seed = min(bounded)
        rank[seed] = 0
        q = deque([seed])
        while q:
            x = q.popleft()
            for eid in sorted(bounded[x].eids):
                for y in sides[eid]:
                    if y in bounded and y not in rank:
                        rank[y] = len(rank)
                        q.append(y)

    remaining = set(bounded)
    while remaining:
        order = sorted(remaining, key=lambda f: (rank.get(f, len(rank)), f))
        choice = None
        for f in order:
            if stays_connected((remaining - {f}) | {outer}):
                choice = f
                break
        if choice is None:
            raise RuntimeError("no face can be added while keeping the processed region simply connected")
        remaining.discard(choice)
        face = bounded[choice]
        cyc = tuple(d[0] for d in face.darts)
        free = [eid for eid in cyc if eid not in arcs]
        if not free:
            raise RuntimeError(f"face {choice} has no unoriented edge left")
        for eid in free[:-1]:
            e = g.edge(eid)
            arcs[eid] = (e.u, e.v) if pos[e.u] < pos[e.v] else (e.v, e.u)
        last = g.edge(free[-1])
        arcs[last.eid] = (last.u, last.v)
        xi = Orientation(arcs)
        if (co_oriented_count(plane, cyc, xi) + interior_count(plane, cyc)) % 2 == 0:
            arcs[last.eid] = (last.v, last.u)


def kasteleyn_orient(plane: PlaneGraph) -> Orientation:
    """Orient every contour cycle C so that e(C) + p(C) is odd.

    Within each block, bounded faces are taken breadth-first from the
    lowest-id face, skipping any face whose removal would disconnect the
    not-yet-processed faces from the outer face; so the processed union
    stays simply connected and each new face still has a free edge, which
    is used to fix its parity.  Bridges point from lower to higher index.
    """
    g = plane.graph
    pos = g.vset.position
    arcs: dict[int, tuple[str, str]] = {}
    for block in blocks(g)[0]:
        if len(block.eids) == 1:
            e = g.edge(next(iter(block.eids)))
            arcs[e.eid] = (e.u, e.v) if pos[e.u] < pos[e.v] else (e.v, e.u)
        elif block.eids:
            _orient_block(plane, block, arcs)
    return Orientation(arcs)


def simple_cycles(g: OrderedGraph) -> list[tuple[int, ...]]:
    """Every simple cycle as a tuple of edge ids (exponential; desk scale)."""
    pos = g.vset.position
    found: dict[frozenset[int], tuple[int, ...]] = {}
    for s in g.vertices:
        ps = pos[s]
        on_path = {s}
        path: list[int] = []

        def dfs(v: str, via: Optional[int]) -> None:
            for e in g.incident(v):
                if e.eid == via:
                    continue
                w = e.other(v)
                if w == s:
                    key = frozenset(path + [e.eid])
                    if key not in found:
                        found[key] = tuple(path + [e.eid])
                elif pos[w] > ps and w not in on_path:
                    on_path.add(w)
                    path.append(e.eid)
                    dfs(w, e.eid)
                    path.pop()
                    on_path.discard(w)

        dfs(s, None)
    return list(found.values())


def _check_cycle(plane, xi, eids, report, need_interior=True):
    co = co_oriented_count(plane, eids, xi)
    p = interior_count(plane, eids)
    report.checked += 1
    if need_interior:
        if (co + p) % 2 == 0:
            verts = tuple(cycle_vertices(plane.root.graph, eids))
            report.failures.append(CycleFailure(tuple(eids), verts, co, p, "co-oriented + interior is even"))
    else:
        if co % 2 == 0:
            verts = tuple(cycle_vertices(plane.root.graph, eids))
            report.failures.append(CycleFailure(tuple(eids), verts, co, p, "superposition cycle with an even number of co-oriented edges"))
        if p % 2:
            report.notes.append(f"superposition cycle {list(eids)} encloses an odd number ({p}) of vertices")


def _matching_cycles(mu, nu) -> list[tuple[int, ...]]:
    diff = {e.eid: e for e in mu}
    for e in nu:
        if e.eid in diff:
            del diff[e.eid]
        else:
            diff[e.eid] = e
    if not diff:
        return []
    verts = sorted({x for e in diff.values() for x in e.ends})
    g = OrderedGraph(verts, list(diff.values()))
    return [tuple(sorted(eids)) for _, eids in components(g) if len(eids) > 2]


def verify_admissible(plane: PlaneGraph, xi: Orientation, mode: str = "faces") -> AdmissibilityReport:
    """Check an orientation; failures name the offending cycle.

    ``faces`` checks contour cycles, ``all_cycles`` every simple cycle,
    ``superposition_cycles`` every cycle of two superposed perfect
    matchings (odd number of co-oriented edges required).
    """
    mode = MODE_ALIASES.get(mode, mode)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    g = plane.graph
    xi.check(g)
    report = AdmissibilityReport(mode)
    if mode == "faces":
        for c in contour_cycles(plane):
            _check_cycle(plane, xi, c.eids, report)
    elif mode == "all_cycles":
        for eids in simple_cycles(g):
            _check_cycle(plane, xi, eids, report)
    else:
        ms = list(enumerate_matchings(g))
        seen: set[frozenset[int]] = set()
        for mu, nu in combinations_with_replacement(ms, 2):
            for eids in _matching_cycles(mu, nu):
                key = frozenset(eids)
                if key in seen:
                    continue
                seen.add(key)
                _check_cycle(plane, xi, eids, report, need_interior=False)
    return report


def kasteleyn_matrix(g: OrderedGraph, xi: Orientation) -> SkewArray:
    """d_ij = sum over edges {v_i, v_j} of (+-1) * weight, + when the edge points i -> j."""
    xi.check(g)
    return SkewArray.from_graph(g, sign=xi.edge_sign)


def term_sign(g: OrderedGraph, xi: Orientation, mu) -> int:
    """Sign with which matching ``mu`` enters Pf(D(G, xi))."""
    pos = g.vset.position
    s = crossing_sign(mu, g.vertices)
    for e in mu:
        lo, hi = (e.u, e.v) if pos[e.u] < pos[e.v] else (e.v, e.u)
        s *= xi.edge_sign(e, lo, hi)
    return s


def count_via_pfaffian(plane: PlaneGraph, xi: Optional[Orientation] = None) -> Ring:
    """Matching generating function as a Pfaffian.

    The overall sign is taken from one enumerated matching's term; with no
    perfect matching the Pfaffian is returned as is (zero for an
    admissible orientation).
    """
    g = plane.graph
    if xi is None:
        xi = kasteleyn_orient(plane)
    pf = pf_eliminate(kasteleyn_matrix(g, xi))
    ref = next(enumerate_matchings(g), None)
    if ref is None:
        return normalize(pf)
    return normalize(term_sign(g, xi, ref) * pf)


def inherited_admissibility_check(plane: PlaneGraph, xi: Orientation, contour: ContourCycle,
                                  s: Iterable[str]) -> AdmissibilityReport:
    """Delete an even set of contour vertices and re-check the inherited
    orientation in faces and superposition modes."""
    s = set(s)
    if not s <= set(contour.vertices):
        raise ValueError("deleted vertices must lie on the contour cycle")
    if len(s) % 2:
        raise ValueError("an even number of vertices must be deleted")
    h = induced_delete(plane.graph, s)
    ph = plane.restrict(h)
    sub = xi.restricted(h)
    return verify_admissible(ph, sub, "faces").merge(verify_admissible(ph, sub, "superposition_cycles"))
