"""Brute-force enumeration of perfect matchings.

This is the trusted oracle for everything Pfaffian-based, so it stays
deliberately simple: branch on the lowest-indexed uncovered vertex, try
its edges in input order, no memoization.
"""

from __future__ import annotations

from typing import Iterator

from .graph import Edge, OrderedGraph, Ring, normalize, weight_of_edge_set

Matching = tuple[Edge, ...]


def enumerate_matchings(g: OrderedGraph) -> Iterator[Matching]:
    """Yield every perfect matching of ``g`` exactly once.

    Parallel edges count as distinct, so two parallel edges on a
    two-vertex graph give two matchings.
    """
    if len(g) % 2:
        return
    order = g.vertices
    covered: set[str] = set()
    chosen: list[Edge] = []

    def rec(start: int) -> Iterator[Matching]:
        i = start
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            yield tuple(chosen)
            return
        v = order[i]
        covered.add(v)
        for e in g.incident(v):
            u = e.other(v)
            if u in covered:
                continue
            covered.add(u)
            chosen.append(e)
            yield from rec(i + 1)
            chosen.pop()
            covered.discard(u)
        covered.discard(v)

    yield from rec(0)


def matching_gf(g: OrderedGraph) -> Ring:
    """Total weight of all perfect matchings; 1 for the empty graph."""
    return normalize(sum((weight_of_edge_set(m) for m in enumerate_matchings(g)), 0))


def count_matchings(g: OrderedGraph) -> int:
    return sum(1 for _ in enumerate_matchings(g))


def is_perfect_matching(g: OrderedGraph, m) -> bool:
    seen: set[str] = set()
    for e in m:
        if not g.has_edge_id(e.eid):
            return False
        for x in e.ends:
            if x in seen:
                return False
            seen.add(x)
    return seen == set(g.vertices)
