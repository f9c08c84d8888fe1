"""Generators for the standard graph families, with plane embeddings."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .embedding import Embedding, embedding_from_coordinates
from .graph import Edge, OrderedGraph

KINDS = ("grid", "aztec", "cycle", "complete", "path")


@dataclass(frozen=True)
class FamilyParams:
    kind: str
    params: tuple[int, ...]
    weights: str = "unit"
    seed: int = 0


def parse_family(text: str, weights: str = "unit", seed: int = 0) -> FamilyParams:
    """Parse ``kind:p1,p2``; raises ValueError on anything malformed."""
    kind, _, rest = text.partition(":")
    if kind not in KINDS:
        raise ValueError(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        params = tuple(int(p) for p in rest.split(",")) if rest else ()
    except ValueError:
        raise ValueError(f"family parameters must be integers: {rest!r}") from None
    want = 2 if kind == "grid" else 1
    if len(params) != want:
        raise ValueError(f"{kind} takes {want} parameter(s)")
    if any(p <= 0 for p in params):
        raise ValueError("family parameters must be positive")
    parse_weight_mode(weights)
    return FamilyParams(kind, params, weights, seed)


def parse_weight_mode(text: str) -> Optional[tuple[int, int]]:
    """None for unit weights, else the inclusive integer range."""
    if text == "unit":
        return None
    kind, _, rng = text.partition(":")
    if kind != "random":
        raise ValueError(f"weights must be 'unit' or 'random:lo,hi', got {text!r}")
    try:
        lo, hi = (int(x) for x in rng.split(","))
    except ValueError:
        raise ValueError(f"bad weight range {rng!r}") from None
    if lo > hi:
        raise ValueError("weight range is empty")
    return lo, hi


def _build(vertices, pairs, coords, planar=True):
    g = OrderedGraph(vertices, [Edge(i, u, v) for i, (u, v) in enumerate(pairs)])
    return g, (embedding_from_coordinates(g, coords) if planar else None)


def grid(m: int, n: int):
    """m rows by n columns, row-major order."""
    label = lambda i, j: f"{i}_{j}"
    verts = [label(i, j) for i in range(m) for j in range(n)]
    pairs = []
    for i in range(m):
        for j in range(n):
            if j + 1 < n:
                pairs.append((label(i, j), label(i, j + 1)))
            if i + 1 < m:
                pairs.append((label(i, j), label(i + 1, j)))
    coords = {label(i, j): (float(j), float(-i)) for i in range(m) for j in range(n)}
    return _build(verts, pairs, coords)


def aztec(n: int):
    """Dual graph of the Aztec diamond of order n.

    Cells are the unit squares [i,i+1]x[j,j+1] with |i+1/2|+|j+1/2| <= n,
    ordered by diagonal (i+j, then i).
    """
    cells = [(i, j) for i in range(-n, n) for j in range(-n, n) if abs(i + 0.5) + abs(j + 0.5) <= n]
    cells.sort(key=lambda c: (c[0] + c[1], c[0]))
    label = lambda c: f"{c[0]}_{c[1]}"
    present = set(cells)
    pairs = []
    for i, j in cells:
        for nb in ((i + 1, j), (i, j + 1)):
            if nb in present:
                pairs.append((label((i, j)), label(nb)))
    coords = {label(c): (c[0] + 0.5, c[1] + 0.5) for c in cells}
    return _build([label(c) for c in cells], pairs, coords)


def _circle(n):
    return {str(k + 1): (math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n)) for k in range(n)}


def cycle(n: int):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    verts = [str(k + 1) for k in range(n)]
    pairs = [(verts[k], verts[(k + 1) % n]) for k in range(n)]
    return _build(verts, pairs, _circle(n))


def path(n: int):
    verts = [str(k + 1) for k in range(n)]
    pairs = [(verts[k], verts[k + 1]) for k in range(n - 1)]
    return _build(verts, pairs, {v: (float(k), 0.0) for k, v in enumerate(verts)})


def complete(n: int):
    """K_n; an embedding only exists (and is emitted) for n <= 4."""
    verts = [str(k + 1) for k in range(n)]
    pairs = [(verts[a], verts[b]) for a in range(n) for b in range(a + 1, n)]
    if n <= 3:
        coords = _circle(n)
    elif n == 4:
        coords = _circle(3)
        coords["4"] = (0.0, 0.0)
    else:
        coords = None
    return _build(verts, pairs, coords, planar=coords is not None)


def random_weights(g: OrderedGraph, lo: int, hi: int, rng: random.Random) -> OrderedGraph:
    return g.with_weights({e.eid: rng.randint(lo, hi) for e in g.edges})


def generate(fam: FamilyParams) -> tuple[OrderedGraph, Optional[Embedding]]:
    builders = {"grid": grid, "aztec": aztec, "cycle": cycle, "complete": complete, "path": path}
    g, emb = builders[fam.kind](*fam.params)
    rng_range = parse_weight_mode(fam.weights)
    if rng_range is not None:
        g = random_weights(g, *rng_range, random.Random(fam.seed))
    return g, emb
