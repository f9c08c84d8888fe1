"""Exact Pfaffians and determinants.

Two independent definitions are implemented (crossing signs of arc
diagrams, and signs of canonical pair-partition permutations) together
with an O(n^3) elimination routine that is checked against them.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graph import Edge, OrderedGraph, OrderedVertexSet, Ring, normalize, setsum

MAX_DEFINITION_N = 14


class SkewArray:
    """Upper-triangular array ``a[i, j]`` (0-based, i < j) of a skew matrix.

    Missing entries are zero.  ``get`` reads the skew-symmetric extension.
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict[tuple[int, int], Ring] | None = None):
        if n < 0:
            raise ValueError("dimension must be non-negative")
        self.n = n
        clean: dict[tuple[int, int], Ring] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise IndexError(f"bad index ({i}, {j}) for n={n}")
            if i > j:
                i, j, v = j, i, -v
            v = normalize(v)
            if v:
                clean[(i, j)] = clean.get((i, j), 0) + v
        self.entries = {k: normalize(v) for k, v in clean.items() if v}

    def __repr__(self) -> str:
        return f"SkewArray(n={self.n}, nonzero={len(self.entries)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewArray):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def get(self, i: int, j: int) -> Ring:
        if i < j:
            return self.entries.get((i, j), 0)
        if i > j:
            return -self.entries.get((j, i), 0)
        return 0

    def principal(self, indices: Sequence[int]) -> SkewArray:
        """Principal subarray on ``indices`` (sorted, i.e. inherited order)."""
        idx = sorted(indices)
        sub = {}
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                v = self.get(idx[a], idx[b])
                if v:
                    sub[(a, b)] = v
        return SkewArray(len(idx), sub)

    def matrix(self) -> list[list[Ring]]:
        return [[self.get(i, j) for j in range(self.n)] for i in range(self.n)]

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Ring]]) -> SkewArray:
        n = len(rows)
        return cls(n, {(i, j): rows[i][j] for i in range(n) for j in range(i + 1, n) if rows[i][j]})

    @classmethod
    def from_graph(cls, g: OrderedGraph, sign=None) -> SkewArray:
        """Array of summed parallel-edge weights in the order of ``g``.

        ``sign(edge, lo, hi)`` may supply a factor +-1 per edge, read for
        the direction from the lower- to the higher-indexed endpoint.
        """
        pos = g.vset.position
        entries: dict[tuple[int, int], Ring] = {}
        for e in g.edges:
            i, j = pos[e.u], pos[e.v]
            lo, hi = (e.u, e.v) if i < j else (e.v, e.u)
            w = e.w if sign is None else sign(e, lo, hi) * e.w
            key = (min(i, j), max(i, j))
            entries[key] = entries.get(key, 0) + w
        return cls(len(g), entries)


def _pairs(mu) -> list[tuple[str, str]]:
    out = []
    for p in mu:
        if isinstance(p, Edge):
            out.append(p.ends)
        else:
            a, b = p
            out.append((a, b))
    return out


def _arc_indices(mu, order: OrderedVertexSet | Sequence[str]) -> list[tuple[int, int]]:
    if not isinstance(order, OrderedVertexSet):
        order = OrderedVertexSet(order)
    arcs = []
    seen = set()
    for a, b in _pairs(mu):
        i, j = order.index(a), order.index(b)
        if i == j or i in seen or j in seen:
            raise ValueError("not a matching: repeated vertex")
        seen.update((i, j))
        arcs.append((min(i, j), max(i, j)))
    if len(seen) != len(order):
        raise ValueError("not a perfect matching of the ordered set")
    return arcs


def crossing_count(mu, order) -> int:
    arcs = _arc_indices(mu, order)
    return sum(1 for (i, j), (k, l) in combinations(arcs, 2) if i < k < j < l or k < i < l < j)


def crossing_sign(mu, order) -> int:
    """(-1)^(number of crossings) in the half-circle arc drawing."""
    return -1 if crossing_count(mu, order) % 2 else 1


def permutation_sign(seq: Sequence[int]) -> int:
    inv = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


def canonical_representation(mu, order) -> list[int]:
    """Index sequence y1..y2n with y(2k-1) < y(2k) and increasing pair minima."""
    arcs = sorted(_arc_indices(mu, order))
    return [x for arc in arcs for x in arc]


def canonical_sign(mu, order) -> int:
    """Sign of the permutation taking the ambient order to the canonical form."""
    return permutation_sign(canonical_representation(mu, order))


def pair_partitions(items: Sequence) -> Iterator[list[tuple]]:
    """All (len-1)!! ways to split ``items`` into pairs; first item paired first."""
    if not items:
        yield []
        return
    if len(items) % 2:
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest)):
        for tail in pair_partitions(rest[:k] + rest[k + 1:]):
            yield [(first, rest[k])] + tail


def pf_definition(a: SkewArray) -> Ring:
    """Pfaffian as the signed sum over all perfect matchings of K_n.

    The crossing sign is accumulated arc by arc: pairing the first free
    index with the free index at offset k crosses exactly the arcs that
    will later start strictly between them, which contributes (-1)^k.
    Zero entries prune whole subtrees.
    """
    n = a.n
    if n % 2:
        return 0
    if n > MAX_DEFINITION_N:
        raise ValueError(f"pf_definition is capped at n={MAX_DEFINITION_N} (got {n})")
    get = a.entries.get

    def rec(free: tuple[int, ...]) -> Ring:
        if not free:
            return 1
        i = free[0]
        total: Ring = 0
        for k in range(1, len(free)):
            w = get((i, free[k]))
            if not w:
                continue
            sub = rec(free[1:k] + free[k + 1:])
            if sub:
                total += w * sub if k % 2 else -w * sub
        return total

    return normalize(rec(tuple(range(n))))


def pf_by_crossings(a: SkewArray) -> Ring:
    """Literal form of the definition: enumerate matchings, count crossings."""
    if a.n % 2:
        return 0
    idx = list(range(a.n))
    total: Ring = 0
    for mu in pair_partitions(idx):
        w: Ring = 1
        for i, j in mu:
            w *= a.get(i, j)
        if w:
            total += crossing_sign(mu, idx) * w
    return normalize(total)


def pf_word(order: OrderedVertexSet | Sequence[str], f: SkewArray, word: Sequence[str]) -> Ring:
    """Pfaffian of a word of distinct letters, with the permutation sign.

    ``f`` is indexed by positions in ``order``; ``f[y, x] = -f[x, y]``.
    """
    if not isinstance(order, OrderedVertexSet):
        order = OrderedVertexSet(order)
    if len(set(word)) != len(word):
        raise ValueError("word letters must be distinct")
    if len(word) % 2:
        return 0
    letters = [order.index(x) for x in word]
    positions = list(range(len(word)))
    total: Ring = 0
    for parts in pair_partitions(positions):
        # canonical form: each pair sorted by alphabet, pairs by first letter
        pairs = sorted((tuple(sorted(p, key=lambda q: letters[q])) for p in parts), key=lambda p: letters[p[0]])
        perm = [q for p in pairs for q in p]
        w: Ring = 1
        for p, q in pairs:
            w *= f.get(letters[p], letters[q])
        if w:
            total += permutation_sign(perm) * w
    return normalize(total)


def pf_eliminate(a: SkewArray) -> Ring:
    """Pfaffian by skew Gaussian elimination over the rationals.

    Each step pivots a nonzero entry into position (k, k+1), then takes
    the Schur complement of that 2x2 block; a row/column swap flips the
    sign.
    """
    n = a.n
    if n % 2:
        return 0
    m = [[Fraction(a.get(i, j)) for j in range(n)] for i in range(n)]
    result = Fraction(1)
    for k in range(0, n, 2):
        piv = next((l for l in range(k + 1, n) if m[k][l] != 0), None)
        if piv is None:
            return 0
        if piv != k + 1:
            m[k + 1], m[piv] = m[piv], m[k + 1]
            for row in m:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            result = -result
        p = m[k][k + 1]
        result *= p
        rk, rk1 = m[k], m[k + 1]
        for i in range(k + 2, n):
            a_ki, a_k1i = rk[i], rk1[i]
            if a_ki == 0 and a_k1i == 0:
                continue
            ri = m[i]
            for j in range(k + 2, n):
                ri[j] += (rk[j] * a_k1i - a_ki * rk1[j]) / p
    return normalize(result)


def determinant(rows: Sequence[Sequence[Ring]]) -> Ring:
    """Exact determinant by fraction-valued Gaussian elimination."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / m[c][c]
                for j in range(c, n):
                    m[r][j] -= f * m[c][j]
    return normalize(det)


def det_skew(a: SkewArray) -> Ring:
    return determinant(a.matrix())


def _side_weights(g: OrderedGraph, a_side: Sequence[str], b_side: Sequence[str]) -> list[list[Ring]]:
    return [[g.pair_weight(x, y) for y in b_side] for x in a_side]


def _check_sides(g: OrderedGraph, a_side: Sequence[str], b_side: Sequence[str]) -> None:
    if tuple(g.vertices) != tuple(a_side) + tuple(b_side):
        raise ValueError("ambient order must be the A side followed by the B side")


def bipartite_array(g: OrderedGraph, a_side: Sequence[str], b_side: Sequence[str]) -> SkewArray:
    """Array of K_{A:B}: only A-B weights survive."""
    bset = set(b_side)
    full = SkewArray.from_graph(g)
    keep = {}
    for (i, j), v in full.entries.items():
        if (g.vertices[i] in bset) != (g.vertices[j] in bset):
            keep[(i, j)] = v
    return SkewArray(full.n, keep)


def semibipartite_array(g: OrderedGraph, a_side: Sequence[str]) -> SkewArray:
    """Array of the semi-bipartite graph: edges inside the A side dropped."""
    aset = set(a_side)
    full = SkewArray.from_graph(g)
    keep = {k: v for k, v in full.entries.items() if not (g.vertices[k[0]] in aset and g.vertices[k[1]] in aset)}
    return SkewArray(full.n, keep)


def pf_bipartite(a_side: Sequence[str], b_side: Sequence[str], g: OrderedGraph) -> Ring:
    """Pf(K_{A:B}) through the determinant formula (-1)^C(n,2) det(w(a_i, b_j))."""
    _check_sides(g, a_side, b_side)
    m, n = len(a_side), len(b_side)
    if m != n:
        return 0
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return normalize(sign * determinant(_side_weights(g, a_side, b_side)))


class IdentityMismatch(AssertionError):
    """Raised when two exact evaluations that must agree do not."""


def semibipartite_expansion(a_side: Sequence[str], b_side: Sequence[str], g: OrderedGraph) -> Ring:
    """(-1)^m sum over m-subsets Y of B of (-1)^SETSUM(Y,B) Pf(B - Y) det(M_Y)."""
    m = len(a_side)
    b_order = OrderedVertexSet(b_side)
    full = SkewArray.from_graph(g)
    pos = g.vset.position
    total: Ring = 0
    for ys in combinations(b_side, m):
        det = determinant(_side_weights(g, a_side, ys)) if m else 1
        if not det:
            continue
        rest = [pos[v] for v in b_side if v not in ys]
        pf_rest = pf_definition(full.principal(rest))
        sign = -1 if (m + setsum(ys, b_order)) % 2 else 1
        total += sign * pf_rest * det
    return normalize(total)


def pf_semibipartite(a_side: Sequence[str], b_side: Sequence[str], g: OrderedGraph) -> Ring:
    """Pf of the semi-bipartite graph, cross-checked against its expansion.

    A mismatch raises :class:`IdentityMismatch` rather than being
    silently returned.
    """
    _check_sides(g, a_side, b_side)
    direct = pf_definition(semibipartite_array(g, a_side))
    expanded = semibipartite_expansion(a_side, b_side, g)
    if direct != expanded:
        raise IdentityMismatch(f"semi-bipartite expansion: Pf={direct} but expansion={expanded}")
    return direct


def skew_from_labels(order: Iterable[str], weights: dict[tuple[str, str], Ring]) -> tuple[OrderedVertexSet, SkewArray]:
    order = OrderedVertexSet(order)
    entries = {}
    for (x, y), w in weights.items():
        entries[(order.index(x), order.index(y))] = w
    return order, SkewArray(len(order), entries)
