import random
from fractions import Fraction

import pytest

from pfcond.graph import OrderedGraph
from pfcond.pfaffian import (MAX_DEFINITION_N, SkewArray, canonical_sign, crossing_sign, det_skew, determinant,
                             pair_partitions, pf_bipartite, pf_by_crossings, pf_definition, pf_eliminate,
                             pf_semibipartite, pf_word, semibipartite_expansion)


def rand_skew(n, rng, lo=-9, hi=9):
    return SkewArray(n, {(i, j): rng.randint(lo, hi) for i in range(n) for j in range(i + 1, n)})


def complete(labels, rng):
    return OrderedGraph(labels, [(labels[i], labels[j], rng.choice([-3, -2, -1, 1, 2, 3, 5]))
                                 for i in range(len(labels)) for j in range(i + 1, len(labels))])


V = ["v1", "v2", "v3", "v4"]


@pytest.mark.parametrize("mu, expected", [
    ([("v1", "v3"), ("v2", "v4")], -1),
    ([("v1", "v2"), ("v3", "v4")], 1),
    ([("v1", "v4"), ("v2", "v3")], 1),
])
def test_crossing_sign_on_four_points(mu, expected):
    assert crossing_sign(mu, V) == expected


def test_canonical_sign_examples():
    order = [1, 2, 3, 4]
    assert canonical_sign([(1, 2), (3, 4)], order) == 1
    assert canonical_sign([(1, 3), (2, 4)], order) == -1


def test_canonical_and_crossing_agree_on_eight_point_example():
    mu = [(1, 3), (2, 7), (4, 8), (5, 6)]
    order = list(range(1, 9))
    assert canonical_sign(mu, order) == crossing_sign(mu, order)


def test_matching_must_be_perfect():
    with pytest.raises(ValueError):
        crossing_sign([("v1", "v2")], V)
    with pytest.raises(ValueError):
        crossing_sign([("v1", "v2"), ("v2", "v3")], V)


def test_pair_partition_counts():
    assert [sum(1 for _ in pair_partitions(list(range(2 * k)))) for k in range(5)] == [1, 1, 3, 15, 105]


def test_small_pfaffians():
    assert pf_definition(SkewArray(0)) == 1
    assert pf_definition(SkewArray(2, {(0, 1): 7})) == 7
    a = SkewArray(4, {(0, 1): 2, (0, 2): 3, (0, 3): 5, (1, 2): 7, (1, 3): 11, (2, 3): 13})
    assert pf_definition(a) == 2 * 13 - 3 * 11 + 5 * 7
    assert pf_eliminate(a) == pf_definition(a) == pf_by_crossings(a)


def test_odd_and_zero_arrays():
    assert pf_definition(SkewArray(3, {(0, 1): 1})) == 0
    assert pf_eliminate(SkewArray(5, {(0, 1): 1, (2, 3): 1})) == 0
    assert pf_eliminate(SkewArray(6)) == 0
    assert det_skew(rand_skew(5, random.Random(3))) == 0


def test_lower_triangle_input_is_negated():
    assert SkewArray(2, {(1, 0): 4}).get(0, 1) == -4


def test_definition_cap():
    with pytest.raises(ValueError):
        pf_definition(SkewArray(MAX_DEFINITION_N + 2))


@pytest.mark.parametrize("seed", range(5))
def test_elimination_matches_definition(seed):
    rng = random.Random(seed)
    a = rand_skew(6, rng)
    assert pf_eliminate(a) == pf_definition(a)
    assert det_skew(a) == pf_definition(a) ** 2


def test_elimination_needs_pivoting():
    # a[0,1] = 0 forces a row swap on the first step
    a = SkewArray(4, {(0, 2): 1, (1, 3): 1})
    assert pf_eliminate(a) == pf_definition(a) == -1


def test_rational_entries():
    a = SkewArray(4, {(0, 1): Fraction(1, 2), (2, 3): Fraction(2, 3), (0, 2): Fraction(1, 5)})
    assert pf_eliminate(a) == Fraction(1, 3) == pf_definition(a)


def test_pf_word():
    order = ["x", "y", "z", "t"]
    f = SkewArray(4, {(0, 1): 5, (2, 3): 2, (0, 2): 3, (1, 3): 7, (0, 3): 1, (1, 2): 4})
    assert pf_word(order, f, ["x", "y"]) == 5
    assert pf_word(order, f, ["y", "x"]) == -5
    assert pf_word(order, f, order) == pf_definition(f)
    assert pf_word(order, f, ["x", "y", "z"]) == 0


def test_pf_word_transposition_flips_sign():
    order = ["a", "b", "c", "d"]
    f = rand_skew(4, random.Random(1))
    assert pf_word(order, f, ["b", "a", "c", "d"]) == -pf_word(order, f, order)


def test_determinant_helper():
    assert determinant([]) == 1
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[0, 1, 2], [1, 0, 3], [4, -3, 8]]) == -2


def test_bipartite_pfaffian():
    rng = random.Random(11)
    labels = ["a1", "a2", "a3", "b1", "b2", "b3"]
    g = complete(labels, rng)
    a, b = labels[:3], labels[3:]
    m = [[g.pair_weight(x, y) for y in b] for x in a]
    assert pf_bipartite(a, b, g) == -determinant(m)
    from pfcond.pfaffian import bipartite_array
    assert pf_bipartite(a, b, g) == pf_definition(bipartite_array(g, a, b))


def test_bipartite_unbalanced_and_single():
    g = OrderedGraph(["a", "b"], [("a", "b", 9)])
    assert pf_bipartite(["a"], ["b"], g) == 9
    g3 = OrderedGraph(["a", "b", "c", "d"], [("a", "c", 1), ("a", "d", 1)])
    assert pf_bipartite(["a"], ["b", "c", "d"], g3) == 0


def test_bipartite_needs_side_order():
    g = OrderedGraph(["b", "a"], [("a", "b")])
    with pytest.raises(ValueError):
        pf_bipartite(["a"], ["b"], g)


@pytest.mark.parametrize("m, n", [(0, 4), (3, 7), (2, 4), (4, 2)])
def test_semibipartite_expansion(m, n):
    rng = random.Random(m * 10 + n)
    labels = [f"a{i}" for i in range(m)] + [f"b{i}" for i in range(n)]
    g = complete(labels, rng)
    direct = pf_semibipartite(labels[:m], labels[m:], g)
    assert direct == semibipartite_expansion(labels[:m], labels[m:], g)
    if m > n:
        assert direct == 0
