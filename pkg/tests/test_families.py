import pytest

from pfcond.embedding import PlaneGraph
from pfcond.families import FamilyParams, generate, parse_family, parse_weight_mode
from pfcond.matchings import count_matchings


def test_grid_two_by_two():
    g, emb = generate(FamilyParams("grid", (2, 2)))
    assert (len(g), len(g.edges), len(PlaneGraph(g, emb).faces)) == (4, 4, 2)


def test_grid_is_row_major():
    g, _ = generate(FamilyParams("grid", (2, 3)))
    assert g.vertices == ("0_0", "0_1", "0_2", "1_0", "1_1", "1_2")


def test_aztec_order_one():
    g, emb = generate(FamilyParams("aztec", (1,)))
    assert len(g) == 4 and count_matchings(g) == 2 and emb is not None


def test_aztec_diagonal_order():
    g, _ = generate(FamilyParams("aztec", (2,)))
    diag = [sum(int(x) for x in v.split("_")) for v in g.vertices]
    assert diag == sorted(diag)


def test_odd_cycle_has_no_matching():
    g, _ = generate(FamilyParams("cycle", (5,)))
    assert count_matchings(g) == 0


def test_complete_embedding_only_when_planar():
    assert generate(FamilyParams("complete", (4,)))[1] is not None
    g, emb = generate(FamilyParams("complete", (6,)))
    assert emb is None and len(g.edges) == 15


def test_random_weights_are_seeded():
    a, _ = generate(parse_family("grid:3,3", "random:1,9", seed=5))
    b, _ = generate(parse_family("grid:3,3", "random:1,9", seed=5))
    c, _ = generate(parse_family("grid:3,3", "random:1,9", seed=6))
    assert a == b and a != c
    assert all(1 <= e.w <= 9 for e in a.edges)


@pytest.mark.parametrize("text", ["grid:2", "grid:0,3", "blob:3", "cycle:x", "aztec:"])
def test_bad_family(text):
    with pytest.raises(ValueError):
        parse_family(text)


def test_weight_modes():
    assert parse_weight_mode("unit") is None
    assert parse_weight_mode("random:-3,4") == (-3, 4)
    for bad in ("random:5,1", "random:1", "gauss:1,2"):
        with pytest.raises(ValueError):
            parse_weight_mode(bad)


def test_short_cycle_rejected():
    with pytest.raises(ValueError):
        generate(FamilyParams("cycle", (2,)))
