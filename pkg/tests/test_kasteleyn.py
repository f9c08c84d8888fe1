import random

import pytest

from pfcond.embedding import PlaneGraph
from pfcond.families import aztec, complete, cycle, grid, path
from pfcond.graph import induced_delete
from pfcond.kasteleyn import (MODES, Orientation, co_oriented_count, contour_cycles, count_via_pfaffian,
                              inherited_admissibility_check, kasteleyn_matrix, kasteleyn_orient, simple_cycles,
                              term_sign, verify_admissible)
from pfcond.matchings import count_matchings, enumerate_matchings, matching_gf


def plane(pair):
    return PlaneGraph(*pair)


def reversed_all(xi):
    return Orientation({e: (h, t) for e, (t, h) in xi.arcs.items()})


def test_alternating_four_cycle_has_two_co_oriented():
    p = plane(cycle(4))
    g = p.graph
    walk = ["1", "2", "3", "4"]
    arcs = {}
    for k, e in enumerate(g.edges):
        a, b = walk[k], walk[(k + 1) % 4]
        arcs[e.eid] = (a, b) if k % 2 == 0 else (b, a)
    xi = Orientation(arcs)
    assert co_oriented_count(p, [0, 1, 2, 3], xi) == 2


@pytest.mark.parametrize("pair", [cycle(6), grid(2, 3), aztec(2)], ids=["c6", "g23", "az2"])
def test_reversal_complements_count(pair):
    p = plane(pair)
    xi = kasteleyn_orient(p)
    for c in contour_cycles(p):
        assert co_oriented_count(p, c.eids, xi) + co_oriented_count(p, c.eids, reversed_all(xi)) == len(c)


def test_single_four_cycle_gets_odd_count():
    p = plane(cycle(4))
    xi = kasteleyn_orient(p)
    assert co_oriented_count(p, [0, 1, 2, 3], xi) % 2 == 1


def test_contour_cycles_of_grid():
    p = plane(grid(3, 3))
    cs = contour_cycles(p)
    assert len(cs) == 4 and all(len(c) == 4 and c.interior_count == 0 for c in cs)


@pytest.mark.parametrize("pair", [grid(2, 2), grid(2, 3), grid(3, 4), aztec(2), cycle(7), complete(4)],
                         ids=["g22", "g23", "g34", "az2", "c7", "k4"])
@pytest.mark.parametrize("mode", MODES)
def test_constructed_orientation_is_admissible(pair, mode):
    p = plane(pair)
    rep = verify_admissible(p, kasteleyn_orient(p), mode)
    assert rep.ok, [str(f) for f in rep.failures]


def test_mode_aliases():
    p = plane(grid(2, 3))
    xi = kasteleyn_orient(p)
    assert verify_admissible(p, xi, "all").mode == "all_cycles"
    assert verify_admissible(p, xi, "super").mode == "superposition_cycles"
    with pytest.raises(ValueError):
        verify_admissible(p, xi, "nope")


def test_every_single_flip_is_caught_on_faces():
    p = plane(grid(3, 3))
    xi = kasteleyn_orient(p)
    for e in p.graph.edges:
        rep = verify_admissible(p, xi.flipped(e.eid), "faces")
        assert not rep.ok
        assert all(e.eid in f.eids for f in rep.failures)


def test_flipped_edge_fails_superposition_mode():
    p = plane(grid(2, 3))
    xi = kasteleyn_orient(p).flipped(0)
    assert not verify_admissible(p, xi, "superposition_cycles").ok


@pytest.mark.parametrize("pair, expected", [
    (grid(2, 2), 2), (grid(2, 3), 3), (grid(3, 3), 0), (grid(4, 4), 36),
    (aztec(1), 2), (aztec(2), 8), (aztec(3), 64), (complete(4), 3), (cycle(12), 2), (cycle(5), 0), (path(4), 1),
], ids=["g22", "g23", "g33", "g44", "az1", "az2", "az3", "k4", "c12", "c5", "p4"])
def test_pfaffian_counts(pair, expected):
    p = plane(pair)
    assert count_via_pfaffian(p) == expected == count_matchings(p.graph)


@pytest.mark.parametrize("seed", range(4))
def test_pfaffian_matches_enumeration_with_weights(seed):
    rng = random.Random(seed)
    p = plane(grid(3, 4))
    g = p.graph.with_weights({e.eid: rng.randint(1, 20) for e in p.graph.edges})
    assert count_via_pfaffian(PlaneGraph(g, p.embedding)) == matching_gf(g)


def test_terms_share_one_sign():
    p = plane(aztec(2))
    xi = kasteleyn_orient(p)
    assert len({term_sign(p.graph, xi, mu) for mu in enumerate_matchings(p.graph)}) == 1


def test_mirrored_embedding_still_admissible():
    p = plane(aztec(2)).mirrored()
    xi = kasteleyn_orient(p)
    for mode in MODES:
        assert verify_admissible(p, xi, mode).ok


def test_matrix_is_skew_with_orientation_signs():
    p = plane(cycle(4))
    xi = kasteleyn_orient(p)
    a = kasteleyn_matrix(p.graph, xi)
    for e in p.graph.edges:
        i, j = p.graph.vset.index(e.u), p.graph.vset.index(e.v)
        assert a.get(i, j) == xi.edge_sign(e, e.u, e.v) * e.w == -a.get(j, i)


def test_orientation_check_and_xi():
    p = plane(cycle(4))
    xi = kasteleyn_orient(p)
    xi.check(p.graph)
    with pytest.raises(ValueError):
        Orientation({}).check(p.graph)
    e = p.graph.edges[0]
    assert xi.xi(p.graph, e.u, e.v) == -xi.xi(p.graph, e.v, e.u)


def test_simple_cycles_of_k4():
    g, _ = complete(4)
    assert len(simple_cycles(g)) == 7


def test_inherited_check_removing_outer_pair():
    p = plane(grid(2, 4))
    xi = kasteleyn_orient(p)
    (outer,) = p.outer_faces
    f = p.faces[outer]
    from pfcond.kasteleyn import ContourCycle
    contour = ContourCycle(tuple(f.vertices), tuple(e for e, _ in f.darts), 0)
    assert inherited_admissibility_check(p, xi, contour, []).ok
    assert inherited_admissibility_check(p, xi, contour, ["0_0", "0_1"]).ok
    assert inherited_admissibility_check(p, xi, contour, ["0_0", "0_1", "1_2", "1_3"]).ok
    with pytest.raises(ValueError):
        inherited_admissibility_check(p, xi, contour, ["0_0"])


def test_inherited_check_removing_whole_contour():
    p = plane(grid(3, 4))
    xi = kasteleyn_orient(p)
    c = contour_cycles(p)[0]
    assert inherited_admissibility_check(p, xi, c, c.vertices).ok


def test_restricted_orientation_counts_subgraphs():
    p = plane(aztec(2))
    xi = kasteleyn_orient(p)
    h = induced_delete(p.graph, [p.graph.vertices[0], p.graph.vertices[1]])
    assert count_via_pfaffian(p.restrict(h), xi.restricted(h)) == matching_gf(h)


def test_interior_deletion_can_break_inherited_orientation():
    p = plane(grid(3, 4))
    xi = kasteleyn_orient(p)
    h = induced_delete(p.graph, ["0_0", "1_2"])
    assert matching_gf(h) == 3
    assert abs(count_via_pfaffian(p.restrict(h), xi.restricted(h))) != 3
