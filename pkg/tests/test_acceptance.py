"""End-to-end acceptance checks with their time budgets.

Each check prints one line ``PASS|FAIL <name>: <detail> (<elapsed>s of <limit>s)``.
Under pytest the lines are repeated in the terminal summary; the file
can also be run directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time

import pytest

from pfcond.embedding import PlaneGraph
from pfcond.families import aztec, complete, cycle, grid
from pfcond.graph import OrderedGraph
from pfcond.identities import check_kuo
from pfcond.kasteleyn import MODES, contour_cycles, kasteleyn_matrix, kasteleyn_orient, verify_admissible
from pfcond.matchings import count_matchings, matching_gf
from pfcond.pfaffian import SkewArray, canonical_sign, crossing_sign, det_skew, pair_partitions, pf_definition, pf_eliminate
from pfcond.suites import SUITES, report_line, run_suite
from pfcond.superposition import superpositions, swap_colours, swap_with_sign

SEED = 7
LINES: list[str] = []


def record(name: str, limit: float, check) -> tuple[bool, str]:
    t0 = time.perf_counter()
    try:
        ok, detail = check()
    except Exception as exc:  # a crash is a failure of the criterion, not of the harness
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - t0
    if elapsed >= limit:
        ok, detail = False, f"{detail}; over time budget"
    line = f"{'PASS' if ok else 'FAIL'} {name}: {detail} ({elapsed:.1f}s of {limit:g}s)"
    print(line)
    LINES.append(line)
    return ok, line


# Pfaffian evaluations --------------------------------------------------------


def pfaffian_equivalences():
    rng = random.Random(SEED)
    bad = []
    total = 0
    for n in (2, 4, 6, 8, 10):
        for k in range(200):
            a = SkewArray(n, {(i, j): rng.randint(-50, 50) for i in range(n) for j in range(i + 1, n)})
            pf = pf_definition(a)
            if pf_eliminate(a) != pf or det_skew(a) != pf * pf:
                bad.append((n, k))
            total += 1
    return not bad, f"{total - len(bad)}/{total} arrays agree (elimination, definition, determinant)"


def sign_definitions():
    checked = 0
    bad = 0
    for n in range(5):
        order = list(range(2 * n))
        for mu in pair_partitions(order):
            checked += 1
            bad += crossing_sign(mu, order) != canonical_sign(mu, order)
    return bad == 0 and checked == 1 + 1 + 3 + 15 + 105, f"{checked - bad}/{checked} matchings of K_2n (n<=4) agree"


# Planar instances ------------------------------------------------------------


def planar_instances():
    out = []
    for m in range(1, 5):
        for n in range(m, 5):
            out.append((f"grid:{m},{n}", grid(m, n)))
    for n in (1, 2, 3):
        out.append((f"aztec:{n}", aztec(n)))
    for n in range(3, 13):
        out.append((f"cycle:{n}", cycle(n)))
    out.append(("complete:4", complete(4)))
    return out


KNOWN_COUNTS = {"grid:4,4": 36, "aztec:1": 2, "aztec:2": 8, "aztec:3": 64, "complete:4": 3}


def kasteleyn_counting():
    rng = random.Random(SEED)
    bad = []
    runs = 0
    for name, (g, emb) in planar_instances():
        p = PlaneGraph(g, emb)
        xi = kasteleyn_orient(p)
        if name in KNOWN_COUNTS and count_matchings(g) != KNOWN_COUNTS[name]:
            bad.append(f"{name} count")
        for weighted in (False, True):
            h = g.with_weights({e.eid: rng.randint(1, 100) for e in g.edges}) if weighted else g
            if abs(pf_eliminate(kasteleyn_matrix(h, xi))) != matching_gf(h):
                bad.append(f"{name} {'random' if weighted else 'unit'}")
            runs += 1
    return not bad, f"{runs - len(bad)}/{runs} instances match enumeration" + (f"; mismatches {bad}" if bad else "")


def orientation_admissibility():
    bad = []
    checks = 0
    flips = 0
    for name, (g, emb) in planar_instances():
        for plane in (PlaneGraph(g, emb), PlaneGraph(g, emb).mirrored() if g.edges else None):
            if plane is None:
                continue
            xi = kasteleyn_orient(plane)
            for mode in MODES:
                checks += 1
                if not verify_admissible(plane, xi, mode).ok:
                    bad.append(f"{name}/{mode}")
            contours = contour_cycles(plane)
            if contours:
                flips += 1
                if verify_admissible(plane, xi.flipped(contours[0].eids[0]), "faces").ok:
                    bad.append(f"{name} flip not caught")
    return not bad, f"{checks - len(bad)}/{checks} mode checks pass, {flips} single-edge flips caught" + (
        f"; failures {bad}" if bad else "")


# Identity suites ---------------------------------------------------------------


def identity_suites():
    summary = []
    failures = []
    for name in SUITES:
        reports = run_suite(name, 100, SEED)
        passed = sum(r.passed for r in reports)
        summary.append(f"{name} {passed}/100")
        failures += [report_line(r, SEED, t) for t, r in enumerate(reports) if not r.passed]
    for line in failures[:5]:
        print("  " + line)
    return not failures, ", ".join(summary)


# Colour swaps -------------------------------------------------------------------


def swap_laws():
    rng = random.Random(SEED)
    swaps = 0
    problems = []
    for n in (6, 8):
        vs = [f"v{i + 1}" for i in range(n)]
        g = OrderedGraph(vs, [(vs[i], vs[j], rng.choice([-1, 1]) * rng.randint(1, 99))
                              for i in range(n) for j in range(i + 1, n)])
        for colours in itertools.product("wrb", repeat=n):
            red = [v for v, c in zip(vs, colours) if c == "r"]
            blue = [v for v, c in zip(vs, colours) if c == "b"]
            for s in superpositions(g, red, blue):
                for x in s.coloured:
                    t, _ = swap_with_sign(s, x)
                    swaps += 1
                    if swap_colours(t, x) != s:
                        problems.append(f"not an involution at {x}")
                    if t.weight() != s.weight():
                        problems.append(f"weight changed at {x}")
    return not problems, f"{swaps} swaps on K6 and K8 over all colourings" + (f"; {problems[:3]}" if problems else "")


# Kuo's condensation on small instances ----------------------------------------


def kuo_small():
    rng = random.Random(SEED)
    checked = 0
    bad = []
    for name, (g, emb) in (("grid:2,3", grid(2, 3)), ("grid:3,4", grid(3, 4)), ("aztec:2", aztec(2))):
        for weighted in (False, True):
            h = g.with_weights({e.eid: rng.randint(1, 20) for e in g.edges}) if weighted else g
            p = PlaneGraph(h, emb)
            for f in p.faces:
                if len(set(f.vertices)) != len(f.vertices):
                    continue
                for quad in itertools.combinations(f.vertices, 4):
                    checked += 1
                    if not check_kuo(p, *quad).passed:
                        bad.append(f"{name} {quad}")
    return not bad, f"{checked - len(bad)}/{checked} face quadruples hold (unit and random weights)"


CHECKS = [
    ("pfaffian-equivalences", 60, pfaffian_equivalences),
    ("sign-definitions", 5, sign_definitions),
    ("kasteleyn-counting", 60, kasteleyn_counting),
    ("orientation-admissibility", 60, orientation_admissibility),
    ("identity-suites", 300, identity_suites),
    ("swap-laws", 120, swap_laws),
    ("kuo-small-instances", 30, kuo_small),
]


@pytest.mark.parametrize("name, limit, check", CHECKS, ids=[c[0] for c in CHECKS])
def test_acceptance(name, limit, check):
    ok, line = record(name, limit, check)
    assert ok, line


if __name__ == "__main__":
    results = [record(*c)[0] for c in CHECKS]
    sys.exit(0 if all(results) else 1)
