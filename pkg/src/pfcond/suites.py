"""Seeded random trials for every identity check.

Trial ``t`` of a run with seed ``s`` draws everything from
``random.Random(s * 100003 + t)``, so a single trial can be replayed
without running the ones before it.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .embedding import PlaneGraph
from .families import aztec, cycle, grid
from .graph import format_weight
from .identities import (KRATT_VARIANTS, IdentityReport, bipartition, check_ciucu, check_edge_condensation,
                         check_general_srinivasan, check_krattenthaler, check_kuo, check_lemma_yyz, check_ohta,
                         check_sign_preserving, check_srinivasan, check_tanner, subdivide_edges,
                         tanner_involution_evidence)
from .graph import OrderedGraph
from .pfaffian import MAX_DEFINITION_N, SkewArray

WEIGHT_RANGE = (-99, 99)
EVIDENCE_MAX_N = 8


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * 100003 + trial)


def nonzero(rng: random.Random) -> int:
    lo, hi = WEIGHT_RANGE
    while True:
        x = rng.randint(lo, hi)
        if x:
            return x


def random_skew(n: int, rng: random.Random) -> SkewArray:
    return SkewArray(n, {(i, j): nonzero(rng) for i in range(n) for j in range(i + 1, n)})


def labels(n: int) -> list[str]:
    return [f"v{i + 1}" for i in range(n)]


def _combine(name: str, reports: list[IdentityReport], desc: str) -> IdentityReport:
    out = IdentityReport(name, desc, tuple(r.lhs for r in reports), tuple(r.rhs for r in reports))
    for r in reports:
        for what in r.failed_checks:
            out.require(False, f"{r.descriptor}: {what}")
    out.details["parts"] = reports
    return out


# Pfaffian identities on random dense arrays ---------------------------------


def trial_tanner(rng, size):
    gamma = labels(size)
    m = rng.randint(1, size)
    alpha, beta = gamma[: size - m], gamma[size - m:]
    w = random_skew(size, rng)
    reports = [check_tanner(gamma, alpha, beta, w, k) for k in range(1, m + 1)]
    rep = _combine("tanner", reports, f"alpha={len(alpha)},beta={len(beta)},k=1..{m}")
    if size <= EVIDENCE_MAX_N:
        k = rng.randint(1, m)
        ev = tanner_involution_evidence(gamma, alpha, beta, w, k)
        rep.details["involution"] = ev
        rep.require(ev.ok, f"involution pairing at k={k}: {ev.problems[:1]}")
    return rep


def _overlapping(rng, gamma):
    alpha, beta = [], []
    for v in gamma:
        c = rng.randint(0, 2)
        if c != 1:
            alpha.append(v)
        if c != 0:
            beta.append(v)
    return alpha, beta


def trial_ohta(rng, size):
    gamma = labels(size)
    alpha, beta = _overlapping(rng, gamma)
    w = random_skew(size, rng)
    rep = check_ohta(gamma, alpha, beta, w)
    if size <= EVIDENCE_MAX_N:
        from .identities import ohta_involution_evidence

        ev = ohta_involution_evidence(gamma, alpha, beta, w)
        rep.details["involution"] = ev
        rep.require(ev.ok, f"involution pairing: {ev.problems[:1]}")
    return rep


def trial_kratt(rng, size):
    gamma = labels(size)
    while True:
        alpha, beta = _overlapping(rng, gamma)
        if set(alpha) ^ set(beta):
            break
    w = random_skew(size, rng)
    reports = [check_krattenthaler(gamma, alpha, beta, w, v) for v in KRATT_VARIANTS]
    return _combine("kratt", reports, f"|alpha|={len(alpha)},|beta|={len(beta)},M={len(set(alpha) ^ set(beta))}")


SRINIVASAN_CASES = ("m<n", "m=n", "m>n")


def trial_srinivasan(rng, size, trial=0):
    size -= size % 2
    half = size // 2
    case = SRINIVASAN_CASES[trial % 3]
    if case == "m<n":
        m = rng.randint(0, half - 1)
    elif case == "m=n":
        m = half
    else:
        m = rng.randint(half + 1, size)
    v = labels(size)
    return check_srinivasan(v, v[:m], v[m:], random_skew(size, rng))


def trial_gen_srinivasan(rng, size):
    v = labels(size)
    shuffled = v[:]
    rng.shuffle(shuffled)
    kr = rng.randint(0, size // 2)
    kb = rng.randint(0, min(size - kr, size // 2))
    return check_general_srinivasan(v, random_skew(size, rng), shuffled[:kr], shuffled[kr:kr + kb])


# Planar identities on family instances --------------------------------------


def planar_pool(size: int, bipartite: bool = False) -> list[tuple[str, Callable]]:
    pool = []
    for m in range(2, 5):
        for n in range(m, 5):
            if m * n <= size:
                pool.append((f"grid:{m},{n}", lambda m=m, n=n: grid(m, n)))
    for n in (1, 2):
        if 2 * n * (n + 1) <= size:
            pool.append((f"aztec:{n}", lambda n=n: aztec(n)))
    for n in range(4, min(size, 12) + 1):
        if not bipartite or n % 2 == 0:
            pool.append((f"cycle:{n}", lambda n=n: cycle(n)))
    if not pool:
        raise ValueError(f"no planar instance has at most {size} vertices")
    return pool


def random_plane(rng, size, bipartite=False) -> tuple[str, PlaneGraph]:
    name, build = rng.choice(planar_pool(size, bipartite))
    g, emb = build()
    g = g.with_weights({e.eid: nonzero(rng) for e in g.edges})
    return name, PlaneGraph(g, emb)


def face_vertices(rng, plane: PlaneGraph, count: int):
    """``count`` distinct vertices in cyclic order on a random face, or None."""
    faces = [f for f in plane.faces if len(set(f.vertices)) == len(f.vertices) >= count]
    if not faces:
        return None
    f = rng.choice(faces)
    idx = sorted(rng.sample(range(len(f.vertices)), count))
    vs = [f.vertices[i] for i in idx]
    s = rng.randrange(count)
    return vs[s:] + vs[:s]


def _tag(rep: IdentityReport, family: str) -> IdentityReport:
    rep.descriptor = f"{family};{rep.descriptor}"
    return rep


def trial_kuo(rng, size):
    while True:
        fam, plane = random_plane(rng, size)
        vs = face_vertices(rng, plane, 4)
        if vs:
            return _tag(check_kuo(plane, *vs), fam)


def trial_sign_preserving(rng, size):
    while True:
        fam, plane = random_plane(rng, size)
        k = rng.randint(1, 3)
        vs = face_vertices(rng, plane, 2 * k)
        if vs:
            red, blue = vs[0::2], vs[1::2]
            x = [v for v in red if rng.random() < 0.5]
            return _tag(check_sign_preserving(plane, red, blue, x), fam)


def trial_ciucu(rng, size):
    while True:
        fam, plane = random_plane(rng, size, bipartite=True)
        k = rng.randint(1, 2)
        vs = face_vertices(rng, plane, 2 * k)
        if not vs:
            continue
        a, _ = bipartition(plane.graph)
        if 2 * len(set(vs) & a) != len(vs):
            continue
        return _tag(check_ciucu(plane, vs[0::2], vs[1::2]), fam)


def face_edges(rng, plane: PlaneGraph, k: int):
    """k vertex-disjoint edges of one face, oriented along the face walk."""
    faces = [f for f in plane.faces if len(set(f.vertices)) == len(f.vertices) >= 2 * k]
    if not faces:
        return None
    f = rng.choice(faces)
    n = len(f.darts)
    for _ in range(50):
        idx = sorted(rng.sample(range(n), k))
        gaps = [(idx[(i + 1) % k] - idx[i]) % n or n for i in range(k)]
        if k == 1 or min(gaps) >= 2:
            g = plane.graph
            return [(tail, g.edge(eid).other(tail)) for eid, tail in (f.darts[i] for i in idx)]
    return None


def trial_edge_condensation(rng, size):
    while True:
        fam, plane = random_plane(rng, size)
        k = rng.randint(1, 2)
        edges = face_edges(rng, plane, k)
        if edges:
            b = [i for i in range(1, k + 1) if rng.random() < 0.5]
            rep = _tag(check_edge_condensation(plane, edges, b), fam)
            yyz = trial_lemma_yyz(rng, 8)
            rep.details["lemma-yyz"] = yyz
            return rep


def trial_lemma_yyz(rng, size):
    n = max(4, min(size, 8))
    n -= n % 2
    v = labels(n)
    g = OrderedGraph(v, [(v[i], v[j], nonzero(rng)) for i in range(n) for j in range(i + 1, n)])
    k = rng.randint(1, n // 2)
    starts = sorted(rng.sample(range(0, n, 2), k))
    pairs = [(v[s], v[s + 1]) for s in starts]
    sub = subdivide_edges(g, pairs)
    blue = [x for p in sub.primes for x in p if rng.random() < 0.5]
    rep = check_lemma_yyz(g, pairs, blue)
    # the unsigned reading is the one expected to hold for adjacent pairs
    rep.require("unsigned" in rep.details["matches"], "unsigned reading")
    return rep


@dataclass(frozen=True)
class Suite:
    run: Callable
    default_size: int
    min_size: int
    max_size: int
    needs_trial: bool = False


SUITES: dict[str, Suite] = {
    "kuo": Suite(trial_kuo, 16, 4, 16),
    "tanner": Suite(trial_tanner, 8, 2, MAX_DEFINITION_N),
    "ohta": Suite(trial_ohta, 8, 1, 12),
    "kratt": Suite(trial_kratt, 8, 1, 10),
    "srinivasan": Suite(trial_srinivasan, 8, 2, 12, needs_trial=True),
    "gen-srinivasan": Suite(trial_gen_srinivasan, 8, 1, 10),
    "sign-preserving": Suite(trial_sign_preserving, 16, 4, 16),
    "ciucu": Suite(trial_ciucu, 16, 4, 16),
    "edge-condensation": Suite(trial_edge_condensation, 16, 4, 16),
    "lemma-yyz": Suite(trial_lemma_yyz, 8, 4, 8),
}


def run_trial(name: str, seed: int, trial: int, size: int) -> IdentityReport:
    suite = SUITES[name]
    rng = trial_rng(seed, trial)
    if suite.needs_trial:
        return suite.run(rng, size, trial)
    return suite.run(rng, size)


def _job(args):
    return run_trial(*args)


def run_suite(name: str, trials: int, seed: int, size: int | None = None, jobs: int = 1) -> list[IdentityReport]:
    if name not in SUITES:
        raise ValueError(f"unknown identity {name!r}")
    suite = SUITES[name]
    size = suite.default_size if size is None else size
    if not suite.min_size <= size <= suite.max_size:
        raise ValueError(f"size for {name} must lie in {suite.min_size}..{suite.max_size}")
    args = [(name, seed, t, size) for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_job, args))
    return [_job(a) for a in args]


def format_value(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, tuple):
        return "(" + ",".join(format_value(y) for y in x) + ")"
    return format_weight(x)


def report_line(rep: IdentityReport, seed: int, trial: int) -> str:
    status = "PASS" if rep.passed else "FAIL"
    line = f"{status} {rep.name} {seed} t={trial};{rep.descriptor} {format_value(rep.lhs)} {format_value(rep.rhs)}"
    if rep.failed_checks:
        line += " # " + "; ".join(rep.failed_checks)
    return line
