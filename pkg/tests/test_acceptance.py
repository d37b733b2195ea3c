"""Acceptance criteria.  Each test prints one PASS/FAIL line (also collected in
the terminal summary) and then asserts it."""

import itertools
import random
import time

from shiftlab.algebraic import GenericConfig, exterior_profile, exterior_shift, symmetric_profile, symmetric_shift
from shiftlab.combinatorial import (
    ShiftKind,
    chordal_shift_algorithm,
    classify_shift,
    delta_c_is_unique,
    enumerate_combinatorial_shifted_graphs,
    shift_ij,
    shift_ij_closed_form,
    unique_family_graph,
)
from shiftlab.corpus import random_bipartite, random_chordal, random_gnp
from shiftlab.graph import (
    betti_hochster,
    betti_sequence,
    clique_vector,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_chordal,
    is_k_connected,
    is_shifted,
    new_graph,
    path_graph,
)
from shiftlab.oracles import (
    betti_shifted_formula,
    bipartite_sandwich_check,
    coro_predicate,
    kab_exterior_profile,
    kab_symmetric_profile,
)

from helpers import all_shifted_graphs

CFG = GenericConfig(seed=20240601)


def interval_stars(n, reach):
    """Vertex i joined to i+1..reach[i-1]."""
    return new_graph(n, [(i, j) for i, r in enumerate(reach, start=1) for j in range(i + 1, r + 1)])


def test_c01_k66_golden(report):
    t0 = time.perf_counter()
    g = complete_bipartite(6, 6)
    ext = exterior_shift(g, CFG)
    sym = symmetric_shift(g, CFG, pad_check=True)
    dt = time.perf_counter() - t0
    want_ext = interval_stars(12, [12, 11, 10, 9, 8, 7])
    want_sym = interval_stars(12, [12, 12, 12, 9, 6])
    ok = ext == want_ext and sym == want_sym and ext.num_edges == sym.num_edges == 36 and dt < 10
    assert report("1 K_{6,6} golden edge sets", ok, f"{dt:.2f}s")


def test_c02_bipartite_closed_forms(report):
    t0 = time.perf_counter()
    bad = []
    for b in range(1, 7):
        for a in range(b, 7):
            g = complete_bipartite(a, b)
            e, s = exterior_profile(g, CFG), symmetric_profile(g, CFG, pad_check=True)
            if e != kab_exterior_profile(a, b) or s != kab_symmetric_profile(a, b):
                bad.append((a, b))
            if a >= 3 and b >= 3 and e == s:
                bad.append((a, b, "equal"))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 120
    assert report("2 K_{a,b} profiles match closed forms, a>=b, a<=6", ok, f"{dt:.1f}s, bad={bad}")


def test_c03_chordal_coincidence(report):
    t0 = time.perf_counter()
    rng = random.Random(303)
    bad = []
    for idx in range(200):
        n = 9 if idx % 2 else rng.randint(4, 8)
        g = random_chordal(n, rng.uniform(0.2, 0.9), rng)
        algo = chordal_shift_algorithm(g).result
        if not (exterior_shift(g, CFG) == symmetric_shift(g, CFG) == algo):
            bad.append(idx)
        elif algo not in enumerate_combinatorial_shifted_graphs(g):
            bad.append(idx)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 300
    assert report("3 chordal: exterior = symmetric = algorithm, in combinatorial set (200 graphs)",
                  ok, f"{dt:.1f}s, failures={bad[:10]}")


def test_c04_k33_separation(report):
    g = complete_bipartite(3, 3)
    e, s = exterior_profile(g, CFG), symmetric_profile(g, CFG, pad_check=True)
    ext, sym = exterior_shift(g, CFG), symmetric_shift(g, CFG)
    ok = (e.cum == (5, 8, 9, 9, 9) and s.cum == (5, 9, 9, 9, 9)
          and set(ext.edges) - set(sym.edges) == {(3, 4)}
          and set(sym.edges) - set(ext.edges) == {(2, 6)})
    assert report("4 K_{3,3} shifts differ exactly in {3,4} vs {2,6}", ok)


def test_c05_sandwich(report):
    rng = random.Random(505)
    bad, fired = [], 0
    for idx in range(100):
        g = random_bipartite(rng.randint(3, 10), rng.uniform(0.3, 1.0), rng)
        e, s = exterior_profile(g, CFG), symmetric_profile(g, CFG)
        if not bipartite_sandwich_check(e, s, g.n):
            bad.append(idx)
        ext = exterior_shift(g, CFG)
        if coro_predicate(ext):
            fired += 1
            if ext == symmetric_shift(g, CFG):
                bad.append((idx, "coro"))
    assert report("5 bipartite sandwich bounds and separation predicate (100 graphs)",
                  not bad, f"predicate fired on {fired}, failures={bad[:10]}")


def test_c06_betti(report):
    mismatches, count = 0, 0
    for n in range(2, 9):
        for g in all_shifted_graphs(n):
            count += 1
            for i in range(n - 1):
                mismatches += betti_shifted_formula(g, i) != betti_hochster(g, i)
    rng = random.Random(606)
    codal_bad = 0
    for _ in range(100):
        g = random_chordal(rng.randint(3, 9), rng.uniform(0.2, 0.9), rng)
        codal_bad += betti_sequence(g) != betti_sequence(exterior_shift(g, CFG))
    c4 = cycle_graph(4)
    c4_differs = betti_hochster(c4, 1) != betti_hochster(exterior_shift(c4, CFG), 1)
    ok = mismatches == 0 and codal_bad == 0 and c4_differs
    assert report("6 Betti formula = Hochster on all shifted n<=8; chordal Betti kept; C4 differs at i=1",
                  ok, f"{count} shifted graphs, {mismatches} mismatches, {codal_bad} chordal failures")


def test_c07_shift_algebra(report):
    rng = random.Random(707)
    bad = 0
    for _ in range(1000):
        n = rng.randint(2, 9)
        g = random_gnp(n, rng.random(), rng)
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        h = shift_ij(g, (i, j))
        bad += h.num_edges != g.num_edges
        bad += shift_ij(h, (i, j)) != h
        bad += h != shift_ij_closed_form(g, (i, j))
        fixed = all(shift_ij(g, p) == g for p in itertools.combinations(range(1, n + 1), 2))
        bad += fixed != is_shifted(g)
    assert report("7 Shift_ij algebra over 1000 (graph, step) pairs", bad == 0, f"{bad} violations")


def test_c08_structure_preservation(report):
    rng = random.Random(808)
    bad, kinds = 0, {ShiftKind.EDGE: 0, ShiftKind.DISJOINT: 0}
    cases = 0
    while cases < 500:
        n = rng.randint(3, 10)
        g = random_chordal(n, rng.uniform(0.2, 0.9), rng)
        steps = [(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)
                 if classify_shift(g, (i, j)) is not ShiftKind.OTHER]
        if not steps:
            continue
        step = rng.choice(steps)
        kind = classify_shift(g, step)
        h = shift_ij(g, step)
        cases += 1
        kinds[kind] += 1
        if not is_chordal(h) or clique_vector(h) != clique_vector(g):
            bad += 1
        elif kind is ShiftKind.EDGE:
            bad += any(is_k_connected(g, k) and not is_k_connected(h, k) for k in range(1, n))
    assert report("8 edge and disjoint shifts keep chordality, clique counts, connectivity (500 cases)",
                  bad == 0, f"edge={kinds[ShiftKind.EDGE]}, disjoint={kinds[ShiftKind.DISJOINT]}, bad={bad}")


def test_c09_connectivity(report):
    rng = random.Random(909)
    bad = 0
    for _ in range(100):
        n = rng.randint(3, 9)
        g = random_chordal(n, rng.uniform(0.2, 0.9), rng, connected=True)
        ext = exterior_shift(g, CFG)
        for k in range(1, n):
            conn = is_k_connected(g, k)
            bad += conn != is_k_connected(ext, k)
            bad += conn != ext.has_edge(k, n)
    assert report("9 k-connectivity kept by the exterior shift on 100 connected chordal graphs",
                  bad == 0, f"{bad} violations")


def test_c10_uniqueness(report):
    rng = random.Random(1010)
    kakb_bad = 0
    for _ in range(40):
        n = rng.randint(2, 9)
        verts = list(range(1, n + 1))
        rng.shuffle(verts)
        cut1 = rng.randint(0, n)
        cut2 = rng.randint(cut1, n)
        a, b = verts[:cut1], verts[cut1:cut2]
        g = new_graph(n, list(itertools.combinations(sorted(a), 2)) + list(itertools.combinations(sorted(b), 2)))
        kakb_bad += not delta_c_is_unique(g)
    p3k2 = disjoint_union(path_graph(3), complete_graph(2))
    p3k2_many = len(enumerate_combinatorial_shifted_graphs(p3k2))
    fam_bad, fam_count, seen = 0, 0, set()
    for n in range(2, 9):
        for r in range(n):
            for reach in itertools.combinations_with_replacement(range(n, r, -1), r):
                hi = reach[-1] if r else n
                pool = range(r + 1, hi + 1)
                for labels in itertools.product((0, 1, 2), repeat=len(pool)):
                    a = [v for v, t in zip(pool, labels) if t == 1]
                    b = [v for v, t in zip(pool, labels) if t == 2]
                    g = unique_family_graph(n, list(reach), a, b)
                    if g in seen:
                        continue
                    seen.add(g)
                    fam_count += 1
                    fam_bad += not delta_c_is_unique(g)
    ok = kakb_bad == 0 and p3k2_many >= 2 and fam_bad == 0
    assert report("10 unique combinatorial shift for K_A+K_B and the structural family; P3+K2 not unique",
                  ok, f"P3+K2 has {p3k2_many}; family members {fam_count}, non-unique {fam_bad}")
