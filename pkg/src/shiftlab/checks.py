"""Per-graph property checks run by ``shiftlab verify``.

Each check takes a graph plus a shared context and returns True (holds),
False (violated) or None (not applicable to this graph).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Optional

from .algebraic import GenericConfig, exterior_profile, symmetric_profile
from .combinatorial import (
    MAX_ENUM_N,
    ShiftKind,
    ShiftStep,
    chordal_shift_algorithm,
    classify_shift,
    enumerate_combinatorial_shifted_graphs,
    shift_ij,
    shift_ij_closed_form,
)
from .graph import (
    MAX_CONNECTIVITY_N,
    Graph,
    add_isolated,
    betti_sequence,
    clique_vector,
    connected_components,
    delete_vertex,
    graph_from_profile,
    is_bipartite,
    is_chordal,
    is_k_connected,
    is_shifted,
    m_profile,
)
from .oracles import bipartite_sandwich_check, coro_predicate

BETTI_N = 10


@dataclass
class Case:
    """A graph with its shifts computed lazily and shared between checks."""

    g: Graph
    cfg: GenericConfig
    rng: random.Random = field(default_factory=lambda: random.Random(0))

    @cached_property
    def ext_profile(self):
        return exterior_profile(self.g, self.cfg)

    @cached_property
    def sym_profile(self):
        return symmetric_profile(self.g, self.cfg)

    @cached_property
    def ext(self) -> Graph:
        return graph_from_profile(self.ext_profile)

    @cached_property
    def sym(self) -> Graph:
        return graph_from_profile(self.sym_profile)

    @cached_property
    def chordal(self) -> bool:
        return is_chordal(self.g)

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.g)


def shifts_are_shifted(c: Case) -> Optional[bool]:
    return (is_shifted(c.ext) and is_shifted(c.sym)
            and c.ext.num_edges == c.sym.num_edges == c.g.num_edges)


def chordal_coincidence(c: Case) -> Optional[bool]:
    if not c.chordal:
        return None
    algo = chordal_shift_algorithm(c.g).result
    ok = c.ext == c.sym == algo
    if ok and c.g.n <= MAX_ENUM_N:
        ok = algo in enumerate_combinatorial_shifted_graphs(c.g)
    return ok


def clique_counts_kept(c: Case) -> Optional[bool]:
    if not c.chordal:
        return None
    return clique_vector(c.g) == clique_vector(chordal_shift_algorithm(c.g).result)


def betti_chordal(c: Case) -> Optional[bool]:
    if c.g.n > BETTI_N:
        return None
    same = betti_sequence(c.g) == betti_sequence(c.ext)
    return same if c.chordal else None


def bipartite_sandwich(c: Case) -> Optional[bool]:
    if not c.bipartite or c.g.n < 3:
        return None
    return bipartite_sandwich_check(c.ext_profile, c.sym_profile, c.g.n)


def bipartite_separation(c: Case) -> Optional[bool]:
    if not c.bipartite or not coro_predicate(c.ext):
        return None
    return c.ext != c.sym


def padding_invariance(c: Case) -> Optional[bool]:
    padded = add_isolated(c.g, 3)
    e = exterior_profile(padded, c.cfg).cum[: c.g.n - 1]
    s = symmetric_profile(padded, c.cfg).cum[: c.g.n - 1]
    return e == c.ext_profile.cum and s == c.sym_profile.cum


def shift_algebra(c: Case) -> Optional[bool]:
    for i, j in combinations(c.g.vertices(), 2):
        h = shift_ij(c.g, ShiftStep(i, j))
        if h != shift_ij_closed_form(c.g, ShiftStep(i, j)):
            return False
        if h.num_edges != c.g.num_edges or shift_ij(h, ShiftStep(i, j)) != h:
            return False
    return True


def edge_disjoint_preservation(c: Case) -> Optional[bool]:
    if not c.chordal:
        return None
    cliques = clique_vector(c.g)
    kmax = c.g.n if c.g.n <= MAX_CONNECTIVITY_N else 0
    conn = [is_k_connected(c.g, k) for k in range(1, kmax)]
    for i, j in combinations(c.g.vertices(), 2):
        kind = classify_shift(c.g, (i, j))
        if kind is ShiftKind.OTHER:
            continue
        h = shift_ij(c.g, (i, j))
        if not is_chordal(h) or clique_vector(h) != cliques:
            return False
        if kind is ShiftKind.EDGE:
            for k, was in enumerate(conn, start=1):
                if was and not is_k_connected(h, k):
                    return False
    return True


def connectivity_kept(c: Case) -> Optional[bool]:
    if not c.chordal or c.g.n > MAX_CONNECTIVITY_N or len(connected_components(c.g)) != 1:
        return None
    for k in range(1, c.g.n):
        if is_k_connected(c.g, k) != is_k_connected(c.ext, k):
            return False
        if is_k_connected(c.ext, k) != c.ext.has_edge(k, c.g.n):
            return False
    return True


def low_degree_deletion(c: Case) -> Optional[bool]:
    """A vertex of degree <= k cannot create {k+1,k+2} in the symmetric shift."""
    g = c.g
    if g.n < 4:
        return None
    v = c.rng.randint(1, g.n)
    minus = symmetric_profile(delete_vertex(g, v), c.cfg)
    smaller = graph_from_profile(minus)
    for k in range(g.degree(v), g.n - 1):
        if not smaller.has_edge(k + 1, k + 2) and c.sym.has_edge(k + 1, k + 2):
            return False
    return True


def connected_star_reachable(c: Case) -> Optional[bool]:
    if c.g.n > 7 or len(connected_components(c.g)) != 1 or c.g.n < 2:
        return None
    found = enumerate_combinatorial_shifted_graphs(c.g)
    return any(m_profile(h).cum[0] == c.g.n - 1 for h in found)


CHECKS: list[tuple[str, Callable[[Case], Optional[bool]]]] = [
    ("shifts-are-shifted", shifts_are_shifted),
    ("chordal-coincidence", chordal_coincidence),
    ("clique-counts-kept", clique_counts_kept),
    ("betti-chordal", betti_chordal),
    ("bipartite-sandwich", bipartite_sandwich),
    ("bipartite-separation", bipartite_separation),
    ("padding-invariance", padding_invariance),
    ("shift-algebra", shift_algebra),
    ("edge-disjoint-preservation", edge_disjoint_preservation),
    ("connectivity-kept", connectivity_kept),
    ("low-degree-deletion", low_degree_deletion),
    ("connected-star-reachable", connected_star_reachable),
]


def run_checks(graphs: list[Graph], cfg: GenericConfig, seed: int = 0) -> list[dict]:
    """Tally each check over ``graphs``; rows come out in CHECKS order."""
    rows = {name: {"check": name, "applicable": 0, "passed": 0, "failed": 0, "failures": []}
            for name, _ in CHECKS}
    for idx, g in enumerate(graphs):
        case = Case(g, cfg, random.Random(seed * 1_000_003 + idx))
        for name, fn in CHECKS:
            verdict = fn(case)
            if verdict is None:
                continue
            row = rows[name]
            row["applicable"] += 1
            if verdict:
                row["passed"] += 1
            else:
                row["failed"] += 1
                row["failures"].append(idx)
    return list(rows.values())
