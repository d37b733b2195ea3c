"""Erdos-Ko-Rado compressions Shift_ij on graphs and combinatorial shifted graphs.

``shift_ij`` is the compression acting on every edge; ``shift_ij_closed_form``
is an independent edge-set description of the same map used as a cross-check.
``chordal_shift_algorithm`` computes, for a chordal graph, the combinatorial
shifted graph obtained by alternating disjoint shifts, edge shifts and
star-vertex peeling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .graph import (
    Graph,
    GraphError,
    connected_components,
    is_chordal,
    is_shifted,
    new_graph,
    nontrivial_components,
    star_vertices,
)

MAX_ENUM_N = 9
MAX_ENUM_STATES = 1 << 20


@dataclass(frozen=True, order=True)
class ShiftStep:
    i: int
    j: int

    def __post_init__(self) -> None:
        if not self.i < self.j:
            raise GraphError(f"shift step needs i < j, got ({self.i}, {self.j})")

    def check(self, n: int) -> None:
        if not (1 <= self.i and self.j <= n):
            raise GraphError(f"shift step ({self.i}, {self.j}) outside [1, {n}]")


@dataclass(frozen=True)
class ShiftTrace:
    steps: tuple[ShiftStep, ...]
    result: Graph
    # vertices peeled as star vertices, with their degree at peel time
    peels: tuple[tuple[int, int], ...] = field(default=())

    def to_json(self) -> dict:
        out = {"steps": [[s.i, s.j] for s in self.steps], "result": self.result.to_json()}
        if self.peels:
            out["peels"] = [list(p) for p in self.peels]
        return out


def _as_step(s: ShiftStep | Sequence[int]) -> ShiftStep:
    return s if isinstance(s, ShiftStep) else ShiftStep(int(s[0]), int(s[1]))


def shift_ij(g: Graph, step: ShiftStep | Sequence[int]) -> Graph:
    """Apply C_ij to every edge: j -> i when i is absent and the image is not an edge."""
    s = _as_step(step)
    s.check(g.n)
    i, j = s.i, s.j
    out = []
    for e in g.edges:
        if j in e and i not in e:
            other = e[0] if e[1] == j else e[1]
            if not g.has_edge(i, other):
                out.append((min(i, other), max(i, other)))
                continue
        out.append(e)
    return Graph(g.n, tuple(sorted(out)))


def shift_ij_closed_form(g: Graph, step: ShiftStep | Sequence[int]) -> Graph:
    """Shift_pq as three edge families: untouched, star at p (union), star at q (meet)."""
    s = _as_step(step)
    s.check(g.n)
    p, q = s.i, s.j
    keep = [e for e in g.edges if e == (p, q) or (p not in e and q not in e)]
    others = [t for t in g.vertices() if t not in (p, q)]
    at_p = [(p, t) for t in others if g.has_edge(p, t) or g.has_edge(q, t)]
    at_q = [(q, t) for t in others if g.has_edge(p, t) and g.has_edge(q, t)]
    return new_graph(g.n, keep + at_p + at_q)


def apply_shift_sequence(g: Graph, steps: Iterable[ShiftStep | Sequence[int]]) -> ShiftTrace:
    seq = tuple(_as_step(s) for s in steps)
    h = g
    for s in seq:
        h = shift_ij(h, s)
    return ShiftTrace(seq, h)


def canonical_combinatorial_shift(g: Graph) -> ShiftTrace:
    """Sweep Shift_ij over pairs in lexicographic order until nothing changes.

    Only effective steps are recorded.  Each one strictly lowers the sum of
    edge endpoints, which bounds the number of sweeps.
    """
    steps: list[ShiftStep] = []
    h = g
    changed = True
    while changed:
        changed = False
        for i, j in combinations(range(1, g.n + 1), 2):
            nxt = shift_ij(h, ShiftStep(i, j))
            if nxt != h:
                steps.append(ShiftStep(i, j))
                h = nxt
                changed = True
    return ShiftTrace(tuple(steps), h)


# Enumeration works on bitmasks over the C(n,2) vertex pairs.

def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {e: k for k, e in enumerate(combinations(range(1, n + 1), 2))}


def _shift_tables(n: int) -> list[list[tuple[int, int]]]:
    """For each pair (i,j): (bit of {j,t}, bit of {i,t}) over t not in {i,j}."""
    idx = _pair_index(n)
    key = lambda a, b: idx[(min(a, b), max(a, b))]  # noqa: E731
    tables = []
    for i, j in combinations(range(1, n + 1), 2):
        tables.append([(1 << key(j, t), 1 << key(i, t))
                       for t in range(1, n + 1) if t not in (i, j)])
    return tables


def _mask_shift(mask: int, table: list[tuple[int, int]]) -> int:
    out = mask
    for src, dst in table:
        if mask & src and not mask & dst:
            out ^= src | dst
    return out


def enumerate_combinatorial_shifted_graphs(
    g: Graph, method: str = "reduced", max_states: int = MAX_ENUM_STATES
) -> set[Graph]:
    """All shifted graphs reachable from ``g`` by sequences of Shift_ij.

    ``method="plain"`` is a breadth-first search over every reachable graph.
    ``method="reduced"`` computes the same set through two exact reductions:

    * isomorphic graphs have the same set of reachable shifted graphs, so the
      set is memoised per isomorphism class (see ``canonical_mask``);
    * when vertex 1 is adjacent to every non-isolated vertex, each Shift_1j is
      the identity and shifts on [2, n] move the edges at 1 without touching
      the rest, so the answer is the rest's answer on [2, n] plus
      {1,2}, ..., {1,1+deg(1)}.
    """
    if g.n > MAX_ENUM_N:
        raise GraphError(f"enumeration guarded to n <= {MAX_ENUM_N}")
    idx = _pair_index(g.n)
    start = 0
    for e in g.edges:
        start |= 1 << idx[e]
    if method == "plain":
        found = _fixpoints_plain(g.n, start, max_states)
    elif method == "reduced":
        found = _Reducer(max_states).fixpoints(g.n, start)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    pairs = list(idx)
    out = set()
    for m in found:
        h = Graph(g.n, tuple(e for k, e in enumerate(pairs) if m >> k & 1))
        assert is_shifted(h)
        out.add(h)
    return out


@lru_cache(maxsize=None)
def _layout(n: int):
    """Bit helpers for [n]: shift tables, star bits at 1, incidence masks, [2,n] -> [n-1] map."""
    idx = _pair_index(n)
    tables = _shift_tables(n)
    star_bits = [1 << idx[(1, t)] for t in range(2, n + 1)]
    incident = [0] * (n + 1)
    for (a, b), k in idx.items():
        incident[a] |= 1 << k
        incident[b] |= 1 << k
    to_sub = []
    if n >= 2:
        to_sub = [(1 << idx[(a + 1, b + 1)], 1 << k) for (a, b), k in _pair_index(n - 1).items()]
    return tables, star_bits, incident, to_sub, list(idx)


def _fixpoints_plain(n: int, start: int, max_states: int) -> set[int]:
    tables = _layout(n)[0]
    seen = {start}
    queue = deque([start])
    fixed: set[int] = set()
    while queue:
        m = queue.popleft()
        moved = False
        for table in tables:
            nxt = _mask_shift(m, table)
            if nxt != m:
                moved = True
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > max_states:
                        raise GraphError(f"enumeration exceeded {max_states} states")
                    queue.append(nxt)
        if not moved:
            fixed.add(m)
    return fixed


# Answers depend only on the isomorphism class, so one memo serves every call.
_CLASS_MEMO: dict[tuple[int, int], frozenset[int]] = {}


class _Reducer:
    def __init__(self, max_states: int) -> None:
        self.max_states = max_states
        self.memo = _CLASS_MEMO

    def fixpoints(self, n: int, m: int) -> frozenset[int]:
        key = (n, canonical_mask(n, m))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(self.memo) > self.max_states:
            self.memo.clear()
        tables, star_bits, incident, to_sub, _ = _layout(n)
        out: set[int] = set()
        if m and _one_is_star(m, n, incident):
            d = bin(m & incident[1]).count("1")
            rest = 0
            for big, small in to_sub:
                if m & big:
                    rest |= small
            head = 0
            for b in star_bits[:d]:
                head |= b
            for r in self.fixpoints(n - 1, rest):
                full = head
                for big, small in to_sub:
                    if r & small:
                        full |= big
                out.add(full)
        else:
            for table in tables:
                nxt = _mask_shift(m, table)
                if nxt != m:
                    out |= self.fixpoints(n, nxt)
            if not out:
                out = {m}
        res = frozenset(out)
        self.memo[key] = res
        return res


def _one_is_star(m: int, n: int, incident: list[int]) -> bool:
    ones = m & incident[1]
    for v in range(2, n + 1):
        if m & incident[v] and not ones & incident[v]:
            return False
    return True


@lru_cache(maxsize=1 << 18)
def canonical_mask(n: int, m: int) -> int:
    """Isomorphism-invariant edge mask via colour refinement and individualisation.

    The result is the smallest relabelled mask over the leaves of the search
    tree, so two graphs on [n] get the same value iff they are isomorphic.
    """
    pairs = _layout(n)[4]
    adj: list[list[int]] = [[] for _ in range(n)]
    for k, (a, b) in enumerate(pairs):
        if m >> k & 1:
            adj[a - 1].append(b - 1)
            adj[b - 1].append(a - 1)
    return _canon_search(adj, _refine(adj, [0] * n), _pair_index(n))


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    ncol = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: r for r, s in enumerate(sorted(set(sig)))}
        colors = [rank[s] for s in sig]
        if len(rank) == ncol:
            return colors
        ncol = len(rank)


def _canon_search(adj: list[list[int]], colors: list[int], idx) -> int:
    n = len(adj)
    if len(set(colors)) == n:
        mask = 0
        for v in range(n):
            for w in adj[v]:
                if v < w:
                    a, b = colors[v] + 1, colors[w] + 1
                    mask |= 1 << idx[(min(a, b), max(a, b))]
        return mask
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    target = min(c for c, k in sizes.items() if k > 1)
    cell = [v for v in range(n) if colors[v] == target]
    # swapping twins (equal neighbourhoods apart from each other) is an
    # automorphism, so one branch per twin class suffices
    reps, seen_nb = [], []
    for v in cell:
        nb = set(adj[v])
        if not any(nb - {u} == others - {v} for u, others in seen_nb):
            reps.append(v)
        seen_nb.append((v, nb))
    best = None
    for v in reps:
        split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
        val = _canon_search(adj, _refine(adj, split), idx)
        if best is None or val < best:
            best = val
    return best


def delta_c_is_unique(g: Graph) -> bool:
    return len(enumerate_combinatorial_shifted_graphs(g)) == 1


class ShiftKind(str, Enum):
    EDGE = "edge"
    DISJOINT = "disjoint"
    OTHER = "other"


def classify_shift(g: Graph, step: ShiftStep | Sequence[int]) -> ShiftKind:
    s = _as_step(step)
    s.check(g.n)
    if g.has_edge(s.i, s.j):
        return ShiftKind.EDGE
    for comp in connected_components(g):
        if s.i in comp:
            return ShiftKind.OTHER if s.j in comp else ShiftKind.DISJOINT
    raise AssertionError("vertex missing from component partition")


def _restrict(g: Graph, lo: int) -> Graph:
    """Drop every edge touching a vertex below ``lo`` (vertices keep their labels)."""
    return Graph(g.n, tuple(e for e in g.edges if e[0] >= lo))


def chordal_shift_algorithm(g: Graph) -> ShiftTrace:
    """Shifted graph of a chordal graph via disjoint shifts, edge shifts and peeling.

    The working graph lives on the vertices [u, n] where u is the current
    least vertex.  Each round:

    * disjoint shifts Shift_uj merge the non-trivial components into one
      containing u (j = least non-isolated vertex outside u's component);
    * edge shifts Shift_uv, v increasing over neighbours of u, are swept
      until u is adjacent to every non-isolated vertex;
    * u is peeled, contributing edges {u,u+1}, ..., {u,u+deg(u)}.

    The returned trace lists the shifts performed, followed by a lexicographic
    completion sweep so that replaying ``steps`` on ``g`` reproduces ``result``.
    """
    if not is_chordal(g):
        raise GraphError("chordal_shift_algorithm needs a chordal graph")
    n = g.n
    steps: list[ShiftStep] = []
    peels: list[tuple[int, int]] = []
    delta: list[tuple[int, int]] = []
    h = g
    u = 1
    while h.num_edges:
        # (I) gather everything into one component containing u
        while True:
            comps = nontrivial_components(h)
            own = next((c for c in comps if u in c), None)
            if own is not None and len(comps) == 1:
                break
            j = min(v for c in comps if c is not own for v in c)
            s = ShiftStep(u, j)
            steps.append(s)
            h = shift_ij(h, s)
        # (II) edge shifts until u is a star vertex
        while u not in star_vertices(h):
            progressed = False
            for v in sorted(h.neighbors(u)):
                nxt = shift_ij(h, ShiftStep(u, v))
                steps.append(ShiftStep(u, v))
                progressed |= nxt != h
                h = nxt
                if u in star_vertices(h):
                    break
            if not progressed:
                raise AssertionError("edge shifts stalled on a connected graph")
        # (III) peel u
        d = h.degree(u)
        peels.append((u, d))
        delta.extend((u, u + t) for t in range(1, d + 1))
        u += 1
        h = _restrict(h, u)
    result = Graph(n, tuple(sorted(delta)))
    replay = apply_shift_sequence(g, steps).result
    tail = canonical_combinatorial_shift(replay)
    if tail.result != result:
        raise AssertionError("replayed trace does not complete to the peeled result")
    return ShiftTrace(tuple(steps) + tail.steps, result, tuple(peels))


def unique_family_graph(n: int, reach: Sequence[int], a: Iterable[int], b: Iterable[int]) -> Graph:
    """Star prefix plus two disjoint cliques.

    Vertex i (1 <= i <= r) is joined to every j in [i+1, reach[i-1]] where
    reach is non-increasing with reach[-1] > r; ``a`` and ``b`` are disjoint
    subsets of [r+1, reach[-1]] carrying complete graphs.
    """
    r = len(reach)
    a, b = sorted(set(a)), sorted(set(b))
    if any(reach[k] < reach[k + 1] for k in range(r - 1)):
        raise GraphError("reach must be non-increasing")
    if r and not reach[-1] > r:
        raise GraphError("last reach must exceed r")
    hi = reach[-1] if r else n
    if set(a) & set(b):
        raise GraphError("clique vertex sets must be disjoint")
    if any(not r + 1 <= v <= hi for v in a + b):
        raise GraphError("clique vertices outside [r+1, n_r]")
    if r and reach[0] > n:
        raise GraphError("reach exceeds n")
    edges = [(i, j) for i in range(1, r + 1) for j in range(i + 1, reach[i - 1] + 1)]
    edges += list(combinations(a, 2)) + list(combinations(b, 2))
    return new_graph(n, edges)
