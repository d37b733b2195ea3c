"""Finite simple graphs on the vertex set {1, ..., n}.

Vertices are 1-indexed and edges are stored as sorted pairs ``(i, j)`` with
``i < j``.  Everything here is a pure function of its inputs; ``Graph`` and
``MProfile`` are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

MAX_BETTI_N = 14
MAX_CONNECTIVITY_N = 12


class GraphError(ValueError):
    """Raised when a graph or profile violates its invariants."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    _edge_set: frozenset = field(init=False, repr=False, compare=False, hash=False)
    _adj: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_edge_set", frozenset(self.edges))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self._edge_set

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def non_isolated(self) -> list[int]:
        return [v for v in self.vertices() if self._adj[v]]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def __str__(self) -> str:
        body = ", ".join(f"{{{i},{j}}}" for i, j in self.edges)
        return f"Graph(n={self.n}, [{body}])"


def new_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a normalized graph, rejecting loops and out-of-range endpoints.

    Pairs may be given in either orientation; duplicates are merged.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    norm = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {e!r} is not a pair")
        i, j = int(e[0]), int(e[1])
        if i == j:
            raise GraphError(f"loop edge {{{i},{i}}}")
        for v in (i, j):
            if not 1 <= v <= n:
                raise GraphError(f"endpoint {v} outside [1, {n}]")
        norm.add((min(i, j), max(i, j)))
    return Graph(n, tuple(sorted(norm)))


def graph_from_json(obj: Mapping) -> Graph:
    try:
        n = obj["n"]
        edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"graph JSON needs 'n' and 'edges': {exc}") from None
    if isinstance(n, bool) or not isinstance(n, int):
        raise GraphError(f"'n' must be an integer, got {n!r}")
    return new_graph(n, edges)


def complete_graph(n: int, vertices: Iterable[int] | None = None) -> Graph:
    vs = sorted(vertices) if vertices is not None else range(1, n + 1)
    return new_graph(n, combinations(vs, 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts {1..a} and {a+1..a+b}."""
    return new_graph(a + b, [(i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1)])


def path_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place ``h`` after ``g``: its vertex v becomes g.n + v."""
    off = g.n
    return new_graph(g.n + h.n, list(g.edges) + [(i + off, j + off) for i, j in h.edges])


def add_isolated(g: Graph, count: int) -> Graph:
    return Graph(g.n + count, g.edges)


def is_shifted(g: Graph) -> bool:
    # Lowering one endpoint by one step at a time generates every i' <= i, j' <= j.
    for i, j in g.edges:
        if i > 1 and not g.has_edge(i - 1, j):
            return False
        if j - 1 > i and not g.has_edge(i, j - 1):
            return False
    return True


def perfect_elimination_order(g: Graph) -> list[int]:
    """Maximum cardinality search; the reverse visit order."""
    weight = {v: 0 for v in g.vertices()}
    order: list[int] = []
    remaining = set(g.vertices())
    while remaining:
        # ties broken by smallest label for determinism
        v = max(remaining, key=lambda x: (weight[x], -x))
        remaining.remove(v)
        order.append(v)
        for w in g.neighbors(v):
            if w in remaining:
                weight[w] += 1
    order.reverse()
    return order


def is_chordal(g: Graph) -> bool:
    order = perfect_elimination_order(g)
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        # the earliest later neighbour must see all the others
        first = min(later, key=pos.__getitem__)
        nb = g.neighbors(first)
        if any(w != first and w not in nb for w in later):
            return False
    return True


def _components(g: Graph, vertices: Iterable[int]) -> list[list[int]]:
    allowed = set(vertices)
    seen: set[int] = set()
    parts = []
    for s in sorted(allowed):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        part = []
        while stack:
            v = stack.pop()
            part.append(v)
            for w in g.neighbors(v):
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        parts.append(sorted(part))
    return parts


def connected_components(g: Graph) -> list[list[int]]:
    """Partition of [n] into connected vertex sets, ordered by least element."""
    return _components(g, g.vertices())


def induced_components(g: Graph, vertices: Iterable[int]) -> list[list[int]]:
    return _components(g, vertices)


def nontrivial_components(g: Graph) -> list[list[int]]:
    return [c for c in connected_components(g) if len(c) > 1]


def is_k_connected(g: Graph, k: int) -> bool:
    """Vertex k-connectivity by deleting every (k-1)-subset."""
    if k < 1:
        raise GraphError("k must be at least 1")
    if g.n > MAX_CONNECTIVITY_N:
        raise GraphError(f"k-connectivity is brute force; n <= {MAX_CONNECTIVITY_N}")
    if g.n <= k:
        return False
    vs = list(g.vertices())
    for cut in combinations(vs, k - 1):
        rest = set(vs).difference(cut)
        if len(_components(g, rest)) != 1:
            return False
    return True


def cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-cliques as sorted tuples."""
    if k == 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def grow(clique: list[int], cands: list[int]) -> None:
        if len(clique) == k:
            out.append(tuple(clique))
            return
        for idx, v in enumerate(cands):
            grow(clique + [v], [w for w in cands[idx + 1:] if w in g.neighbors(v)])

    grow([], list(g.vertices()))
    return out


def t_count(g: Graph, k: int) -> int:
    if not 1 <= k <= g.n:
        raise GraphError(f"clique size {k} outside [1, {g.n}]")
    return len(cliques(g, k))


def clique_vector(g: Graph) -> tuple[int, ...]:
    """(|T_1|, ..., |T_n|)."""
    return tuple(t_count(g, k) for k in range(1, g.n + 1))


@dataclass(frozen=True)
class MProfile:
    """Cumulative counts m_{<=k}, k = 1..n-1, of a shifted graph."""

    n: int
    cum: tuple[int, ...]

    def increments(self) -> list[int]:
        prev = 0
        out = []
        for c in self.cum:
            out.append(c - prev)
            prev = c
        return out

    @property
    def total(self) -> int:
        return self.cum[-1] if self.cum else 0

    def validate(self) -> None:
        if len(self.cum) != max(self.n - 1, 0):
            raise GraphError(f"profile of length {len(self.cum)} for n={self.n}")
        incs = self.increments()
        for k, m in enumerate(incs, start=1):
            if m < 0:
                raise GraphError(f"profile decreases at k={k}")
            if m > self.n - k:
                raise GraphError(f"m_{k} = {m} exceeds n-k = {self.n - k}")
        for k in range(1, len(incs)):
            a, b = incs[k - 1], incs[k]
            if b > 0 and not a > b:
                raise GraphError(f"increments not strictly decreasing at k={k + 1}: {incs}")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except GraphError:
            return False
        return True

    def to_json(self) -> list[int]:
        return list(self.cum)


def m_profile(g: Graph) -> MProfile:
    if not is_shifted(g):
        raise GraphError("m-profile is only defined for shifted graphs")
    return MProfile(g.n, _cumulative_min_counts(g))


def _cumulative_min_counts(g: Graph) -> tuple[int, ...]:
    counts = [0] * (g.n + 1)
    for i, _ in g.edges:
        counts[i] += 1
    cum, total = [], 0
    for k in range(1, g.n):
        total += counts[k]
        cum.append(total)
    return tuple(cum)


def graph_from_profile(p: MProfile) -> Graph:
    p.validate()
    edges = []
    for i, m in enumerate(p.increments(), start=1):
        edges.extend((i, j) for j in range(i + 1, i + m + 1))
    return Graph(p.n, tuple(edges))


def betti_hochster(g: Graph, i: int) -> int:
    """beta_{i,i+2} of the edge ideal of the complement, by Hochster's formula.

    Sums (components of g[W]) - 1 over all W with |W| = i + 2.
    """
    if g.n > MAX_BETTI_N:
        raise GraphError(f"Hochster enumeration capped at n <= {MAX_BETTI_N}")
    if not 0 <= i <= g.n - 2:
        raise GraphError(f"index {i} outside [0, {g.n - 2}]")
    total = 0
    for w in combinations(g.vertices(), i + 2):
        total += len(_components(g, w)) - 1
    return total


def betti_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(betti_hochster(g, i) for i in range(g.n - 1))


def star_vertices(g: Graph) -> list[int]:
    busy = g.non_isolated()
    return [v for v in g.vertices() if all(u == v or g.has_edge(u, v) for u in busy)]


def apply_permutation(g: Graph, sigma: Mapping[int, int] | Sequence[int]) -> Graph:
    """Relabel by ``sigma``; a sequence is read as sigma(v) = sigma[v - 1]."""
    if isinstance(sigma, Mapping):
        lookup = dict(sigma)
    else:
        lookup = {v: sigma[v - 1] for v in range(1, len(sigma) + 1)}
    if sorted(lookup) != list(g.vertices()) or sorted(lookup.values()) != list(g.vertices()):
        raise GraphError("permutation is not a bijection on [n]")
    return new_graph(g.n, [(lookup[i], lookup[j]) for i, j in g.edges])


def transposition(n: int, i: int, j: int) -> dict[int, int]:
    sigma = {v: v for v in range(1, n + 1)}
    sigma[i], sigma[j] = j, i
    return sigma


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on [n] minus v, relabelled order-preservingly onto [n-1]."""
    if g.n < 2:
        raise GraphError("cannot delete the only vertex")
    relabel = lambda x: x if x < v else x - 1  # noqa: E731
    return new_graph(g.n - 1, [(relabel(a), relabel(b)) for a, b in g.edges if v not in (a, b)])


def non_edge_count(g: Graph) -> int:
    return comb(g.n, 2) - g.num_edges


def is_bipartite(g: Graph) -> bool:
    color: dict[int, int] = {}
    for s in g.vertices():
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True
