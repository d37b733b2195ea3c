"""Seeded random graph corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal

from .graph import (
    Graph,
    GraphError,
    apply_permutation,
    complete_bipartite,
    connected_components,
    new_graph,
)

Model = Literal["gnp", "chordal", "bipartite", "kab"]
MODELS = ("gnp", "chordal", "bipartite", "kab")


@dataclass(frozen=True)
class CorpusSpec:
    model: Model
    n: int = 6
    p: float = 0.5
    count: int = 1
    seed: int = 0
    a: int = 0
    b: int = 0
    connected: bool = False

    def validate(self) -> None:
        if self.model not in MODELS:
            raise GraphError(f"unknown model {self.model!r}")
        if not 0.0 <= self.p <= 1.0:
            raise GraphError("p must lie in [0, 1]")
        if self.count < 1:
            raise GraphError("count must be at least 1")
        if self.model == "kab":
            if self.a < 1 or self.b < 1:
                raise GraphError("kab needs a, b >= 1")
        elif self.n < 1:
            raise GraphError("n must be at least 1")


def gen_corpus(spec: CorpusSpec) -> list[Graph]:
    spec.validate()
    if spec.model == "kab":
        return [complete_bipartite(spec.a, spec.b)]
    rng = random.Random(spec.seed)
    make = {"gnp": random_gnp, "chordal": random_chordal, "bipartite": random_bipartite}[spec.model]
    return [make(spec.n, spec.p, rng, connected=spec.connected) for _ in range(spec.count)]


def random_gnp(n: int, p: float, rng: random.Random, connected: bool = False) -> Graph:
    while True:
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
        g = new_graph(n, edges)
        if not connected or _is_connected(g):
            return g


def random_chordal(n: int, p: float, rng: random.Random, connected: bool = False) -> Graph:
    """Grow by simplicial vertices, then relabel randomly.

    Each new vertex is joined to a clique of the vertices placed so far: a
    random seed vertex plus greedily added common neighbours, each kept with
    probability p.  Unless ``connected``, the new vertex stays isolated with
    probability (1 - p) / 2.
    """
    adj: list[set[int]] = [set() for _ in range(n + 1)]
    edges = []
    for v in range(2, n + 1):
        if not connected and rng.random() < (1 - p) / 2:
            continue
        placed = list(range(1, v))
        seed = rng.choice(placed)
        clique = [seed]
        others = [w for w in placed if w != seed]
        rng.shuffle(others)
        for w in others:
            if all(w in adj[c] for c in clique) and rng.random() < p:
                clique.append(w)
        for c in clique:
            adj[c].add(v)
            adj[v].add(c)
            edges.append((c, v))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return apply_permutation(new_graph(n, edges), perm)


def random_bipartite(n: int, p: float, rng: random.Random, connected: bool = False) -> Graph:
    while True:
        side = [rng.random() < 0.5 for _ in range(n + 1)]
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if side[i] != side[j] and rng.random() < p]
        g = new_graph(n, edges)
        if not connected or _is_connected(g):
            return g


def _is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1
