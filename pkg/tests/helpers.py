"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterator

from shiftlab.graph import Graph, MProfile, graph_from_profile, new_graph


def naive_rank(rows: list[list[int]]) -> int:
    """Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _increments(n: int, k: int, cap: int) -> Iterator[list[int]]:
    # m_k .. m_{n-1}, strictly decreasing while positive, m_k <= min(cap, n-k)
    if k == n:
        yield []
        return
    yield [0] * (n - k)
    for m in range(1, min(cap, n - k) + 1):
        for rest in _increments(n, k + 1, m - 1):
            yield [m] + rest


def all_shifted_graphs(n: int) -> list[Graph]:
    out = []
    for incs in _increments(n, 1, n - 1):
        cum, t = [], 0
        for m in incs:
            t += m
            cum.append(t)
        out.append(graph_from_profile(MProfile(n, tuple(cum))))
    return out


def all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield new_graph(n, [p for b, p in enumerate(pairs) if mask >> b & 1])
