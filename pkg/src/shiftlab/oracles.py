"""Closed-form values used to cross-check the rank computations."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import Graph, GraphError, MProfile, is_shifted, m_profile


@dataclass(frozen=True)
class BinomialForm:
    h: int
    alpha: int


def binomial_form(n: int) -> BinomialForm:
    """Unique n = C(h, 2) + alpha with h >= alpha > 0; h is the largest with C(h, 2) < n."""
    if n < 1:
        raise ValueError("binomial form needs n >= 1")
    h = 1
    while comb(h + 1, 2) < n:
        h += 1
    return BinomialForm(h, n - comb(h, 2))


def _check_ab(a: int, b: int) -> None:
    if b < 1 or a < b:
        raise ValueError(f"need a >= b >= 1, got a={a}, b={b}")


def kab_exterior_profile(a: int, b: int) -> MProfile:
    _check_ab(a, b)
    n = a + b
    return MProfile(n, tuple(k * n - k * k if k <= b else a * b for k in range(1, n)))


def kab_symmetric_profile(a: int, b: int) -> MProfile:
    _check_ab(a, b)
    n = a + b
    h = binomial_form(n).h
    cum = []
    for k in range(1, n):
        if k > b - 1:
            cum.append(a * b)
        elif k <= h - 2:
            cum.append(comb(n, 2) - comb(n - k, 2))
        else:
            cum.append((k + 1) * n - (k + 1) ** 2)
    return MProfile(n, tuple(cum))


def betti_shifted_formula(g: Graph, i: int) -> int:
    """beta_{i,i+2} of the non-edge ideal of a shifted graph.

    Sums (non-edges with least vertex s) * C(n - s - 1, i).  The binomial
    C(n - s, i) fails already on the star {1,2},{1,3} at i = 1.
    """
    if not is_shifted(g):
        raise GraphError("formula holds for shifted graphs only")
    n = g.n
    if not 0 <= i <= n - 2:
        raise GraphError(f"index {i} outside [0, {n - 2}]")
    incs = m_profile(g).increments()
    return sum((n - s - incs[s - 1]) * comb(n - s - 1, i) for s in range(1, n))


def bipartite_sandwich_check(e_profile: MProfile, s_profile: MProfile, n: int) -> bool:
    """Both bounds e[k+1] >= s[k] >= e[k+1] - n + min(C(k+2, 2), n), k = 1..n-2."""
    if len(e_profile.cum) != n - 1 or len(s_profile.cum) != n - 1:
        raise ValueError("profile lengths must be n - 1")
    e, s = e_profile.cum, s_profile.cum
    for k in range(1, n - 1):
        upper = e[k]
        lower = e[k] - n + min(comb(k + 2, 2), n)
        if not upper >= s[k - 1] >= lower:
            return False
    return True


def coro_predicate(e_shift: Graph) -> bool:
    """True when {h(n), h(n)+1} is an edge; for bipartite input the two shifts then differ."""
    h = binomial_form(e_shift.n).h
    return h + 1 <= e_shift.n and e_shift.has_edge(h, h + 1)
