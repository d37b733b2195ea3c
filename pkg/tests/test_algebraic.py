import random

import pytest
from hypothesis import given, settings, strategies as st

from shiftlab.algebraic import (
    GenericConfig,
    exterior_profile,
    exterior_ranks,
    exterior_shift,
    sample_generic_matrix,
    symmetric_profile,
    symmetric_ranks,
    symmetric_shift,
)
from shiftlab.corpus import random_gnp
from shiftlab.graph import (
    add_isolated,
    complete_bipartite,
    complete_graph,
    is_shifted,
    m_profile,
    new_graph,
    path_graph,
)

from helpers import all_shifted_graphs, naive_rank


def literal_rows(g, mat, k, symmetric):
    """Edge vectors (and for the symmetric case the 2*a_li diagonal ones) written out directly."""
    n = g.n
    rows = []
    sign = 1 if symmetric else -1
    for i, j in g.edges:
        rows.append([mat[l, j - 1] if v == i else sign * mat[l, i - 1] if v == j else 0
                     for l in range(k) for v in range(1, n + 1)])
    if symmetric:
        for i in range(1, n + 1):
            rows.append([2 * mat[l, i - 1] if v == i else 0 for l in range(k) for v in range(1, n + 1)])
    return rows


def test_prefix_ranks_match_literal_matrices(cfg):
    rng = random.Random(3)
    for _ in range(15):
        g = random_gnp(rng.randint(2, 6), 0.5, rng)
        mat = sample_generic_matrix(g.n, cfg)
        ext = exterior_ranks(g, mat).values
        sym = symmetric_ranks(g, mat).values
        for k in range(1, g.n):
            assert ext[k - 1] == naive_rank(literal_rows(g, mat, k, False) or [[0]])
        for k in range(2, g.n + 1):
            assert sym[k - 2] == naive_rank(literal_rows(g, mat, k, True))


def test_matrix_sampling_reproducible(cfg):
    a = sample_generic_matrix(5, cfg, 0)
    assert a == sample_generic_matrix(5, cfg, 0)
    assert a != sample_generic_matrix(5, cfg, 1)
    assert all(x != 0 and abs(x) <= cfg.bound for row in a.entries for x in row)


def test_config_validation(monkeypatch):
    with pytest.raises(ValueError):
        GenericConfig(bound=1)
    with pytest.raises(ValueError):
        GenericConfig(repeats=0)
    monkeypatch.setenv("SHIFTLAB_SEED", "77")
    assert GenericConfig.from_env().seed == 77
    assert GenericConfig.from_env(seed=5).seed == 5


def test_shifted_graphs_are_fixed(cfg):
    for n in range(2, 7):
        for g in all_shifted_graphs(n):
            assert exterior_shift(g, cfg) == g
            assert symmetric_shift(g, cfg) == g


def test_k33_values(cfg):
    g = complete_bipartite(3, 3)
    assert exterior_profile(g, cfg).cum == (5, 8, 9, 9, 9)
    assert symmetric_profile(g, cfg, pad_check=True).cum == (5, 9, 9, 9, 9)


def test_trees_agree(cfg):
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(2, 9)
        edges = [(v, rng.randint(1, v - 1)) for v in range(2, n + 1)]
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        g = new_graph(n, [(perm[a - 1], perm[b - 1]) for a, b in edges])
        assert exterior_shift(g, cfg) == symmetric_shift(g, cfg)


def test_edge_cases(cfg):
    assert exterior_shift(new_graph(1), cfg) == new_graph(1)
    assert exterior_shift(new_graph(4), cfg) == new_graph(4)
    assert symmetric_shift(new_graph(4), cfg) == new_graph(4)
    assert exterior_shift(complete_graph(5), cfg) == complete_graph(5)
    assert symmetric_shift(path_graph(3), cfg).edges == ((1, 2), (1, 3))


def test_seed_stability():
    rng = random.Random(11)
    for _ in range(15):
        g = random_gnp(7, 0.4, rng)
        a, b = GenericConfig(seed=1), GenericConfig(seed=999)
        assert exterior_profile(g, a) == exterior_profile(g, b)
        assert symmetric_profile(g, a) == symmetric_profile(g, b)


def test_padding_invariance(cfg):
    rng = random.Random(5)
    for _ in range(15):
        g = random_gnp(6, 0.5, rng)
        padded = add_isolated(g, 3)
        assert exterior_profile(padded, cfg).cum[:5] == exterior_profile(g, cfg).cum
        assert symmetric_profile(padded, cfg).cum[:5] == symmetric_profile(g, cfg).cum
        assert symmetric_profile(g, GenericConfig(seed=cfg.seed, pad=2)) == symmetric_profile(g, cfg)


@given(st.integers(3, 7), st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_shift_properties(n, seed):
    rng = random.Random(seed)
    small = random_gnp(n, 0.35, rng)
    extra = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < 0.3]
    big = new_graph(n, list(small.edges) + extra)
    cfg = GenericConfig(seed=seed)
    for shift in (exterior_shift, symmetric_shift):
        s, b = shift(small, cfg), shift(big, cfg)
        assert is_shifted(s) and s.num_edges == small.num_edges
        assert set(s.edges) <= set(b.edges)  # monotone under inclusion
    prof = exterior_profile(small, cfg)
    assert list(prof.cum) == sorted(prof.cum)
    assert m_profile(exterior_shift(small, cfg)) == prof
