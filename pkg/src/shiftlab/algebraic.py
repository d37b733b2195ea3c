"""Exterior and symmetric algebraic shifting of graphs via generic-matrix ranks.

For an n x n matrix g = (a_lv) and an edge {i, j} (i < j), the exterior vector
has, in block l = 1..k, coefficient a_lj on e_i and -a_li on e_j.  The
symmetric vector uses +a_li instead, and the symmetric span also contains one
diagonal vector per vertex i (a_li on e_i in every block).  With g generic,

    m_{<=k}(exterior shift) = rank of the first k blocks of the edge vectors
    m_{<=k}(symmetric shift) = rank of the first k+1 blocks (edges + diagonal) - n

Genericity is sampled: entries are random nonzero integers in [-B, B], each k
takes the largest rank seen over ``repeats`` matrices, and the resulting
profile must be a legal shifted-graph profile with the right edge total.  A
rank can only drop on a proper algebraic subset of matrix space, so by a
Schwartz-Zippel count the chance that one sample underestimates a rank defined
by minors of degree d is at most d / B; with B = 2**16 and three samples the
failure probability is negligible at the sizes handled here.  Invalid profiles
trigger resampling with a doubled bound.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from .graph import Graph, GraphError, MProfile, add_isolated, graph_from_profile
from .linalg import ExactMatrix, prefix_ranks

log = logging.getLogger(__name__)

SEED_ENV = "SHIFTLAB_SEED"
DEFAULT_SEED = 20061017
MAX_BOUND = 1 << 60
ESCALATIONS = 4
PAD_CHECK_EXTRA = 3


class GenericityError(RuntimeError):
    """Sampled matrices did not produce a valid profile; raise repeats or bound."""


@dataclass(frozen=True)
class GenericConfig:
    seed: int = DEFAULT_SEED
    bound: int = 1 << 16
    repeats: int = 3
    pad: int = 0

    def __post_init__(self) -> None:
        if self.bound < 2:
            raise ValueError("bound must be at least 2")
        if self.repeats < 1:
            raise ValueError("repeats must be at least 1")
        if self.pad < 0:
            raise ValueError("pad must be non-negative")

    @classmethod
    def from_env(cls, **overrides) -> "GenericConfig":
        """Seed from SHIFTLAB_SEED unless an explicit seed is given."""
        overrides = {k: v for k, v in overrides.items() if v is not None}
        if "seed" not in overrides and os.environ.get(SEED_ENV):
            overrides["seed"] = int(os.environ[SEED_ENV])
        return cls(**overrides)


@dataclass(frozen=True)
class RankProfile:
    kind: Literal["exterior", "symmetric"]
    first_k: int
    values: tuple[int, ...]

    def to_json(self) -> list[int]:
        return list(self.values)


def sample_generic_matrix(n: int, cfg: GenericConfig, sample_index: int = 0) -> ExactMatrix:
    """n x n integer matrix with entries uniform on [-B, B] minus {0}.

    The stream is numpy's PCG64 keyed by SeedSequence([seed, sample_index]),
    which is stable across platforms and numpy versions.
    """
    bound = min(cfg.bound, MAX_BOUND)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([cfg.seed, sample_index])))
    mags = rng.integers(1, bound, size=(n, n), endpoint=True, dtype=np.int64)
    signs = rng.integers(0, 2, size=(n, n), dtype=np.int64) * 2 - 1
    return ExactMatrix.from_rows((mags * signs).tolist(), cols=n)


def _check_k(g: Graph, k: int) -> None:
    if not 1 <= k <= g.n:
        raise GraphError(f"k = {k} outside [1, {g.n}]")


def exterior_rank_matrix(g: Graph, mat: ExactMatrix, k: int) -> ExactMatrix:
    """|E| x (k*n); column (l-1)*n + (v-1) holds the e_v coefficient in block l."""
    _check_k(g, k)
    n = g.n
    rows = []
    for i, j in g.edges:
        row = [0] * (k * n)
        for l in range(k):
            row[l * n + i - 1] = mat[l, j - 1]
            row[l * n + j - 1] = -mat[l, i - 1]
        rows.append(row)
    return ExactMatrix.from_rows(rows, cols=k * n)


def symmetric_rank_matrix(g: Graph, mat: ExactMatrix, k: int) -> ExactMatrix:
    """(|E| + n) x (k*n): edge rows with + signs, then one diagonal row per vertex.

    The diagonal vector for vertex i is taken as a_li on e_i (half the literal
    2 a_li); the scalar does not change the span.
    """
    _check_k(g, k)
    n = g.n
    rows = []
    for i, j in g.edges:
        row = [0] * (k * n)
        for l in range(k):
            row[l * n + i - 1] = mat[l, j - 1]
            row[l * n + j - 1] = mat[l, i - 1]
        rows.append(row)
    for i in range(1, n + 1):
        row = [0] * (k * n)
        for l in range(k):
            row[l * n + i - 1] = mat[l, i - 1]
        rows.append(row)
    return ExactMatrix.from_rows(rows, cols=k * n)


def exterior_ranks(g: Graph, mat: ExactMatrix) -> RankProfile:
    """r_k for k = 1..n-1 from one elimination of the full n-block matrix."""
    n = g.n
    if n < 2:
        return RankProfile("exterior", 1, ())
    full = exterior_rank_matrix(g, mat, n - 1)
    return RankProfile("exterior", 1, tuple(prefix_ranks(full, [k * n for k in range(1, n)])))


def symmetric_ranks(g: Graph, mat: ExactMatrix) -> RankProfile:
    """s_k for k = 2..n."""
    n = g.n
    if n < 2:
        return RankProfile("symmetric", 2, ())
    full = symmetric_rank_matrix(g, mat, n)
    return RankProfile("symmetric", 2, tuple(prefix_ranks(full, [k * n for k in range(2, n + 1)])))


def _sampled_profile(g: Graph, cfg: GenericConfig, build) -> MProfile:
    bound = cfg.bound
    offset = 0
    last = None
    for attempt in range(ESCALATIONS + 1):
        trial = replace(cfg, bound=min(bound, MAX_BOUND))
        best: list[int] | None = None
        for r in range(cfg.repeats):
            vals = build(sample_generic_matrix(_ambient(g, cfg), trial, offset + r))
            best = vals if best is None else [max(a, b) for a, b in zip(best, vals)]
        offset += cfg.repeats
        prof = MProfile(g.n, tuple(best or ()))
        if prof.is_valid() and prof.total == g.num_edges:
            return prof
        last = prof
        log.warning("profile %s failed validation (attempt %d, bound %d); resampling",
                    prof.cum, attempt, bound)
        bound *= 2
    raise GenericityError(f"no valid profile after {ESCALATIONS + 1} rounds; last {last}")


def _ambient(g: Graph, cfg: GenericConfig) -> int:
    return g.n + cfg.pad if cfg is not None else g.n


def exterior_profile(g: Graph, cfg: GenericConfig | None = None) -> MProfile:
    cfg = cfg or GenericConfig()
    if g.n < 2:
        return MProfile(g.n, ())
    padded = add_isolated(g, cfg.pad)

    def build(mat: ExactMatrix) -> list[int]:
        return list(exterior_ranks(padded, mat).values[: g.n - 1])

    return _sampled_profile(g, cfg, build)


def symmetric_profile(g: Graph, cfg: GenericConfig | None = None, pad_check: bool = False) -> MProfile:
    """m_{<=k} = s_{k+1} - n' at ambient size n' = n + pad.

    With ``pad_check`` the profile is recomputed with three more isolated
    vertices and must agree.
    """
    cfg = cfg or GenericConfig()
    if g.n < 2:
        return MProfile(g.n, ())
    prof = _symmetric_at(g, cfg)
    if pad_check:
        other = _symmetric_at(g, replace(cfg, pad=cfg.pad + PAD_CHECK_EXTRA))
        if other != prof:
            raise GenericityError(
                f"symmetric profile changes with padding: {prof.cum} vs {other.cum}")
    return prof


def _symmetric_at(g: Graph, cfg: GenericConfig) -> MProfile:
    padded = add_isolated(g, cfg.pad)
    amb = padded.n

    def build(mat: ExactMatrix) -> list[int]:
        s = symmetric_ranks(padded, mat).values  # s_2 .. s_{amb}
        return [s[k - 1] - amb for k in range(1, g.n)]

    return _sampled_profile(g, cfg, build)


def exterior_shift(g: Graph, cfg: GenericConfig | None = None) -> Graph:
    return graph_from_profile(exterior_profile(g, cfg))


def symmetric_shift(g: Graph, cfg: GenericConfig | None = None, pad_check: bool = False) -> Graph:
    return graph_from_profile(symmetric_profile(g, cfg, pad_check=pad_check))
