"""Deterministic instance generators."""

from __future__ import annotations

import numpy as np

from .digraph import SemiCompleteDigraph
from .errors import BadParameter

MODELS = ("random", "transitive", "quadratic_residue", "transitive_noise", "semicomplete")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def transitive(n: int) -> SemiCompleteDigraph:
    """TT_n with arc (v_i, v_j) iff i > j; vertex i has outdegree i."""
    return SemiCompleteDigraph(np.tril(np.ones((n, n), dtype=bool), k=-1))


def quadratic_residue(n: int) -> SemiCompleteDigraph:
    if not _is_prime(n) or n % 4 != 3:
        raise BadParameter(f"quadratic_residue needs a prime n = 3 (mod 4), got {n}")
    residues = {(x * x) % n for x in range(1, n)}
    m = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            if (j - i) % n in residues:
                m[i, j] = True
    return SemiCompleteDigraph(m)


def random_tournament(n: int, seed: int | None = None) -> SemiCompleteDigraph:
    rng = np.random.default_rng(seed)
    coins = rng.random((n, n)) < 0.5
    upper = np.triu(coins, k=1)
    lower = np.triu(~coins, k=1).T
    return SemiCompleteDigraph(upper | lower)


def transitive_noise(n: int, p: float, seed: int | None = None) -> SemiCompleteDigraph:
    """TT_n with every arc reversed independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise BadParameter(f"flip probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    base = np.tril(np.ones((n, n), dtype=bool), k=-1)
    flip = np.tril(rng.random((n, n)) < p, k=-1)
    keep = base & ~flip
    return SemiCompleteDigraph(keep | flip.T)


def random_semicomplete(n: int, seed: int | None = None, digon: float = 0.25) -> SemiCompleteDigraph:
    """Each pair gets both arcs with probability ``digon``, else one arc by a fair coin."""
    if not 0.0 <= digon <= 1.0:
        raise BadParameter(f"digon probability must lie in [0, 1], got {digon}")
    rng = np.random.default_rng(seed)
    both = np.triu(rng.random((n, n)) < digon, k=1)
    coins = np.triu(rng.random((n, n)) < 0.5, k=1)
    fwd = both | coins
    bwd = both | (np.triu(np.ones((n, n), dtype=bool), k=1) & ~coins)
    return SemiCompleteDigraph(fwd | bwd.T)


def tournament_from_code(n: int, code: int) -> SemiCompleteDigraph:
    """The labelled tournament whose pair orientations are the bits of ``code``.

    Pairs (i, j), i < j, are enumerated lexicographically; bit set means i -> j.
    ``code`` ranges over 0 .. 2**(n*(n-1)/2) - 1.
    """
    m = np.zeros((n, n), dtype=bool)
    bit = 0
    for i in range(n):
        for j in range(i + 1, n):
            if code >> bit & 1:
                m[i, j] = True
            else:
                m[j, i] = True
            bit += 1
    return SemiCompleteDigraph(m)


def all_tournaments(n: int):
    pairs = n * (n - 1) // 2
    for code in range(1 << pairs):
        yield tournament_from_code(n, code)


def generate(model: str, n: int, seed: int | None = None, p: float = 0.1) -> SemiCompleteDigraph:
    if n < 0:
        raise BadParameter(f"n must be non-negative, got {n}")
    if model == "random":
        return random_tournament(n, seed)
    if model == "transitive":
        return transitive(n)
    if model == "quadratic_residue":
        return quadratic_residue(n)
    if model == "transitive_noise":
        return transitive_noise(n, p, seed)
    if model == "semicomplete":
        return random_semicomplete(n, seed, digon=p)
    raise BadParameter(f"unknown model {model!r}; expected one of {', '.join(MODELS)}")
