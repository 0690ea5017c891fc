"""Dense semi-complete digraphs, outdegree orderings and ordering widths."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from .errors import LoopArc, NotSemiComplete, NotTournament, ShapeError

VertexOrdering = tuple[int, ...]


def _bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << int(v)
    return mask


def iter_bits(mask: int):
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SemiCompleteDigraph:
    """Loop-free digraph with at least one arc between every pair of vertices.

    The adjacency relation is kept twice: as a read-only boolean matrix and as
    per-vertex Python-int bitmasks (bit ``w`` of ``out_mask[v]`` is set iff
    ``(v, w)`` is an arc).  The bitmasks carry every hot loop in the package.
    Instances are immutable.
    """

    __slots__ = ("n", "matrix", "outdeg", "indeg", "out_mask", "in_mask", "all_mask")

    def __init__(self, matrix: np.ndarray, *, check: bool = True, tournament: bool = False):
        matrix = np.array(matrix, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ShapeError(f"adjacency matrix must be square, got shape {matrix.shape}")
        n = matrix.shape[0]
        if check:
            _validate(matrix, tournament=tournament)
        matrix.setflags(write=False)
        self.n = n
        self.matrix = matrix
        self.outdeg = tuple(int(d) for d in matrix.sum(axis=1))
        self.indeg = tuple(int(d) for d in matrix.sum(axis=0))
        self.out_mask = tuple(_bits(np.flatnonzero(matrix[v])) for v in range(n))
        self.in_mask = tuple(_bits(np.flatnonzero(matrix[:, v])) for v in range(n))
        self.all_mask = (1 << n) - 1

    def __repr__(self) -> str:
        kind = "tournament" if self.is_tournament() else "semi-complete"
        return f"SemiCompleteDigraph(n={self.n}, {kind}, arcs={self.arc_count()})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SemiCompleteDigraph) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.out_mask)

    def arc(self, u: int, v: int) -> bool:
        return bool(self.out_mask[u] >> v & 1)

    def out_neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.out_mask[v]))

    def in_neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.in_mask[v]))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out_mask[u])]

    def arc_count(self) -> int:
        return sum(self.outdeg)

    def is_tournament(self) -> bool:
        return self.arc_count() == self.n * (self.n - 1) // 2

    def vertices(self) -> range:
        return range(self.n)

    def mask(self, vertices: Iterable[int]) -> int:
        return _bits(vertices)

    def arcs_between(self, src: int, dst: int) -> int:
        """Number of arcs from vertex set ``src`` to vertex set ``dst`` (bitmasks)."""
        total = 0
        for u in iter_bits(src):
            total += (self.out_mask[u] & dst).bit_count()
        return total

    def induced_outdegree(self, v: int, within: int) -> int:
        return (self.out_mask[v] & within).bit_count()

    def induced_indegree(self, v: int, within: int) -> int:
        return (self.in_mask[v] & within).bit_count()

    def with_vertex(self, out_to: Iterable[int], in_from: Iterable[int]) -> "SemiCompleteDigraph":
        """Return a copy extended by one new vertex ``n`` with the given arcs."""
        n = self.n
        m = np.zeros((n + 1, n + 1), dtype=bool)
        m[:n, :n] = self.matrix
        for w in out_to:
            m[n, w] = True
        for w in in_from:
            m[w, n] = True
        return SemiCompleteDigraph(m)


def _validate(matrix: np.ndarray, *, tournament: bool) -> None:
    diag = np.flatnonzero(np.diagonal(matrix))
    if diag.size:
        raise LoopArc(int(diag[0]))
    either = matrix | matrix.T
    np.fill_diagonal(either, True)
    missing = np.argwhere(~either)
    if missing.size:
        u, v = (int(x) for x in missing[0])
        raise NotSemiComplete(min(u, v), max(u, v))
    if tournament:
        both = np.argwhere(np.triu(matrix & matrix.T, k=1))
        if both.size:
            raise NotTournament(int(both[0][0]), int(both[0][1]))


def build(n: int, matrix: Sequence[Sequence[int | bool]] | np.ndarray, *, tournament: bool = False) -> SemiCompleteDigraph:
    """Validate an ``n x n`` 0/1 matrix and return the digraph it describes."""
    arr = np.array(matrix, dtype=bool)
    if n == 0 and arr.size == 0:
        arr = np.zeros((0, 0), dtype=bool)
    if arr.ndim != 2 or arr.shape != (n, n):
        raise ShapeError(f"expected a {n}x{n} matrix, got shape {arr.shape}")
    return SemiCompleteDigraph(arr, tournament=tournament)


def from_arcs(n: int, arcs: Iterable[tuple[int, int]], *, check: bool = True) -> SemiCompleteDigraph:
    m = np.zeros((n, n), dtype=bool)
    for u, v in arcs:
        m[u, v] = True
    return SemiCompleteDigraph(m, check=check)


def outdegree_ordering(T: SemiCompleteDigraph) -> VertexOrdering:
    """Vertices by nondecreasing outdegree, ties broken by vertex index."""
    return tuple(sorted(range(T.n), key=lambda v: (T.outdeg[v], v)))


def check_ordering(T: SemiCompleteDigraph, pi: Sequence[int]) -> None:
    if sorted(pi) != list(range(T.n)):
        raise ShapeError(f"ordering is not a permutation of 0..{T.n - 1}: {list(pi)}")


def cut_profile(T: SemiCompleteDigraph, pi: Sequence[int]) -> list[int]:
    """``|E(pi[a], V - pi[a])|`` for a = 0..n, updated one moved vertex at a time."""
    prefix = 0
    cut = 0
    profile = [0]
    for v in pi:
        cut -= (T.in_mask[v] & prefix).bit_count()
        prefix |= 1 << v
        cut += (T.out_mask[v] & ~prefix & T.all_mask).bit_count()
        profile.append(cut)
    return profile


def ordering_width(T: SemiCompleteDigraph, pi: Sequence[int]) -> int:
    check_ordering(T, pi)
    return max(cut_profile(T, pi))
