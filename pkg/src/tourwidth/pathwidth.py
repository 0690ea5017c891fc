"""Pathwidth of semi-complete digraphs.

``approx_pathwidth`` slides a window of length ``ell`` along the outdegree
ordering and separates the prefix from the suffix through the window plus the
matching selector of the bipartite graph of forward arcs.

``exact_pathwidth`` searches for a chain of thin separations.  With ``sigma``
the outdegree ordering, ``H_i`` is the bipartite graph of arcs from
``X_i = sigma[:i]`` to ``Y_i = sigma[i:]``.  A separation ``(A, B)`` with
canonical index ``beta`` (the number of vertices of outdegree below ``|A|``)
and ``alpha = max(0, beta - 5k - 1)`` is thin when the separator meets
``X_alpha`` only inside the Buss selector of ``H_alpha`` and ``Y_beta`` only
inside the reversed Buss selector of ``H_beta``.  Candidates are enumerated per
``beta``, linked when consecutive, and searched breadth-first.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from math import comb

from .bipartite import DynamicBipartiteGraph, LEFT, RIGHT, extract_buss_matching
from .cutwidth import degree_precheck
from .decomposition import (
    PathDecomposition,
    Separation,
    SeparationChain,
    chain_to_decomposition,
    dedupe_bags,
    trivial_decomposition,
    verify_path_decomposition,
)
from .digraph import SemiCompleteDigraph, VertexOrdering, iter_bits, outdegree_ordering
from .errors import BadParameter, InternalContradiction, PreconditionUnmet
from .obstacles import DegreeTangle, MatchingTangle


@dataclass
class PathwidthOutcome:
    decomposition: PathDecomposition | None = None
    obstacle: DegreeTangle | MatchingTangle | None = None
    stats: "ThinStats | None" = field(default=None, repr=False)
    reason: str = ""

    @property
    def yes(self) -> bool:
        return self.decomposition is not None

    @property
    def width(self) -> int | None:
        return None if self.decomposition is None else self.decomposition.width

    @property
    def empty(self) -> bool:
        return self.decomposition is not None and len(self.decomposition) == 0


# ------------------------------------------------------------- approximation
def approx_pathwidth(
    T: SemiCompleteDigraph, k: int, ell: int | None = None, *, trivial_shortcut: bool = True
) -> PathwidthOutcome:
    """A decomposition of width at most ``ell + 2k`` or a degree / matching tangle.

    With ``trivial_shortcut`` a digraph on at most ``ell + 2k + 1`` vertices
    gets the single-bag decomposition; disabling it runs the window scan on
    small inputs too.
    """
    if k < 0:
        raise BadParameter(f"k must be non-negative, got {k}")
    ell = 5 * k if ell is None else ell
    if ell < 5 * k:
        raise PreconditionUnmet(f"window length {ell} is below 5k = {5 * k}")
    n = T.n
    if n == 0:
        return PathwidthOutcome(decomposition=PathDecomposition(()))
    sigma = outdegree_ordering(T)
    tangle = degree_precheck(T, sigma, ell + 1, k)
    if tangle is not None:
        return PathwidthOutcome(obstacle=tangle, reason="degree tangle")
    if n <= ell or (trivial_shortcut and n <= ell + 2 * k + 1):
        return PathwidthOutcome(decomposition=trivial_decomposition(T))

    H = DynamicBipartiteGraph()
    for y in sigma[ell:]:
        H.add_right(y)
    ymask = T.mask(sigma[ell:])
    seps: list[tuple[int, int]] = [(0, T.all_mask)]
    for i in range(n - ell + 1):
        if i > 0:
            # H_i from H_{i-1}: one deletion on the right, one addition on the left
            gone = sigma[i + ell - 1]
            H.remove_right(gone)
            ymask &= ~(1 << gone)
            x = sigma[i - 1]
            H.add_left(x, iter_bits(T.out_mask[x] & ymask))
        if H.matching_size() > k:
            pairs = sorted(H.matching())[: k + 1]
            return PathwidthOutcome(obstacle=MatchingTangle(tuple(pairs), k + 1, k), reason=f"matching in H_{i}")
        chosen = T.mask(H.matching_selector().chosen)
        s = T.mask(sigma[i : i + ell]) | chosen
        a = T.mask(sigma[:i]) | s
        b = ymask | s
        seps.append((a, b))
    seps.append((T.all_mask, 0))
    for (a1, b1), (a2, b2) in zip(seps, seps[1:]):
        if a1 & ~a2 or b2 & ~b1:
            raise InternalContradiction("approximate separation sequence is not monotone")
    W = _chain_from_masks(seps)
    width = verify_path_decomposition(T, W)
    if width > ell + 2 * k:
        raise InternalContradiction(f"approximate decomposition has width {width} > {ell + 2 * k}")
    return PathwidthOutcome(decomposition=W)


def _chain_from_masks(seps: list[tuple[int, int]]) -> PathDecomposition:
    uniq = [seps[0]]
    for s in seps[1:]:
        if s != uniq[-1]:
            uniq.append(s)
    chain = SeparationChain(tuple(Separation.from_masks(a, b) for a, b in uniq))
    return PathDecomposition(tuple(dedupe_bags(chain_to_decomposition(chain).bags)))


# ------------------------------------------------------------- exact
@dataclass
class ThinStats:
    n: int
    k: int
    characterizations: int = 0  # leaves of the candidate enumeration
    candidates: int = 0  # distinct thin separations of order <= k
    arcs: int = 0
    max_selector: int = 0

    @property
    def bound(self) -> int:
        """Characterization count: 3^(5k+1) * (sum_{j<=k} C(m^2+m, j))^2 per beta, m = 6k+1."""
        m = 6 * self.k + 1
        pool = sum(comb(m * m + m, j) for j in range(self.k + 1))
        return (self.n + 1) * 3 ** (5 * self.k + 1) * pool * pool


def _slide(H: DynamicBipartiteGraph, T: SemiCompleteDigraph, sigma: VertexOrdering, i: int, ymask: int) -> int:
    """Turn ``H_i`` into ``H_{i+1}`` and return the new right-side mask."""
    v = sigma[i]
    H.remove_right(v)
    ymask &= ~(1 << v)
    H.add_left(v, iter_bits(T.out_mask[v] & ymask))
    return ymask


def exact_pathwidth(T: SemiCompleteDigraph, k: int) -> PathwidthOutcome:
    """A decomposition of width at most ``k`` or a negative answer with a witness if available."""
    if k < 0:
        raise BadParameter(f"k must be non-negative, got {k}")
    n = T.n
    stats = ThinStats(n, k)
    if n == 0:
        return PathwidthOutcome(decomposition=PathDecomposition(()), stats=stats)
    sigma = outdegree_ordering(T)
    tangle = degree_precheck(T, sigma, 5 * k + 1, k)
    if tangle is not None:
        return PathwidthOutcome(obstacle=tangle, stats=stats, reason="degree tangle")

    m = 6 * k + 1
    span = 5 * k + 1
    d = T.outdeg
    # lower[a] = number of vertices of outdegree < a, i.e. the canonical beta for |A| = a
    degrees = sorted(d)
    lower = [bisect_left(degrees, a) for a in range(n + 1)]
    prefix = [0] * (n + 1)
    for i, v in enumerate(sigma):
        prefix[i + 1] = prefix[i] | (1 << v)
    full = T.all_mask

    H_alpha = DynamicBipartiteGraph(m, track_matching=False)
    H_beta = DynamicBipartiteGraph(m, track_matching=False)
    for v in sigma:
        H_alpha.add_right(v)
        H_beta.add_right(v)
    y_alpha = y_beta = full
    alpha = 0
    buckets: dict[int, list[tuple[int, int]]] = {}
    for beta in range(n + 1):
        if beta > 0:
            y_beta = _slide(H_beta, T, sigma, beta - 1, y_beta)
        new_alpha = max(0, beta - span)
        while alpha < new_alpha:
            y_alpha = _slide(H_alpha, T, sigma, alpha, y_alpha)
            alpha += 1
        left_pool = H_alpha.buss_chosen(LEFT)
        right_pool = H_beta.buss_chosen(RIGHT)
        stats.max_selector = max(stats.max_selector, len(left_pool), len(right_pool))
        window = prefix[beta] & ~prefix[alpha]
        if len(left_pool) > m * m + m:
            pairs = extract_buss_matching(H_alpha, m)
            kept = [(x, y) for x, y in pairs if not window >> y & 1][: k + 1]
            _check_size(kept, k)
            return PathwidthOutcome(
                obstacle=MatchingTangle(tuple(kept), k + 1, k), stats=stats, reason=f"Buss selector of H_{alpha}"
            )
        if len(right_pool) > m * m + m:
            pairs = extract_buss_matching(H_beta, m, reverse=True)
            kept = [(x, y) for x, y in pairs if not window >> x & 1][: k + 1]
            _check_size(kept, k)
            return PathwidthOutcome(
                obstacle=MatchingTangle(tuple(kept), k + 1, k), stats=stats, reason=f"reversed Buss selector of H_{beta}"
            )
        found = _enumerate(T, k, sigma[alpha:beta], sorted(left_pool), sorted(right_pool),
                           prefix[alpha], full & ~prefix[beta], beta, lower, stats)
        if found:
            buckets[beta] = found
    stats.candidates = sum(len(b) for b in buckets.values())

    start, goal = (0, full), (full, 0)
    reach = 6 * k + 2
    parent: dict[tuple[int, int], tuple[int, int] | None] = {start: None}
    beta_of = {c: b for b, cs in buckets.items() for c in cs}
    if start not in beta_of or goal not in beta_of:
        raise InternalContradiction("trivial separations missing from the candidate set")
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            break
        a, b = cur
        beta = beta_of[cur]
        for nb in range(max(0, beta - reach), min(n, beta + reach) + 1):
            for nxt in buckets.get(nb, ()):
                if nxt in parent:
                    continue
                a2, b2 = nxt
                if a & ~a2 or b2 & ~b or (a2 & b).bit_count() > k + 1:
                    continue
                stats.arcs += 1
                parent[nxt] = cur
                queue.append(nxt)
    if goal not in parent:
        return PathwidthOutcome(stats=stats, reason="no thin separation chain")
    chain = []
    cur = goal
    while cur is not None:
        chain.append(cur)
        cur = parent[cur]
    chain.reverse()
    W = _chain_from_masks(chain)
    width = verify_path_decomposition(T, W)
    if width > k:
        raise InternalContradiction(f"decoded decomposition has width {width} > {k}")
    return PathwidthOutcome(decomposition=W, stats=stats)


def _check_size(kept: list, k: int) -> None:
    if len(kept) < k + 1:
        raise InternalContradiction(f"only {len(kept)} matching edges avoid the window")


def _enumerate(T, k, window, left_pool, right_pool, x_alpha, y_beta, beta, lower, stats) -> list[tuple[int, int]]:
    """All separations of order <= k thin with respect to this (alpha, beta) with canonical index beta.

    Vertices outside the pools and the window are forced: the rest of
    ``X_alpha`` to ``A - B`` and the rest of ``Y_beta`` to ``B - A``.
    """
    out_mask, in_mask = T.out_mask, T.in_mask
    pool_l = T.mask(left_pool)
    pool_r = T.mask(right_pool)
    forced_l = x_alpha & ~pool_l
    forced_r = y_beta & ~pool_r
    for u in iter_bits(forced_l):
        if out_mask[u] & forced_r:
            return []
    # choices: 0 = A - B, 1 = separator, 2 = B - A
    items = [(v, (0, 1)) for v in left_pool] + [(v, (0, 1, 2)) for v in window] + [(v, (1, 2)) for v in right_pool]
    found: list[tuple[int, int]] = []

    def rec(i: int, L: int, S: int, R: int, s_count: int) -> None:
        if i == len(items):
            stats.characterizations += 1
            A = L | S
            if lower[A.bit_count()] == beta:
                found.append((A, R | S))
            return
        v, options = items[i]
        bit = 1 << v
        for opt in options:
            if opt == 0:
                if out_mask[v] & R:
                    continue
                rec(i + 1, L | bit, S, R, s_count)
            elif opt == 1:
                if s_count < k:
                    rec(i + 1, L, S | bit, R, s_count + 1)
            else:
                if in_mask[v] & L:
                    continue
                rec(i + 1, L, S, R | bit, s_count)

    # forced vertices are placed up front; arcs from forced_l into forced_r were excluded above
    rec(0, forced_l, 0, forced_r, 0)
    return found


# ------------------------------------------------------------- driver
@dataclass
class PathwidthResult:
    value: int
    decomposition: PathDecomposition
    attempts: list[PathwidthOutcome] = field(default_factory=list, repr=False)
    # the empty digraph has width -1 by the bag formula; it is reported as 0 with this flag
    empty: bool = False


def pathwidth(T: SemiCompleteDigraph) -> PathwidthResult:
    """Smallest ``k`` accepted by ``exact_pathwidth``, with its decomposition."""
    if T.n == 0:
        return PathwidthResult(0, PathDecomposition(()), empty=True)
    attempts = []
    for k in range(T.n):
        out = exact_pathwidth(T, k)
        attempts.append(out)
        if out.yes:
            return PathwidthResult(k, out.decomposition, attempts)
    raise InternalContradiction("exact pathwidth rejected k = n - 1")
