"""Cutwidth of semi-complete digraphs: outdegree approximation and exact search.

The exact algorithm explores partitions ``(X, Y)`` of small cut.  A state is
identified by ``alpha`` (the number of leading vertices of the outdegree
ordering that already lie in ``X``) and the occupancy of the next ``10k``
positions; all later vertices lie in ``Y``.  States are discovered lazily by
breadth-first search from ``(empty, V)`` and every state keeps a parent link,
so reaching ``(V, empty)`` yields an ordering directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .digraph import SemiCompleteDigraph, VertexOrdering, cut_profile, outdegree_ordering
from .errors import BadParameter
from .obstacles import BackwardTangle, DegreeTangle, backward_threshold


@dataclass
class CutStateStats:
    n: int
    k: int
    window: int
    states: int = 0
    transitions: int = 0

    @property
    def bound(self) -> int:
        """Closed-form state bound ``2^(10k) * n``."""
        return (1 << (10 * self.k)) * self.n


@dataclass
class CutwidthOutcome:
    ordering: VertexOrdering | None = None
    width: int | None = None
    obstacle: BackwardTangle | None = None
    witness: DegreeTangle | None = None
    stats: CutStateStats | None = field(default=None, repr=False)
    reason: str = ""

    @property
    def yes(self) -> bool:
        return self.ordering is not None

    def with_width(self, T: SemiCompleteDigraph) -> "CutwidthOutcome":
        self.width = max(cut_profile(T, self.ordering))
        return self


def approx_cutwidth(T: SemiCompleteDigraph, k: int, threshold: int | None = None) -> CutwidthOutcome:
    """Outdegree ordering of width at most ``m(k)`` or an ``(m(k)+1)``-backward tangle.

    ``threshold`` overrides ``m(k) = 100k^2 + 22k + 1``.
    """
    if k < 0:
        raise BadParameter(f"k must be non-negative, got {k}")
    m = backward_threshold(k) if threshold is None else threshold
    sigma = outdegree_ordering(T)
    profile = cut_profile(T, sigma)
    for a, cut in enumerate(profile):
        if cut > m:
            X, Y = frozenset(sigma[:a]), frozenset(sigma[a:])
            return CutwidthOutcome(obstacle=BackwardTangle(X, Y, m + 1), reason=f"prefix {a} has cut {cut} > {m}")
    return CutwidthOutcome(ordering=sigma, width=max(profile))


def degree_precheck(T: SemiCompleteDigraph, sigma: VertexOrdering, span: int, spread: int) -> DegreeTangle | None:
    """First window ``sigma[i..i+span]`` whose outdegrees differ by at most ``spread``."""
    d = T.outdeg
    for i in range(len(sigma) - span):
        if d[sigma[i + span]] <= d[sigma[i]] + spread:
            return DegreeTangle(frozenset(sigma[i : i + span + 1]), span + 1, spread)
    return None


def exact_cutwidth(T: SemiCompleteDigraph, k: int) -> CutwidthOutcome:
    """An ordering of width at most ``k`` or a negative answer."""
    if k < 0:
        raise BadParameter(f"k must be non-negative, got {k}")
    n = T.n
    sigma = outdegree_ordering(T)
    window = 10 * k
    stats = CutStateStats(n, k, window)
    if n == 0:
        return CutwidthOutcome(ordering=(), width=0, stats=stats)

    # pw > 2k forces ctw > k, and a (10k+2, 2k)-degree tangle forces pw > 2k
    tangle = degree_precheck(T, sigma, window + 1, 2 * k)
    if tangle is not None:
        return CutwidthOutcome(witness=tangle, stats=stats, reason="degree tangle")

    d = T.outdeg
    out_mask, in_mask, full = T.out_mask, T.in_mask, T.all_mask
    # state key: X as a bitmask; value: (alpha, last X position, cut, parent, moved vertex)
    start = 0
    seen: dict[int, tuple[int, int, int, int | None, int]] = {start: (0, -1, 0, None, -1)}
    queue = deque([start])
    while queue:
        X = queue.popleft()
        alpha, last, cut, _, _ = seen[X]
        stats.states += 1
        if X == full:
            return CutwidthOutcome(ordering=_decode(seen, full), stats=stats).with_width(T)
        for p in range(alpha, min(n, alpha + window + 1)):
            v = sigma[p]
            if X >> v & 1:
                continue
            nxt = X | (1 << v)
            if nxt in seen:
                continue
            new_cut = cut - (in_mask[v] & X).bit_count() + (out_mask[v] & ~nxt & full).bit_count()
            if new_cut > k:
                continue
            a = alpha
            while a < n and nxt >> sigma[a] & 1:
                a += 1
            new_last = max(last, p)
            # a forward arc x -> y is forced whenever d(x) > d(y) + k + 1
            if a < n and d[sigma[new_last]] > d[sigma[a]] + k + 1:
                continue
            stats.transitions += 1
            seen[nxt] = (a, new_last, new_cut, X, v)
            queue.append(nxt)
    return CutwidthOutcome(stats=stats, reason="state space exhausted")


def _decode(seen: dict, goal: int) -> VertexOrdering:
    order = []
    cur = goal
    while True:
        _, _, _, parent, moved = seen[cur]
        if parent is None:
            break
        order.append(moved)
        cur = parent
    return tuple(reversed(order))


@dataclass
class CutwidthResult:
    value: int
    ordering: VertexOrdering
    attempts: list[CutwidthOutcome] = field(default_factory=list, repr=False)


def cutwidth(T: SemiCompleteDigraph) -> CutwidthResult:
    """Smallest ``k`` accepted by ``exact_cutwidth``, with its ordering.

    The outdegree ordering bounds the search: once ``k`` reaches its width
    that ordering itself is optimal.
    """
    sigma = outdegree_ordering(T)
    upper = max(cut_profile(T, sigma))
    attempts = []
    for k in range(upper):
        out = exact_cutwidth(T, k)
        attempts.append(out)
        if out.yes:
            return CutwidthResult(k, out.ordering, attempts)
    return CutwidthResult(upper, sigma, attempts)
