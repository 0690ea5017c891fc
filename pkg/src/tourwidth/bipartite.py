"""Bipartite graphs under vertex insertions and deletions.

The graph keeps a maximum matching (one augmenting-path search per update)
and, for one fixed threshold ``ell``, the degree and "unimportant neighbour"
counters behind the Buss selector.  Both selector directions are supported:
``buss_selector`` picks from the left side, ``buss_reversed`` from the right.

Vertex labels are external identities and must be unique across both sides.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Iterable
from dataclasses import dataclass
from typing import Literal

from .errors import DuplicateVertex, PreconditionUnmet, UnknownVertex

LEFT, RIGHT = 0, 1
SelectorKind = Literal["matching_selector", "buss", "buss_reversed"]


@dataclass(frozen=True)
class SelectorSnapshot:
    chosen: frozenset
    kind: SelectorKind
    ell: int | None = None


class DynamicBipartiteGraph:
    def __init__(self, ell: int | None = None, *, track_matching: bool = True):
        # adjacency dicts double as insertion-ordered sets
        self._adj: tuple[dict, dict] = ({}, {})
        self._mate: tuple[dict, dict] = ({}, {})
        self.track_matching = track_matching
        self.ell = ell
        self._cnt: tuple[dict, dict] = ({}, {})
        self._chosen: tuple[dict, dict] = ({}, {})

    # ------------------------------------------------------------------ queries
    @property
    def left(self) -> list:
        return list(self._adj[LEFT])

    @property
    def right(self) -> list:
        return list(self._adj[RIGHT])

    def side_of(self, v) -> int:
        if v in self._adj[LEFT]:
            return LEFT
        if v in self._adj[RIGHT]:
            return RIGHT
        raise UnknownVertex(v)

    def __contains__(self, v) -> bool:
        return v in self._adj[LEFT] or v in self._adj[RIGHT]

    def __len__(self) -> int:
        return len(self._adj[LEFT]) + len(self._adj[RIGHT])

    def neighbours(self, v) -> list:
        return list(self._adj[self.side_of(v)][v])

    def degree(self, v) -> int:
        return len(self._adj[self.side_of(v)][v])

    def edges(self) -> list[tuple]:
        return [(x, y) for x, ys in self._adj[LEFT].items() for y in ys]

    def edge_count(self) -> int:
        return sum(len(ys) for ys in self._adj[LEFT].values())

    def matching(self) -> frozenset[tuple]:
        return frozenset(self._mate[LEFT].items())

    def matching_size(self) -> int:
        return len(self._mate[LEFT])

    def mate(self, v):
        return self._mate[self.side_of(v)].get(v)

    def unimportant_count(self, v) -> int:
        return self._cnt[self.side_of(v)][v]

    # ---------------------------------------------------------------- mutation
    def add_left(self, v: Hashable, neighbours: Iterable = ()) -> None:
        self._add(LEFT, v, neighbours)

    def add_right(self, w: Hashable, neighbours: Iterable = ()) -> None:
        self._add(RIGHT, w, neighbours)

    def remove_left(self, v: Hashable) -> None:
        if v not in self._adj[LEFT]:
            raise UnknownVertex(v)
        self._remove(LEFT, v)

    def remove_right(self, w: Hashable) -> None:
        if w not in self._adj[RIGHT]:
            raise UnknownVertex(w)
        self._remove(RIGHT, w)

    def _add(self, side: int, v, neighbours: Iterable) -> None:
        if v in self:
            raise DuplicateVertex(v)
        other = 1 - side
        nbrs = list(dict.fromkeys(neighbours))
        for u in nbrs:
            if u not in self._adj[other]:
                raise UnknownVertex(u)
        self._adj[side][v] = {}
        if self.ell is not None:
            self._cnt[side][v] = 0
            self._refresh(side, v)
        for u in nbrs:
            self._link(side, v, u)
        if self.track_matching:
            self._augment()

    def _remove(self, side: int, v) -> None:
        other = 1 - side
        partner = self._mate[side].pop(v, None)
        if partner is not None:
            del self._mate[other][partner]
        for u in list(self._adj[side][v]):
            self._unlink(side, v, u)
        del self._adj[side][v]
        if self.ell is not None:
            del self._cnt[side][v]
            self._chosen[side].pop(v, None)
        if self.track_matching and partner is not None:
            self._augment()

    # Buss bookkeeping: cnt[s][v] = number of neighbours of v with degree <= ell.
    def _link(self, side: int, v, u) -> None:
        other = 1 - side
        adj_v, adj_u = self._adj[side][v], self._adj[other][u]
        dv, du = len(adj_v), len(adj_u)
        adj_v[u] = None
        adj_u[v] = None
        ell = self.ell
        if ell is None:
            return
        if du == ell:
            for x in adj_u:
                if x != v:
                    self._bump(side, x, -1)
        if dv == ell:
            for y in adj_v:
                if y != u:
                    self._bump(other, y, -1)
        if du + 1 <= ell:
            self._cnt[side][v] += 1
        if dv + 1 <= ell:
            self._cnt[other][u] += 1
        self._refresh(side, v)
        self._refresh(other, u)

    def _unlink(self, side: int, v, u) -> None:
        other = 1 - side
        adj_v, adj_u = self._adj[side][v], self._adj[other][u]
        dv, du = len(adj_v), len(adj_u)
        del adj_v[u]
        del adj_u[v]
        ell = self.ell
        if ell is None:
            return
        if du <= ell:
            self._cnt[side][v] -= 1
        if dv <= ell:
            self._cnt[other][u] -= 1
        if du == ell + 1:
            for x in adj_u:
                self._bump(side, x, +1)
        if dv == ell + 1:
            for y in adj_v:
                self._bump(other, y, +1)
        self._refresh(side, v)
        self._refresh(other, u)

    def _bump(self, side: int, v, delta: int) -> None:
        self._cnt[side][v] += delta
        self._refresh(side, v)

    def _refresh(self, side: int, v) -> None:
        if len(self._adj[side][v]) > self.ell or self._cnt[side][v] > 0:
            self._chosen[side][v] = None
        else:
            self._chosen[side].pop(v, None)

    def set_threshold(self, ell: int | None) -> None:
        """Switch the Buss threshold; counters are rebuilt from scratch."""
        self.ell = ell
        self._cnt = ({}, {})
        self._chosen = ({}, {})
        if ell is None:
            return
        for side in (LEFT, RIGHT):
            other = 1 - side
            for v, nbrs in self._adj[side].items():
                self._cnt[side][v] = sum(1 for u in nbrs if len(self._adj[other][u]) <= ell)
        for side in (LEFT, RIGHT):
            for v in self._adj[side]:
                self._refresh(side, v)

    # ---------------------------------------------------------------- matching
    def _augment(self) -> bool:
        """One breadth-first search from all free left vertices; augment if possible."""
        adj_l = self._adj[LEFT]
        mate_l, mate_r = self._mate
        parent: dict = {}
        queue = deque()
        seen_left = set()
        for x in adj_l:
            if x not in mate_l:
                queue.append(x)
                seen_left.add(x)
        while queue:
            x = queue.popleft()
            for y in adj_l[x]:
                if y in parent or mate_l.get(x) == y:
                    continue
                parent[y] = x
                nxt = mate_r.get(y)
                if nxt is None:
                    while True:
                        px = parent[y]
                        prev = mate_l.get(px)
                        mate_l[px] = y
                        mate_r[y] = px
                        if prev is None:
                            return True
                        y = prev
                if nxt not in seen_left:
                    seen_left.add(nxt)
                    queue.append(nxt)
        return False

    def has_augmenting_path(self) -> bool:
        """Non-mutating check used by invariant tests."""
        adj_l = self._adj[LEFT]
        mate_l, mate_r = self._mate
        seen_right = set()
        queue = deque(x for x in adj_l if x not in mate_l)
        seen_left = set(queue)
        while queue:
            x = queue.popleft()
            for y in adj_l[x]:
                if y in seen_right or mate_l.get(x) == y:
                    continue
                seen_right.add(y)
                nxt = mate_r.get(y)
                if nxt is None:
                    return True
                if nxt not in seen_left:
                    seen_left.add(nxt)
                    queue.append(nxt)
        return False

    def recompute_matching(self, order: Iterable | None = None) -> None:
        """Discard the stored matching and rebuild it by repeated augmentation.

        ``order`` permutes the left vertices the rebuild starts from, which
        yields a (possibly) different maximum matching.
        """
        self._mate = ({}, {})
        if order is not None:
            adj_l = self._adj[LEFT]
            reordered = {x: adj_l[x] for x in order}
            self._adj = (reordered, self._adj[RIGHT])
        while self._augment():
            pass

    # --------------------------------------------------------------- selectors
    def alternating_reach(self) -> tuple[set, set]:
        """Left vertices reachable from free left vertices and right vertices
        reachable from free right vertices along alternating paths."""
        adj_l, adj_r = self._adj
        mate_l, mate_r = self._mate
        reach_left = {x for x in adj_l if x not in mate_l}
        queue = deque(reach_left)
        while queue:
            x = queue.popleft()
            for y in adj_l[x]:
                z = mate_r.get(y)
                if z is not None and z not in reach_left:
                    reach_left.add(z)
                    queue.append(z)
        reach_right = {y for y in adj_r if y not in mate_r}
        queue = deque(reach_right)
        while queue:
            y = queue.popleft()
            for x in adj_r[y]:
                z = mate_l.get(x)
                if z is not None and z not in reach_right:
                    reach_right.add(z)
                    queue.append(z)
        return reach_left, reach_right

    def matching_selector(self) -> SelectorSnapshot:
        if not self.track_matching:
            raise PreconditionUnmet("matching is not tracked on this graph")
        reach_left, reach_right = self.alternating_reach()
        chosen = [x for x in self._adj[LEFT] if x not in reach_left]
        chosen += [y for y in self._adj[RIGHT] if y not in reach_right]
        return SelectorSnapshot(frozenset(chosen), "matching_selector")

    def _require_ell(self, ell: int | None) -> int:
        if ell is not None and ell != self.ell:
            self.set_threshold(ell)
        if self.ell is None:
            raise PreconditionUnmet("no Buss threshold configured")
        return self.ell

    def buss_selector(self, ell: int | None = None) -> SelectorSnapshot:
        ell = self._require_ell(ell)
        return SelectorSnapshot(frozenset(self._chosen[LEFT]), "buss", ell)

    def buss_reversed(self, ell: int | None = None) -> SelectorSnapshot:
        ell = self._require_ell(ell)
        return SelectorSnapshot(frozenset(self._chosen[RIGHT]), "buss_reversed", ell)

    def buss_chosen(self, side: int) -> dict:
        """Live view of the chosen set on one side (do not mutate)."""
        return self._chosen[side]

    def copy(self) -> "DynamicBipartiteGraph":
        g = DynamicBipartiteGraph(self.ell, track_matching=self.track_matching)
        g._adj = tuple({v: dict(n) for v, n in a.items()} for a in self._adj)
        g._mate = tuple(dict(m) for m in self._mate)
        g._cnt = tuple(dict(c) for c in self._cnt)
        g._chosen = tuple(dict(c) for c in self._chosen)
        return g


def from_edges(left: Iterable, right: Iterable, edges: Iterable[tuple], ell: int | None = None) -> DynamicBipartiteGraph:
    """Build a graph by adding the right side first, then each left vertex."""
    g = DynamicBipartiteGraph(ell)
    nbrs: dict = {x: [] for x in left}
    for x, y in edges:
        nbrs[x].append(y)
    for y in right:
        g.add_right(y)
    for x, ys in nbrs.items():
        g.add_left(x, ys)
    return g


def matching_selector(G: DynamicBipartiteGraph) -> SelectorSnapshot:
    return G.matching_selector()


def buss_selector(G: DynamicBipartiteGraph, ell: int) -> SelectorSnapshot:
    return G.buss_selector(ell)


def buss_reversed(G: DynamicBipartiteGraph, ell: int) -> SelectorSnapshot:
    return G.buss_reversed(ell)


def extract_buss_matching(G: DynamicBipartiteGraph, ell: int, *, reverse: bool = False) -> list[tuple]:
    """A matching of size ``ell + 1`` inside a Buss selector larger than ``ell**2 + ell``.

    Pairs are returned as ``(left, right)``.  With ``reverse`` the selector is
    taken on the right side.
    """
    side = RIGHT if reverse else LEFT
    snap = G.buss_reversed(ell) if reverse else G.buss_selector(ell)
    chosen = [v for v in G._adj[side] if v in snap.chosen]
    if len(chosen) <= ell * ell + ell:
        raise PreconditionUnmet(f"Buss selector has {len(chosen)} <= {ell * ell + ell} vertices")
    adj_side, adj_other = G._adj[side], G._adj[1 - side]
    important = [v for v in chosen if len(adj_side[v]) > ell]
    pairs: list[tuple] = []
    if len(important) >= ell + 1:
        used: set = set()
        for v in important[: ell + 1]:
            u = next(u for u in adj_side[v] if u not in used)
            used.add(u)
            pairs.append((v, u))
    else:
        marked: set = set()
        for v in chosen:
            if len(pairs) == ell + 1:
                break
            if v in marked:
                continue
            w = next((u for u in adj_side[v] if len(adj_other[u]) <= ell), None)
            if w is None:
                continue
            pairs.append((v, w))
            marked.update(adj_other[w])
        if len(pairs) < ell + 1:
            raise PreconditionUnmet("greedy extraction ran out of vertices")
    return [(a, b) if side == LEFT else (b, a) for a, b in pairs]
