"""Obstacle certificates: tangles and short jungles.

Every certificate is a plain value checked against a digraph by ``verify``,
which returns ``None`` when all clauses hold and a ``Violation`` otherwise.
Extraction routines turn large tangles into short jungles with explicitly
stored path families; ``embed_pattern`` then places any small pattern into a
jungle greedily.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal, Union

from .bipartite import DynamicBipartiteGraph, LEFT
from .constants import PROVEN, Constants
from .digraph import SemiCompleteDigraph, iter_bits
from .errors import CertificateUnavailable, InternalContradiction, PreconditionUnmet

Path = tuple[int, ...]
JungleKind = Literal["vertex_disjoint", "edge_disjoint"]


@dataclass(frozen=True)
class DegreeTangle:
    X: frozenset[int]
    k: int
    ell: int

    def __post_init__(self):
        object.__setattr__(self, "X", frozenset(self.X))


@dataclass(frozen=True)
class MatchingTangle:
    pairs: tuple[tuple[int, int], ...]  # (v, f(v)) with v in X
    k: int
    ell: int

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))

    @property
    def X(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.pairs)

    @property
    def Y(self) -> frozenset[int]:
        return frozenset(b for _, b in self.pairs)


@dataclass(frozen=True)
class BackwardTangle:
    X: frozenset[int]
    Y: frozenset[int]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "X", frozenset(self.X))
        object.__setattr__(self, "Y", frozenset(self.Y))


@dataclass(frozen=True)
class ShortJungle:
    X: frozenset[int]
    k: int
    d: int
    kind: JungleKind
    paths: dict[tuple[int, int], tuple[Path, ...]] = field(default_factory=dict, compare=False)
    source: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "X", frozenset(self.X))


Obstacle = Union[DegreeTangle, MatchingTangle, BackwardTangle, ShortJungle]


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.clause}: {self.witness}"


# --------------------------------------------------------------------- verify
def _bad_vertices(T: SemiCompleteDigraph, vs: Iterable[int]) -> list[int]:
    return [v for v in vs if not 0 <= v < T.n]


def verify(T: SemiCompleteDigraph, obstacle: Obstacle) -> Violation | None:
    if isinstance(obstacle, DegreeTangle):
        return _verify_degree(T, obstacle)
    if isinstance(obstacle, MatchingTangle):
        return _verify_matching(T, obstacle)
    if isinstance(obstacle, BackwardTangle):
        return _verify_backward(T, obstacle)
    if isinstance(obstacle, ShortJungle):
        return _verify_jungle(T, obstacle)
    raise TypeError(f"not an obstacle: {obstacle!r}")


def _verify_degree(T, t: DegreeTangle) -> Violation | None:
    bad = _bad_vertices(T, t.X)
    if bad:
        return Violation("unknown_vertex", tuple(bad))
    if len(t.X) < t.k:
        return Violation("size", (len(t.X), t.k))
    if t.X:
        lo = min(t.X, key=lambda v: (T.outdeg[v], v))
        hi = max(t.X, key=lambda v: (T.outdeg[v], -v))
        if T.outdeg[hi] - T.outdeg[lo] > t.ell:
            return Violation("degree_spread", (lo, hi, T.outdeg[hi] - T.outdeg[lo], t.ell))
    return None


def _verify_matching(T, t: MatchingTangle) -> Violation | None:
    X, Y = [a for a, _ in t.pairs], [b for _, b in t.pairs]
    bad = _bad_vertices(T, X + Y)
    if bad:
        return Violation("unknown_vertex", tuple(bad))
    if len(set(X)) != len(X) or len(set(Y)) != len(Y):
        return Violation("not_a_bijection", tuple(t.pairs))
    if set(X) & set(Y):
        return Violation("not_disjoint", tuple(sorted(set(X) & set(Y))))
    if len(X) != t.k:
        return Violation("size", (len(X), t.k))
    for a, b in t.pairs:
        if not T.arc(a, b):
            return Violation("missing_arc", (a, b))
    if X:
        v = max(X, key=lambda x: (T.outdeg[x], x))
        w = min(Y, key=lambda y: (T.outdeg[y], y))
        if not T.outdeg[w] > T.outdeg[v] + t.ell:
            return Violation("degree_gap", (v, w, T.outdeg[w] - T.outdeg[v], t.ell))
    return None


def _verify_backward(T, t: BackwardTangle) -> Violation | None:
    bad = _bad_vertices(T, t.X | t.Y)
    if bad:
        return Violation("unknown_vertex", tuple(bad))
    if t.X & t.Y:
        return Violation("not_disjoint", tuple(sorted(t.X & t.Y)))
    if len(t.X | t.Y) != T.n:
        return Violation("not_a_partition", tuple(sorted(set(range(T.n)) - t.X - t.Y)))
    forward = T.arcs_between(T.mask(t.X), T.mask(t.Y))
    if forward < t.k:
        return Violation("arc_count", (forward, t.k))
    if t.X and t.Y:
        v = max(t.X, key=lambda x: (T.outdeg[x], x))
        w = min(t.Y, key=lambda y: (T.outdeg[y], y))
        if T.outdeg[w] < T.outdeg[v]:
            return Violation("degree_order", (v, w))
    return None


def path_violation(T: SemiCompleteDigraph, path: Sequence[int], src: int, dst: int, d: int) -> str | None:
    if len(path) < 2 or path[0] != src or path[-1] != dst:
        return "endpoints"
    if len(set(path)) != len(path):
        return "not_simple"
    if len(path) - 1 > d:
        return "length"
    for a, b in zip(path, path[1:]):
        if not (0 <= a < T.n and 0 <= b < T.n) or not T.arc(a, b):
            return "not_a_path"
    return None


def _verify_jungle(T, j: ShortJungle) -> Violation | None:
    bad = _bad_vertices(T, j.X)
    if bad:
        return Violation("unknown_vertex", tuple(bad))
    if len(j.X) < j.k:
        return Violation("size", (len(j.X), j.k))
    for v in sorted(j.X):
        for w in sorted(j.X):
            if v == w:
                continue
            family = j.paths.get((v, w))
            if family is None:
                return Violation("missing_family", (v, w))
            if len(family) < j.k:
                return Violation("family_size", (v, w, len(family), j.k))
            for p in family:
                why = path_violation(T, p, v, w, j.d)
                if why:
                    return Violation(why, (v, w, tuple(p)))
            if len(set(map(tuple, family))) != len(family):
                return Violation("duplicate_path", (v, w))
            if j.kind == "vertex_disjoint":
                seen: set[int] = set()
                for p in family:
                    inner = set(p[1:-1])
                    if inner & seen:
                        return Violation("vertex_disjointness", (v, w, tuple(sorted(inner & seen))))
                    seen |= inner
            else:
                used: set[tuple[int, int]] = set()
                for p in family:
                    arcs = set(zip(p, p[1:]))
                    if arcs & used:
                        return Violation("edge_disjointness", (v, w, tuple(sorted(arcs & used))))
                    used |= arcs
    return None


def is_valid(T: SemiCompleteDigraph, obstacle: Obstacle) -> bool:
    return verify(T, obstacle) is None


# ------------------------------------------------------------- lower bounds
def pathwidth_bound_from_degree_tangle(tangle: DegreeTangle) -> int | None:
    """Largest k with |X| >= 5k + 2 and ell <= k; then pw(T) > k."""
    k = (len(tangle.X) - 2) // 5
    return k if len(tangle.X) >= 2 and k >= max(tangle.ell, 0) else None


def pathwidth_bound_from_matching_tangle(tangle: MatchingTangle) -> int | None:
    """Largest k with size >= k + 1 and gap >= k; then pw(T) > k."""
    k = min(len(tangle.pairs) - 1, tangle.ell)
    return k if k >= 0 else None


def backward_threshold(k: int) -> int:
    """m(k) = 100k^2 + 22k + 1."""
    return 100 * k * k + 22 * k + 1


def cutwidth_bound_from_backward_tangle(tangle: BackwardTangle) -> int | None:
    """Largest k with arc count >= m(k) + 1; then ctw(T) > k."""
    if tangle.k < backward_threshold(0) + 1:
        return None
    k = 0
    while backward_threshold(k + 1) + 1 <= tangle.k:
        k += 1
    return k


# ------------------------------------------------------------- extraction
def _fail(strict: bool, message: str):
    if strict:
        raise InternalContradiction(message)
    raise CertificateUnavailable(message)


def _first(mask: int, count: int) -> list[int]:
    out = []
    for v in iter_bits(mask):
        if len(out) == count:
            break
        out.append(v)
    return out


def _konig_cover(g: DynamicBipartiteGraph) -> set:
    """Minimum vertex cover from the stored maximum matching."""
    adj_l = g._adj[LEFT]
    mate_l, mate_r = g._mate
    z_left = {x for x in adj_l if x not in mate_l}
    z_right: set = set()
    stack = list(z_left)
    while stack:
        x = stack.pop()
        for y in adj_l[x]:
            if y in z_right or mate_l.get(x) == y:
                continue
            z_right.add(y)
            nxt = mate_r.get(y)
            if nxt is not None and nxt not in z_left:
                z_left.add(nxt)
                stack.append(nxt)
    return {x for x in adj_l if x not in z_left} | z_right


def _pairs_jungle(T: SemiCompleteDigraph, Z: list[int], within: int, k: int) -> dict | None:
    """Length-2 paths z1 -> x -> z2 through common neighbours inside ``within``."""
    paths = {}
    for z1 in Z:
        for z2 in Z:
            if z1 == z2:
                continue
            mids = _first(T.out_mask[z1] & T.in_mask[z2] & within, k)
            if len(mids) < k:
                return None
            paths[(z1, z2)] = tuple((z1, x, z2) for x in mids)
    return paths


def jungle_from_degree_tangle(
    T: SemiCompleteDigraph, X: Iterable[int], k: int, constants: Constants = PROVEN
) -> ShortJungle:
    """A (k, 3)-short jungle inside a (c*k, k)-degree tangle, c = degree_jungle_size."""
    strict = constants.degree_jungle_size >= PROVEN.degree_jungle_size
    size = constants.degree_jungle_size * k
    X = sorted(set(X), key=lambda v: (T.outdeg[v], v))
    if k < 1:
        raise PreconditionUnmet("k must be positive")
    if len(X) < size or _verify_degree(T, DegreeTangle(frozenset(X), size, k)) is not None:
        raise PreconditionUnmet(f"not a ({size},{k})-degree tangle")
    X = sorted(X[:size])
    xmask = T.mask(X)
    paths: dict[tuple[int, int], tuple[Path, ...]] = {}
    for v in X:
        for w in X:
            if v == w:
                continue
            vw = (1 << v) | (1 << w)
            plus_minus = T.out_mask[v] & T.in_mask[w] & ~vw
            if plus_minus.bit_count() >= k:
                paths[(v, w)] = tuple((v, x, w) for x in _first(plus_minus, k))
                continue
            plus_plus = T.out_mask[v] & T.out_mask[w] & ~vw
            minus_minus = T.in_mask[v] & T.in_mask[w] & ~vw
            a_mask = plus_plus & ~plus_minus
            b_mask = minus_minus & ~plus_minus
            g = DynamicBipartiteGraph()
            for b in iter_bits(b_mask):
                g.add_right(b)
            for a in iter_bits(a_mask):
                g.add_left(a, list(iter_bits(T.out_mask[a] & b_mask)))
            if g.matching_size() >= k:
                chosen = sorted(g.matching())[:k]
                paths[(v, w)] = tuple((v, a, b, w) for a, b in chosen)
                continue
            cover = _konig_cover(g)
            cover_mask = T.mask(cover)
            if (a_mask & xmask).bit_count() >= 16 * k:
                # Case 1: an explicit inner jungle among vertices of A - C.
                y0 = xmask & a_mask & ~cover_mask
                Y = _first(y0, 15 * k)
                if len(Y) < 15 * k:
                    _fail(strict, "case 1: fewer than 15k candidates outside the cover")
                ymask = T.mask(Y)
                Z = [y for y in Y if T.induced_indegree(y, ymask) >= 6 * k][:k]
                if len(Z) < k:
                    _fail(strict, "case 1: fewer than k vertices of indegree >= 6k")
                inner = _pairs_jungle(T, Z, ymask, k)
                if inner is None:
                    _fail(strict, "case 1: inner pair without k common neighbours")
                return ShortJungle(frozenset(Z), k, 3, "vertex_disjoint", inner, source="degree_tangle/case1")
            if (b_mask & xmask).bit_count() >= 7 * k:
                _fail(strict, f"case 2 reached for pair ({v},{w})")
            _fail(strict, f"neither case applies for pair ({v},{w})")
    return ShortJungle(frozenset(X), k, 3, "vertex_disjoint", paths, source="degree_tangle")


def jungle_from_matching_tangle(
    T: SemiCompleteDigraph, tangle: MatchingTangle, k: int, constants: Constants = PROVEN
) -> ShortJungle:
    """A (k, 4)-short jungle inside the high side Y of a (c*k, g*k)-matching tangle."""
    strict = (constants.matching_jungle_size, constants.matching_jungle_gap) >= (
        PROVEN.matching_jungle_size,
        PROVEN.matching_jungle_gap,
    ) and constants.matching_jungle_size >= PROVEN.matching_jungle_size
    size = constants.matching_jungle_size * k
    gap = constants.matching_jungle_gap * k
    if k < 1:
        raise PreconditionUnmet("k must be positive")
    if len(tangle.pairs) < size or tangle.ell < gap or _verify_matching(T, tangle) is not None:
        raise PreconditionUnmet(f"not a verified ({size},{gap})-matching tangle")
    pairs = sorted(tangle.pairs)[:size]
    f_inv = {b: a for a, b in pairs}
    ymask = T.mask(b for _, b in pairs)
    Z = [y for y in sorted(f_inv) if T.induced_indegree(y, ymask) >= k + 1][:k]
    if len(Z) < k:
        _fail(strict, "fewer than k vertices of Y with indegree >= k+1 in T[Y]")
    paths: dict[tuple[int, int], tuple[Path, ...]] = {}
    for v in Z:
        for w in Z:
            if v == w:
                continue
            R = _first(T.in_mask[w] & ymask & ~(1 << v), k)
            if len(R) < k:
                _fail(strict, f"w={w} has fewer than k in-neighbours in Y - v")
            P = [f_inv[r] for r in R]
            blocked = T.mask(P) | T.mask(R)
            used = 0
            family: list[Path] = []
            direct = False
            for p, r in zip(P, R):
                cands = T.out_mask[v] & T.in_mask[p] & ~blocked & ~used
                if direct:
                    cands &= ~(1 << w)
                if not cands:
                    _fail(strict, f"no free middle vertex from {v} to {p}")
                q = (cands & -cands).bit_length() - 1
                used |= 1 << q
                if q == w:
                    direct = True
                    family.append((v, w))
                else:
                    family.append((v, q, p, r, w))
            paths[(v, w)] = tuple(family)
    return ShortJungle(frozenset(Z), k, 4, "vertex_disjoint", paths, source="matching_tangle")


def _shortcut(walk: Sequence[int]) -> Path:
    """Remove cycles from a walk, keeping the first visit of each vertex."""
    out: list[int] = []
    pos: dict[int, int] = {}
    for v in walk:
        if v in pos:
            del out[pos[v] + 1 :]
            pos = {u: i for i, u in enumerate(out)}
        else:
            pos[v] = len(out)
            out.append(v)
    return tuple(out)


def _as_immersion(j: ShortJungle, k: int, source: str) -> ShortJungle:
    paths = {pair: fam[:k] for pair, fam in j.paths.items()}
    return ShortJungle(j.X, k, 4, "edge_disjoint", paths, source=source)


def immersion_jungle_from_backward_tangle(
    T: SemiCompleteDigraph, tangle: BackwardTangle, k: int, constants: Constants = PROVEN
) -> ShortJungle:
    """A (k, 4)-short immersion jungle from a backward tangle with many forward arcs.

    When many heads have nearly maximal outdegree they form a degree tangle;
    that route delegates to ``jungle_from_degree_tangle`` and is reported in
    the ``source`` field of the result.
    """
    c = constants
    strict = c.is_default
    if k < 1:
        raise PreconditionUnmet("k must be positive")
    threshold = c.backward_jungle_arcs * k
    if tangle.k < threshold or _verify_backward(T, tangle) is not None:
        raise PreconditionUnmet(f"not a verified {threshold}-backward tangle")
    xmask, ymask = T.mask(tangle.X), T.mask(tangle.Y)
    tails = 0  # vertices of X with an arc into Y
    heads = 0  # vertices of Y with an arc from X
    for v in iter_bits(xmask):
        hit = T.out_mask[v] & ymask
        if hit:
            tails |= 1 << v
            heads |= hit
    need = c.backward_jungle_heads * k
    spread = c.backward_degree_tangle_spread * k
    tangle_size = c.backward_degree_tangle_size * k
    if tails.bit_count() >= need:
        low_y = min(T.outdeg[w] for w in tangle.Y)
        near = [v for v in iter_bits(tails) if T.outdeg[v] >= low_y - spread]
        if len(near) >= tangle_size:
            inner = jungle_from_degree_tangle(T, near, spread, c)
            return _as_immersion(inner, k, "backward_tangle/delegated")
        rest = [v for v in iter_bits(tails) if T.outdeg[v] < low_y - spread]
        return _backward_forward(T, rest, ymask, k, spread, strict)
    if heads.bit_count() >= need:
        high_x = max(T.outdeg[v] for v in tangle.X)
        near = [w for w in iter_bits(heads) if T.outdeg[w] <= high_x + spread]
        if len(near) >= tangle_size:
            inner = jungle_from_degree_tangle(T, near, spread, c)
            return _as_immersion(inner, k, "backward_tangle/delegated")
        rest = [w for w in iter_bits(heads) if T.outdeg[w] > high_x + spread]
        return _backward_reverse(T, rest, xmask, k, spread, strict)
    raise CertificateUnavailable(
        f"neither side has {need} endpoints of forward arcs "
        f"({tails.bit_count()} tails, {heads.bit_count()} heads)"
    )


def _complete(T, src: int, dst: int, used: set, strict: bool) -> tuple[int, int, int]:
    """A length-2 path src -> u -> dst whose two arcs are unused."""
    for u in iter_bits(T.out_mask[src] & T.in_mask[dst]):
        if (src, u) not in used and (u, dst) not in used:
            return src, u, dst
    _fail(strict, f"no unused length-2 path from {src} to {dst}")


def _backward_forward(T, rest: list[int], ymask: int, k: int, spread: int, strict: bool) -> ShortJungle:
    if len(rest) < 5 * k:
        _fail(strict, "fewer than 5k low-degree tails")
    P = rest[: 5 * k]
    pmask = T.mask(P)
    Z = [v for v in P if T.induced_outdegree(v, pmask) >= k][:k]
    if len(Z) < k:
        _fail(strict, "fewer than k vertices of outdegree >= k in T[P]")
    paths = {}
    for v in Z:
        for w in Z:
            if v == w:
                continue
            firsts = _first(T.out_mask[v] & pmask, k)
            seconds = [(T.out_mask[x] & ymask & -(T.out_mask[x] & ymask)).bit_length() - 1 for x in firsts]
            used = {(v, x) for x in firsts} | set(zip(firsts, seconds))
            family = []
            for x, y in zip(firsts, seconds):
                _, u, _ = _complete(T, y, w, used, strict)
                used |= {(y, u), (u, w)}
                family.append(_shortcut((v, x, y, u, w)))
            paths[(v, w)] = tuple(family)
    return ShortJungle(frozenset(Z), k, 4, "edge_disjoint", paths, source="backward_tangle/tails")


def _backward_reverse(T, rest: list[int], xmask: int, k: int, spread: int, strict: bool) -> ShortJungle:
    if len(rest) < 5 * k:
        _fail(strict, "fewer than 5k high-degree heads")
    Q = rest[: 5 * k]
    qmask = T.mask(Q)
    Z = [w for w in Q if T.induced_indegree(w, qmask) >= k][:k]
    if len(Z) < k:
        _fail(strict, "fewer than k vertices of indegree >= k in T[Q]")
    paths = {}
    for v in Z:
        for w in Z:
            if v == w:
                continue
            lasts = _first(T.in_mask[w] & qmask, k)
            befores = [(T.in_mask[x] & xmask & -(T.in_mask[x] & xmask)).bit_length() - 1 for x in lasts]
            used = {(x, w) for x in lasts} | set(zip(befores, lasts))
            family = []
            for x, y in zip(lasts, befores):
                _, u, _ = _complete(T, v, y, used, strict)
                used |= {(v, u), (u, y)}
                family.append(_shortcut((v, u, y, x, w)))
            paths[(v, w)] = tuple(family)
    return ShortJungle(frozenset(Z), k, 4, "edge_disjoint", paths, source="backward_tangle/heads")


# ------------------------------------------------------------- embedding
@dataclass(frozen=True)
class Pattern:
    """A simple digraph on vertices ``0..k-1``."""

    k: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple((int(a), int(b)) for a, b in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for a, b in arcs:
            if a == b:
                raise ValueError(f"pattern has a loop at {a}")
            if not (0 <= a < self.k and 0 <= b < self.k):
                raise ValueError(f"pattern arc ({a},{b}) out of range")
        if len(set(arcs)) != len(arcs):
            raise ValueError("pattern has duplicate arcs")

    @property
    def ell(self) -> int:
        return len(self.arcs)

    @property
    def size(self) -> int:
        return self.k + len(self.arcs)


@dataclass(frozen=True)
class Model:
    """Expansion (vertex_disjoint) or immersion (edge_disjoint) of a pattern."""

    vertex_map: tuple[int, ...]
    arc_paths: tuple[Path, ...]
    kind: JungleKind = "vertex_disjoint"


def verify_model(T: SemiCompleteDigraph, H: Pattern, model: Model) -> Violation | None:
    img = model.vertex_map
    if len(img) != H.k:
        return Violation("vertex_count", (len(img), H.k))
    if any(not 0 <= v < T.n for v in img):
        return Violation("unknown_vertex", tuple(img))
    if len(set(img)) != len(img):
        return Violation("not_injective", tuple(img))
    if len(model.arc_paths) != H.ell:
        return Violation("arc_count", (len(model.arc_paths), H.ell))
    images = set(img)
    inner_seen: set[int] = set()
    arcs_seen: set[tuple[int, int]] = set()
    for (a, b), p in zip(H.arcs, model.arc_paths):
        why = path_violation(T, p, img[a], img[b], T.n)
        if why:
            return Violation(why, (a, b, tuple(p)))
        if model.kind == "vertex_disjoint":
            inner = set(p[1:-1])
            if inner & images:
                return Violation("through_branch_vertex", (a, b, tuple(sorted(inner & images))))
            if inner & inner_seen:
                return Violation("vertex_disjointness", (a, b, tuple(sorted(inner & inner_seen))))
            inner_seen |= inner
        else:
            arcs = set(zip(p, p[1:]))
            if arcs & arcs_seen:
                return Violation("edge_disjointness", (a, b, tuple(sorted(arcs & arcs_seen))))
            arcs_seen |= arcs
    return None


def embed_pattern(jungle: ShortJungle, H: Pattern) -> Model:
    """Greedy model of ``H`` inside a ``(d*|H|, d)``-short (immersion) jungle."""
    d = jungle.d
    if d < 2:
        raise PreconditionUnmet("path-length bound must exceed 1")
    if jungle.k < d * H.size or len(jungle.X) < H.k:
        raise PreconditionUnmet(f"jungle with {jungle.k} paths per pair is too small for |H| = {H.size} at d = {d}")
    img = tuple(sorted(jungle.X)[: H.k])
    used_vertices = set(img)
    used_arcs: set[tuple[int, int]] = set()
    chosen: list[Path] = []
    for a, b in H.arcs:
        family = jungle.paths.get((img[a], img[b]), ())
        for p in family:
            if jungle.kind == "vertex_disjoint":
                if not used_vertices.intersection(p[1:-1]):
                    used_vertices.update(p[1:-1])
                    break
            else:
                arcs = set(zip(p, p[1:]))
                if not arcs & used_arcs:
                    used_arcs |= arcs
                    break
        else:
            raise InternalContradiction(f"no free stored path for arc ({a},{b})")
        chosen.append(tuple(p))
    return Model(img, tuple(chosen), jungle.kind)


def all_pairs(X: Iterable[int]):
    xs = sorted(X)
    for v, w in combinations(xs, 2):
        yield v, w
        yield w, v
