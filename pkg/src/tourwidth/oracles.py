"""Brute-force ground truth for small instances.

Nothing here shares code with the solvers beyond the digraph container and
the certificate checkers used to validate witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Any

from .digraph import SemiCompleteDigraph, cut_profile
from .decomposition import PathDecomposition, verify_path_decomposition
from .errors import BudgetExceeded
from .obstacles import Model, Pattern, verify_model


@dataclass(frozen=True)
class OracleResult:
    value: Any
    witness: Any
    method: str


# ------------------------------------------------------------- cutwidth
def oracle_cutwidth(T: SemiCompleteDigraph, max_n: int = 20) -> OracleResult:
    """Subset DP: f(S) = max(cut(S), min_{v in S} f(S - v))."""
    n = T.n
    if n > max_n:
        raise BudgetExceeded(f"cutwidth oracle limited to n <= {max_n}", max_n)
    out, full = T.out_mask, T.all_mask
    size = 1 << n
    cut = [0] * size
    for S in range(1, size):
        low = S & -S
        v = low.bit_length() - 1
        rest = S ^ low
        # moving v into the prefix: its arcs from the prefix stop counting, its arcs out start
        cut[S] = cut[rest] - (T.in_mask[v] & rest).bit_count() + (out[v] & ~S & full).bit_count()
    f = [0] * size
    choice = [0] * size
    for S in range(1, size):
        best, arg = None, -1
        rest = S
        while rest:
            low = rest & -rest
            val = f[S ^ low]
            if best is None or val < best:
                best, arg = val, low.bit_length() - 1
            rest ^= low
        f[S] = max(cut[S], best)
        choice[S] = arg
    order = []
    S = full
    while S:
        v = choice[S]
        order.append(v)
        S ^= 1 << v
    order.reverse()
    return OracleResult(f[full] if n else 0, tuple(order), "subset dynamic programming")


def oracle_cutwidth_enumerate(T: SemiCompleteDigraph, max_n: int = 8) -> OracleResult:
    if T.n > max_n:
        raise BudgetExceeded(f"factorial cutwidth enumeration limited to n <= {max_n}", max_n)
    best, arg = None, ()
    for pi in permutations(range(T.n)):
        w = max(cut_profile(T, pi))
        if best is None or w < best:
            best, arg = w, pi
    return OracleResult(best if best is not None else 0, arg, "enumeration of all orderings")


# ------------------------------------------------------------- pathwidth
def oracle_pathwidth(T: SemiCompleteDigraph, max_n: int = 18) -> OracleResult:
    """Vertex-separation DP: g(A) = min_v max(g(A - v), |S(A - v) + v|), pw = g(V) - 1.

    ``S(A)`` is the set of vertices of ``A`` with an out-neighbour outside ``A``.
    """
    n = T.n
    if n > max_n:
        raise BudgetExceeded(f"pathwidth oracle limited to n <= {max_n}", max_n)
    if n == 0:
        return OracleResult(-1, PathDecomposition(()), "subset dynamic programming")
    out, full = T.out_mask, T.all_mask
    size = 1 << n
    boundary = [0] * size  # |S(A)|
    for A in range(1, size):
        outside = full & ~A
        boundary[A] = sum(1 for v in _bits(A) if out[v] & outside)
    g = [0] * size
    choice = [0] * size
    for A in range(1, size):
        best, arg = None, -1
        for v in _bits(A):
            prev = A & ~(1 << v)
            val = max(g[prev], boundary[prev] + 1)
            if best is None or val < best:
                best, arg = val, v
        g[A] = best
        choice[A] = arg
    order = []
    A = full
    while A:
        v = choice[A]
        order.append(v)
        A &= ~(1 << v)
    order.reverse()
    bags = []
    A = 0
    for v in order:
        bags.append(frozenset(u for u in _bits(A) if out[u] & (full & ~A)) | {v})
        A |= 1 << v
    W = PathDecomposition(tuple(bags))
    if verify_path_decomposition(T, W) != g[full] - 1:
        raise AssertionError("reconstructed decomposition does not match the DP value")
    return OracleResult(g[full] - 1, W, "subset dynamic programming over vertex orderings")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def oracle_pathwidth_search(T: SemiCompleteDigraph, max_n: int = 7) -> OracleResult:
    """Minimax over nice decompositions: states are (introduced, forgotten) pairs.

    A vertex may be forgotten only after all its out-neighbours have been
    introduced, which is exactly the arc condition of a path decomposition.
    """
    n = T.n
    if n > max_n:
        raise BudgetExceeded(f"decomposition search limited to n <= {max_n}", max_n)
    full, out = T.all_mask, T.out_mask

    @lru_cache(maxsize=None)
    def best(intro: int, gone: int) -> int:
        if gone == full:
            return 0
        bag = intro & ~gone
        res = None
        for v in range(n):
            bit = 1 << v
            if not intro & bit:
                val = max((bag | bit).bit_count(), best(intro | bit, gone))
            elif bag & bit and not out[v] & ~intro & full:
                val = best(intro, gone | bit)
            else:
                continue
            if res is None or val < res:
                res = val
        return res

    value = best(0, 0) - 1 if n else -1
    best.cache_clear()
    return OracleResult(value, None, "search over nice decompositions")


# ------------------------------------------------------------- selectors
def oracle_matching_selector(left, right, edges, max_vertices: int = 12) -> frozenset:
    """Vertices covered by every maximum matching, by enumerating all matchings."""
    left, right = list(left), list(right)
    if len(left) + len(right) > max_vertices:
        raise BudgetExceeded(f"matching selector oracle limited to {max_vertices} vertices", max_vertices)
    adj = {x: [] for x in left}
    for x, y in edges:
        adj[x].append(y)
    best_size = -1
    covered_all: set | None = None

    def rec(i: int, used: frozenset, chosen: list) -> None:
        nonlocal best_size, covered_all
        if i == len(left):
            size = len(chosen)
            cover = {v for e in chosen for v in e}
            if size > best_size:
                best_size, covered_all = size, cover
            elif size == best_size:
                covered_all &= cover
            return
        x = left[i]
        rec(i + 1, used, chosen)
        for y in adj[x]:
            if y not in used:
                chosen.append((x, y))
                rec(i + 1, used | {y}, chosen)
                chosen.pop()

    rec(0, frozenset(), [])
    return frozenset(covered_all or ())


def oracle_buss_selector(left, right, edges, ell: int) -> frozenset:
    """Left vertices of degree > ell or with a neighbour of degree <= ell."""
    deg: dict = {v: 0 for v in list(left) + list(right)}
    adj: dict = {x: [] for x in left}
    for x, y in edges:
        deg[x] += 1
        deg[y] += 1
        adj[x].append(y)
    return frozenset(x for x in left if deg[x] > ell or any(deg[y] <= ell for y in adj[x]))


# ------------------------------------------------------------- containment
def oracle_contains(T: SemiCompleteDigraph, H: Pattern, max_n: int = 8, max_pattern: int = 6) -> OracleResult:
    """Backtracking over injective vertex maps and internally disjoint paths."""
    if T.n > max_n or H.size > max_pattern:
        raise BudgetExceeded(f"containment oracle limited to n <= {max_n}, |H| <= {max_pattern}", max_n)
    n = T.n
    if H.k > n:
        return OracleResult(False, None, "backtracking")
    succ = [T.out_neighbours(v) for v in range(n)]

    def paths(src: int, dst: int, blocked: set):
        stack = [(src, [src])]
        while stack:
            v, path = stack.pop()
            for w in succ[v]:
                if w == dst:
                    yield tuple(path + [w])
                elif w not in blocked and w not in path:
                    stack.append((w, path + [w]))

    def route(i: int, img: tuple, blocked: set, chosen: list):
        if i == H.ell:
            return list(chosen)
        a, b = H.arcs[i]
        for p in paths(img[a], img[b], blocked):
            inner = set(p[1:-1])
            chosen.append(p)
            res = route(i + 1, img, blocked | inner, chosen)
            if res is not None:
                return res
            chosen.pop()
        return None

    for img in permutations(range(n), H.k):
        res = route(0, img, set(img), [])
        if res is not None:
            model = Model(tuple(img), tuple(res), "vertex_disjoint")
            assert verify_model(T, H, model) is None
            return OracleResult(True, model, "backtracking")
    return OracleResult(False, None, "backtracking")


# ------------------------------------------------------------- flow checks
def disjoint_path_count(T: SemiCompleteDigraph, s: int, t: int, kind: str = "vertex_disjoint", max_length: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint (or arc-disjoint) s-t paths.

    Computed by unit-capacity max flow on the host, ignoring path lengths.
    """
    import networkx as nx

    G = nx.DiGraph()
    if kind == "vertex_disjoint":
        for v in range(T.n):
            if v not in (s, t):
                G.add_edge(("in", v), ("out", v), capacity=1)
        def node(v, side):
            return v if v in (s, t) else (side, v)
        for u, v in T.arcs():
            if u == t or v == s:
                continue
            G.add_edge(node(u, "out"), node(v, "in"), capacity=1)
    else:
        for u, v in T.arcs():
            G.add_edge(u, v, capacity=1)
    if s not in G or t not in G:
        return 0
    return int(nx.maximum_flow_value(G, s, t))


def family_flow_value(paths, s: int, t: int, kind: str = "vertex_disjoint") -> int:
    """Max flow restricted to the arcs of a stored path family: how many of them are disjoint."""
    import networkx as nx

    G = nx.DiGraph()
    for p in paths:
        for u, v in zip(p, p[1:]):
            if kind == "vertex_disjoint":
                a = u if u == s else ("out", u)
                b = v if v == t else ("in", v)
                G.add_edge(a, b, capacity=1)
                for z in (u, v):
                    if z not in (s, t):
                        G.add_edge(("in", z), ("out", z), capacity=1)
            else:
                G.add_edge(u, v, capacity=1)
    if s not in G or t not in G:
        return 0
    return int(nx.maximum_flow_value(G, s, t))
