"""Topological containment by signature dynamic programming over a path decomposition.

A signature describes how a partial expansion of a pattern ``H`` meets a
separation ``(A, B)`` with separator ``S = A & B``:

* ``vmap[u]`` is the image of pattern vertex ``u`` when it lies in ``S``,
  ``FORGOTTEN`` when it lies in ``A - B`` and ``UNKNOWN`` when in ``B - A``;
* for every arc of ``H`` the maximal subpaths of its path inside ``A`` are
  listed in path order as pairs ``(b, e)`` of first and last vertex, again
  with ``A - B`` vertices collapsed to ``FORGOTTEN``.

Vertices are stored by their index in the host, the two sentinels are
negative.  The table moves forward along a nice decomposition: introducing a
vertex extends partial expansions, forgetting one renames it and drops
signatures whose paths would need an arc from ``A - B`` to ``B - A``.
Whenever a path steps from a newly introduced vertex into ``A - B`` the
needed arc exists automatically: the two ends lie on opposite sides of a
separation of a semi-complete digraph.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import product
from math import factorial

from .constants import PROVEN, Constants
from .decomposition import PathDecomposition, make_nice, verify_path_decomposition
from .digraph import SemiCompleteDigraph
from .errors import BudgetExceeded, CertificateUnavailable, InternalContradiction
from .obstacles import (
    DegreeTangle,
    MatchingTangle,
    Model,
    Pattern,
    embed_pattern,
    jungle_from_degree_tangle,
    jungle_from_matching_tangle,
    verify_model,
)
from .pathwidth import approx_pathwidth, exact_pathwidth

FORGOTTEN = -1
UNKNOWN = -2

Pair = tuple[int, int]
Signature = tuple[tuple[int, ...], tuple[tuple[Pair, ...], ...]]

DEFAULT_BUDGET = 2_000_000
# exact decompositions up to this width are tried before the approximate one
REFINE_WIDTH = 3


def signature_bound(m: int, k: int, ell: int) -> int:
    """Closed-form table bound ``(m+2)^k (m+2)^m m^ell m! (m+2)^ell``."""
    return (m + 2) ** k * (m + 2) ** m * m**ell * factorial(m) * (m + 2) ** ell


def start_signature(H: Pattern) -> Signature:
    return (UNKNOWN,) * H.k, ((),) * H.ell


def accept_signature(H: Pattern) -> Signature:
    return (FORGOTTEN,) * H.k, (((FORGOTTEN, FORGOTTEN),),) * H.ell


def is_valid_signature(sig: Signature, separator: Iterable[int], H: Pattern) -> bool:
    sep = separator if isinstance(separator, (set, frozenset)) else frozenset(separator)
    vmap, paths = sig
    if len(vmap) != H.k or len(paths) != H.ell:
        return False
    images: dict[int, int] = {}
    for u, x in enumerate(vmap):
        if x >= 0:
            if x not in sep or x in images:
                return False
            images[x] = u
        elif x not in (FORGOTTEN, UNKNOWN):
            return False
    used: set[int] = set()
    for (x, y), P in zip(H.arcs, paths):
        h = len(P)
        sx, sy = vmap[x], vmap[y]
        if sx != UNKNOWN and (h == 0 or P[0][0] != sx):
            return False
        if sy != UNKNOWN and (h == 0 or P[-1][1] != sy):
            return False
        if sy == UNKNOWN and h and P[-1][1] < 0:
            return False
        for i, (b, e) in enumerate(P):
            for z in (b, e):
                if z >= 0 and z not in sep:
                    return False
                if z < 0 and z != FORGOTTEN:
                    return False
            if i < h - 1 and e < 0:
                return False
            if b >= 0 and b in images:
                u = images[b]
                if not ((i == 0 and x == u) or (i == h - 1 and y == u and e == b)):
                    return False
            if e >= 0 and e in images:
                u = images[e]
                if not ((i == h - 1 and y == u) or (i == 0 and x == u and b == e)):
                    return False
            # a vertex used by a path and not a branch image occurs in exactly one pair
            for z in {b, e}:
                if z >= 0 and z not in images:
                    if z in used:
                        return False
                    used.add(z)
    return True


def enumerate_signatures(separator: Iterable[int], H: Pattern, budget: int = DEFAULT_BUDGET) -> set[Signature]:
    """Every valid signature for the separator, by generate-and-filter."""
    sep = sorted(set(separator))
    m = len(sep)
    ends = sep + [FORGOTTEN]
    pair_options = [(b, e) for b in ends for e in ends]
    max_len = m + 1  # every pair but the last ends in a distinct separator vertex
    seq_count = sum(len(pair_options) ** h for h in range(max_len + 1))
    candidates = (m + 2) ** H.k * seq_count**H.ell
    if candidates > budget:
        raise BudgetExceeded(
            f"{candidates} candidate signatures for m={m}, k={H.k}, ell={H.ell}",
            signature_bound(m, H.k, H.ell),
        )
    seqs = [tuple(s) for h in range(max_len + 1) for s in product(pair_options, repeat=h)]
    sepset = frozenset(sep)
    out = set()
    for vmap in product(sep + [FORGOTTEN, UNKNOWN], repeat=H.k):
        for paths in product(seqs, repeat=H.ell):
            sig = (tuple(vmap), tuple(paths))
            if is_valid_signature(sig, sepset, H):
                out.add(sig)
    return out


# ------------------------------------------------------------------ steps
def _replace(paths, a: int, P) -> tuple:
    return paths[:a] + (tuple(P),) + paths[a + 1 :]


def _interior_options(T: SemiCompleteDigraph, v: int, P: tuple, placed_src: bool, placed_tgt: bool):
    """All ways ``v`` can become an interior vertex of one path with trace ``P``."""
    h = len(P)
    arc = T.arc
    for j in range(h + 1):
        if (j == 0 and placed_src) or (j == h and placed_tgt):
            continue
        yield P[:j] + ((v, v),) + P[j:]
    for i, (b, e) in enumerate(P):
        if not (i == h - 1 and placed_tgt) and e >= 0 and arc(e, v):
            yield P[:i] + ((b, v),) + P[i + 1 :]
        if not (i == 0 and placed_src) and (b < 0 or arc(v, b)):
            yield P[:i] + ((v, e),) + P[i + 1 :]
        if i < h - 1 and e >= 0 and arc(e, v):
            b2, e2 = P[i + 1]
            if b2 < 0 or arc(v, b2):
                yield P[:i] + ((b, e2),) + P[i + 2 :]


def _branch_options(T: SemiCompleteDigraph, v: int, P: tuple, outgoing: bool):
    """Traces of one arc incident to a pattern vertex newly mapped to ``v``."""
    if outgoing:
        yield ((v, v),) + P
        if P:
            b, e = P[0]
            if b < 0 or T.arc(v, b):
                yield ((v, e),) + P[1:]
    else:
        yield P + ((v, v),)
        if P:
            b, e = P[-1]
            if e >= 0 and T.arc(e, v):
                yield P[:-1] + ((b, v),)


def introduce_vertex(
    table: set[Signature],
    v: int,
    separator: frozenset[int],
    T: SemiCompleteDigraph,
    H: Pattern,
    budget: int | None = None,
) -> set[Signature]:
    """Table after ``v`` moves from ``B - A`` into the separator (``separator`` includes ``v``)."""
    out: set[Signature] = set()
    incident = [[(a, x == u) for a, (x, y) in enumerate(H.arcs) if u in (x, y)] for u in range(H.k)]
    for sig in table:
        if budget is not None and len(out) > budget:
            raise BudgetExceeded(f"signature table grew past {budget} entries", budget)
        vmap, paths = sig
        out.add(sig)
        # v is an interior vertex of one path
        for a, (x, y) in enumerate(H.arcs):
            for P in _interior_options(T, v, paths[a], vmap[x] != UNKNOWN, vmap[y] != UNKNOWN):
                cand = (vmap, _replace(paths, a, P))
                if is_valid_signature(cand, separator, H):
                    out.add(cand)
        # v is the image of a pattern vertex
        for u in range(H.k):
            if vmap[u] != UNKNOWN:
                continue
            new_vmap = vmap[:u] + (v,) + vmap[u + 1 :]
            arcs = incident[u]
            choices = [list(_branch_options(T, v, paths[a], outgoing)) for a, outgoing in arcs]
            for combo in product(*choices):
                new_paths = list(paths)
                for (a, _), P in zip(arcs, combo):
                    new_paths[a] = P
                cand = (new_vmap, tuple(new_paths))
                if is_valid_signature(cand, separator, H):
                    out.add(cand)
    return out


def forget_vertex(table: set[Signature], w: int, separator: frozenset[int], T: SemiCompleteDigraph, H: Pattern) -> set[Signature]:
    """Table after ``w`` leaves the separator for ``A - B`` (``separator`` excludes ``w``)."""
    out: set[Signature] = set()
    for vmap, paths in table:
        new_vmap = tuple(FORGOTTEN if x == w else x for x in vmap)
        new_paths = tuple(
            tuple((FORGOTTEN if b == w else b, FORGOTTEN if e == w else e) for b, e in P) for P in paths
        )
        cand = (new_vmap, new_paths)
        if is_valid_signature(cand, separator, H):
            out.add(cand)
    return out


# ------------------------------------------------------------------ driver
@dataclass
class TableTrace:
    separator_sizes: list[int] = field(default_factory=list)
    table_sizes: list[int] = field(default_factory=list)

    def record(self, m: int, size: int) -> None:
        self.separator_sizes.append(m)
        self.table_sizes.append(size)

    @property
    def max_size(self) -> int:
        return max(self.table_sizes, default=0)

    def bound_violations(self, H: Pattern) -> list[tuple[int, int, int]]:
        """Steps whose table exceeds the closed-form bound: (separator size, size, bound)."""
        out = []
        for m, size in zip(self.separator_sizes, self.table_sizes):
            bound = signature_bound(m, H.k, H.ell)
            if size > bound:
                out.append((m, size, bound))
        return out


def contains_on_decomposition(
    T: SemiCompleteDigraph,
    H: Pattern,
    W: PathDecomposition,
    *,
    budget: int = DEFAULT_BUDGET,
    trace: TableTrace | None = None,
    early_accept: bool = True,
) -> bool:
    """Whether ``H`` has an expansion in ``T``, by dynamic programming along ``W``.

    With ``early_accept`` the scan stops at the first table holding a complete
    signature; such a signature survives every later step and ends as the
    accepting one.
    """
    verify_path_decomposition(T, W)
    nice = make_nice(W)
    table = {start_signature(H)}
    if trace is not None:
        trace.record(0, 1)
    if early_accept and any(map(is_complete, table)):
        return True
    for prev, bag in zip(nice.bags, nice.bags[1:]):
        if len(bag) > len(prev):
            (v,) = bag - prev
            table = introduce_vertex(table, v, bag, T, H, budget)
        else:
            (w,) = prev - bag
            table = forget_vertex(table, w, bag, T, H)
        if trace is not None:
            trace.record(len(bag), len(table))
        if len(table) > budget:
            raise BudgetExceeded(f"signature table grew to {len(table)} entries", budget)
        if not table:
            return False
        if early_accept and any(map(is_complete, table)):
            return True
    return accept_signature(H) in table


def is_complete(sig: Signature) -> bool:
    """Every branch vertex placed and every arc realized by one subpath inside ``A``."""
    vmap, paths = sig
    return UNKNOWN not in vmap and all(len(P) == 1 for P in paths)


@dataclass
class ContainmentResult:
    answer: bool
    certificate: str  # "expansion", "dp_trace" or "asserted"
    model: Model | None = None
    trace: TableTrace | None = None
    obstacle: DegreeTangle | MatchingTangle | None = None
    note: str = ""


def contains_topological(
    T: SemiCompleteDigraph,
    H: Pattern,
    constants: Constants = PROVEN,
    *,
    budget: int = DEFAULT_BUDGET,
) -> ContainmentResult:
    """Decide whether ``H`` is a topological minor of ``T``.

    A decomposition from the approximation feeds the dynamic programming; an
    obstacle means ``T`` contains ``H``, and the expansion is materialized
    through a jungle when the configured constants allow it.
    """
    if H.k == 0:
        return ContainmentResult(True, "expansion", Model((), (), "vertex_disjoint"))
    size = H.size
    outcome = approx_pathwidth(T, constants.containment_k * size, constants.containment_ell * size)
    if outcome.decomposition is not None:
        W = _narrower(T, outcome.decomposition)
        trace = TableTrace()
        answer = contains_on_decomposition(T, H, W, budget=budget, trace=trace)
        return ContainmentResult(answer, "dp_trace", trace=trace)
    tangle = outcome.obstacle
    try:
        model = _certificate_from_tangle(T, H, tangle, constants)
    except CertificateUnavailable as exc:
        return ContainmentResult(True, "asserted", obstacle=tangle, note=str(exc))
    return ContainmentResult(True, "expansion", model=model, obstacle=tangle)


def _narrower(T: SemiCompleteDigraph, W: PathDecomposition) -> PathDecomposition:
    # table size is exponential in the bag size, so a cheap narrow decomposition pays off
    for j in range(min(REFINE_WIDTH + 1, W.width)):
        out = exact_pathwidth(T, j)
        if out.yes:
            return out.decomposition
    # beyond that, the window scan at growing k is fast and gives width <= 7k
    for j in range(1, W.width // 7 + 1):
        out = approx_pathwidth(T, j, trivial_shortcut=False)
        if out.yes:
            return out.decomposition if out.decomposition.width < W.width else W
    return W


def _certificate_from_tangle(T, H: Pattern, tangle, constants: Constants) -> Model:
    size = H.size
    if isinstance(tangle, DegreeTangle):
        kk = tangle.ell
        if kk < 3 * size or len(tangle.X) < constants.degree_jungle_size * kk:
            raise CertificateUnavailable(f"degree tangle {len(tangle.X)}/{kk} too small for a (3|H|,3)-jungle")
        try:
            jungle = jungle_from_degree_tangle(T, tangle.X, kk, constants)
        except InternalContradiction as exc:
            if constants.is_default:
                raise
            raise CertificateUnavailable(str(exc)) from exc
    else:
        kk = min(len(tangle.pairs) // constants.matching_jungle_size, tangle.ell // constants.matching_jungle_gap)
        if kk < 4 * size:
            raise CertificateUnavailable(f"matching tangle too small for a (4|H|,4)-jungle (k'={kk})")
        try:
            jungle = jungle_from_matching_tangle(T, tangle, kk, constants)
        except InternalContradiction as exc:
            if constants.is_default:
                raise
            raise CertificateUnavailable(str(exc)) from exc
    if jungle.k < jungle.d * size:
        raise CertificateUnavailable(f"extracted jungle has {jungle.k} < {jungle.d * size} paths per pair")
    model = embed_pattern(jungle, H)
    bad = verify_model(T, H, model)
    if bad is not None:
        raise InternalContradiction(f"embedded model fails verification: {bad}")
    return model
