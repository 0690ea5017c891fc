"""Separations, separation chains and path decompositions.

A chain ``(A_0,B_0),...,(A_r,B_r)`` and a decomposition ``W_1..W_r`` convert
into each other via ``W_i = A_i & B_{i-1}`` and
``(A_i, B_i) = (W_1 | .. | W_i, W_{i+1} | .. | W_r)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .digraph import SemiCompleteDigraph, iter_bits
from .errors import ArcViolation, ContiguityViolation, CoverageViolation, DecompositionError, InputError


@dataclass(frozen=True)
class Separation:
    A: frozenset[int]
    B: frozenset[int]
    separator: frozenset[int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        object.__setattr__(self, "separator", self.A & self.B)

    @property
    def order(self) -> int:
        return len(self.separator)

    @classmethod
    def from_masks(cls, a: int, b: int) -> "Separation":
        return cls(frozenset(iter_bits(a)), frozenset(iter_bits(b)))


def is_separation(T: SemiCompleteDigraph, a: int, b: int) -> bool:
    """Bitmask test: ``A | B = V`` and no arc leaves ``A - B`` into ``B - A``."""
    if a | b != T.all_mask:
        return False
    right_only = b & ~a
    for u in iter_bits(a & ~b):
        if T.out_mask[u] & right_only:
            return False
    return True


def check_separation(T: SemiCompleteDigraph, sep: Separation) -> None:
    a, b = T.mask(sep.A), T.mask(sep.B)
    if a | b != T.all_mask:
        raise InputError(f"A | B misses vertices {sorted(set(range(T.n)) - sep.A - sep.B)}")
    right_only = b & ~a
    for u in iter_bits(a & ~b):
        hit = T.out_mask[u] & right_only
        if hit:
            raise InputError(f"arc ({u},{next(iter_bits(hit))}) goes from A-B to B-A")


@dataclass(frozen=True)
class SeparationChain:
    seps: tuple[Separation, ...]

    def __post_init__(self):
        object.__setattr__(self, "seps", tuple(self.seps))

    @property
    def width(self) -> int:
        return max((s.order for s in self.seps), default=0)

    def __len__(self) -> int:
        return len(self.seps)

    def __iter__(self):
        return iter(self.seps)

    def validate(self, T: SemiCompleteDigraph) -> None:
        full = frozenset(range(T.n))
        if not self.seps:
            raise InputError("empty separation chain")
        if self.seps[0] != Separation(frozenset(), full) or self.seps[-1] != Separation(full, frozenset()):
            raise InputError("chain must start at (empty, V) and end at (V, empty)")
        for s in self.seps:
            check_separation(T, s)
        for s, t in zip(self.seps, self.seps[1:]):
            if not (s.A <= t.A and s.B >= t.B):
                raise InputError(f"chain is not monotone between {s} and {t}")


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def __len__(self) -> int:
        return len(self.bags)

    def __iter__(self):
        return iter(self.bags)

    @classmethod
    def of(cls, bags: Iterable[Iterable[int]]) -> "PathDecomposition":
        return cls(tuple(frozenset(b) for b in bags))


def verify_path_decomposition(T: SemiCompleteDigraph, W: PathDecomposition | Sequence[Iterable[int]]) -> int:
    """Check properties (i)-(iii) and return the width ``max |W_i| - 1``."""
    bags = W.bags if isinstance(W, PathDecomposition) else tuple(frozenset(b) for b in W)
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, bag in enumerate(bags):
        for v in bag:
            if not 0 <= v < T.n:
                raise DecompositionError(f"bag {i} references unknown vertex {v}")
            first.setdefault(v, i)
            last[v] = i
    for v in range(T.n):
        if v not in first:
            raise CoverageViolation(v)
    for v in range(T.n):
        for j in range(first[v] + 1, last[v]):
            if v not in bags[j]:
                raise ContiguityViolation(v, first[v], j, last[v])
    for u, v in T.arcs():
        # with contiguous intervals the condition reduces to last(u) >= first(v)
        if last[u] < first[v]:
            raise ArcViolation(u, v)
    return max((len(b) for b in bags), default=0) - 1


def chain_to_decomposition(C: SeparationChain) -> PathDecomposition:
    seps = C.seps
    return PathDecomposition(tuple(seps[i].A & seps[i - 1].B for i in range(1, len(seps))))


def dedupe_bags(bags: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    out: list[frozenset[int]] = []
    for b in bags:
        if not out or out[-1] != b:
            out.append(b)
    return out


def decomposition_to_chain(T: SemiCompleteDigraph, W: PathDecomposition) -> SeparationChain:
    verify_path_decomposition(T, W)
    bags = dedupe_bags(W.bags)
    r = len(bags)
    prefix = [frozenset()]
    for b in bags:
        prefix.append(prefix[-1] | b)
    suffix = [frozenset()] * (r + 1)
    for i in range(r - 1, -1, -1):
        suffix[i] = suffix[i + 1] | bags[i]
    if r == 0:
        return SeparationChain((Separation(frozenset(), frozenset()),))
    return SeparationChain(tuple(Separation(prefix[i], suffix[i]) for i in range(r + 1)))


def make_nice(W: PathDecomposition) -> PathDecomposition:
    """Empty end bags; neighbouring bags differ by one introduced or forgotten vertex.

    Between two bags the vertices missing from the next bag are forgotten
    first, then the new ones are introduced, both in increasing index order.
    """
    out: list[frozenset[int]] = [frozenset()]
    for bag in list(W.bags) + [frozenset()]:
        cur = out[-1]
        for v in sorted(cur - bag):
            cur = cur - {v}
            out.append(cur)
        for v in sorted(bag - cur):
            cur = cur | {v}
            out.append(cur)
    return PathDecomposition(tuple(out))


def is_nice(W: PathDecomposition) -> bool:
    bags = W.bags
    if not bags or bags[0] or bags[-1]:
        return False
    return all(len(a ^ b) == 1 for a, b in zip(bags, bags[1:]))


def trivial_decomposition(T: SemiCompleteDigraph) -> PathDecomposition:
    return PathDecomposition((frozenset(range(T.n)),)) if T.n else PathDecomposition(())
