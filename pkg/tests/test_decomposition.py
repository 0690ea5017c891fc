from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import semicomplete
from tourwidth.decomposition import (
    PathDecomposition,
    Separation,
    SeparationChain,
    chain_to_decomposition,
    decomposition_to_chain,
    is_nice,
    is_separation,
    make_nice,
    trivial_decomposition,
    verify_path_decomposition,
)
from tourwidth.errors import ArcViolation, ContiguityViolation, CoverageViolation, InputError
from tourwidth.generators import transitive
from tourwidth.oracles import oracle_pathwidth

fs = frozenset


def sep(A, B):
    return Separation(fs(A), fs(B))


class TestVerify:
    def test_triangle_two_bags(self, triangle):
        assert verify_path_decomposition(triangle, PathDecomposition.of([{0, 1}, {1, 2}])) == 1

    def test_transitive_singletons(self, tt3):
        assert verify_path_decomposition(tt3, PathDecomposition.of([{0}, {1}, {2}])) == 0

    def test_forward_arc_uncovered(self, triangle):
        with pytest.raises(ArcViolation) as exc:
            verify_path_decomposition(triangle, PathDecomposition.of([{0}, {1}, {2}]))
        # (2, 0) is fine: its tail sits in a later bag than its head
        assert (exc.value.u, exc.value.v) == (0, 1)
        assert "(iii)" in str(exc.value)

    def test_coverage(self, tt3):
        with pytest.raises(CoverageViolation):
            verify_path_decomposition(tt3, PathDecomposition.of([{0}, {1}]))

    def test_contiguity(self, tt3):
        with pytest.raises(ContiguityViolation):
            verify_path_decomposition(tt3, PathDecomposition.of([{0, 1}, {2}, {0}]))


class TestConversions:
    def test_single_vertex_chain(self):
        T = transitive(1)
        W = chain_to_decomposition(SeparationChain((sep((), {0}), sep({0}, ()))))
        assert W.bags == (fs({0}),)
        assert verify_path_decomposition(T, W) == 0

    def test_triangle_chain(self, triangle):
        C = SeparationChain((sep((), {0, 1, 2}), sep({0, 1}, {1, 2}), sep({0, 1, 2}, ())))
        C.validate(triangle)
        W = chain_to_decomposition(C)
        assert W.bags == (fs({0, 1}), fs({1, 2}))
        assert verify_path_decomposition(triangle, W) == 1
        assert decomposition_to_chain(triangle, W).seps == C.seps

    def test_transitive_chain(self, tt3):
        C = SeparationChain(
            (sep((), {0, 1, 2}), sep({0}, {1, 2}), sep({0, 1}, {2}), sep({0, 1, 2}, ()))
        )
        C.validate(tt3)
        W = chain_to_decomposition(C)
        assert W.bags == (fs({0}), fs({1}), fs({2}))
        assert decomposition_to_chain(tt3, W).seps == C.seps

    def test_consecutive_duplicates_merged(self, triangle):
        W = PathDecomposition.of([{0, 1}, {0, 1}, {1, 2}])
        assert len(decomposition_to_chain(triangle, W)) == 3

    def test_chain_validation(self, triangle):
        with pytest.raises(InputError):
            SeparationChain((sep((), {0, 1, 2}), sep({0}, {1, 2}), sep({0, 1, 2}, ()))).validate(triangle)
        assert not is_separation(triangle, 0b001, 0b110)


class TestNice:
    def test_two_bags(self):
        W = make_nice(PathDecomposition.of([{0, 1}, {1, 2}]))
        assert W.bags == tuple(map(fs, [(), {0}, {0, 1}, {1}, {1, 2}, {2}, ()]))

    def test_single_bag(self):
        assert make_nice(PathDecomposition.of([{0}])).bags == (fs(), fs({0}), fs())

    def test_idempotent(self):
        W = make_nice(PathDecomposition.of([{0, 1}, {1, 2}]))
        assert make_nice(W) == W


@given(semicomplete(min_n=1, max_n=8))
def test_round_trip_preserves_width(T):
    W = oracle_pathwidth(T).witness
    C = decomposition_to_chain(T, W)
    C.validate(T)
    assert C.width <= W.width + 1
    W2 = chain_to_decomposition(C)
    assert verify_path_decomposition(T, W2) <= W.width
    assert chain_to_decomposition(decomposition_to_chain(T, W2)).width == W2.width


@given(semicomplete(min_n=1, max_n=8))
def test_make_nice_keeps_width_and_validity(T):
    W = oracle_pathwidth(T).witness
    N = make_nice(W)
    assert is_nice(N)
    assert verify_path_decomposition(T, N) == W.width


@given(semicomplete(max_n=7))
def test_trivial_decomposition(T):
    assert verify_path_decomposition(T, trivial_decomposition(T)) == T.n - 1


@given(semicomplete(min_n=2, max_n=7), st.data())
def test_shuffled_bags_are_rejected_or_still_valid(T, data):
    W = oracle_pathwidth(T).witness
    perm = data.draw(st.permutations(W.bags))
    try:
        verify_path_decomposition(T, PathDecomposition(tuple(perm)))
    except InputError:
        return
    # a permutation that still passes must satisfy the arc condition directly
    pos = {}
    for i, b in enumerate(perm):
        for v in b:
            pos.setdefault(v, []).append(i)
    for u, v in T.arcs():
        assert max(pos[u]) >= min(pos[v])
