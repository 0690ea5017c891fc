from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import semicomplete
from tourwidth.digraph import (
    build,
    check_ordering,
    cut_profile,
    from_arcs,
    iter_bits,
    ordering_width,
    outdegree_ordering,
)
from tourwidth.errors import LoopArc, NotSemiComplete, NotTournament, ShapeError
from tourwidth.generators import transitive


def prefix_cut_by_hand(T, pi, alpha):
    prefix = set(pi[:alpha])
    return sum(1 for u in prefix for v in range(T.n) if v not in prefix and T.arc(u, v))


class TestBuild:
    def test_single_vertex(self):
        T = build(1, [[0]])
        assert T.n == 1 and T.outdeg[0] == 0

    def test_triangle(self, triangle):
        assert list(triangle.outdeg) == [1, 1, 1]
        assert triangle.arc(0, 1) and triangle.arc(1, 2) and triangle.arc(2, 0)

    def test_missing_arc(self):
        with pytest.raises(NotSemiComplete) as exc:
            build(2, [[0, 0], [0, 0]])
        assert (exc.value.u, exc.value.v) == (0, 1)

    def test_loop(self):
        with pytest.raises(LoopArc):
            build(2, [[1, 1], [1, 0]])

    def test_non_square(self):
        with pytest.raises(ShapeError):
            build(2, [[0, 1, 0], [1, 0, 0]])

    def test_digon_accepted_unless_strict(self):
        m = [[0, 1], [1, 0]]
        assert build(2, m).arc_count() == 2
        with pytest.raises(NotTournament):
            build(2, m, tournament=True)

    def test_empty(self):
        T = build(0, np.zeros((0, 0), dtype=bool))
        assert T.n == 0 and outdegree_ordering(T) == ()

    def test_from_arcs(self, triangle):
        T = from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        assert np.array_equal(T.matrix, triangle.matrix)


class TestOrderings:
    def test_transitive_ordering(self):
        T = transitive(3)
        assert outdegree_ordering(T) == (0, 1, 2)
        assert list(T.outdeg) == [0, 1, 2]

    def test_ties_broken_by_index(self, triangle):
        assert outdegree_ordering(triangle) == (0, 1, 2)

    def test_qr7_regular(self, qr7):
        assert set(qr7.outdeg) == {3}
        assert outdegree_ordering(qr7) == tuple(range(7))

    def test_widths(self, triangle):
        assert ordering_width(transitive(3), (0, 1, 2)) == 0
        assert ordering_width(triangle, (0, 1, 2)) == 1
        assert ordering_width(transitive(3), (2, 1, 0)) == 2

    def test_bad_ordering(self, triangle):
        with pytest.raises(ShapeError):
            check_ordering(triangle, (0, 0, 1))


@given(semicomplete(max_n=9), st.randoms(use_true_random=False))
def test_incremental_cut_matches_per_prefix_count(T, rnd):
    pi = list(range(T.n))
    rnd.shuffle(pi)
    assert cut_profile(T, pi) == [prefix_cut_by_hand(T, pi, a) for a in range(T.n + 1)]
    expected = max((prefix_cut_by_hand(T, pi, a) for a in range(T.n + 1)), default=0)
    assert ordering_width(T, pi) == expected


@given(semicomplete(max_n=10))
def test_degree_sum_and_tournament_equality(T):
    total = sum(T.outdeg)
    assert total == T.arc_count() >= T.n * (T.n - 1) // 2
    assert (total == T.n * (T.n - 1) // 2) == T.is_tournament()
    assert list(T.outdeg) == [int(row.sum()) for row in T.matrix]


@given(semicomplete(max_n=11), st.integers(0, 10))
def test_few_low_outdegree_vertices(T, d):
    assert sum(1 for v in range(T.n) if T.outdeg[v] <= d) <= 2 * d + 1


@given(semicomplete(min_n=2, max_n=11), st.integers(0, 6))
def test_degree_gap_gives_length_two_paths(T, ell):
    for x in range(T.n):
        for y in range(T.n):
            if T.outdeg[x] > T.outdeg[y] + ell:
                common = set(T.out_neighbours(x)) & set(T.in_neighbours(y))
                assert len(common) >= ell


@given(st.integers(0, 1 << 40))
def test_iter_bits(mask):
    assert sum(1 << b for b in iter_bits(mask)) == mask
