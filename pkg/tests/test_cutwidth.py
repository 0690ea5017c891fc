from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import semicomplete
from tourwidth.cutwidth import approx_cutwidth, cutwidth, exact_cutwidth
from tourwidth.digraph import ordering_width
from tourwidth.errors import BadParameter
from tourwidth.generators import all_tournaments, random_tournament, transitive
from tourwidth.obstacles import backward_threshold, pathwidth_bound_from_degree_tangle, verify
from tourwidth.oracles import oracle_cutwidth, oracle_pathwidth


class TestApprox:
    @pytest.mark.parametrize("k", [0, 1, 3])
    def test_transitive(self, k):
        out = approx_cutwidth(transitive(8), k)
        assert out.ordering == tuple(range(8)) and out.width == 0

    def test_triangle_within_m0(self, triangle):
        out = approx_cutwidth(triangle, 0)
        assert out.yes and out.width == 1 == backward_threshold(0)

    def test_triangle_with_threshold_zero(self, triangle):
        out = approx_cutwidth(triangle, 0, threshold=0)
        assert out.obstacle is not None and out.obstacle.k == 1
        assert verify(triangle, out.obstacle) is None
        assert oracle_cutwidth(triangle).value > 0

    def test_negative_k(self, triangle):
        with pytest.raises(BadParameter):
            approx_cutwidth(triangle, -1)


class TestExact:
    def test_transitive(self):
        out = exact_cutwidth(transitive(5), 0)
        assert out.yes and ordering_width(transitive(5), out.ordering) == 0

    def test_triangle(self, triangle):
        assert not exact_cutwidth(triangle, 0).yes
        out = exact_cutwidth(triangle, 1)
        assert out.yes and ordering_width(triangle, out.ordering) == 1

    def test_qr7_threshold(self, qr7):
        c = oracle_cutwidth(qr7).value
        assert c == 6
        assert not exact_cutwidth(qr7, c - 1).yes
        assert exact_cutwidth(qr7, c).yes

    def test_degree_precheck_witness(self, qr7):
        out = exact_cutwidth(qr7, 0)
        assert out.witness is not None and verify(qr7, out.witness) is None
        assert out.witness.ell == 0 and len(out.witness.X) >= 2

    def test_empty(self):
        out = exact_cutwidth(transitive(0), 0)
        assert out.yes and out.width == 0


class TestDriver:
    def test_values(self, triangle):
        assert cutwidth(transitive(10)).value == 0
        assert cutwidth(triangle).value == 1
        T = random_tournament(8, 1)
        assert cutwidth(T).value == oracle_cutwidth(T).value


def test_exhaustive_four_vertex_tournaments():
    for T in all_tournaments(4):
        c = oracle_cutwidth(T).value
        for k in range(c + 2):
            assert exact_cutwidth(T, k).yes == (k >= c)


@given(semicomplete(max_n=10), st.integers(0, 4))
def test_exact_agrees_with_oracle(T, k):
    c = oracle_cutwidth(T).value
    out = exact_cutwidth(T, k)
    assert out.yes == (c <= k)
    if out.yes:
        assert ordering_width(T, out.ordering) <= k
        assert out.width == ordering_width(T, out.ordering)
        if k >= 1:
            assert out.stats.states <= out.stats.bound
    elif out.witness is not None:
        assert verify(T, out.witness) is None
        # the witness certifies pw > 2k, which forces ctw > k
        bound = pathwidth_bound_from_degree_tangle(out.witness)
        assert bound is not None and bound >= 2 * k
        assert oracle_pathwidth(T).value > 2 * k


@given(semicomplete(max_n=12))
def test_outdegree_ordering_within_m_of_optimum(T):
    c = oracle_cutwidth(T).value
    out = approx_cutwidth(T, c)
    assert out.yes and out.width <= backward_threshold(c)


@given(semicomplete(max_n=10), st.integers(0, 3), st.integers(0, 6))
def test_approx_obstacles_verify(T, k, threshold):
    out = approx_cutwidth(T, k, threshold=threshold)
    if out.obstacle is not None:
        assert out.obstacle.k == threshold + 1
        assert verify(T, out.obstacle) is None
    else:
        assert out.width == ordering_width(T, out.ordering) <= threshold


@given(semicomplete(max_n=9))
def test_driver_returns_optimal_orderings(T):
    res = cutwidth(T)
    assert res.value == oracle_cutwidth(T).value
    assert ordering_width(T, res.ordering) == res.value
