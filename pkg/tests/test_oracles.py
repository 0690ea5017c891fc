from __future__ import annotations

import pytest
from hypothesis import given

from conftest import semicomplete
from tourwidth.bipartite import from_edges, matching_selector
from tourwidth.decomposition import verify_path_decomposition
from tourwidth.digraph import ordering_width
from tourwidth.errors import BudgetExceeded
from tourwidth.generators import all_tournaments, quadratic_residue, random_tournament, transitive
from tourwidth.obstacles import Pattern, verify_model
from tourwidth.oracles import (
    disjoint_path_count,
    family_flow_value,
    oracle_contains,
    oracle_cutwidth,
    oracle_cutwidth_enumerate,
    oracle_matching_selector,
    oracle_pathwidth,
    oracle_pathwidth_search,
)


class TestExamples:
    def test_transitive(self):
        assert oracle_cutwidth(transitive(5)).value == 0
        assert oracle_pathwidth(transitive(5)).value == 0

    def test_triangle(self, triangle):
        assert oracle_cutwidth(triangle).value == oracle_cutwidth_enumerate(triangle).value == 1
        assert oracle_pathwidth(triangle).value == oracle_pathwidth_search(triangle).value == 1

    def test_qr7_double_oracle(self, qr7):
        assert oracle_cutwidth(qr7).value == oracle_cutwidth_enumerate(qr7).value

    def test_containment(self, triangle):
        digon = Pattern(2, ((0, 1), (1, 0)))
        res = oracle_contains(triangle, digon)
        assert res.value and verify_model(triangle, digon, res.witness) is None
        assert not oracle_contains(transitive(6), Pattern(3, ((0, 1), (1, 2), (2, 0)))).value
        assert oracle_contains(transitive(2), Pattern(2, ((0, 1),))).value

    def test_selector(self):
        assert oracle_matching_selector(["x"], ["y"], [("x", "y")]) == {"x", "y"}
        assert oracle_matching_selector(["x1", "x2"], ["y1"], [("x1", "y1"), ("x2", "y1")]) == {"y1"}
        assert oracle_matching_selector(["x"], ["y"], []) == frozenset()

    def test_budgets(self):
        with pytest.raises(BudgetExceeded):
            oracle_cutwidth(transitive(21))
        with pytest.raises(BudgetExceeded):
            oracle_pathwidth(transitive(19))
        with pytest.raises(BudgetExceeded):
            oracle_cutwidth_enumerate(transitive(9))
        with pytest.raises(BudgetExceeded):
            oracle_contains(transitive(9), Pattern(1, ()))
        with pytest.raises(BudgetExceeded):
            oracle_matching_selector(list(range(7)), list(range(7, 14)), [])

    def test_flow_counts(self, qr7):
        # QR7 is 3-regular and vertex-transitive: 3 disjoint paths between any pair
        assert disjoint_path_count(qr7, 0, 1) == 3
        assert disjoint_path_count(qr7, 0, 1, "edge_disjoint") == 3
        assert disjoint_path_count(transitive(4), 0, 3) == 0
        assert family_flow_value([(0, 1, 2), (0, 3, 2), (0, 1, 3, 2)], 0, 2) == 2


def test_pathwidth_double_oracle_on_all_five_vertex_tournaments():
    for T in all_tournaments(5):
        assert oracle_pathwidth(T).value == oracle_pathwidth_search(T).value


@given(semicomplete(max_n=8))
def test_cutwidth_double_oracle(T):
    res = oracle_cutwidth(T)
    assert res.value == oracle_cutwidth_enumerate(T).value
    assert ordering_width(T, res.witness) == res.value


@given(semicomplete(max_n=6))
def test_pathwidth_double_oracle(T):
    res = oracle_pathwidth(T)
    assert res.value == oracle_pathwidth_search(T).value
    if T.n:
        assert verify_path_decomposition(T, res.witness) == res.value


@given(semicomplete(min_n=9, max_n=14))
def test_witnesses_verify_on_larger_hosts(T):
    c, p = oracle_cutwidth(T), oracle_pathwidth(T)
    assert ordering_width(T, c.witness) == c.value
    assert verify_path_decomposition(T, p.witness) == p.value
    # pathwidth is at most cutwidth in semi-complete digraphs
    assert p.value <= c.value


def test_selector_oracle_agrees_with_the_konig_computation():
    T = random_tournament(6, 3)
    left = list(range(6))
    right = [("r", v) for v in range(6)]
    edges = [(u, ("r", v)) for u, v in T.arcs()]
    assert matching_selector(from_edges(left, right, edges)).chosen == oracle_matching_selector(left, right, edges)


def test_flow_count_on_quadratic_residue_tournament():
    T = quadratic_residue(11)
    assert disjoint_path_count(T, 0, 1) == 5
