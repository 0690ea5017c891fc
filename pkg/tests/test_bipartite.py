from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from tourwidth.bipartite import (
    DynamicBipartiteGraph,
    buss_reversed,
    buss_selector,
    extract_buss_matching,
    from_edges,
    matching_selector,
)
from tourwidth.errors import DuplicateVertex, PreconditionUnmet, UnknownVertex
from tourwidth.oracles import oracle_buss_selector, oracle_matching_selector


@st.composite
def bipartite(draw, max_vertices: int = 12):
    nl = draw(st.integers(0, max_vertices))
    nr = draw(st.integers(0, max_vertices - nl))
    left = [("x", i) for i in range(nl)]
    right = [("y", j) for j in range(nr)]
    p = draw(st.floats(0.0, 1.0))
    bits = draw(st.lists(st.floats(0.0, 1.0), min_size=nl * nr, max_size=nl * nr))
    edges = [(x, y) for (x, y), b in zip(((x, y) for x in left for y in right), bits) if b < p]
    return left, right, edges


def maximum_matching_size(left, right, edges) -> int:
    G = nx.Graph()
    G.add_nodes_from(left)
    G.add_nodes_from(right)
    G.add_edges_from(edges)
    return len(nx.bipartite.maximum_matching(G, top_nodes=left)) // 2


def reverse_buss_oracle(left, right, edges, ell):
    return oracle_buss_selector(right, left, [(y, x) for x, y in edges], ell)


class TestExamples:
    def test_no_edges(self):
        g = DynamicBipartiteGraph()
        g.add_left("x1")
        g.add_right("y1")
        assert g.matching_size() == 0
        assert matching_selector(g).chosen == frozenset()

    def test_single_edge(self):
        g = from_edges(["x1"], ["y1"], [("x1", "y1")])
        assert g.matching() == frozenset({("x1", "y1")})
        assert matching_selector(g).chosen == {"x1", "y1"}

    def test_path_keeps_size(self):
        g = from_edges(["x1"], ["y1"], [("x1", "y1")])
        g.add_left("x2", ["y1"])
        assert g.matching_size() == 1
        assert matching_selector(g).chosen == {"y1"}

    def test_buss_star(self):
        g = from_edges(["x1"], ["y1", "y2"], [("x1", "y1"), ("x1", "y2")], ell=1)
        assert buss_selector(g, 1).chosen == {"x1"}

    def test_buss_single_edge(self):
        g = from_edges(["x1"], ["y1"], [("x1", "y1")], ell=1)
        assert buss_selector(g, 1).chosen == {"x1"}

    def test_buss_unimportant_with_important_neighbour(self):
        g = from_edges(["x1", "x2", "x3"], ["y1"], [("x1", "y1"), ("x2", "y1"), ("x3", "y1")], ell=1)
        assert "x1" not in buss_selector(g, 1).chosen
        assert buss_reversed(g, 1).chosen == {"y1"}

    def test_errors(self):
        g = DynamicBipartiteGraph()
        g.add_left("x")
        with pytest.raises(DuplicateVertex):
            g.add_right("x")
        with pytest.raises(UnknownVertex):
            g.remove_right("nope")
        with pytest.raises(UnknownVertex):
            g.add_left("z", ["missing"])


class TestBussExtraction:
    def test_ell_zero(self):
        g = from_edges(["x"], ["y"], [("x", "y")], ell=0)
        assert len(extract_buss_matching(g, 0)) == 1

    def test_important_vertices(self):
        edges = [("a", "p"), ("a", "q"), ("b", "q"), ("b", "r"), ("c", "r"), ("c", "s")]
        g = from_edges("abc", "pqrs", edges, ell=1)
        m = extract_buss_matching(g, 1)
        assert len(m) == 2
        assert len({x for x, _ in m}) == len({y for _, y in m}) == 2
        assert set(m) <= set(edges)

    def test_too_small(self):
        # shared neighbour of degree 2 is important, so neither left vertex is chosen
        g = from_edges(["a", "b"], ["u"], [("a", "u"), ("b", "u")], ell=1)
        assert buss_selector(g, 1).chosen == frozenset()
        with pytest.raises(PreconditionUnmet):
            extract_buss_matching(g, 1)
        # two chosen vertices is exactly ell^2 + ell
        g = from_edges(["a", "b"], ["u", "v"], [("a", "u"), ("b", "v")], ell=1)
        assert len(buss_selector(g, 1).chosen) == 2
        with pytest.raises(PreconditionUnmet):
            extract_buss_matching(g, 1)

    @given(bipartite(), st.integers(0, 3))
    def test_extracted_matching_is_a_matching(self, data, ell):
        left, right, edges = data
        g = from_edges(left, right, edges, ell=ell)
        for reverse in (False, True):
            chosen = (buss_reversed if reverse else buss_selector)(g, ell).chosen
            if len(chosen) <= ell * ell + ell:
                continue
            m = extract_buss_matching(g, ell, reverse=reverse)
            assert len(m) == ell + 1
            assert set(m) <= set(edges)
            assert len({x for x, _ in m}) == len({y for _, y in m}) == ell + 1


@given(bipartite())
def test_matching_selector_matches_oracle(data):
    left, right, edges = data
    g = from_edges(left, right, edges)
    assert g.matching_size() == maximum_matching_size(left, right, edges)
    assert not g.has_augmenting_path()
    chosen = matching_selector(g).chosen
    assert chosen == oracle_matching_selector(left, right, edges)
    assert all(x in chosen or y in chosen for x, y in edges)
    mu = g.matching_size()
    assert len(chosen & set(left)) <= mu and len(chosen & set(right)) <= mu


@given(bipartite(), st.integers(0, 4))
def test_buss_matches_oracle(data, ell):
    left, right, edges = data
    g = from_edges(left, right, edges, ell=ell)
    assert buss_selector(g, ell).chosen == oracle_buss_selector(left, right, edges, ell)
    assert buss_reversed(g, ell).chosen == reverse_buss_oracle(left, right, edges, ell)


@given(bipartite(), st.randoms(use_true_random=False))
def test_selector_independent_of_stored_matching(data, rnd):
    left, right, edges = data
    g = from_edges(left, right, edges)
    before = matching_selector(g).chosen
    order = list(left)
    rnd.shuffle(order)
    g.recompute_matching(order)
    assert not g.has_augmenting_path()
    assert matching_selector(g).chosen == before


@given(bipartite(), st.data())
def test_deletion_monotonicity(data, draw):
    left, right, edges = data
    g = from_edges(left, right, edges)
    full = matching_selector(g).chosen
    if right:
        w = draw.draw(st.sampled_from(right))
        h = from_edges(left, [y for y in right if y != w], [e for e in edges if e[1] != w])
        sub = matching_selector(h).chosen
        assert full & set(left) >= sub & set(left)
        assert full & (set(right) - {w}) <= sub & set(right)
    if left:
        x = draw.draw(st.sampled_from(left))
        h = from_edges([v for v in left if v != x], right, [e for e in edges if e[0] != x])
        sub = matching_selector(h).chosen
        assert full & set(right) >= sub & set(right)
        assert full & (set(left) - {x}) <= sub & set(left)


def random_operations(g: DynamicBipartiteGraph, rnd: random.Random, steps: int, grow_only_left: bool = False):
    """Apply random updates; yields after each step so callers can check invariants."""
    fresh = 0
    for _ in range(steps):
        left, right = g.left, g.right
        op = rnd.choice(["add_left", "remove_right"] if grow_only_left else ["add_left", "add_right", "remove_left", "remove_right"])
        if op == "add_left" or (op == "remove_left" and not left):
            g.add_left(("x", fresh), rnd.sample(right, rnd.randint(0, min(3, len(right)))))
        elif op == "add_right" or (op == "remove_right" and not right):
            if grow_only_left:
                continue
            g.add_right(("y", fresh), rnd.sample(left, rnd.randint(0, min(3, len(left)))))
        elif op == "remove_left":
            g.remove_left(rnd.choice(left))
        else:
            g.remove_right(rnd.choice(right))
        fresh += 1
        yield op


@pytest.mark.parametrize("seed", range(10))
def test_incremental_equals_from_scratch(seed):
    rnd = random.Random(seed)
    ell = seed % 3
    g = DynamicBipartiteGraph(ell)
    for _ in random_operations(g, rnd, 200):
        edges = g.edges()
        assert not g.has_augmenting_path()
        fresh = from_edges(g.left, g.right, edges, ell=ell)
        assert matching_selector(g).chosen == matching_selector(fresh).chosen
        assert buss_selector(g, ell).chosen == oracle_buss_selector(g.left, g.right, edges, ell)
        assert buss_reversed(g, ell).chosen == reverse_buss_oracle(g.left, g.right, edges, ell)
        for v in g.left + g.right:
            nb = g.neighbours(v)
            assert g.unimportant_count(v) == sum(1 for u in nb if g.degree(u) <= ell)


@pytest.mark.parametrize("seed", range(10))
def test_chosen_status_is_stable_under_left_additions_and_right_deletions(seed):
    rnd = random.Random(1000 + seed)
    ell = seed % 3
    g = DynamicBipartiteGraph(ell)
    for _ in range(12):
        g.add_right(("r", _))
    for i in range(8):
        g.add_left(("l", i), rnd.sample(g.right, rnd.randint(0, 4)))
    m_right = matching_selector(g).chosen & set(g.right)
    m_left_out = set(g.left) - matching_selector(g).chosen
    b_left_out = set(g.left) - buss_selector(g, ell).chosen
    b_right = set(buss_reversed(g, ell).chosen)
    for _ in random_operations(g, rnd, 200, grow_only_left=True):
        present_r, present_l = set(g.right), set(g.left)
        m = matching_selector(g).chosen
        b = buss_selector(g, ell).chosen
        br = buss_reversed(g, ell).chosen
        assert (m_right & present_r) <= m
        assert not (m_left_out & present_l & m)
        assert not (b_left_out & present_l & b)
        assert (b_right & present_r) <= br
        m_right |= m & present_r
        m_left_out |= present_l - m
        b_left_out |= present_l - b
        b_right |= br & present_r
