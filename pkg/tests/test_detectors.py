import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planturan import constructions as C
from planturan.detectors import (
    Family,
    ForbiddenFamily,
    blocks,
    circumference,
    contains,
    contains_ck_union_ck_plus,
    contains_cycle_k,
    contains_cycle_plus,
    contains_theta,
    contains_theta_plus,
    contains_two_cycles,
    find,
    longest_cycle,
)
from planturan.graph import (
    Graph,
    add_pendant,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    path_graph,
)
from reference import naive_circumference, naive_contains

KINDS = [f.value for f in Family]


def min_k(kind):
    return 4 if kind.startswith("theta") else 3


@st.composite
def graphs(draw, lo=0, hi=8):
    n = draw(st.integers(lo, hi))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


# -- spec examples -------------------------------------------------------------

def test_cycle_examples():
    assert contains_cycle_k(cycle_graph(5), 5)
    assert not contains_cycle_k(C.M(8), 4)
    assert not contains_cycle_k(C.H_star_12(), 4)


def test_cycle_plus_examples():
    assert not contains_cycle_plus(C.two_K4(), 4)
    assert contains_cycle_plus(add_pendant(cycle_graph(4), 0), 4)
    for k in range(3, 12):
        assert not contains_cycle_plus(cycle_graph(k), k)


def test_two_cycle_examples():
    assert contains_two_cycles(C.two_K4(), 4)
    for k in range(3, 12):
        assert not contains_two_cycles(cycle_graph(k), k)


def test_union_examples():
    k4 = complete_graph(4)
    host = disjoint_union([k4, add_pendant(k4, 0), empty_graph(1)])
    assert contains_ck_union_ck_plus(host, 4)
    for k in range(3, 9):
        two = disjoint_union([cycle_graph(k), cycle_graph(k)])
        assert not contains_ck_union_ck_plus(two, k)


def test_theta_examples():
    assert contains_theta(complete_graph(4), 4)
    assert not contains_theta(C.K23(), 4)
    assert not contains_theta(C.C6_complement(), 4)


def test_theta_plus_examples():
    assert not contains_theta_plus(C.K2_join_coK3(), 4)
    for k in range(4, 10):
        for j in range(2, k - 1):
            assert not contains_theta_plus(C.theta_graph(k, j), k)


def test_k5_minus_two_edges_all_contain_theta_plus():
    gs = C.all_edge_deletions(complete_graph(5), 2)
    assert len(gs) == 45
    assert all(contains_theta_plus(g, 4) for g in gs)


def test_pendant_on_theta_is_theta_plus():
    h = C.theta_graph(5, 2)
    deg2 = [v for v in range(h.n) if h.degree(v) == 2]
    for v in deg2:
        assert contains_theta_plus(add_pendant(h, v), 5)


def test_circumference_examples():
    for m in range(3, 13):
        assert circumference(C.T(m)) == m
    assert circumference(path_graph(7)) == 0
    assert circumference(empty_graph(4)) == 0
    assert circumference(join(empty_graph(1), path_graph(6))) == 7


def test_longest_cycle_is_a_cycle():
    g = C.T_np(11, 5)
    cyc = longest_cycle(g)
    assert len(cyc) == circumference(g)
    assert len(set(cyc)) == len(cyc)
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_family_validation():
    with pytest.raises(ValueError):
        ForbiddenFamily(Family.CYCLE, 2)
    with pytest.raises(ValueError):
        ForbiddenFamily(Family.THETA, 3)
    assert ForbiddenFamily(Family.TWO_CYCLES, 5).min_order == 10
    assert ForbiddenFamily(Family.CYCLE_UNION_CYCLE_PLUS, 5).min_order == 11


def test_blocks_of_bowtie():
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert sorted(map(sorted, blocks(bowtie))) == [[0, 1, 2], [2, 3, 4]]


# -- oracle equivalence ----------------------------------------------------------

def test_agrees_with_naive_on_small_atlas():
    bad = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > 5:
            break
        g = Graph.from_networkx(h)
        for kind in KINDS:
            for k in range(min_k(kind), 6):
                if contains(g, ForbiddenFamily(Family(kind), k)) != naive_contains(g, kind, k):
                    bad.append((kind, k, sorted(g.edges)))
    assert bad == []


@settings(max_examples=150, deadline=None)
@given(graphs(6, 9), st.sampled_from(KINDS), st.integers(3, 5))
def test_agrees_with_naive_random(g, kind, k):
    k = max(k, min_k(kind))
    assert contains(g, ForbiddenFamily(Family(kind), k)) == naive_contains(g, kind, k)


@settings(max_examples=60, deadline=None)
@given(graphs(1, 8))
def test_circumference_matches_naive(g):
    assert circumference(g) == naive_circumference(g)


@settings(max_examples=150, deadline=None)
@given(graphs(0, 9), st.sampled_from(KINDS), st.integers(3, 6))
def test_witness_is_valid(g, kind, k):
    fam = ForbiddenFamily(Family(kind), max(k, min_k(kind)))
    w = find(g, fam)
    if w is not None:
        assert w.validate(g)
        assert w.to_json()["family"] == kind


# -- structural properties --------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(graphs(2, 9), st.sampled_from(KINDS), st.integers(3, 6), st.data())
def test_monotone_under_edge_addition(g, kind, k, data):
    fam = ForbiddenFamily(Family(kind), max(k, min_k(kind)))
    missing = [(i, j) for j in range(g.n) for i in range(j) if not g.has_edge(i, j)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    if contains(g, fam):
        assert contains(g.add_edges([e]), fam)


@settings(max_examples=150, deadline=None)
@given(graphs(2, 9), st.integers(3, 6))
def test_family_implications(g, k):
    if contains_cycle_plus(g, k) or contains_two_cycles(g, k):
        assert contains_cycle_k(g, k)
    if contains_ck_union_ck_plus(g, k):
        assert contains_two_cycles(g, k)
        assert contains_cycle_plus(g, k)
    if k >= 4:
        if contains_theta(g, k):
            assert contains_cycle_k(g, k)
        if contains_theta_plus(g, k):
            assert contains_theta(g, k)
            assert contains_cycle_plus(g, k)


@settings(max_examples=100, deadline=None)
@given(graphs(0, 9), st.permutations(range(9)))
def test_invariant_under_relabeling(g, perm):
    p = [x for x in perm if x < g.n]
    h = g.relabel(p)
    for k in (3, 4, 5):
        assert contains_cycle_k(g, k) == contains_cycle_k(h, k)
        assert contains_theta_plus(g, max(k, 4)) == contains_theta_plus(h, max(k, 4))


def test_bipartite_has_no_odd_cycles():
    g = complete_bipartite(4, 5)
    for k in (3, 5, 7, 9):
        assert not contains_cycle_k(g, k)
    for k in (4, 6, 8):
        assert contains_cycle_k(g, k)


def test_cycle_count_against_networkx():
    rng = random.Random(7)
    for _ in range(25):
        h = nx.gnm_random_graph(10, rng.randint(10, 24), seed=rng.randint(0, 10**6))
        lengths = {len(c) for c in nx.simple_cycles(h)}
        g = Graph.from_networkx(h)
        for k in range(3, 11):
            assert contains_cycle_k(g, k) == (k in lengths)
