from itertools import combinations

import networkx as nx
import pytest

from planturan import constructions as C
from planturan.canon import canonical_code, canonical_graph, graph_from_code
from planturan.detectors import Family, ForbiddenFamily, contains
from planturan.extremal import (
    SearchCapError,
    enumerate_free_graphs,
    exact_extremal,
    verify_exact_value,
)
from planturan.graph import Graph, complete_graph, is_planar
from reference import naive_contains


def fam(kind, k):
    return ForbiddenFamily(Family(kind), k)


def brute_force_max(n, kind, k):
    """Max edges over every labeled graph on n vertices (no symmetry tricks)."""
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        es = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(es) <= best:
            continue
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(es)
        if not nx.check_planarity(h)[0]:
            continue
        if not naive_contains(Graph.from_edges(n, es), kind, k):
            best = len(es)
    return best


@pytest.mark.parametrize("kind", [f.value for f in Family])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_matches_brute_force(n, kind):
    for k in range(4 if kind.startswith("theta") else 3, 6):
        assert exact_extremal(n, fam(kind, k)).value == brute_force_max(n, kind, k)


@pytest.mark.parametrize("kind,k", [("cycle", 4), ("theta", 4), ("cycle-plus", 4)])
def test_matches_brute_force_six(kind, k):
    assert exact_extremal(6, fam(kind, k)).value == brute_force_max(6, kind, k)


def test_known_small_values():
    assert exact_extremal(5, fam("theta", 4)).value == 6
    assert exact_extremal(5, fam("theta-plus", 4)).value == 7
    assert exact_extremal(5, fam("cycle", 4)).value == 6


def test_eight_vertex_values():
    assert exact_extremal(8, fam("cycle", 4)).value == 11
    assert exact_extremal(8, fam("cycle-plus", 4)).value == 12


def test_seven_vertex_theta4():
    r = exact_extremal(7, fam("theta", 4))
    assert r.value == 11
    assert r.witness == C.J_substitute()


def test_witness_is_admissible():
    for kind, k, n in [("cycle", 4, 7), ("theta-plus", 4, 6), ("two-cycles", 3, 7)]:
        r = exact_extremal(n, fam(kind, k))
        assert r.witness.n == n
        assert r.witness.edge_count() == r.value
        assert is_planar(r.witness) and not contains(r.witness, r.family)


def test_seeds_do_not_change_the_answer():
    for kind, k, n in [("cycle", 4, 7), ("theta", 4, 6), ("cycle-plus", 4, 7)]:
        assert exact_extremal(n, fam(kind, k), use_seeds=False).value == exact_extremal(n, fam(kind, k)).value


def test_deterministic():
    a = exact_extremal(7, fam("cycle", 4)).to_json()
    b = exact_extremal(7, fam("cycle", 4)).to_json()
    a.pop("elapsed_seconds")
    b.pop("elapsed_seconds")
    assert a == b


def test_verify_exact_value():
    assert verify_exact_value(8, fam("cycle", 4), 11)
    assert verify_exact_value(5, fam("cycle", 4), 6)
    assert not verify_exact_value(8, fam("cycle", 4), 12)


def test_enumeration_examples():
    found = list(enumerate_free_graphs(5, fam("cycle", 4), 6))
    assert any(nx.is_isomorphic(g.to_networkx(), C.M(5).to_networkx()) for g in found)
    assert all(g.edge_count() >= 6 for g in found)
    assert list(enumerate_free_graphs(4, fam("theta", 4), 6)) == []
    assert list(enumerate_free_graphs(3, fam("cycle", 3), 3)) == []


def test_enumeration_one_per_class():
    found = list(enumerate_free_graphs(6, fam("cycle", 5), 0))
    codes = [canonical_code(g) for g in found]
    assert len(codes) == len(set(codes))
    # every planar C5-free graph on 6 vertices, counted through the atlas
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 6]
    want = sum(1 for h in atlas
               if nx.check_planarity(h)[0] and not naive_contains(Graph.from_networkx(h), "cycle", 5))
    assert len(found) == want


def test_cap():
    with pytest.raises(SearchCapError):
        exact_extremal(10, fam("cycle", 4))
    with pytest.raises(SearchCapError):
        exact_extremal(0, fam("cycle", 4))


def test_cap_env(monkeypatch):
    monkeypatch.setenv("PLANTURAN_SEARCH_CAP", "4")
    with pytest.raises(SearchCapError):
        exact_extremal(5, fam("cycle", 4))


def test_canonical_forms_identify_isomorphic_graphs():
    for h in nx.graph_atlas_g()[1:300]:
        g = Graph.from_networkx(h)
        perm = list(reversed(range(g.n)))
        assert canonical_code(g) == canonical_code(g.relabel(perm))
        assert graph_from_code(g.n, canonical_code(g)) == canonical_graph(g)
    a = canonical_code(C.K23())
    b = canonical_code(complete_graph(5))
    assert a != b


def test_canonical_codes_separate_atlas_classes():
    codes = {}
    for h in nx.graph_atlas_g()[1:]:
        g = Graph.from_networkx(h)
        key = (g.n, canonical_code(g))
        assert key not in codes
        codes[key] = g
