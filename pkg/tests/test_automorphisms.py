import random

import networkx as nx
import pytest
from hypothesis import given, settings
from networkx.algorithms.isomorphism import GraphMatcher

from neumaier import catalog
from neumaier.automorphisms import (
    apply_word,
    are_isomorphic,
    automorphism_group,
    enumerate_group,
    find_regular_subgroup,
    is_vertex_transitive,
)
from neumaier.graph import build_graph
from neumaier.groups import is_automorphism

from oracles import from_networkx, to_networkx
from test_graph import graphs


def nx_aut_count(g):
    h = to_networkx(g)
    return sum(1 for _ in GraphMatcher(h, h).isomorphisms_iter())


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_aut_order_matches_networkx(g):
    aut = automorphism_group(g)
    assert aut.order == nx_aut_count(g)
    for perm in aut.generators:
        assert is_automorphism(g, perm)


@pytest.mark.parametrize(
    "graph, order",
    [
        (from_networkx(nx.cycle_graph(4)), 8),
        (from_networkx(nx.complete_bipartite_graph(3, 3)), 72),
        ("petersen", 120),
        ("L2(3,3)", 72),
        ("shrikhande", 192),
        ("L2(4,4)", 1152),
        ("clebsch", 1920),
        ("~schlafli", 51840),
        ("strictly16", 256),
        ("strictly28-1", 56),
        ("strictly28-2", 168),
    ],
)
def test_known_orders(graph, order):
    g = catalog.get(graph) if isinstance(graph, str) else graph
    aut = automorphism_group(g)
    assert aut.order == order
    if g.n <= 10:
        assert nx_aut_count(g) == order


def test_order_is_consistent_with_generated_group():
    g = catalog.get("petersen")
    aut = automorphism_group(g)
    assert len(enumerate_group(aut.generators, g.n, 10_000)) == aut.order


@pytest.mark.parametrize("name", ["T(6)", "strictly16", "strictly24-3", "~L2(4,4)"])
def test_catalog_transitivity_certificates(name):
    g = catalog.get(name)
    rep = is_vertex_transitive(g)
    assert rep.transitive
    assert sorted(rep.words) == list(range(g.n))
    for v, word in rep.words.items():
        assert apply_word(rep.aut, word, 0) == v


def test_path_is_not_transitive():
    p3 = build_graph(3, [(0, 1), (1, 2)])
    rep = is_vertex_transitive(p3)
    assert not rep.transitive and rep.orbits == [[0, 2], [1]]


def test_isomorphism_examples():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    k22 = from_networkx(nx.complete_bipartite_graph(2, 2))
    res = are_isomorphic(c4, k22)
    assert res.isomorphic
    assert c4.relabel(res.mapping) == k22
    assert not are_isomorphic(catalog.get("strictly28-1"), catalog.get("strictly28-2"))
    res = are_isomorphic(catalog.get("L2(4,4)"), catalog.get("shrikhande"))
    assert not res.isomorphic


def test_isomorphism_without_spectrum_uses_search():
    res = are_isomorphic(catalog.get("strictly28-1"), catalog.get("strictly28-2"), use_spectrum=False)
    assert not res.isomorphic


@pytest.mark.parametrize("name", ["~shrikhande", "strictly24-1", "T(7)"])
def test_relabelled_copies_are_isomorphic(name):
    g = catalog.get(name)
    perm = list(range(g.n))
    random.Random(7).shuffle(perm)
    h = g.relabel(perm)
    res = are_isomorphic(g, h)
    assert res.isomorphic and g.relabel(res.mapping) == h


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_matches_vf2(g, h):
    assert are_isomorphic(g, h).isomorphic == nx.is_isomorphic(to_networkx(g), to_networkx(h))


@pytest.mark.parametrize("name, status", [("T(5)", "no"), ("T(6)", "no"), ("~T(6)", "no"), ("T(7)", "yes"), ("petersen", "no")])
def test_regular_subgroup_search(name, status):
    g = catalog.get(name)
    cert = find_regular_subgroup(g)
    assert cert.status == status
    if status == "yes":
        assert len(cert.elements) == g.n
        assert sorted(p[0] for p in cert.elements) == list(range(g.n))
