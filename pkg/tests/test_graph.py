import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from neumaier import catalog
from neumaier.graph import (
    CompleteGraphError,
    DisconnectedGraphError,
    Graph,
    Graph6Error,
    GraphError,
    build_graph,
    complement,
    complete_bipartite_sides,
    diameter,
    edge_regularity,
    from_edge_list,
    from_graph6,
    is_strongly_regular,
    regularity_witness,
    srg_witness,
    to_edge_list,
    to_graph6,
)

from oracles import from_networkx, to_networkx


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, chosen) if keep])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def test_construction_examples():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.degrees == (2, 2, 2, 2) and c4.num_edges == 4
    k2 = build_graph(2, [(0, 1)])
    assert k2.is_complete
    l33 = catalog.get("L2(3,3)")
    assert l33.num_edges == 18 and set(l33.degrees) == {4}


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 2)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        build_graph(4, edges)


def test_asymmetric_rows_rejected():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_complement_examples():
    c4 = cycle(4)
    two_k2 = complement(c4)
    assert not two_k2.is_connected and two_k2.num_edges == 2
    from neumaier.cliques import classify

    with pytest.raises(DisconnectedGraphError):
        classify(two_k2)
    with pytest.raises(CompleteGraphError):
        classify(build_graph(3, [(0, 1), (1, 2), (0, 2)]))
    sh = complement(catalog.get("shrikhande"))
    assert sh.n == 16 and set(sh.degrees) == {9}


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == g.n * (g.n - 1) // 2


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degrees) == 2 * g.num_edges == 2 * len(list(g.edges()))


def test_edge_regularity_examples():
    assert edge_regularity(catalog.get("L2(3,3)")) == (9, 4, 1)
    assert edge_regularity(cycle(4)) == (4, 2, 0)
    assert edge_regularity(catalog.get("petersen")) == (10, 3, 0)
    assert edge_regularity(build_graph(3, [(0, 1), (1, 2)])) is None


def test_regularity_witness_is_concrete():
    g = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 2)])  # bowtie
    w = regularity_witness(g)
    assert w is not None
    if w.kind == "degree":
        assert g.degree(w.first[0]) == w.first_count != w.second_count == g.degree(w.second[0])
    else:
        assert g.common(*w.first) == w.first_count != w.second_count == g.common(*w.second)


def test_srg_examples():
    assert is_strongly_regular(catalog.get("shrikhande")) == (16, 6, 2, 2)
    assert is_strongly_regular(catalog.get("~schlafli")) == (27, 10, 1, 5)
    c6 = cycle(6)
    assert is_strongly_regular(c6) is None
    w = srg_witness(c6)
    # distance-2 pairs share one neighbour, antipodal pairs none
    assert w.kind == "mu" and {w.first_count, w.second_count} == {0, 1}
    assert c6.common(*w.first) == w.first_count and c6.common(*w.second) == w.second_count


@pytest.mark.parametrize("name", ["petersen", "paley13", "clebsch", "~T(6)", "strictly16"])
def test_srg_against_networkx(name):
    g = catalog.get(name)
    assert (is_strongly_regular(g) is not None) == nx.is_strongly_regular(to_networkx(g))


def test_diameter():
    assert diameter(nx_complete_bipartite(3, 3)) == 2
    assert diameter(cycle(6)) == 3
    for name in catalog.NEUMAIER_NAMES:
        assert diameter(catalog.get(name)) == 2


def nx_complete_bipartite(a, b):
    return from_networkx(nx.complete_bipartite_graph(a, b))


def test_complete_bipartite_sides():
    left, right = complete_bipartite_sides(nx_complete_bipartite(3, 3))
    assert sorted(left + right) == list(range(6)) and len(left) == 3
    assert complete_bipartite_sides(cycle(6)) is None


def test_graph6_examples():
    c4 = from_graph6("Cr")
    assert c4.degrees == (2, 2, 2, 2) and c4.is_connected
    assert to_graph6(c4) == "Cr"
    assert to_graph6(build_graph(2, [(0, 1)])) == "A_"
    sh = catalog.get("shrikhande")
    assert from_graph6(to_graph6(sh)) == sh


@settings(max_examples=60)
@given(graphs(max_n=70))
def test_graph6_matches_networkx(g):
    text = to_graph6(g)
    assert text == nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
    assert from_graph6(text) == g
    assert from_graph6(">>graph6<<" + text) == g


@pytest.mark.parametrize("bad", ["", "C", "Cr?", "C\x7f", "~"])
def test_graph6_errors(bad):
    with pytest.raises(Graph6Error):
        from_graph6(bad)


@given(graphs())
def test_edge_list_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


def test_edge_list_format():
    assert to_edge_list(cycle(3)).splitlines() == ["3", "0 1", "0 2", "1 2"]
    with pytest.raises(GraphError):
        from_edge_list("3\n0 3\n")
