"""End-to-end acceptance criteria, one test group per criterion.

The conftest hook prints a PASS/FAIL line per criterion at the end of
the run.
"""

import time
from itertools import combinations

import pytest

from neumaier import catalog
from neumaier.automorphisms import are_isomorphic, is_vertex_transitive
from neumaier.circulant import quadratic_residues, scan_srg_neumaier_circulants
from neumaier.cliques import Verdict, classify, equitable_partition, forced_quotient, srg_iff_constancy
from neumaier.graph import complement, complete_bipartite_sides, diameter
from neumaier.parameters import (
    NeumaierParams,
    check_counting,
    check_dc1,
    check_dc2,
    check_srg_identities,
    enumerate_feasible,
)
from neumaier.spectrum import char_poly, integer_spectrum, srg_integer_ratio

from oracles import brute_classify, small_connected_graphs

STRICT_24 = [f"strictly24-{i}" for i in range(1, 5)]
STRICT_28 = ["strictly28-1", "strictly28-2"]


def acceptance(number, name):
    return pytest.mark.acceptance(number, name)


# 1 -----------------------------------------------------------------------------------


@acceptance(1, "table reproduction")
def test_table1_reproduction():
    start = time.perf_counter()
    rows = catalog.table1()
    elapsed = time.perf_counter() - start
    assert len(rows) == 12
    for row in rows:
        printed = row.entry.table1
        assert row.match, (printed["name"], row.mismatches)
        neumaier = "Yes" if row.classification.is_neumaier else "No"
        assert neumaier == printed["neumaier"]
        assert ("Yes" if row.transitive else "No") == printed["vertex_transitive"]
    no_rows = {r.entry.table1["name"] for r in rows if not r.classification.is_neumaier}
    assert no_rows == {"Shrikhande", "Clebsch"}
    assert elapsed < 30


# 2 -----------------------------------------------------------------------------------


@acceptance(2, "strictly Neumaier Cayley graphs")
def test_strictly_neumaier_constructions(graphs):
    start = time.perf_counter()
    expected = {"strictly16": (16, 9, 4, 2, 4)}
    expected.update({name: (24, 8, 2, 1, 4) for name in STRICT_24})
    expected.update({name: (28, 9, 2, 1, 4) for name in STRICT_28})
    for name, params in expected.items():
        cls = classify(graphs(name))
        assert cls.verdict is Verdict.STRICTLY_NEUMAIER, name
        assert tuple(cls.params) == params, name
        assert is_vertex_transitive(graphs(name)).transitive
    assert not are_isomorphic(graphs(STRICT_28[0]), graphs(STRICT_28[1])).isomorphic
    for x, y in combinations(STRICT_24, 2):
        assert not are_isomorphic(graphs(x), graphs(y)).isomorphic, (x, y)
    assert time.perf_counter() - start < 120


# 3 -----------------------------------------------------------------------------------


@acceptance(3, "identity suite")
@pytest.mark.parametrize("name", catalog.NEUMAIER_NAMES)
def test_identities(graphs, name):
    cls = classify(graphs(name))
    assert cls.is_neumaier
    p = cls.params
    for rule in (check_counting(p), check_dc1(p), check_dc2(p)):
        assert rule.ok and rule.lhs == rule.rhs, rule
    if cls.srg_params is not None:
        sp = cls.srg_params
        for rule in check_srg_identities(sp):
            assert rule.ok and rule.lhs == rule.rhs, rule
        assert sp.mu % sp.a == 0
        m = sp.mu // sp.a
        assert sp.k % m == 0
        assert sp.c == 1 + sp.k // m
        assert sp.a == sp.mu // m
        assert srg_integer_ratio(sp).ok


# 4 -----------------------------------------------------------------------------------


@acceptance(4, "spectral suite")
@pytest.mark.parametrize("name", catalog.NEUMAIER_NAMES)
def test_spectrum(graphs, name):
    g = graphs(name)
    cls = classify(g)
    p = char_poly(g)
    rep = integer_spectrum(p)
    assert rep.expand() == p
    assert cls.k in rep and rep.integer_roots[cls.k] >= 1
    assert (cls.c - cls.a - 1) in rep
    if cls.srg_params is not None:
        assert cls.mu % cls.a == 0
        assert -(cls.mu // cls.a) in rep
    # trace A = 0 and trace A^2 = 2|E| read off the exact coefficients
    n = g.n
    assert p.coeffs[n] == 1
    assert p.coeffs[n - 1] == 0
    assert p.coeffs[n - 2] == -g.num_edges
    if rep.is_integral:
        roots = [r for r, m in rep.integer_roots.items() for _ in range(m)]
        assert sum(roots) == 0
        assert sum(r * r for r in roots) == 2 * g.num_edges


# 5 -----------------------------------------------------------------------------------


@acceptance(5, "four-part partition suite")
@pytest.mark.parametrize("name", catalog.NEUMAIER_NAMES)
def test_partition_laws(graphs, name):
    g = graphs(name)
    cls = classify(g)
    for rep in cls.cliques:
        for e in rep.clique:
            part = equitable_partition(g, rep.clique, e, cls.params)
            x = part.r_to_s_counts[0] if len(part.r_to_s_counts) == 1 else None
            forced = forced_quotient(cls.params, x)
            for i in range(3):
                assert [cs[0] for cs in part.counts[i]] == forced[i]
                assert all(len(cs) == 1 for cs in part.counts[i])
            assert part.counts[3][0] == (0,) and part.counts[3][1] == (cls.a,)
            assert part.equitable == (cls.srg is not None)
    assert is_vertex_transitive(g).transitive
    report = srg_iff_constancy(g, cls, transitive=True)
    assert report.constant == (cls.srg is not None)
    assert diameter(g) == 2


# 6 -----------------------------------------------------------------------------------


@acceptance(6, "feasibility engine")
def test_feasibility_enumeration():
    start = time.perf_counter()
    feasible = enumerate_feasible(10)
    elapsed = time.perf_counter() - start
    assert elapsed < 10
    found = set(feasible)
    for name in catalog.TABLE1:
        entry = catalog.ENTRIES[name]
        if entry.table1["neumaier"] == "Yes":
            n, k, lam, mu, a, c = entry.expected.params
            assert NeumaierParams(n, k, lam, a, c) in found, name
    for strict in [(16, 9, 4, 2, 4), (24, 8, 2, 1, 4), (28, 9, 2, 1, 4)]:
        assert NeumaierParams(*strict) in found
    for bad in [(10, 5, 2, 1, 3), (16, 9, 4, 3, 4), (13, 6, 2, 1, 3)]:
        assert NeumaierParams(*bad) not in found
    assert feasible == sorted(feasible)
    assert enumerate_feasible(10) == feasible
    assert enumerate_feasible(10, jobs=2) == feasible


# 7 -----------------------------------------------------------------------------------


def _is_complete_multipartite(g):
    # complement is a disjoint union of cliques of equal size
    h = complement(g)
    seen = set()
    sizes = set()
    for v in range(g.n):
        if v in seen:
            continue
        part = {v} | set(h.neighbors(v))
        if not h.is_clique(sorted(part)):
            return False
        if any(set(h.neighbors(u)) | {u} != part for u in part):
            return False
        seen |= part
        sizes.add(len(part))
    return len(sizes) == 1


@pytest.fixture(scope="module")
def circulant_scan():
    start = time.perf_counter()
    report = scan_srg_neumaier_circulants(30)
    return report, time.perf_counter() - start


@acceptance(7, "circulant nonexistence")
def test_circulant_scan(circulant_scan):
    report, elapsed = circulant_scan
    assert elapsed < 300
    assert report.nontrivial_neumaier == []
    multipartite = [h for h in report.srg if _is_complete_multipartite(h.spec.graph())]
    assert [h.spec for h in report.trivial_neumaier] == [h.spec for h in multipartite]
    primes = {h.spec.n for h in report.nontrivial_srg}
    assert primes == {5, 13, 17, 29}
    for h in report.nontrivial_srg:
        assert h.integral is False and h.residual not in (None, "1")
        assert set(h.spec.symbols) in (set(quadratic_residues(h.spec.n)), set(range(1, h.spec.n)) - set(quadratic_residues(h.spec.n)))


@acceptance(7, "circulant nonexistence")
def test_circulant_scan_schedule_invariant(circulant_scan):
    report, _ = circulant_scan
    assert scan_srg_neumaier_circulants(30, jobs=4).as_dict() == report.as_dict()


# 8 -----------------------------------------------------------------------------------


@acceptance(8, "complement of triangular law")
@pytest.mark.parametrize("n", range(5, 11))
def test_triangular_complement(n):
    cls = classify(catalog.triangular_complement(n))
    assert cls.is_neumaier == (n % 2 == 0)
    if n % 2 == 0:
        assert cls.a == (n - 4) // 2
        assert cls.c == cls.a + 2


# 9 -----------------------------------------------------------------------------------


@pytest.fixture(scope="module")
def small_neumaier():
    return [(g, cls) for g in small_connected_graphs(8) if (cls := classify(g)).is_neumaier]


@acceptance(9, "degenerate laws")
def test_lambda_zero_is_complete_bipartite(small_neumaier):
    inputs = list(small_neumaier)
    inputs += [(catalog.complete_multipartite(2, k), None) for k in range(2, 11)]
    inputs += [(catalog.get(name), None) for name in catalog.NEUMAIER_NAMES]
    checked = 0
    for g, cls in inputs:
        cls = cls or classify(g)
        if cls.lam == 0 or cls.c == 2:
            assert cls.lam == 0 and cls.c == 2 and cls.a == 1
            sides = complete_bipartite_sides(g)
            assert sides is not None
            assert len(sides[0]) == len(sides[1]) == cls.k
            checked += 1
    assert checked >= 10


@acceptance(9, "degenerate laws")
def test_clique_size_k_only_c4(small_neumaier):
    assert [p for p in enumerate_feasible(10) if p.c == p.k] == [NeumaierParams(4, 2, 0, 1, 2)]
    c4 = catalog.get("C4")
    hits = [g for g, cls in small_neumaier if cls.c == cls.k]
    assert hits and all(are_isomorphic(g, c4).isomorphic for g in hits)
    for name in catalog.NEUMAIER_NAMES:
        cls = classify(catalog.get(name))
        assert (cls.c == cls.k) == (name == "C4")


# 10 ----------------------------------------------------------------------------------


@acceptance(10, "oracle equivalence")
def test_oracle_equivalence():
    disagreements = []
    total = 0
    for g in small_connected_graphs(8):
        total += 1
        cls = classify(g)
        ref = brute_classify(g)
        same = cls.verdict.value == ref["verdict"]
        if same and cls.verdict is not Verdict.NOT_EDGE_REGULAR:
            same = (cls.k, cls.lam, cls.mu) == (ref["k"], ref["lam"], ref["mu"])
        if same and cls.is_neumaier:
            same = [(r.clique, r.nexus) for r in cls.cliques] == ref["cliques"]
        if not same:
            disagreements.append((g, cls.verdict, ref))
    assert total > 100_000
    assert disagreements == []
