import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from neumaier import catalog
from neumaier.graph import build_graph
from neumaier.parameters import NeumaierParams, SrgNeumaierParams
from neumaier.spectrum import (
    CharPoly,
    char_poly,
    integer_eigenvalues_of_matrix,
    integer_spectrum,
    quotient_char_poly,
    spectrum,
    srg_integer_ratio,
    verify_neumaier_eigenvalues,
)

from test_graph import graphs


def sympy_charpoly(g):
    x = sympy.Symbol("x")
    coeffs = sympy.Matrix(g.adjacency_matrix()).charpoly(x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def test_small_examples():
    k2 = build_graph(2, [(0, 1)])
    assert char_poly(k2).coeffs == (-1, 0, 1)
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    p = char_poly(c4)
    assert p.coeffs == (0, 0, -4, 0, 1)
    assert str(p) == "x^4 - 4x^2"
    rep = integer_spectrum(p)
    assert rep.integer_roots == {2: 1, 0: 2, -2: 1}
    assert rep.residual.coeffs == (1,)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9))
def test_charpoly_matches_sympy(g):
    assert char_poly(g).coeffs == sympy_charpoly(g)


@pytest.mark.parametrize("name", ["petersen", "strictly16", "~T(6)"])
def test_charpoly_matches_sympy_catalog(name):
    g = catalog.get(name)
    assert char_poly(g).coeffs == sympy_charpoly(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=10))
def test_trace_identities(g):
    p = char_poly(g)
    n = g.n
    assert p.degree == n
    if n >= 2:
        assert p.coeffs[n - 1] == 0
        assert p.coeffs[n - 2] == -g.num_edges
    if n >= 3:
        # -coefficient of x^(n-3) is twice the triangle count
        triangles = sum(1 for u, v in g.edges() for w in range(v + 1, g.n) if g.has_edge(u, w) and g.has_edge(v, w))
        assert p.coeffs[n - 3] == -2 * triangles


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=10))
def test_integer_roots_match_numpy(g):
    rep = integer_spectrum(char_poly(g))
    assert rep.expand() == char_poly(g)
    eig = np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float))
    near = np.round(eig)
    numeric = {}
    for value, r in zip(eig, near):
        if abs(value - r) < 1e-6:
            numeric[int(r)] = numeric.get(int(r), 0) + 1
    # irrational eigenvalues can sit within 1e-6 of an integer only by accident
    assert rep.integer_roots == dict(sorted(numeric.items(), reverse=True))


def test_shrikhande_spectrum():
    rep = spectrum(catalog.get("shrikhande"))
    assert rep.integer_roots == {6: 1, 2: 6, -2: 9}
    assert rep.is_integral


def test_schlafli_complement_spectrum():
    rep = spectrum(catalog.get("~schlafli"))
    assert rep.integer_roots == {10: 1, 1: 20, -5: 6}


def test_paley13_residual_is_conference_quadratic():
    rep = spectrum(catalog.get("paley13"))
    assert rep.integer_roots == {6: 1}
    x = sympy.Symbol("x")
    residual = sympy.Poly(list(reversed(rep.residual.coeffs)), x)
    assert residual == sympy.Poly((x**2 + x - 3) ** 6, x)


def test_deflate_rejects_non_factor():
    p = CharPoly((-1, 0, 1))
    assert p.deflate(2) is None
    assert p.deflate(1).coeffs == (1, 1)


@pytest.mark.parametrize(
    "name, params, second",
    [
        ("L2(4,4)", NeumaierParams(16, 6, 2, 1, 4), 2),
        ("~schlafli", NeumaierParams(27, 10, 1, 1, 3), 1),
        ("strictly16", NeumaierParams(16, 9, 4, 2, 4), 1),
    ],
)
def test_neumaier_eigenvalues(name, params, second):
    verdict = verify_neumaier_eigenvalues(catalog.get(name), params)
    assert verdict.ok
    assert verdict.details == {"k": params.k, "c-a-1": second}


def test_neumaier_eigenvalues_missing():
    verdict = verify_neumaier_eigenvalues(catalog.get("petersen"), NeumaierParams(10, 3, 0, 1, 2))
    assert not verdict.ok and verdict.details == {"missing": 0}


def test_srg_integer_ratio_examples():
    ok = srg_integer_ratio(SrgNeumaierParams(27, 10, 1, 1, 3, 5))
    assert ok and ok.details["m"] == 5
    ok = srg_integer_ratio(SrgNeumaierParams(16, 9, 4, 2, 4, 6))
    assert ok and ok.details["m"] == 3
    bad = srg_integer_ratio(SrgNeumaierParams(13, 6, 2, 1, 3, 3))
    assert not bad and "-m" in bad.reason


def test_quotient_helpers():
    # two-part clique quotient of ~Shrikhande: eigenvalues k=9 and c-a-1=1
    assert integer_eigenvalues_of_matrix([[3, 6], [2, 7]]) == {9: 1, 1: 1}
    assert quotient_char_poly([[0, 1], [1, 0]]) == [-1, 0, 1]
