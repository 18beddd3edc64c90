"""Named graphs: the strongly regular Neumaier graphs of valency <= 10 and the
explicit strictly Neumaier Cayley graphs on 16, 24 and 28 vertices."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .automorphisms import find_regular_subgroup, is_vertex_transitive
from .cliques import NeumaierClassification, Verdict, classify
from .graph import Graph, build_graph, complement
from .groups import FiniteGroup, cayley_graph, cyclic, make_group, product


def complete_multipartite(parts: int, size: int) -> Graph:
    """K_{size,...,size} with ``parts`` parts."""
    n = parts * size
    edges = [(u, v) for u, v in combinations(range(n), 2) if u // size != v // size]
    return build_graph(n, edges, f"K{parts}x{size}")


def complete_multipartite_cayley(parts: int, size: int) -> Graph:
    """The same graph as Cay(Z_parts x Z_size, G \\ H) with H = 0 x Z_size.

    The parts are the cosets of H.
    """
    g = product(cyclic(parts), cyclic(size))
    h = {g.element((0, j)) for j in range(size)}
    return cayley_graph(g, [x for x in range(g.order) if x not in h], f"K{parts}x{size}")


def lattice_group(n: int) -> tuple[FiniteGroup, list[int]]:
    g = product(cyclic(n), cyclic(n))
    s = [g.element((0, i)) for i in range(1, n)] + [g.element((i, 0)) for i in range(1, n)]
    return g, s


def lattice(n: int) -> Graph:
    """L2(n,n) as Cay(Z_n x Z_n, {(0,i), (i,0)}); vertex (i, j) is index n*i + j."""
    g, s = lattice_group(n)
    return cayley_graph(g, s, f"L2({n},{n})")


def lattice_complement(n: int) -> Graph:
    """Complement of L2(n,n), as the Cayley graph with the complementary connection set."""
    g, s = lattice_group(n)
    rest = [x for x in range(1, g.order) if x not in set(s)]
    return cayley_graph(g, rest, f"~L2({n},{n})")


def triangular(n: int) -> Graph:
    """T(n): 2-subsets of {0..n-1}, adjacent when they meet."""
    pairs = list(combinations(range(n), 2))
    edges = [(i, j) for (i, p), (j, q) in combinations(enumerate(pairs), 2) if set(p) & set(q)]
    return build_graph(len(pairs), edges, f"T({n})")


def triangular_complement(n: int) -> Graph:
    out = complement(triangular(n))
    return Graph(out.n, out.adj, f"~T({n})")


SHRIKHANDE_SET = ["(1,0)", "(3,0)", "(0,1)", "(0,3)", "(1,1)", "(3,3)"]


def shrikhande() -> Graph:
    return cayley_graph(make_group("Z4xZ4"), SHRIKHANDE_SET, "Shrikhande")


def shrikhande_complement() -> Graph:
    g = make_group("Z4xZ4")
    s = set(g.element(t) for t in SHRIKHANDE_SET)
    return cayley_graph(g, [x for x in range(1, 16) if x not in s], "~Shrikhande")


def folded_5cube() -> Graph:
    """Cay(Z2^4, {e1, e2, e3, e4, 1111}), SRG(16,5,0,2)."""
    g = make_group("Z2xZ2xZ2xZ2")
    s = ["(1,0,0,0)", "(0,1,0,0)", "(0,0,1,0)", "(0,0,0,1)", "(1,1,1,1)"]
    return cayley_graph(g, s, "folded5cube")


def clebsch() -> Graph:
    """The SRG(16,10,6,6): complement of the folded 5-cube, itself Cayley over Z2^4."""
    g = make_group("Z2xZ2xZ2xZ2")
    s = {g.element(t) for t in ["(1,0,0,0)", "(0,1,0,0)", "(0,0,1,0)", "(0,0,0,1)", "(1,1,1,1)"]}
    return cayley_graph(g, [x for x in range(1, 16) if x not in s], "Clebsch")


def schlafli_complement() -> Graph:
    """SRG(27,10,1,5) from the 27 lines on a cubic surface.

    Vertices a1..a6, b1..b6, c_ij; two lines are adjacent when they meet:
    a_i ~ b_j (i != j), a_i ~ c_jk and b_i ~ c_jk iff i in {j,k},
    c_ij ~ c_kl iff {i,j} and {k,l} are disjoint.
    """
    names = [("a", i) for i in range(6)] + [("b", i) for i in range(6)]
    names += [("c", p) for p in combinations(range(6), 2)]

    def meets(x, y):
        (tx, ix), (ty, iy) = x, y
        if {tx, ty} == {"a", "b"}:
            return ix != iy
        if tx == ty and tx in "ab":
            return False
        if tx == ty == "c":
            return not set(ix) & set(iy)
        i, pair = (ix, iy) if ty == "c" else (iy, ix)
        return i in pair

    edges = [(u, v) for u, v in combinations(range(27), 2) if meets(names[u], names[v])]
    return build_graph(27, edges, "~Schlafli")


def schlafli() -> Graph:
    out = complement(schlafli_complement())
    return Graph(out.n, out.adj, "Schlafli")


def paley(p: int) -> Graph:
    from .groups import circulant

    if p < 5 or p % 4 != 1 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"Paley graphs need a prime p = 1 mod 4, got {p}")
    residues = sorted({x * x % p for x in range(1, p)})
    return circulant(p, [r for r in residues if r <= p // 2], f"Paley({p})")


# --- strictly Neumaier Cayley graphs -------------------------------------------------


STRICTLY16 = ("D16", ["a", "a^-1", "a^2", "a^-2", "b", "ba", "ba^3", "ba^4", "ba^6"])

STRICTLY24 = (
    ("S4", ["(1,3)(2,4)", "(1,4)(2,3)", "(1,2,4)", "(1,4,2)", "(1,3,4)", "(1,4,3)", "(1,2,4,3)", "(1,3,4,2)"]),
    ("A4xZ2", ["(1,3)(2,4)", "(1,2)(3,4)", "(1,2,4)", "(1,4,2)", "(1,2,3)", "(1,3,2)",
               "(1,3)(2,4)(5,6)", "(1,4)(2,3)(5,6)"]),
    ("S4", ["(1,3)(2,4)", "(1,4)(2,3)", "(1,2,4)", "(1,4,2)", "(1,3,4)", "(1,4,3)", "(1,4)", "(2,3)"]),
    ("A4xZ2", ["(1,3)(2,4)", "(1,4)(2,3)", "(1,2,4)", "(1,4,2)", "(1,3,4)", "(1,4,3)",
               "(1,4)(2,3)(5,6)", "(5,6)"]),
)

STRICTLY28 = (
    ("Z28", [1, -1, 4, -4, 5, -5, 7, -7, 14]),
    ("Z2xZ14", ["(1,0)", "(0,1)", "(0,-1)", "(0,7)", "(1,2)", "(1,-2)", "(1,3)", "(1,-3)", "(1,7)"]),
)


def strictly16() -> Graph:
    spec, s = STRICTLY16
    return cayley_graph(make_group(spec), s, "strictly16")


def strictly24(i: int) -> Graph:
    spec, s = STRICTLY24[i - 1]
    return cayley_graph(make_group(spec), s, f"strictly24-{i}")


def strictly28(i: int) -> Graph:
    spec, s = STRICTLY28[i - 1]
    return cayley_graph(make_group(spec), s, f"strictly28-{i}")


# --- registry -----------------------------------------------------------------------


@dataclass(frozen=True)
class Expected:
    verdict: Verdict
    params: tuple  # (n,k,lam,mu) / (n,k,lam;a,c) / (n,k,lam,mu;a,c) as plain tuples
    transitive: bool = True


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], Graph]
    expected: Expected
    # "construction" when built as a Cayley graph, else None (decided by search)
    cayley_source: Optional[str] = None
    table1: Optional[dict] = None


SRGN = Verdict.STRONGLY_REGULAR_NEUMAIER
STRICT = Verdict.STRICTLY_NEUMAIER
NOCLQ = Verdict.EDGE_REGULAR_NO_REGULAR_CLIQUE


def _row(params: str, name: str, neumaier: str, cay: str, vt: str) -> dict:
    return {"params": params, "name": name, "neumaier": neumaier, "cayley": cay, "vertex_transitive": vt}


# Published rows as printed: parameters, name, Neumaier, Cayley, vertex-transitive.
ENTRIES: dict[str, CatalogEntry] = {}


def _add(entry: CatalogEntry) -> None:
    ENTRIES[entry.name] = entry


_add(CatalogEntry("L2(3,3)", lambda: lattice(3), Expected(SRGN, (9, 4, 1, 2, 1, 3)), "construction",
                  _row("(9,4,1,2;1,3)", "L2(3,3)", "Yes", "Yes", "Yes")))
_add(CatalogEntry("T(5)", lambda: triangular(5), Expected(SRGN, (10, 6, 3, 4, 2, 4)), None,
                  _row("(10,6,3,4;2,4)", "T(5)", "Yes", "No", "Yes")))
_add(CatalogEntry("T(6)", lambda: triangular(6), Expected(SRGN, (15, 8, 4, 4, 2, 5)), None,
                  _row("(15,8,4,4;2,5)", "T(6)", "Yes", "No", "Yes")))
_add(CatalogEntry("~T(6)", lambda: triangular_complement(6), Expected(SRGN, (15, 6, 1, 3, 1, 3)), None,
                  _row("(15,6,1,3;1,3)", "complement of T(6)", "Yes", "No", "Yes")))
_add(CatalogEntry("L2(4,4)", lambda: lattice(4), Expected(SRGN, (16, 6, 2, 2, 1, 4)), "construction",
                  _row("(16,6,2,2;1,4)", "L2(4,4)", "Yes", "Yes", "Yes")))
_add(CatalogEntry("shrikhande", shrikhande, Expected(NOCLQ, (16, 6, 2, 2)), "construction",
                  _row("(16,6,2,2)", "Shrikhande", "No", "Yes", "Yes")))
_add(CatalogEntry("~L2(4,4)", lambda: lattice_complement(4), Expected(SRGN, (16, 9, 4, 6, 2, 4)), "construction",
                  _row("(16,9,4,6;2,4)", "complement of L2(4,4)", "Yes", "Yes", "Yes")))
_add(CatalogEntry("~shrikhande", shrikhande_complement, Expected(SRGN, (16, 9, 4, 6, 2, 4)), "construction",
                  _row("(16,9,4,6;2,4)", "complement of Shrikhande", "Yes", "Yes", "Yes")))
_add(CatalogEntry("clebsch", clebsch, Expected(NOCLQ, (16, 10, 6, 6)), "construction",
                  _row("(16,10,6,6;3,6)", "Clebsch", "No", "Yes", "Yes")))
_add(CatalogEntry("T(7)", lambda: triangular(7), Expected(SRGN, (21, 10, 5, 4, 2, 6)), None,
                  _row("(21,10,5,4;2,6)", "T(7)", "Yes", "Yes", "Yes")))
_add(CatalogEntry("L2(5,5)", lambda: lattice(5), Expected(SRGN, (25, 8, 3, 2, 1, 5)), "construction",
                  _row("(25,8,3,2;1,5)", "L2(5,5)", "Yes", "Yes", "Yes")))
_add(CatalogEntry("~schlafli", schlafli_complement, Expected(SRGN, (27, 10, 1, 5, 1, 3)), None,
                  _row("(27,10,1,5;1,3)", "complement of Schlafli", "Yes", "Yes", "Yes")))

TABLE1 = [name for name, e in ENTRIES.items() if e.table1]

_add(CatalogEntry("strictly16", strictly16, Expected(STRICT, (16, 9, 4, 2, 4)), "construction"))
for _i in range(1, 5):
    _add(CatalogEntry(f"strictly24-{_i}", (lambda i=_i: strictly24(i)), Expected(STRICT, (24, 8, 2, 1, 4)), "construction"))
for _i in range(1, 3):
    _add(CatalogEntry(f"strictly28-{_i}", (lambda i=_i: strictly28(i)), Expected(STRICT, (28, 9, 2, 1, 4)), "construction"))

_add(CatalogEntry("C4", lambda: complete_multipartite(2, 2), Expected(SRGN, (4, 2, 0, 2, 1, 2)), "construction"))
_add(CatalogEntry("K3,3,3", lambda: complete_multipartite(3, 3), Expected(SRGN, (9, 6, 3, 6, 2, 3)), "construction"))
_add(CatalogEntry("K6,6", lambda: complete_multipartite(2, 6), Expected(SRGN, (12, 6, 0, 6, 1, 2)), "construction"))
_add(CatalogEntry("L2(6,6)", lambda: lattice(6), Expected(SRGN, (36, 10, 4, 2, 1, 6)), "construction"))
_add(CatalogEntry("~L2(3,3)", lambda: lattice_complement(3), Expected(SRGN, (9, 4, 1, 2, 1, 3)), "construction"))
_add(CatalogEntry("~L2(5,5)", lambda: lattice_complement(5), Expected(SRGN, (25, 16, 9, 12, 3, 5)), "construction"))
_add(CatalogEntry("T(8)", lambda: triangular(8), Expected(SRGN, (28, 12, 6, 4, 2, 7)), None))
_add(CatalogEntry("~T(8)", lambda: triangular_complement(8), Expected(SRGN, (28, 15, 6, 10, 2, 4)), None))
_add(CatalogEntry("schlafli", schlafli, Expected(NOCLQ, (27, 16, 10, 8)), None))
_add(CatalogEntry("petersen", lambda: triangular_complement(5), Expected(NOCLQ, (10, 3, 0, 1)), None))
_add(CatalogEntry("paley13", lambda: paley(13), Expected(NOCLQ, (13, 6, 2, 3)), "construction"))

NEUMAIER_NAMES = [name for name, e in ENTRIES.items() if e.expected.verdict in (SRGN, STRICT)]


def get(name: str) -> Graph:
    try:
        entry = ENTRIES[name]
    except KeyError:
        raise KeyError(f"unknown catalog graph {name!r}; known: {', '.join(ENTRIES)}") from None
    g = entry.build()
    return Graph(g.n, g.adj, name)


def expected_matches(cls: NeumaierClassification, exp: Expected) -> bool:
    if cls.verdict is not exp.verdict:
        return False
    if cls.verdict is SRGN:
        n, k, lam, mu, a, c = exp.params
        return cls.srg_params == (n, k, lam, a, c, mu)
    if cls.verdict is STRICT:
        return tuple(cls.params) == exp.params
    return cls.srg is not None and tuple(cls.srg) == exp.params


@dataclass
class Table1Row:
    entry: CatalogEntry
    classification: NeumaierClassification
    transitive: bool
    cayley: str
    match: bool
    mismatches: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        t = self.entry.table1
        return {
            "name": self.entry.name,
            "printed": t,
            "computed": {
                "params": self.classification.params_text(),
                "verdict": self.classification.verdict.value,
                "neumaier": "Yes" if self.classification.is_neumaier else "No",
                "cayley": self.cayley,
                "vertex_transitive": "Yes" if self.transitive else "No",
            },
            "match": self.match,
            "mismatches": self.mismatches,
        }


def _cayley_status(entry: CatalogEntry, g: Graph, aut) -> str:
    if entry.cayley_source == "construction":
        return "Yes"
    cert = find_regular_subgroup(g, aut)
    return {"yes": "Yes", "no": "No"}.get(cert.status, "not checked")


def _printed_params_match(printed: str, cls: NeumaierClassification) -> bool:
    nums = printed.strip("()").replace(";", ",").split(",")
    vals = tuple(int(x) for x in nums)
    if len(vals) == 4:
        return cls.srg is not None and tuple(cls.srg) == vals
    n, k, lam, mu, a, c = vals
    if cls.srg is None or tuple(cls.srg) != (n, k, lam, mu):
        return False
    # a Neumaier "No" row lists putative (a, c) that the graph does not realise
    return not cls.is_neumaier or (cls.a, cls.c) == (a, c)


def table1_row(name: str) -> Table1Row:
    entry = ENTRIES[name]
    g = get(name)
    cls = classify(g)
    vt = is_vertex_transitive(g)
    cay = _cayley_status(entry, g, vt.aut)
    t = entry.table1
    mismatches = []
    if not _printed_params_match(t["params"], cls):
        mismatches.append("params")
    if ("Yes" if cls.is_neumaier else "No") != t["neumaier"]:
        mismatches.append("neumaier")
    if ("Yes" if vt.transitive else "No") != t["vertex_transitive"]:
        mismatches.append("vertex_transitive")
    if cay != "not checked" and cay != t["cayley"]:
        mismatches.append("cayley")
    if not expected_matches(cls, entry.expected):
        mismatches.append("expected classification")
    return Table1Row(entry, cls, vt.transitive, cay, not mismatches, mismatches)


def table1(jobs: int = 1) -> list[Table1Row]:
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(table1_row, TABLE1))
    return [table1_row(name) for name in TABLE1]
