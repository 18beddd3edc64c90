"""Regular cliques, Neumaier classification and the four-part partition.

A regular clique with nexus a < c cannot be extended (no outside vertex sees
all of it), so regular cliques are found among the maximal cliques.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .graph import (
    Graph,
    GraphError,
    RegularityWitness,
    SrgParams,
    bits,
    complete_bipartite_sides,
    diameter,
    is_strongly_regular,
    mask_of,
    regularity_witness,
    require_connected,
    require_non_complete,
)
from .parameters import (
    NeumaierParams,
    RuleResult,
    SrgNeumaierParams,
    check_counting,
    check_dc1,
    check_dc2,
    check_degenerate,
    check_edge_bound,
    check_nexus_one,
    check_srg_identities,
    check_srg_ratio,
    edge_lower_bound,
)


class InvariantViolation(AssertionError):
    """A computed object contradicts a proven identity."""


def maximal_cliques(g: Graph) -> Iterator[tuple[int, ...]]:
    """Bron-Kerbosch with Tomita pivoting over bitsets; each maximal clique once."""
    adj = g.adj

    def expand(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda v: (p & adj[v]).bit_count())
        for v in bits(p & ~adj[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    for r in expand(0, (1 << g.n) - 1, 0):
        yield tuple(bits(r))


@dataclass(frozen=True)
class RegularCliqueReport:
    clique: tuple[int, ...]
    nexus: Optional[int]
    # for irregular cliques: (vertex, its count, vertex, its count)
    witness: Optional[tuple[int, int, int, int]] = None

    @property
    def size(self) -> int:
        return len(self.clique)

    @property
    def regular(self) -> bool:
        return self.nexus is not None

    def as_dict(self) -> dict:
        d = {"clique": list(self.clique), "c": self.size, "a": self.nexus}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


def clique_report(g: Graph, clique: Sequence[int]) -> RegularCliqueReport:
    cl = tuple(sorted(set(clique)))
    if not 2 <= len(cl) < g.n:
        raise GraphError("nexus needs a clique with 2 <= |C| < n")
    if not g.is_clique(cl):
        raise GraphError(f"{cl} is not a clique")
    cm = mask_of(cl)
    first = None
    for v in range(g.n):
        if cm >> v & 1:
            continue
        cnt = (g.adj[v] & cm).bit_count()
        if first is None:
            first = (v, cnt)
        elif cnt != first[1]:
            return RegularCliqueReport(cl, None, (first[0], first[1], v, cnt))
    return RegularCliqueReport(cl, first[1])


def nexus_of(g: Graph, clique: Sequence[int]) -> Optional[int]:
    """Number of clique neighbours shared by every outside vertex, or None."""
    return clique_report(g, clique).nexus


def find_regular_cliques(g: Graph, first_only: bool = False) -> list[RegularCliqueReport]:
    """All regular cliques with nexus >= 1, sorted by (size, vertices)."""
    require_connected(g)
    require_non_complete(g)
    found = []
    for cl in maximal_cliques(g):
        if len(cl) < 2:
            continue
        rep = clique_report(g, cl)
        if rep.nexus is not None and 1 <= rep.nexus < rep.size:
            found.append(rep)
            if first_only:
                break
    found.sort(key=lambda r: (r.size, r.clique))
    return found


def clique_summary(reports: Sequence[RegularCliqueReport]) -> set[tuple[int, int]]:
    return {(r.size, r.nexus) for r in reports}


class Verdict(str, enum.Enum):
    NOT_EDGE_REGULAR = "NotEdgeRegular"
    EDGE_REGULAR_NO_REGULAR_CLIQUE = "EdgeRegularNoRegularClique"
    STRICTLY_NEUMAIER = "StrictlyNeumaier"
    STRONGLY_REGULAR_NEUMAIER = "StronglyRegularNeumaier"

    def __str__(self):
        return self.value


@dataclass
class NeumaierClassification:
    verdict: Verdict
    n: int
    k: Optional[int] = None
    lam: Optional[int] = None
    a: Optional[int] = None
    c: Optional[int] = None
    srg: Optional[SrgParams] = None
    cliques: list[RegularCliqueReport] = field(default_factory=list)
    regularity_witness: Optional[RegularityWitness] = None
    checks: list[RuleResult] = field(default_factory=list)
    structure: dict = field(default_factory=dict)

    @property
    def is_neumaier(self) -> bool:
        return self.verdict in (Verdict.STRICTLY_NEUMAIER, Verdict.STRONGLY_REGULAR_NEUMAIER)

    @property
    def mu(self) -> Optional[int]:
        return self.srg.mu if self.srg else None

    @property
    def params(self) -> Optional[NeumaierParams]:
        if not self.is_neumaier:
            return None
        return NeumaierParams(self.n, self.k, self.lam, self.a, self.c)

    @property
    def srg_params(self) -> Optional[SrgNeumaierParams]:
        if self.verdict is not Verdict.STRONGLY_REGULAR_NEUMAIER:
            return None
        return SrgNeumaierParams(self.n, self.k, self.lam, self.a, self.c, self.srg.mu)

    def params_text(self) -> str:
        if self.srg_params:
            return str(self.srg_params)
        if self.params:
            return str(self.params)
        if self.srg:
            n, k, lam, mu = self.srg
            return f"({n},{k},{lam},{mu})"
        if self.k is not None:
            return f"({self.n},{self.k},{self.lam})"
        return f"(n={self.n})"

    def as_dict(self) -> dict:
        d = {
            "verdict": self.verdict.value,
            "neumaier": self.is_neumaier,
            "params": self.params_text(),
            "n": self.n,
            "k": self.k,
            "lambda": self.lam,
            "a": self.a,
            "c": self.c,
            "mu": self.mu,
            "strongly_regular": self.srg is not None,
            "nontrivial_srg": self.srg.nontrivial if self.srg else None,
            "regular_cliques": [r.as_dict() for r in self.cliques],
            "checks": [r.as_dict() for r in self.checks],
        }
        if self.regularity_witness is not None:
            w = self.regularity_witness
            d["regularity_witness"] = {
                "kind": w.kind,
                "first": list(w.first),
                "first_count": w.first_count,
                "second": list(w.second),
                "second_count": w.second_count,
            }
        if self.structure:
            d["structure"] = self.structure
        return d


def classify(g: Graph, fast: bool = False) -> NeumaierClassification:
    """Full Neumaier classification of a connected non-complete graph.

    Every regular clique is collected (unless ``fast``) so that the claim
    that all regular cliques share one (c, a) is checked, not assumed.  On
    success the counting identities and degenerate-case laws are verified
    and an :class:`InvariantViolation` is raised if any fails.
    """
    require_connected(g)
    require_non_complete(g)
    witness = regularity_witness(g)
    if witness is not None:
        return NeumaierClassification(Verdict.NOT_EDGE_REGULAR, g.n, regularity_witness=witness)
    k = g.degrees[0]
    u, v = next(g.edges())
    lam = g.common(u, v)
    srg = is_strongly_regular(g)
    cliques = find_regular_cliques(g, first_only=fast)
    if not cliques:
        return NeumaierClassification(Verdict.EDGE_REGULAR_NO_REGULAR_CLIQUE, g.n, k, lam, srg=srg)
    summary = clique_summary(cliques)
    if len(summary) != 1:
        raise InvariantViolation(f"regular cliques with different (c, a): {sorted(summary)}")
    (c, a), = summary
    verdict = Verdict.STRONGLY_REGULAR_NEUMAIER if srg else Verdict.STRICTLY_NEUMAIER
    out = NeumaierClassification(verdict, g.n, k, lam, a, c, srg, cliques)
    p = out.params
    out.checks = [check_counting(p), check_dc1(p), check_dc2(p), check_nexus_one(p), check_degenerate(p)]
    out.checks.append(check_edge_bound(p))
    if srg:
        out.checks.extend(check_srg_identities(out.srg_params))
        out.checks.append(check_srg_ratio(out.srg_params))
    out.structure = _structural_laws(g, p)
    bad = [r.rule for r in out.checks if not r.ok]
    bad += [name for name, ok in out.structure.items() if ok is False]
    if bad:
        raise InvariantViolation(f"{g!r} classified {p} but fails {bad}")
    return out


def _structural_laws(g: Graph, p: NeumaierParams) -> dict:
    """Graph-level checks of the degenerate cases (None when not applicable)."""
    laws: dict = {"complete_bipartite": None, "cycle4": None}
    if p.lam == 0 or p.c == 2:
        sides = complete_bipartite_sides(g)
        laws["complete_bipartite"] = sides is not None and len(sides[0]) == len(sides[1]) == p.k
    if p.c == p.k:
        laws["cycle4"] = g.n == 4 and g.degrees == (2, 2, 2, 2)
    return laws


# --- four-part partition -----------------------------------------------------------


PART_NAMES = ("{e}", "C\\{e}", "S\\C", "R")


@dataclass
class FourPartPartition:
    parts: tuple[tuple[int, ...], ...]
    # counts[i][j]: sorted distinct neighbour counts from part i into part j
    counts: list[list[tuple[int, ...]]]
    forced: list[list[Optional[int]]]
    equitable: bool
    forced_ok: bool
    witness: Optional[tuple[int, int, int, int]] = None

    @property
    def quotient(self) -> list[list[Optional[int]]]:
        return [[cs[0] if len(cs) == 1 else None for cs in row] for row in self.counts]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def r_to_s_counts(self) -> tuple[int, ...]:
        return self.counts[3][2]

    def as_dict(self) -> dict:
        return {
            "parts": {name: list(part) for name, part in zip(PART_NAMES, self.parts)},
            "quotient": self.quotient,
            "forced_rows": self.forced,
            "equitable": self.equitable,
            "forced_rows_match": self.forced_ok,
            "witness": list(self.witness) if self.witness else None,
        }


def forced_quotient(p: NeumaierParams, x: Optional[int] = None) -> list[list[Optional[int]]]:
    """Rows of the quotient matrix fixed by the parameters alone.

    The last row depends on the (possibly non-constant) number x of
    neighbours a vertex of R has in S minus C.
    """
    n, k, lam, a, c = p
    last = [0, a, x, None if x is None else k - a - x]
    return [
        [0, c - 1, k - c + 1, 0],
        [1, c - 2, lam - c + 2, k - lam - 1],
        [1, a - 1, lam - a + 1, k - lam - 1],
        last,
    ]


def equitable_partition(g: Graph, clique: Sequence[int], e: int, params: Optional[NeumaierParams] = None) -> FourPartPartition:
    """Partition {e}, C\\{e}, S\\C, R = V\\(S u {e}) around a regular clique C.

    S is the neighbourhood of e.  The second part is C\\{e}: C itself
    contains e, so listing it whole would not give a partition.
    """
    clique = tuple(sorted(set(clique)))
    if e not in clique:
        raise GraphError(f"vertex {e} is not in the clique")
    if params is None:
        cls = classify(g, fast=True)
        if not cls.is_neumaier:
            raise GraphError(f"{g!r} is not a Neumaier graph")
        params = cls.params
    cm = mask_of(clique)
    s = g.adj[e]
    masks = [1 << e, cm & ~(1 << e), s & ~cm, ((1 << g.n) - 1) & ~s & ~(1 << e)]
    parts = tuple(tuple(bits(m)) for m in masks)
    counts = []
    for pm in masks:
        row = []
        for qm in masks:
            row.append(tuple(sorted({(g.adj[v] & qm).bit_count() for v in bits(pm)})))
        counts.append(row)
    r_counts = counts[3][2]
    x = r_counts[0] if len(r_counts) == 1 else None
    forced = forced_quotient(params, x)
    forced_ok = True
    for i in range(4):
        for j in range(4):
            want = forced[i][j]
            if want is None or not parts[i]:
                continue
            if counts[i][j] != (want,):
                forced_ok = False
    equitable = all(len(cs) <= 1 for row in counts for cs in row)
    witness = None
    if len(r_counts) > 1:
        lo, hi = r_counts[0], r_counts[-1]
        sm = masks[2]
        vlo = next(v for v in parts[3] if (g.adj[v] & sm).bit_count() == lo)
        vhi = next(v for v in parts[3] if (g.adj[v] & sm).bit_count() == hi)
        witness = (vlo, lo, vhi, hi)
    return FourPartPartition(parts, counts, forced, equitable, forced_ok, witness)


def clique_quotient(p: NeumaierParams) -> list[list[int]]:
    """Quotient of the two-part partition {C, V\\C}; eigenvalues k and c-a-1."""
    return [[p.c - 1, p.k - p.c + 1], [p.a, p.k - p.a]]


@dataclass
class ConstancyReport:
    ok: bool
    strongly_regular: bool
    constant: bool
    partitions_checked: int
    diameter: int

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "strongly_regular": self.strongly_regular,
            "constant": self.constant,
            "partitions_checked": self.partitions_checked,
            "diameter": self.diameter,
        }


def srg_iff_constancy(g: Graph, classification: Optional[NeumaierClassification] = None, transitive: Optional[bool] = None) -> ConstancyReport:
    """For a vertex-transitive Neumaier graph: the R -> S\\C counts are
    constant iff the graph is strongly regular, and the diameter is 2.

    Every regular clique and every choice of e in it is tried.  A mismatch
    raises :class:`InvariantViolation`.
    """
    cls = classification or classify(g)
    if not cls.is_neumaier:
        raise GraphError(f"{g!r} is not a Neumaier graph")
    if transitive is None:
        from .automorphisms import is_vertex_transitive

        transitive = is_vertex_transitive(g).transitive
    if not transitive:
        raise GraphError(f"{g!r} is not vertex-transitive")
    srg = cls.srg is not None
    flags = set()
    checked = 0
    for rep in cls.cliques:
        for e in rep.clique:
            part = equitable_partition(g, rep.clique, e, cls.params)
            if not part.forced_ok:
                raise InvariantViolation(f"forced quotient rows fail for clique {rep.clique}, e={e}")
            flags.add(len(part.r_to_s_counts) == 1)
            checked += 1
    diam = diameter(g)
    constant = flags == {True}
    if len(flags) != 1 or constant != srg or diam != 2:
        raise InvariantViolation(f"{g!r}: srg={srg}, constancy={sorted(flags)}, diameter={diam}")
    return ConstancyReport(True, srg, constant, checked, diam)


@dataclass
class EdgeBoundReport:
    bound: int
    edges: int
    ok: bool

    def __bool__(self):
        return self.ok


def check_edges(g: Graph, p: NeumaierParams) -> EdgeBoundReport:
    bound = edge_lower_bound(p)
    if bound.denominator != 1:
        raise ValueError(f"edge bound {bound} for {p} is not an integer")
    return EdgeBoundReport(int(bound), g.num_edges, g.num_edges >= bound)
