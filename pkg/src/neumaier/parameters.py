"""Arithmetic feasibility rules for Neumaier parameter tuples.

A tuple (n, k, lambda; a, c) describes an edge-regular graph on n vertices
of valency k with lambda common neighbours per edge, containing a regular
clique of size c whose outside vertices each see exactly a of its vertices.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional


class NeumaierParams(NamedTuple):
    n: int
    k: int
    lam: int
    a: int
    c: int

    def __str__(self):
        return f"({self.n},{self.k},{self.lam};{self.a},{self.c})"


class SrgNeumaierParams(NamedTuple):
    n: int
    k: int
    lam: int
    a: int
    c: int
    mu: int

    @property
    def base(self) -> NeumaierParams:
        return NeumaierParams(*self[:5])

    def __str__(self):
        return f"({self.n},{self.k},{self.lam},{self.mu};{self.a},{self.c})"


@dataclass(frozen=True)
class RuleResult:
    rule: str
    ok: bool
    lhs: object = None
    rhs: object = None
    note: str = ""
    applicable: bool = True

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {
            "rule": self.rule,
            "ok": self.ok,
            "applicable": self.applicable,
            "lhs": _plain(self.lhs),
            "rhs": _plain(self.rhs),
            "note": self.note,
        }


def _plain(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value


@dataclass
class FeasibilityReport:
    params: tuple
    rules: list[RuleResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rules)

    def __bool__(self):
        return self.ok

    def failed(self) -> list[str]:
        return [r.rule for r in self.rules if not r.ok]

    def __getitem__(self, rule: str) -> RuleResult:
        for r in self.rules:
            if r.rule == rule:
                return r
        raise KeyError(rule)

    def as_dict(self) -> dict:
        return {"params": str(self.params), "ok": self.ok, "rules": [r.as_dict() for r in self.rules]}


# --- individual rules ------------------------------------------------------------


def check_basic(p) -> RuleResult:
    n, k, lam, a, c = p[:5]
    ok = 1 <= a < c <= k and k + 2 <= n and 0 <= lam <= k - 1
    return RuleResult("basic", ok, note="1 <= a < c <= k <= n-2, 0 <= lambda <= k-1")


def check_counting(p) -> RuleResult:
    """Edges between the clique and the rest: c(k-c+1) = (n-c)a."""
    n, k, lam, a, c = p[:5]
    lhs, rhs = c * (k - c + 1), (n - c) * a
    return RuleResult("counting", lhs == rhs, lhs, rhs, "c(k-c+1) = (n-c)a")


def check_dc1(p) -> RuleResult:
    n, k, lam, a, c = p[:5]
    lhs, rhs = (k - c + 1) * (a - 1), (c - 1) * (lam - c + 2)
    return RuleResult("dc1", lhs == rhs, lhs, rhs, "(k-c+1)(a-1) = (c-1)(lambda-c+2)")


def check_dc2(p) -> RuleResult:
    n, k, lam, a, c = p[:5]
    lhs, rhs = (c - 1) * (k - lam - 1), (n - k - 1) * a
    return RuleResult("dc2", lhs == rhs, lhs, rhs, "(c-1)(k-lambda-1) = (n-k-1)a")


def check_nexus_one(p) -> RuleResult:
    n, k, lam, a, c = p[:5]
    if a != 1:
        return RuleResult("nexus_one", True, note="a != 1", applicable=False)
    margin = k - 2 * c + 3
    ok = lam == c - 2 and margin > 0
    return RuleResult("nexus_one", ok, (lam, margin), (c - 2, 0), "lambda = c-2 and k-2c+3 > 0")


def check_degenerate(p) -> RuleResult:
    """c = k forces C4; lambda = 0 or c = 2 forces K_{k,k} with a = 1."""
    n, k, lam, a, c = p[:5]
    if c == k:
        ok = tuple(p[:5]) == (4, 2, 0, 1, 2)
        return RuleResult("degenerate", ok, tuple(p[:5]), (4, 2, 0, 1, 2), "c = k forces the 4-cycle")
    if lam == 0 or c == 2:
        ok = n == 2 * k and a == 1 and lam == 0 and c == 2
        return RuleResult("degenerate", ok, (n, lam, a, c), (2 * k, 0, 1, 2), "complete bipartite K_{k,k}")
    return RuleResult("degenerate", True, applicable=False)


def check_handshake(p) -> RuleResult:
    n, k = p[0], p[1]
    return RuleResult("handshake", n * k % 2 == 0, n * k, "even", "nk is twice the edge count")


def edge_lower_bound(p) -> Fraction:
    """Edge count forced by the four-part structure around one vertex.

    k(k-lambda) + (k-c+1)(a-1) + (k-c+1)(lambda-a+1)/2 + (c-1)(c-2)/2,
    returned as an exact rational; non-integral values mean the tuple is
    impossible (the subgraph on S minus C would have odd degree sum).
    """
    n, k, lam, a, c = p[:5]
    return (
        Fraction(k * (k - lam))
        + (k - c + 1) * (a - 1)
        + Fraction((k - c + 1) * (lam - a + 1), 2)
        + Fraction((c - 1) * (c - 2), 2)
    )


def check_edge_bound(p) -> RuleResult:
    n, k = p[0], p[1]
    bound = edge_lower_bound(p)
    edges = Fraction(n * k, 2)
    if bound.denominator != 1:
        return RuleResult("edge_bound", False, bound, edges, "bound is not an integer")
    return RuleResult("edge_bound", bound <= edges, bound, edges, "lower bound <= nk/2")


def max_vertices(k: int, diameter2: bool = True) -> int:
    """Vertex bound for a Neumaier graph of valency k.

    With ``diameter2`` this is max{1 + k + k(k-2), 2k}; otherwise it is the
    bound from the counting identity, max over c of c(k-c+2), which every
    Neumaier graph satisfies whatever its diameter.
    """
    if diameter2:
        return max(1 + k + k * (k - 2), 2 * k)
    return counting_vertex_bound(k)


def counting_vertex_bound(k: int) -> int:
    # n = c + c(k-c+1)/a <= c(k-c+2), attained at a = 1
    return max((c * (k - c + 2) for c in range(2, k + 1)), default=0)


def neumaier_vertex_bound(k_max: int) -> int:
    """Largest n allowed by the counting identity for any k <= k_max.

    For k_max = 10 this is 36, attained by the lattice graph L2(6,6).
    """
    return max((counting_vertex_bound(k) for k in range(2, k_max + 1)), default=0)


def check_vertex_bound(p) -> RuleResult:
    n, k = p[0], p[1]
    bound = max_vertices(k, diameter2=True)
    return RuleResult("vertex_bound", n <= bound, n, bound, "diameter-2 bound max{1+k+k(k-2), 2k}")


def check_srg_identities(p: SrgNeumaierParams) -> list[RuleResult]:
    n, k, lam, a, c, mu = p
    l1, r1 = (k - c + 1) * (k - lam - 1), (n - k - 1) * (mu - a)
    l2, r2 = mu * (c - a - 1), a * (k - mu)
    return [
        RuleResult("srg_eq1", l1 == r1, l1, r1, "(k-c+1)(k-lambda-1) = (n-k-1)(mu-a)"),
        RuleResult("srg_eq2", l2 == r2, l2, r2, "mu(c-a-1) = a(k-mu)"),
    ]


def check_srg_ratio(p: SrgNeumaierParams) -> RuleResult:
    from .spectrum import srg_integer_ratio

    v = srg_integer_ratio(p)
    m = (v.details or {}).get("m")
    return RuleResult("srg_ratio", v.ok, m, None, v.reason or "mu/a integral, Hoffman clique, integral eigenvalues")


NEUMAIER_RULES = (
    check_basic,
    check_counting,
    check_dc1,
    check_dc2,
    check_nexus_one,
    check_degenerate,
    check_handshake,
    check_edge_bound,
    check_vertex_bound,
)


def check_all(p) -> FeasibilityReport:
    """Run every rule on a tuple; SRG tuples also get the SRG rules."""
    if len(p) == 6:
        p = SrgNeumaierParams(*p)
    else:
        p = NeumaierParams(*p)
    report = FeasibilityReport(p)
    basic = check_basic(p)
    report.rules.append(basic)
    if not basic.ok:
        return report
    for rule in NEUMAIER_RULES[1:]:
        report.rules.append(rule(p))
    if isinstance(p, SrgNeumaierParams):
        report.rules.extend(check_srg_identities(p))
        report.rules.append(check_srg_ratio(p))
    return report


def is_feasible(p) -> bool:
    """Fast path of :func:`check_all` without building a report."""
    n, k, lam, a, c = p[:5]
    if not (1 <= a < c <= k and k + 2 <= n and 0 <= lam <= k - 1):
        return False
    if c * (k - c + 1) != (n - c) * a:
        return False
    if (k - c + 1) * (a - 1) != (c - 1) * (lam - c + 2):
        return False
    if (c - 1) * (k - lam - 1) != (n - k - 1) * a:
        return False
    return all(rule(p).ok for rule in NEUMAIER_RULES[4:])


def _feasible_for_k(k: int) -> list[NeumaierParams]:
    out = []
    top = max(max_vertices(k), counting_vertex_bound(k))
    for c in range(2, k + 1):
        for a in range(1, c):
            for lam in range(0, k):
                for n in range(k + 2, top + 1):
                    p = NeumaierParams(n, k, lam, a, c)
                    if is_feasible(p):
                        out.append(p)
    return out


def enumerate_feasible(k_max: int, jobs: int = 1) -> list[NeumaierParams]:
    """All tuples with 2 <= k <= k_max passing every rule, sorted lexicographically."""
    if k_max > 12:
        raise ValueError("enumeration is limited to k_max <= 12")
    ks = list(range(2, k_max + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_feasible_for_k, ks))
    else:
        chunks = [_feasible_for_k(k) for k in ks]
    return sorted(p for chunk in chunks for p in chunk)


def srg_extensions(p: NeumaierParams) -> list[SrgNeumaierParams]:
    out = []
    for mu in range(1, p.k + 1):
        q = SrgNeumaierParams(*p, mu)
        if all(r.ok for r in check_srg_identities(q)) and check_srg_ratio(q).ok:
            out.append(q)
    return out


def enumerate_srg_feasible(k_max: int, jobs: int = 1) -> list[SrgNeumaierParams]:
    out = []
    for p in enumerate_feasible(k_max, jobs):
        out.extend(srg_extensions(p))
    return sorted(out)


def complement_triangular_params(n: int) -> Optional[SrgNeumaierParams]:
    """Putative Neumaier tuple for the complement of T(n), or None.

    The complement of T(n) is SRG(C(n,2), C(n-2,2), C(n-4,2), C(n-3,2));
    a regular clique is a set of pairwise disjoint pairs, so c <= n/2, and
    the tuple is taken with a = mu/m, c = 1 + k/m where -m = 3 - n.
    """
    v = n * (n - 1) // 2
    k = (n - 2) * (n - 3) // 2
    lam = (n - 4) * (n - 5) // 2
    mu = (n - 3) * (n - 4) // 2
    m = n - 3
    if mu % m or k % m:
        return None
    q = SrgNeumaierParams(v, k, lam, mu // m, 1 + k // m, mu)
    return q if check_all(q).ok else None


def parse_params(values: Iterable) -> tuple:
    vals = [int(v) for v in values]
    if len(vals) == 5:
        return NeumaierParams(*vals)
    if len(vals) == 6:
        n, k, lam, a, c, mu = vals
        return SrgNeumaierParams(n, k, lam, a, c, mu)
    raise ValueError("expected n k lambda a c [mu]")
