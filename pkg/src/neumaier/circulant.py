"""Exhaustive scan of circulant graphs for strongly regular Neumaier graphs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Optional

from .cliques import classify
from .groups import circulant
from .spectrum import char_poly, integer_spectrum

MAX_SCAN_N = 30


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    half: tuple[int, ...]

    @property
    def symbols(self) -> tuple[int, ...]:
        return tuple(sorted({d for h in self.half for d in (h, self.n - h)}))

    @property
    def mask(self) -> int:
        m = 0
        for d in self.symbols:
            m |= 1 << d
        return m

    def graph(self):
        return circulant(self.n, self.half, f"Circ({self.n};{','.join(map(str, self.half))})")

    def __str__(self):
        return f"Circ({self.n};{{{','.join(map(str, self.half))}}})"


def enumerate_circulants(n: int) -> Iterator[CirculantSpec]:
    """Every connected circulant on Z_n, one per connection set, in subset order."""
    if n > MAX_SCAN_N + 1:
        raise ValueError(f"circulant enumeration is limited to n <= {MAX_SCAN_N + 1}")
    half = list(range(1, n // 2 + 1))
    for bitsel in range(1, 1 << len(half)):
        chosen = tuple(h for i, h in enumerate(half) if bitsel >> i & 1)
        if gcd(n, *chosen) == 1:
            yield CirculantSpec(n, chosen)


def _rotate(mask: int, d: int, n: int) -> int:
    full = (1 << n) - 1
    return ((mask << d) | (mask >> (n - d))) & full


def difference_counts(spec: CirculantSpec) -> tuple[set[int], set[int]]:
    """Common-neighbour counts of 0 and d, split by whether d is a neighbour.

    Vertex-transitivity makes vertex 0 representative, so the graph is
    edge-regular iff the first set is a singleton and strongly regular iff
    both are.
    """
    n, s = spec.n, spec.mask
    adj_counts, non_counts = set(), set()
    for d in range(1, n):
        cnt = (s & _rotate(s, d, n)).bit_count()
        (adj_counts if s >> d & 1 else non_counts).add(cnt)
    return adj_counts, non_counts


@dataclass
class CirculantHit:
    spec: CirculantSpec
    srg: tuple[int, int, int, int]
    neumaier: bool
    params: Optional[str] = None
    integral: Optional[bool] = None
    residual: Optional[str] = None

    @property
    def nontrivial(self) -> bool:
        n, k, lam, mu = self.srg
        return 0 < mu < k

    def as_dict(self) -> dict:
        return {
            "spec": str(self.spec),
            "n": self.spec.n,
            "symbols": list(self.spec.symbols),
            "srg": list(self.srg),
            "nontrivial": self.nontrivial,
            "neumaier": self.neumaier,
            "params": self.params,
            "integral_spectrum": self.integral,
            "residual": self.residual,
        }


@dataclass
class ScanReport:
    n_max: int
    scanned: int = 0
    edge_regular: int = 0
    srg: list[CirculantHit] = field(default_factory=list)

    @property
    def nontrivial_neumaier(self) -> list[CirculantHit]:
        return [h for h in self.srg if h.nontrivial and h.neumaier]

    @property
    def trivial_neumaier(self) -> list[CirculantHit]:
        return [h for h in self.srg if not h.nontrivial and h.neumaier]

    @property
    def nontrivial_srg(self) -> list[CirculantHit]:
        return [h for h in self.srg if h.nontrivial]

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "scanned": self.scanned,
            "edge_regular": self.edge_regular,
            "strongly_regular": len(self.srg),
            "nontrivial_neumaier": [h.as_dict() for h in self.nontrivial_neumaier],
            "trivial_neumaier": [h.as_dict() for h in self.trivial_neumaier],
            "nontrivial_srg": [h.as_dict() for h in self.nontrivial_srg],
        }


def _scan_order(n: int) -> tuple[int, int, list[CirculantHit]]:
    scanned = edge_regular = 0
    hits = []
    for spec in enumerate_circulants(n):
        scanned += 1
        if len(spec.symbols) == n - 1:
            continue  # complete graph
        adj_counts, non_counts = difference_counts(spec)
        if len(adj_counts) > 1:
            continue
        edge_regular += 1
        if len(non_counts) != 1:
            continue
        k = len(spec.symbols)
        srg = (n, k, adj_counts.pop() if adj_counts else 0, non_counts.pop())
        g = spec.graph()
        cls = classify(g)
        if tuple(cls.srg) != srg:
            raise AssertionError(f"{spec}: difference counts {srg} disagree with {cls.srg}")
        hit = CirculantHit(spec, srg, cls.is_neumaier, cls.params_text() if cls.is_neumaier else None)
        if hit.nontrivial:
            rep = integer_spectrum(char_poly(g))
            hit.integral = rep.is_integral
            hit.residual = str(rep.residual)
        hits.append(hit)
    return scanned, edge_regular, hits


def scan_srg_neumaier_circulants(n_max: int = MAX_SCAN_N, jobs: int = 1, n_min: int = 3) -> ScanReport:
    """Classify every connected circulant with n_min <= n <= n_max.

    Strongly regular ones are fully classified; nontrivial SRG circulants
    also get their exact spectrum.  The result does not depend on ``jobs``.
    """
    if n_max > MAX_SCAN_N:
        raise ValueError(f"n_max is limited to {MAX_SCAN_N}")
    orders = list(range(n_min, n_max + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_order, orders))
    else:
        parts = [_scan_order(n) for n in orders]
    report = ScanReport(n_max)
    for scanned, er, hits in parts:
        report.scanned += scanned
        report.edge_regular += er
        report.srg.extend(hits)
    report.srg.sort(key=lambda h: (h.spec.n, h.spec.half))
    return report


def quadratic_residues(p: int) -> tuple[int, ...]:
    return tuple(sorted({x * x % p for x in range(1, p)}))
