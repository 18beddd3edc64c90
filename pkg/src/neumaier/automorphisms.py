"""Automorphism groups and isomorphism by individualization-refinement.

Colour refinement (1-WL) runs on bitset rows.  Colour ids are ranks of
sorted signatures, so two graphs refined in lockstep get comparable
colourings whenever their refinement traces agree.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import Graph, SizeLimitError, bits, mask_of

MAX_AUT_VERTICES = 40

Colors = tuple[int, ...]


def refine(g: Graph, colors: Sequence[int]) -> tuple[Colors, tuple]:
    """Coarsest equitable refinement of ``colors`` and the trace that produced it."""
    adj = g.adj
    n = g.n
    colors = tuple(colors)
    trace = []
    while True:
        m = max(colors) + 1
        cells = [0] * m
        for v, col in enumerate(colors):
            cells[col] |= 1 << v
        sigs = [(colors[v],) + tuple((adj[v] & cm).bit_count() for cm in cells) for v in range(n)]
        trace.append(tuple(sorted(Counter(sigs).items())))
        uniq = sorted(set(sigs))
        if len(uniq) == m:
            return colors, tuple(trace)
        rank = {s: i for i, s in enumerate(uniq)}
        colors = tuple(rank[s] for s in sigs)


def individualize(colors: Colors, v: int) -> Colors:
    fresh = max(colors) + 1
    return tuple(fresh if u == v else c for u, c in enumerate(colors))


def _target_cell(colors: Colors) -> Optional[list[int]]:
    sizes = Counter(colors)
    best = None
    for col in sorted(sizes):
        if sizes[col] > 1 and (best is None or sizes[col] < sizes[best]):
            best = col
    if best is None:
        return None
    return [v for v, c in enumerate(colors) if c == best]


def _is_isomorphism(g: Graph, h: Graph, perm: Sequence[int]) -> bool:
    return all(mask_of(perm[u] for u in bits(g.adj[v])) == h.adj[perm[v]] for v in range(g.n))


def _search(g: Graph, h: Graph, cg: Colors, ch: Colors) -> Optional[list[int]]:
    """Find an isomorphism g -> h respecting equitable colourings cg, ch."""
    cell = _target_cell(cg)
    if cell is None:
        where = {c: w for w, c in enumerate(ch)}
        perm = [where[c] for c in cg]
        return perm if _is_isomorphism(g, h, perm) else None
    v = cell[0]
    col = cg[v]
    left, left_trace = refine(g, individualize(cg, v))
    for w in (u for u, c in enumerate(ch) if c == col):
        right, right_trace = refine(h, individualize(ch, w))
        if right_trace != left_trace:
            continue
        found = _search(g, h, left, right)
        if found is not None:
            return found
    return None


def _check_size(g: Graph) -> None:
    if g.n > MAX_AUT_VERTICES:
        raise SizeLimitError(f"automorphism search supports n <= {MAX_AUT_VERTICES}")


def orbits_of(n: int, gens: Sequence[Sequence[int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _orbit(point: int, gens: Sequence[Sequence[int]]) -> set[int]:
    seen = {point}
    queue = [point]
    while queue:
        x = queue.pop()
        for perm in gens:
            y = perm[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@dataclass
class AutReport:
    n: int
    generators: list[tuple[int, ...]]
    order: int
    orbits: list[list[int]]
    base: list[int] = field(default_factory=list)
    orbit_sizes: list[int] = field(default_factory=list)

    @property
    def transitive(self) -> bool:
        return len(self.orbits) == 1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "order": self.order,
            "generators": [list(p) for p in self.generators],
            "orbits": self.orbits,
            "base": self.base,
            "basic_orbit_sizes": self.orbit_sizes,
        }


def automorphism_group(g: Graph) -> AutReport:
    """Generators and exact order of Aut(g) via a point-stabilizer chain.

    The base is the first path of the search tree; level by level from the
    bottom, every vertex of the target cell not yet reached by known
    generators is tested for an automorphism mapping the base point to it.
    The order is the product of the basic orbit sizes.
    """
    _check_size(g)
    c0, _ = refine(g, [0] * g.n)
    levels = []
    colors = c0
    while True:
        cell = _target_cell(colors)
        if cell is None:
            break
        levels.append((colors, cell[0], cell))
        colors, _ = refine(g, individualize(colors, cell[0]))
    gens: list[tuple[int, ...]] = []
    order = 1
    sizes = []
    for colors, b, cell in reversed(levels):
        left, left_trace = refine(g, individualize(colors, b))
        orbit = _orbit(b, gens)
        for w in cell:
            if w in orbit:
                continue
            right, right_trace = refine(g, individualize(colors, w))
            if right_trace != left_trace:
                continue
            perm = _search(g, g, left, right)
            if perm is not None:
                gens.append(tuple(perm))
                orbit = _orbit(b, gens)
        order *= len(orbit)
        sizes.append(len(orbit))
    sizes.reverse()
    return AutReport(g.n, gens, order, orbits_of(g.n, gens), [b for _, b, _ in levels], sizes)


@dataclass
class TransitivityReport:
    transitive: bool
    orbits: list[list[int]]
    # words[v]: generator indices whose composition (left to right) maps 0 to v
    words: dict[int, list[int]]
    aut: AutReport

    def __bool__(self):
        return self.transitive


def is_vertex_transitive(g: Graph, aut: Optional[AutReport] = None) -> TransitivityReport:
    aut = aut or automorphism_group(g)
    words: dict[int, list[int]] = {0: []}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for i, perm in enumerate(aut.generators):
            y = perm[x]
            if y not in words:
                words[y] = words[x] + [i]
                queue.append(y)
    return TransitivityReport(aut.transitive, aut.orbits, dict(sorted(words.items())), aut)


def apply_word(aut: AutReport, word: Sequence[int], v: int) -> int:
    for i in word:
        v = aut.generators[i][v]
    return v


@dataclass
class IsoResult:
    isomorphic: bool
    mapping: Optional[list[int]] = None
    reason: str = ""

    def __bool__(self):
        return self.isomorphic


def are_isomorphic(g: Graph, h: Graph, use_spectrum: bool = True) -> IsoResult:
    """Return a verified isomorphism g -> h, or the first invariant that differs."""
    _check_size(g)
    _check_size(h)
    if g.n != h.n:
        return IsoResult(False, reason="vertex counts differ")
    if g.num_edges != h.num_edges:
        return IsoResult(False, reason="edge counts differ")
    if sorted(g.degrees) != sorted(h.degrees):
        return IsoResult(False, reason="degree sequences differ")
    cg, tg = refine(g, [0] * g.n)
    ch, th = refine(h, [0] * h.n)
    if tg != th:
        return IsoResult(False, reason="colour refinement differs")
    if use_spectrum:
        from .spectrum import char_poly

        if char_poly(g) != char_poly(h):
            return IsoResult(False, reason="characteristic polynomials differ")
    perm = _search(g, h, cg, ch)
    if perm is None:
        return IsoResult(False, reason="exhaustive search found no isomorphism")
    if not _is_isomorphism(g, h, perm):
        raise AssertionError("search returned a non-isomorphism")
    return IsoResult(True, perm, "isomorphism found")


# --- regular subgroups (Cayley certification) ----------------------------------------


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(q[i] for i in p)


def _inverse(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def enumerate_group(gens: Sequence[Sequence[int]], n: int, limit: int) -> Optional[list[tuple[int, ...]]]:
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _compose(x, s)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > limit:
                        return None
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def _cycle_lengths(p: Sequence[int]) -> set[int]:
    seen, lengths = set(), set()
    for s in range(len(p)):
        if s in seen:
            continue
        x, ln = s, 0
        while x not in seen:
            seen.add(x)
            x = p[x]
            ln += 1
        lengths.add(ln)
    return lengths


def _squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


@dataclass
class CayleyCertificate:
    """Outcome of a search for a subgroup of Aut(g) acting regularly.

    ``status`` is "yes" (``elements`` is a regular subgroup), "no" (proved
    absent) or "not checked".
    """

    status: str
    elements: Optional[list[tuple[int, ...]]] = None
    reason: str = ""


def find_regular_subgroup(g: Graph, aut: Optional[AutReport] = None, max_order: int = 100_000) -> CayleyCertificate:
    """Search for a 2-generated subgroup of Aut(g) acting regularly.

    A graph is Cayley iff such a subgroup exists.  Generator pairs are
    searched with the first element taken up to conjugacy.  A negative
    answer is conclusive only when |V| is squarefree, since groups of
    squarefree order are 2-generated.
    """
    aut = aut or automorphism_group(g)
    n = g.n
    if not aut.transitive:
        return CayleyCertificate("no", reason="not vertex-transitive")
    if aut.order > max_order:
        return CayleyCertificate("not checked", reason=f"|Aut| = {aut.order} exceeds {max_order}")
    elems = enumerate_group(aut.generators, n, max_order)
    ident = tuple(range(n))
    if aut.order == n:
        return CayleyCertificate("yes", elems, "Aut acts regularly")
    semi = []
    for x in elems:
        if x == ident:
            continue
        lengths = _cycle_lengths(x)
        if len(lengths) == 1 and n % next(iter(lengths)) == 0:
            semi.append(x)
    semi_set = set(semi)
    reps = []
    classed: set = set()
    inv_gens = [(p, _inverse(p)) for p in aut.generators]
    for x in semi:
        if x in classed:
            continue
        reps.append(x)
        stack = [x]
        classed.add(x)
        while stack:
            y = stack.pop()
            for p, pi in inv_gens:
                z = _compose(_compose(pi, y), p)
                if z not in classed:
                    classed.add(z)
                    stack.append(z)
    for x in reps:
        for y in semi:
            sub = enumerate_group([x, y], n, n)
            if sub is None or len(sub) != n:
                continue
            if all(z == ident or z in semi_set for z in sub):
                return CayleyCertificate("yes", sub, "regular subgroup found")
    if _squarefree(n):
        return CayleyCertificate("no", reason="no regular subgroup; all groups of squarefree order are 2-generated")
    return CayleyCertificate("not checked", reason="no 2-generated regular subgroup; larger generating sets not searched")
