"""Small simple graphs stored as bitset adjacency rows.

Every row ``adj[v]`` is a Python int whose bit ``u`` is set iff ``u ~ v``.
Common-neighbour counts reduce to ``(adj[u] & adj[v]).bit_count()``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

MAX_VERTICES = 128


class GraphError(ValueError):
    """Invalid graph input."""


class DisconnectedGraphError(GraphError):
    pass


class CompleteGraphError(GraphError):
    pass


class SizeLimitError(GraphError):
    pass


class Graph6Error(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if self.n > MAX_VERTICES:
            raise SizeLimitError(f"n={self.n} exceeds {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references vertices >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.num_edges}>"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def common(self, u: int, v: int) -> int:
        return (self.adj[u] & self.adj[v]).bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @cached_property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @cached_property
    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    @property
    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.adj[v] | 1 << v) & m == m for v in vs)

    def relabel(self, perm: Sequence[int], label: Optional[str] = None) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        new = [0] * self.n
        for v in range(self.n):
            new[perm[v]] = mask_of(perm[u] for u in bits(self.adj[v]))
        return Graph(self.n, tuple(new), self.label if label is None else label)

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(index[u] for u in bits(self.adj[v]) if u in index))
        return Graph(len(vertices), tuple(rows))

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(row >> u) & 1 for u in range(self.n)] for row in self.adj]


def build_graph(n: int, edges: Iterable[tuple[int, int]], label: str = "") -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    if n > MAX_VERTICES:
        raise SizeLimitError(f"n={n} exceeds {MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), label)


def from_adjacency(rows: Sequence[Sequence[int]], label: str = "") -> Graph:
    n = len(rows)
    return build_graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rows[u][v]), label)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    label = g.label[1:] if g.label.startswith("~") else ("~" + g.label if g.label else "")
    return Graph(g.n, rows, label)


def require_connected(g: Graph) -> None:
    if not g.is_connected:
        raise DisconnectedGraphError(f"{g!r} is disconnected")


def require_non_complete(g: Graph) -> None:
    if g.is_complete:
        raise CompleteGraphError(f"{g!r} is complete")


# --- regularity ----------------------------------------------------------------


class EdgeRegularParams(NamedTuple):
    n: int
    k: int
    lam: int


class SrgParams(NamedTuple):
    n: int
    k: int
    lam: int
    mu: int

    @property
    def nontrivial(self) -> bool:
        return 0 < self.mu < self.k


@dataclass(frozen=True)
class RegularityWitness:
    """Why a graph failed a regularity test.

    ``kind`` is "degree", "lambda" or "mu"; ``first`` and ``second`` are the
    offending vertices (degree) or vertex pairs, with their counts.
    """

    kind: str
    first: tuple
    first_count: int
    second: tuple
    second_count: int


def regularity_witness(g: Graph) -> Optional[RegularityWitness]:
    """Return a witness that ``g`` is not edge-regular, or None if it is."""
    deg = g.degrees
    for v in range(1, g.n):
        if deg[v] != deg[0]:
            return RegularityWitness("degree", (0,), deg[0], (v,), deg[v])
    first = None
    for u, v in g.edges():
        lam = g.common(u, v)
        if first is None:
            first = ((u, v), lam)
        elif lam != first[1]:
            return RegularityWitness("lambda", first[0], first[1], (u, v), lam)
    return None


def edge_regularity(g: Graph) -> Optional[EdgeRegularParams]:
    """Return (n, k, lambda) if ``g`` is edge-regular, else None.

    Use :func:`regularity_witness` for the pair of edges that disagree.
    """
    require_connected(g)
    if regularity_witness(g) is not None:
        return None
    k = g.degrees[0]
    if k == 0:
        return EdgeRegularParams(g.n, 0, 0)
    u, v = next(g.edges())
    return EdgeRegularParams(g.n, k, g.common(u, v))


def srg_witness(g: Graph) -> Optional[RegularityWitness]:
    w = regularity_witness(g)
    if w is not None:
        return w
    first = None
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        mu = g.common(u, v)
        if first is None:
            first = ((u, v), mu)
        elif mu != first[1]:
            return RegularityWitness("mu", first[0], first[1], (u, v), mu)
    return None


def is_strongly_regular(g: Graph) -> Optional[SrgParams]:
    """Return (n, k, lambda, mu) if ``g`` is strongly regular, else None."""
    require_connected(g)
    require_non_complete(g)
    er = edge_regularity(g)
    if er is None or srg_witness(g) is not None:
        return None
    for u, v in combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            return SrgParams(er.n, er.k, er.lam, g.common(u, v))
    raise AssertionError("non-complete graph without a non-edge")


def distances_from(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def diameter(g: Graph) -> int:
    require_connected(g)
    return max(max(distances_from(g, v)) for v in range(g.n))


def is_bipartition(g: Graph, left: Iterable[int]) -> bool:
    """True iff ``g`` is the complete bipartite graph with the given side."""
    lm = mask_of(left)
    rm = ((1 << g.n) - 1) & ~lm
    return all(g.adj[v] == (rm if lm >> v & 1 else lm) for v in range(g.n))


def complete_bipartite_sides(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Return the two sides if ``g`` is K_{p,q}, else None."""
    left = [v for v in range(g.n) if not g.has_edge(0, v)]
    if is_bipartition(g, left):
        right = [v for v in range(g.n) if g.has_edge(0, v)]
        return left, right
    return None


# --- text formats ----------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (upper triangle, column-major, 6-bit chunks)."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", *(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))]
    bitlist = [int(g.has_edge(i, j)) for j in range(1, n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    for i in range(0, len(bitlist), 6):
        chunk = 0
        for b in bitlist[i:i + 6]:
            chunk = chunk << 1 | b
        out.append(chr(chunk + 63))
    return "".join(out)


def from_graph6(text: str, label: str = "") -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error(f"invalid graph6 character in {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise Graph6Error("unsupported graph6 size header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise Graph6Error(f"graph6 body has {len(body)} chunks, expected {-(-nbits // 6)}")
    stream = []
    for d in body:
        stream.extend((d >> s) & 1 for s in range(5, -1, -1))
    if any(stream[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                edges.append((i, j))
            pos += 1
    return build_graph(n, edges, label)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, label: str = "") -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n = int(lines[0])
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise GraphError("each edge line needs exactly two vertices")
    return build_graph(n, edges, label)
