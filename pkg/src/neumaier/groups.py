"""Finite groups as multiplication tables, and Cayley graphs over them.

Elements are indices ``0..order-1``; index 0 is always the identity.
Permutations compose left to right, ``(p * q)(i) = q(p(i))``, which is the
GAP convention the connection sets below were written in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import permutations
from math import gcd
from typing import Iterable, Optional, Sequence

from .graph import Graph, GraphError, mask_of

MAX_ORDER = 64

Perm = tuple[int, ...]


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    name: str
    mul: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    # permutation representation on points 1..degree (0-based tuples), optional
    perms: Optional[tuple[Perm, ...]] = None
    inv: tuple[int, ...] = field(init=False)
    _lookup: dict = field(init=False, repr=False)

    def __post_init__(self):
        order = len(self.mul)
        if order > MAX_ORDER:
            raise GroupError(f"group order {order} exceeds {MAX_ORDER}")
        if any(self.mul[0][x] != x or self.mul[x][0] != x for x in range(order)):
            raise GroupError("element 0 is not the identity")
        inv = [None] * order
        for x in range(order):
            for y in range(order):
                if self.mul[x][y] == 0:
                    inv[x] = y
                    break
            else:
                raise GroupError(f"element {self.names[x]} has no inverse")
        object.__setattr__(self, "inv", tuple(inv))
        object.__setattr__(self, "_lookup", {nm: i for i, nm in enumerate(self.names)})

    @property
    def order(self) -> int:
        return len(self.mul)

    identity = 0

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<FiniteGroup {self.name} order={self.order}>"

    def check_axioms(self) -> None:
        """Exhaustive associativity, identity and inverse check."""
        n = self.order
        mul = self.mul
        for row in mul:
            if sorted(row) != list(range(n)):
                raise GroupError("multiplication table is not a Latin square")
        for x in range(n):
            if mul[x][self.inv[x]] != 0 or mul[self.inv[x]][x] != 0:
                raise GroupError(f"bad inverse for {self.names[x]}")
            mx = mul[x]
            for y in range(n):
                mxy = mul[mx[y]]
                my = mul[y]
                for z in range(n):
                    if mxy[z] != mx[my[z]]:
                        raise GroupError("multiplication is not associative")

    def power(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv[x], -e
        out = 0
        for _ in range(e):
            out = self.mul[out][x]
        return out

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mul[y][x]
            k += 1
        return k

    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        span = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mul[x][s]
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(span)

    def is_subgroup(self, elems: Iterable[int]) -> bool:
        h = set(elems)
        if 0 not in h:
            return False
        return all(self.mul[x][self.inv[y]] in h for x in h for y in h)

    def right_cosets(self, sub: Iterable[int]) -> list[frozenset[int]]:
        sub = sorted(sub)
        seen: set[int] = set()
        out = []
        for g in range(self.order):
            if g in seen:
                continue
            coset = frozenset(self.mul[h][g] for h in sub)
            seen |= coset
            out.append(coset)
        return out

    def element(self, token) -> int:
        """Resolve an element from its index, its name, or notation.

        Accepts integers (taken mod n in cyclic groups), tuples for direct
        products, dihedral words like ``ba^3`` / ``a^-2``, and cycle notation
        for groups carrying a permutation representation.
        """
        if isinstance(token, int):
            return self._from_int(token)
        if isinstance(token, tuple):
            return self._from_tuple(token)
        text = str(token).strip().replace(" ", "")
        if text in self._lookup:
            return self._lookup[text]
        if re.fullmatch(r"[+-]?\d+", text) and self.name.startswith("Z") and "x" not in self.name:
            return self._from_int(int(text))
        cycle_like = text == "()" or re.fullmatch(r"(\(\d+(,\d+)*\))+", text)
        # tuples such as (1,0) in Z4xZ4 look like cycles; only non-abelian reps take cycles
        if self.perms is not None and cycle_like and any(ch in self.name for ch in "SAD"):
            return self.from_perm(parse_cycles(text, len(self.perms[0])))
        if text.startswith("(") and text.endswith(")"):
            parts = split_top_level(text[1:-1])
            if len(parts) > 1:
                return self._from_tuple(tuple(parts))
        word = _parse_dihedral_word(text)
        if word is not None and self.name.startswith("D"):
            b_exp, a_exp = word
            a, b = self._lookup["a"], self._lookup["b"]
            return self.mul[self.power(b, b_exp)][self.power(a, a_exp)]
        raise GroupError(f"cannot resolve element {token!r} in {self.name}")

    def _from_int(self, value: int) -> int:
        # residues in cyclic groups, plain element indices elsewhere
        if self.name.startswith("Z") and "x" not in self.name:
            return self._lookup[str(value % self.order)]
        if 0 <= value < self.order:
            return value
        raise GroupError(f"element index {value} out of range for {self.name}")

    def _from_tuple(self, parts: tuple) -> int:
        factors = getattr(self, "factors", None)
        if factors is None or len(factors) != len(parts):
            raise GroupError(f"{self.name} is not a product with {len(parts)} factors")
        idx = [f.element(p) for f, p in zip(factors, parts)]
        return self._lookup[_product_name([f.names[i] for f, i in zip(factors, idx)])]

    def from_perm(self, perm: Perm) -> int:
        if self.perms is None:
            raise GroupError(f"{self.name} has no permutation representation")
        try:
            return self.perms.index(tuple(perm))
        except ValueError:
            raise GroupError(f"permutation {format_cycles(perm)} is not in {self.name}") from None


def _parse_dihedral_word(text: str) -> Optional[tuple[int, int]]:
    m = re.fullmatch(r"(e|(b)?(a(\^(-?\d+))?)?)", text)
    if not m or not text:
        return None
    if text == "e":
        return 0, 0
    b_exp = 1 if m.group(2) else 0
    if m.group(3):
        a_exp = int(m.group(5)) if m.group(5) else 1
    else:
        a_exp = 0
    return b_exp, a_exp


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


# --- permutations ---------------------------------------------------------------


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` then ``q``."""
    return tuple(q[i] for i in p)


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation such as ``(1,3)(2,4)``."""
    img = list(range(degree))
    for cyc in re.findall(r"\(([^()]*)\)", text):
        if not cyc.strip():
            continue
        pts = [int(t) - 1 for t in cyc.split(",")]
        if any(not 0 <= p < degree for p in pts) or len(set(pts)) != len(pts):
            raise GroupError(f"bad cycle {cyc!r} for degree {degree}")
        for i, p in enumerate(pts):
            img[p] = pts[(i + 1) % len(pts)]
    return tuple(img)


def format_cycles(perm: Perm) -> str:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = perm[x]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def _parity(perm: Perm) -> int:
    seen, swaps = set(), 0
    for start in range(len(perm)):
        if start in seen:
            continue
        x, length = start, 0
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        swaps += length - 1
    return swaps % 2


def perm_group(name: str, elements: Sequence[Perm]) -> FiniteGroup:
    """Build a group table from a list of permutations closed under composition."""
    degree = len(elements[0])
    ident = tuple(range(degree))
    elems = sorted(set(elements), key=lambda p: (p != ident, p))
    index = {p: i for i, p in enumerate(elems)}
    try:
        mul = tuple(tuple(index[compose(p, q)] for q in elems) for p in elems)
    except KeyError:
        raise GroupError("permutation set is not closed") from None
    return FiniteGroup(name, mul, tuple(format_cycles(p) for p in elems), tuple(elems))


def closure(gens: Sequence[Perm]) -> list[Perm]:
    degree = len(gens[0])
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


# --- constructors ---------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    if n > MAX_ORDER:
        raise GroupError(f"group order {n} exceeds {MAX_ORDER}")
    mul = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    perms = tuple(tuple((i + x) % n for i in range(n)) for x in range(n))
    return FiniteGroup(f"Z{n}", mul, tuple(str(x) for x in range(n)), perms)


def dihedral(order: int) -> FiniteGroup:
    """D_order = <a, b | a^m = b^2 = (ba)^2 = e>, elements written b^j a^i."""
    if order < 4 or order % 2:
        raise GroupError("dihedral group order must be even and >= 4")
    if order > MAX_ORDER:
        raise GroupError(f"group order {order} exceeds {MAX_ORDER}")
    m = order // 2
    elems = [(j, i) for j in (0, 1) for i in range(m)]
    index = {e: t for t, e in enumerate(elems)}

    def prod(x, y):
        (j, i), (l, r) = x, y
        return ((j + l) % 2, ((-i if l else i) + r) % m)

    def nm(j, i):
        a = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
        if j == 0:
            return a or "e"
        return "b" + a

    mul = tuple(tuple(index[prod(x, y)] for y in elems) for x in elems)
    # action on Z_m: a: t -> t+1, b: t -> -t; left-to-right composition
    perms = []
    for j, i in elems:
        perms.append(tuple(((-t if j else t) + i) % m for t in range(m)))
    # the action on Z_2 is not faithful, so D4 gets no permutation representation
    rep = tuple(perms) if m > 2 else None
    return FiniteGroup(f"D{order}", mul, tuple(nm(j, i) for j, i in elems), rep)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("symmetric groups are supported for n <= 5")
    return perm_group(f"S{n}", list(permutations(range(n))))


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("alternating groups are supported for n <= 5")
    return perm_group(f"A{n}", [p for p in permutations(range(n)) if _parity(p) == 0])


def _product_name(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


def product(*factors: FiniteGroup) -> FiniteGroup:
    """Direct product; element names are tuples of factor names.

    When every factor has a permutation representation the product acts on
    the disjoint union of their points, so ``A4 x Z2`` is ``A4 x <(5,6)>``.
    """
    order = 1
    for f in factors:
        order *= f.order
    if order > MAX_ORDER:
        raise GroupError(f"group order {order} exceeds {MAX_ORDER}")
    tuples = [()]
    for f in factors:
        tuples = [t + (x,) for t in tuples for x in range(f.order)]
    index = {t: i for i, t in enumerate(tuples)}
    mul = tuple(
        tuple(index[tuple(f.mul[a][b] for f, a, b in zip(factors, s, t))] for t in tuples)
        for s in tuples
    )
    names = tuple(_product_name([f.names[x] for f, x in zip(factors, t)]) for t in tuples)
    perms = None
    if all(f.perms is not None for f in factors):
        perms = []
        for t in tuples:
            img, offset = [], 0
            for f, x in zip(factors, t):
                img.extend(offset + p for p in f.perms[x])
                offset += len(f.perms[x])
            perms.append(tuple(img))
        perms = tuple(perms)
    g = FiniteGroup("x".join(f.name for f in factors), mul, names, perms)
    object.__setattr__(g, "factors", tuple(factors))
    return g


_ATOM = re.compile(r"([ZDSA])(\d+)$")


def make_group(spec: str) -> FiniteGroup:
    """Parse the group mini-language: ``Z28``, ``D16``, ``S4``, ``A4xZ2``, ``Z4xZ4``."""
    parts = [p for p in spec.replace(" ", "").split("x") if p]
    if not parts:
        raise GroupError(f"empty group spec {spec!r}")
    groups = []
    for p in parts:
        m = _ATOM.match(p)
        if not m:
            raise GroupError(f"unknown group {p!r}")
        kind, n = m.group(1), int(m.group(2))
        groups.append({"Z": cyclic, "D": dihedral, "S": symmetric, "A": alternating}[kind](n))
    g = groups[0] if len(groups) == 1 else product(*groups)
    g.check_axioms()
    return g


# --- connection sets and Cayley graphs ------------------------------------------


@dataclass(frozen=True)
class ConnectionSetReport:
    ok: bool
    contains_identity: bool
    missing_inverses: tuple[int, ...]
    generates: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def validate_connection_set(group: FiniteGroup, s: Iterable[int]) -> ConnectionSetReport:
    s = set(s)
    if any(not 0 <= x < group.order for x in s):
        raise GroupError("connection set index out of range")
    has_e = 0 in s
    missing = tuple(sorted(group.inv[x] for x in s if group.inv[x] not in s))
    generates = len(group.generated(s)) == group.order
    reasons = []
    if has_e:
        reasons.append("contains the identity")
    if missing:
        reasons.append("not inverse-closed: missing " + ", ".join(group.names[x] for x in missing))
    return ConnectionSetReport(not has_e and not missing, has_e, missing, generates, "; ".join(reasons))


def resolve_set(group: FiniteGroup, tokens: Iterable) -> list[int]:
    out = []
    for t in tokens:
        x = group.element(t)
        if x not in out:
            out.append(x)
    return out


def cayley_graph(group: FiniteGroup, s: Iterable, label: str = "") -> Graph:
    """Cay(G, S): x ~ y iff x y^-1 is in S.  S must generate G."""
    s_idx = resolve_set(group, s)
    report = validate_connection_set(group, s_idx)
    if not report.ok:
        raise GroupError(f"invalid connection set: {report.reason}")
    if not report.generates:
        raise GraphError("connection set does not generate the group; Cayley graph is disconnected")
    smask = mask_of(s_idx)
    rows = []
    for x in range(group.order):
        row = 0
        mx = group.mul[x]
        for y in range(group.order):
            if smask >> mx[group.inv[y]] & 1:
                row |= 1 << y
        rows.append(row)
    return Graph(group.order, tuple(rows), label or f"Cay({group.name})")


def right_translation(group: FiniteGroup, h: int) -> list[int]:
    """The vertex map x -> x h, an automorphism of every Cayley graph over ``group``."""
    return [group.mul[x][h] for x in range(group.order)]


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    return all(mask_of(perm[u] for u in g.neighbors(v)) == g.adj[perm[v]] for v in range(g.n))


@dataclass(frozen=True)
class SubgroupCliqueReport:
    ok: bool
    index: int
    expected_degree: int
    degree: int
    coset_nexus: tuple[Optional[int], ...]
    reason: str = ""

    def __bool__(self):
        return self.ok


def subgroup_clique_identity(group: FiniteGroup, sub: Iterable, s: Iterable, nexus: int) -> SubgroupCliqueReport:
    """Check |S| = ([G:C] - 1) a + |C| - 1 and that every right coset of C is a
    regular clique with nexus ``a`` in Cay(G, S)."""
    from .cliques import nexus_of

    c = sorted(set(resolve_set(group, sub)))
    s_idx = resolve_set(group, s)
    if len(c) < 2:
        raise GroupError("subgroup must have order >= 2")
    if not group.is_subgroup(c):
        raise GroupError("C is not a subgroup")
    if not set(c) - {0} <= set(s_idx):
        raise GroupError("C \\ {e} is not contained in S, so C is not a clique")
    graph = cayley_graph(group, s_idx)
    index = group.order // len(c)
    expected = (index - 1) * nexus + len(c) - 1
    nexi = tuple(nexus_of(graph, sorted(coset)) for coset in group.right_cosets(c))
    reasons = []
    if expected != len(s_idx):
        reasons.append(f"|S|={len(s_idx)} but ([G:C]-1)a+|C|-1={expected}")
    if any(x != nexus for x in nexi):
        reasons.append(f"coset nexus values {sorted(set(nexi), key=str)} differ from a={nexus}")
    return SubgroupCliqueReport(not reasons, index, expected, len(s_idx), nexi, "; ".join(reasons))


def circulant(n: int, half: Iterable[int], label: str = "") -> Graph:
    """Cay(Z_n, {+-d : d in half}) built directly from rotations."""
    smask = 0
    for d in half:
        d %= n
        if d == 0:
            raise GroupError("0 is not allowed in a circulant connection set")
        smask |= 1 << d | 1 << (n - d) % n
    full = (1 << n) - 1
    rows = tuple(((smask << x) | (smask >> (n - x))) & full for x in range(n))
    if gcd(n, *[d for d in range(1, n) if smask >> d & 1]) != 1:
        raise GraphError("circulant connection set does not generate Z_n")
    return Graph(n, rows, label or f"Circ({n})")
