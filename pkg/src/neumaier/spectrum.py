"""Exact integer spectra of adjacency matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .graph import Graph, SizeLimitError, bits

MAX_CHARPOLY_VERTICES = 64


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomials are monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: CharPoly) -> CharPoly:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return CharPoly(tuple(out))

    @classmethod
    def linear(cls, root: int) -> CharPoly:
        return cls((-root, 1))

    def deflate(self, root: int) -> Optional[CharPoly]:
        """Divide by (x - root); None when it is not an exact factor."""
        n = self.degree
        q = [0] * n
        carry = 0
        for i in range(n, 0, -1):
            carry = self.coeffs[i] + carry * root
            q[i - 1] = carry
        if self.coeffs[0] + carry * root != 0:
            return None
        return CharPoly(tuple(q))

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        return text + "".join(f" {s} {b}" for s, b in terms[1:])


ONE = CharPoly((1,))


def char_poly(g: Graph) -> CharPoly:
    """Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence.

    All arithmetic is on Python integers (numpy object arrays); the division
    by ``k`` at each step is exact.
    """
    n = g.n
    if n > MAX_CHARPOLY_VERTICES:
        raise SizeLimitError(f"char_poly supports n <= {MAX_CHARPOLY_VERTICES}")
    nbrs = [list(bits(row)) for row in g.adj]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = np.zeros((n, n), dtype=object)
    eye = np.identity(n, dtype=int).astype(object)
    for k in range(1, n + 1):
        m = m + coeffs[n - k + 1] * eye
        am = np.empty((n, n), dtype=object)
        for i in range(n):
            am[i] = m[nbrs[i]].sum(axis=0) if nbrs[i] else np.zeros(n, dtype=object)
        trace = sum(am[i, i] for i in range(n))
        if trace % k:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        coeffs[n - k] = -(trace // k)
        m = am
    return CharPoly(tuple(int(c) for c in coeffs))


def _iroot_ceil(x: int, r: int) -> int:
    """Smallest integer y >= 0 with y**r >= x."""
    if x <= 0:
        return 0
    lo, hi = 0, 1
    while hi ** r < x:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** r >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def root_bound(p: CharPoly) -> int:
    """Fujiwara bound: every complex root has modulus at most the result."""
    n = p.degree
    if n == 0:
        return 0
    parts = [_iroot_ceil(abs(p.coeffs[n - i]), i) for i in range(1, n)]
    parts.append(_iroot_ceil(-(-abs(p.coeffs[0]) // 2), n))
    return 2 * max(parts, default=0)


@dataclass(frozen=True)
class SpectrumReport:
    integer_roots: dict[int, int]
    residual: CharPoly

    def expand(self) -> CharPoly:
        poly = self.residual
        for r, mult in sorted(self.integer_roots.items()):
            for _ in range(mult):
                poly = poly * CharPoly.linear(r)
        return poly

    @property
    def is_integral(self) -> bool:
        return self.residual.degree == 0

    def __contains__(self, value) -> bool:
        return value in self.integer_roots


def integer_spectrum(p: CharPoly) -> SpectrumReport:
    """Strip all integer roots of ``p`` with their multiplicities.

    Zero is removed by valuation; the remaining candidates are divisors of
    the (new) constant term inside the Fujiwara root bound.
    """
    roots: dict[int, int] = {}
    coeffs = list(p.coeffs)
    zeros = 0
    while zeros < len(coeffs) - 1 and coeffs[zeros] == 0:
        zeros += 1
    if zeros:
        roots[0] = zeros
    poly = CharPoly(tuple(coeffs[zeros:]))
    if poly.degree:
        const = abs(poly.coeffs[0])
        bound = min(root_bound(poly), const)
        for d in range(1, bound + 1):
            if const % d:
                continue
            for r in (d, -d):
                while poly.degree:
                    q = poly.deflate(r)
                    if q is None:
                        break
                    roots[r] = roots.get(r, 0) + 1
                    poly = q
    return SpectrumReport(dict(sorted(roots.items(), reverse=True)), poly)


def spectrum(g: Graph) -> SpectrumReport:
    return integer_spectrum(char_poly(g))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    details: Optional[dict] = None

    def __bool__(self):
        return self.ok


def verify_neumaier_eigenvalues(g: Graph, params, report: Optional[SpectrumReport] = None) -> Verdict:
    """Check that k and c - a - 1 are distinct integer eigenvalues of ``g``."""
    report = report if report is not None else spectrum(g)
    k, second = params.k, params.c - params.a - 1
    if k == second:
        return Verdict(False, f"k = c - a - 1 = {k}")
    for value in (k, second):
        if value not in report.integer_roots:
            return Verdict(False, f"{value} is not an eigenvalue", {"missing": value})
    return Verdict(True, details={"k": k, "c-a-1": second})


def srg_integer_ratio(params) -> Verdict:
    """Eigenvalue test for a strongly regular Neumaier parameter set.

    Passes iff m = mu/a is an integer, the clique meets the Hoffman bound
    (c = 1 + k/m, a = mu/m), and the SRG eigenvalue equation
    x^2 - (lambda - mu) x - (k - mu) = 0 has roots c - a - 1 and -m.
    """
    k, lam, a, c, mu = params.k, params.lam, params.a, params.c, params.mu
    if a < 1 or mu < 1:
        return Verdict(False, "requires a >= 1 and mu >= 1")
    if mu % a:
        return Verdict(False, f"a={a} does not divide mu={mu}")
    m = mu // a
    details = {"m": m}
    if Fraction(c) != 1 + Fraction(k, m):
        return Verdict(False, f"c={c} != 1 + k/m = {1 + Fraction(k, m)}", details)
    if Fraction(a) != Fraction(mu, m):
        return Verdict(False, f"a={a} != mu/m", details)

    def quad(x):
        return x * x - (lam - mu) * x - (k - mu)

    if quad(-m) != 0:
        return Verdict(False, f"-m={-m} is not a root of x^2 - ({lam - mu})x - ({k - mu})", details)
    if quad(c - a - 1) != 0:
        return Verdict(False, f"c-a-1={c - a - 1} is not a root of the eigenvalue equation", details)
    return Verdict(True, details=details)


def quotient_char_poly(q: Sequence[Sequence[int]]) -> list[Fraction]:
    """Characteristic polynomial of a small integer matrix, ascending coefficients."""
    n = len(q)
    a = [[Fraction(x) for x in row] for row in q]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            m[i][i] += coeffs[n - k + 1]
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
        m = am
    return coeffs


def integer_eigenvalues_of_matrix(q: Sequence[Sequence[int]]) -> dict[int, int]:
    coeffs = quotient_char_poly(q)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("integer matrix with non-integer characteristic polynomial")
    return integer_spectrum(CharPoly(tuple(int(c) for c in coeffs))).integer_roots
