"""Conserved quantities of an interaction, in exact rational arithmetic.

A conserved quantity is a function xi on the states with
xi(s1) + xi(s2) == xi(t1) + xi(t2) for every edge ((s1, s2), (t1, t2)).
Constants are always conserved; we quotient them out by fixing xi(0) = 0,
so the returned basis is a concrete subspace with a canonical (RREF) form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import Interaction, StateSet, Vertex, components

RationalVector = tuple[Fraction, ...]


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Zero rows are dropped."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        if lead != 1:
            m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """A basis of {x : A x = 0}, one vector per free column."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def constraint_rows(inter: Interaction) -> list[list[int]]:
    """One row per undirected non-loop edge, plus the normalization xi(0) = 0."""
    n = inter.size
    rows = []
    for (a, b), (c, d) in inter.undirected_edges():
        row = [0] * n
        row[a] += 1
        row[b] += 1
        row[c] -= 1
        row[d] -= 1
        if any(row):
            rows.append(row)
    norm = [0] * n
    norm[0] = 1
    rows.append(norm)
    return rows


@dataclass(frozen=True)
class ConservedBasis:
    """Basis of Consv(S) with xi(state 0) = 0, in RREF."""

    states: StateSet
    vectors: tuple[RationalVector, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def size(self) -> int:
        return len(self.states)

    def values(self, s: int) -> tuple[Fraction, ...]:
        """The conserved-value vector (xi^1(s), ..., xi^c(s)) of state s."""
        return tuple(v[s] for v in self.vectors)

    def pair_values(self, v: Vertex) -> tuple[Fraction, ...]:
        return tuple(pair_sum(xi, v) for xi in self.vectors)

    def rows(self) -> list[list[str]]:
        return [[format_rational(x) for x in vec] for vec in self.vectors]


def normalize_basis(vectors: Iterable[Sequence], size: int) -> tuple[RationalVector, ...]:
    """Canonical representative of span(vectors) + constants, modulo constants."""
    shifted = [[Fraction(x) - Fraction(v[0]) for x in v] for v in vectors]
    red, _ = rref(shifted)
    return tuple(tuple(row) for row in red)


def compute_consv(inter: Interaction) -> ConservedBasis:
    vectors = nullspace(constraint_rows(inter), inter.size)
    return ConservedBasis(inter.states, normalize_basis(vectors, inter.size))


def pair_sum(xi: Sequence, v: Vertex) -> Fraction:
    return Fraction(xi[v[0]]) + Fraction(xi[v[1]])


def config_sum(xi: Sequence, eta: Iterable[int]) -> Fraction:
    return sum((Fraction(xi[s]) for s in eta), Fraction(0))


def is_conserved(inter: Interaction, xi: Sequence) -> bool:
    if len(xi) != inter.size:
        raise ValueError(f"expected {inter.size} values, got {len(xi)}")
    return all(pair_sum(xi, s) == pair_sum(xi, t) for s, t in inter.edges)


def is_constant_on_components(inter: Interaction, xi: Sequence) -> bool:
    """Component form of the conservation test; agrees with :func:`is_conserved`."""
    for cell in components(inter):
        if len({pair_sum(xi, v) for v in cell}) > 1:
            return False
    return True


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
