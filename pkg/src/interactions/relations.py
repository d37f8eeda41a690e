"""Equivalence, isomorphism and weak equivalence of interactions.

Two interactions on sets of equal size are equivalent when some bijection
of states carries one conserved space onto the other. The canonical form
below is the lexicographically least RREF basis over all relabelings, so
equal forms mean equivalent interactions and the form is a hashable key.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .consv import (
    ConservedBasis,
    compute_consv,
    format_rational,
    normalize_basis,
)
from .core import Interaction, InteractionError, components

MAX_CANONICAL_SIZE = 7
MAX_WEAK_SIZE = 5


class SizeGuardError(InteractionError):
    """The requested exhaustive search exceeds its size guard."""


@dataclass(frozen=True, order=True)
class CanonicalForm:
    size: int
    dim: int
    matrix: tuple[tuple[Fraction, ...], ...]

    def report(self) -> str:
        lines = [f"dim {self.dim}"]
        lines += [" ".join(format_rational(x) for x in row) for row in self.matrix]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "dim": self.dim,
            "matrix": [[format_rational(x) for x in row] for row in self.matrix],
        }


def permute_basis(vectors: Sequence[Sequence[Fraction]], perm: Sequence[int]) -> tuple:
    """Basis of the relabeled space, where new state i is old state perm[i]."""
    moved = [[v[p] for p in perm] for v in vectors]
    return normalize_basis(moved, len(perm))


@lru_cache(maxsize=None)
def _permutations(n: int) -> tuple:
    return tuple(itertools.permutations(range(n)))


def canonical_form_of_basis(vectors: tuple, size: int) -> CanonicalForm:
    if size > MAX_CANONICAL_SIZE:
        raise SizeGuardError(f"state set too large for canonicalization ({size} > {MAX_CANONICAL_SIZE})")
    dim = len(vectors)
    if dim == 0 or dim == size - 1:
        # nothing to choose: {0} or the whole quotient space
        return CanonicalForm(size, dim, normalize_basis(vectors, size) if dim else ())
    best = None
    for perm in _permutations(size):
        m = permute_basis(vectors, perm)
        if best is None or m < best:
            best = m
    return CanonicalForm(size, dim, best)


def canonical_form(inter: Interaction) -> CanonicalForm:
    if inter.size > MAX_CANONICAL_SIZE:
        raise SizeGuardError(f"state set too large for canonicalization ({inter.size} > {MAX_CANONICAL_SIZE})")
    return canonical_form_of_basis(compute_consv(inter).vectors, inter.size)


def equivalent(a: Interaction, b: Interaction) -> bool:
    if a.size != b.size:
        return False
    return canonical_form(a) == canonical_form(b)


def equivalence_map(a: Interaction, b: Interaction) -> Optional[tuple[int, ...]]:
    """A bijection sigma (state i of a -> sigma[i] of b) matching conserved spaces."""
    if a.size != b.size:
        return None
    if a.size > MAX_CANONICAL_SIZE:
        raise SizeGuardError("state set too large for canonicalization")
    va, vb = compute_consv(a).vectors, compute_consv(b).vectors
    if len(va) != len(vb):
        return None
    for sigma in _permutations(a.size):
        # pull b's space back along sigma: (xi o sigma)(i) = xi(sigma[i])
        if permute_basis(vb, sigma) == va:
            return sigma
    return None


def isomorphic(a: Interaction, b: Interaction) -> Optional[tuple[int, ...]]:
    """A state bijection that is an equivalence and maps edges onto edges."""
    if a.size != b.size:
        return None
    if a.size > MAX_CANONICAL_SIZE:
        raise SizeGuardError("state set too large for canonicalization")
    ea = {e for e in a.edges if e[0] != e[1]}
    eb = {e for e in b.edges if e[0] != e[1]}
    if len(ea) != len(eb):
        return None
    va, vb = compute_consv(a).vectors, compute_consv(b).vectors
    if len(va) != len(vb):
        return None
    for sigma in _permutations(a.size):
        image = {((sigma[s], sigma[t]), (sigma[u], sigma[v])) for (s, t), (u, v) in ea}
        if image == eb and permute_basis(vb, sigma) == va:
            return sigma
    return None


def _pullback(vectors, f: Sequence[int]) -> list[list[Fraction]]:
    """Compose each function on the target with the map f."""
    return [[v[f[i]] for i in range(len(f))] for v in vectors]


def _induces_iso(source: ConservedBasis, target: ConservedBasis, f) -> bool:
    """Does f: S_target -> S_source pull Consv(source) isomorphically onto Consv(target)?

    Dimensions are assumed equal, so equality of spans is enough.
    """
    return normalize_basis(_pullback(source.vectors, f), target.size) == target.vectors


def weakly_equivalent(a: Interaction, b: Interaction):
    """A pair (iota: S_a -> S_b, iota_prime: S_b -> S_a) of inverse pullbacks, or None.

    Composition with iota maps Consv(b) onto Consv(a) isomorphically and
    composition with iota_prime is its inverse. Maps need not be injective
    or surjective.
    """
    if a.size > MAX_WEAK_SIZE or b.size > MAX_WEAK_SIZE:
        raise SizeGuardError(f"weak equivalence search limited to |S| <= {MAX_WEAK_SIZE}")
    ba, bb = compute_consv(a), compute_consv(b)
    if ba.dim != bb.dim:
        return None
    iotas = [
        f for f in itertools.product(range(b.size), repeat=a.size) if _induces_iso(bb, ba, f)
    ]
    if not iotas:
        return None
    primes = [
        g for g in itertools.product(range(a.size), repeat=b.size) if _induces_iso(ba, bb, g)
    ]
    for f in iotas:
        for g in primes:
            # (xi o f) o g == xi mod constants, for every xi in Consv(b)
            back = [[v[f[g[j]]] for j in range(b.size)] for v in bb.vectors]
            if all(
                len({x - y for x, y in zip(w, v)}) == 1 for w, v in zip(back, bb.vectors)
            ):
                return f, g
    return None


def is_separable(inter: Interaction) -> bool:
    basis = compute_consv(inter)
    cols = [basis.values(s) for s in range(inter.size)]
    return len(set(cols)) == len(cols)


def is_exchangeable(inter: Interaction) -> bool:
    part = components(inter)
    n = inter.size
    return all(part.cell_of((i, j)) == part.cell_of((j, i)) for i in range(n) for j in range(i + 1, n))
