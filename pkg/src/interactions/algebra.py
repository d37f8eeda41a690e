"""Constructors on interactions: completion, single merge, wedge sum, box product."""

from __future__ import annotations

from dataclasses import dataclass

from .consv import compute_consv, normalize_basis
from .core import Interaction, InteractionError, StateSet, Vertex, make_interaction


class MergeError(InteractionError):
    """The two vertices already share every conserved value."""


def completion(inter: Interaction) -> Interaction:
    """All pairs of vertices with equal conserved values, self-loops included.

    The components of the result are exactly the fibers of the
    conserved-value map, and its conserved space is unchanged.
    """
    return completion_from_basis(inter.states, compute_consv(inter).vectors)


def merge(inter: Interaction, s: Vertex, t: Vertex) -> Interaction:
    """Add the edge s <-> t; requires the join to cut the conserved space by one."""
    s, t = tuple(s), tuple(t)
    basis = compute_consv(inter)
    if basis.pair_values(s) == basis.pair_values(t):
        raise MergeError(f"merge has no effect on Consv: {s} and {t} lie in one fiber")
    return inter.with_edges([(s, t)])


@dataclass(frozen=True)
class WedgeSpec:
    left: Interaction
    right: Interaction
    base_left: int = 0
    base_right: int = 0

    def __post_init__(self):
        if not 0 <= self.base_left < self.left.size:
            raise InteractionError(f"base_left {self.base_left} out of range")
        if not 0 <= self.base_right < self.right.size:
            raise InteractionError(f"base_right {self.base_right} out of range")


def wedge_index_maps(spec: WedgeSpec) -> tuple[list[int], list[int]]:
    """Positions of left and right states in the glued set.

    Left states keep their indices; the glued point is the left base; the
    remaining right states follow in order.
    """
    n1 = spec.left.size
    left = list(range(n1))
    right = []
    nxt = n1
    for j in range(spec.right.size):
        if j == spec.base_right:
            right.append(spec.base_left)
        else:
            right.append(nxt)
            nxt += 1
    return left, right


def wedge(spec: WedgeSpec) -> Interaction:
    lmap, rmap = wedge_index_maps(spec)
    n = spec.left.size + spec.right.size - 1

    labels = [""] * n
    for i, lab in enumerate(spec.left.states.labels):
        labels[lmap[i]] = f"L{lab}"
    for j, lab in enumerate(spec.right.states.labels):
        if j != spec.base_right:
            labels[rmap[j]] = f"R{lab}"
    labels[spec.base_left] = "*"

    edges = set()
    for (a, b), (c, d) in spec.left.edges:
        edges.add(((lmap[a], lmap[b]), (lmap[c], lmap[d])))
    for (a, b), (c, d) in spec.right.edges:
        edges.add(((rmap[a], rmap[b]), (rmap[c], rmap[d])))
    for s in lmap:
        for t in rmap:
            if s != t:
                edges.add(((s, t), (t, s)))
    return make_interaction(StateSet(tuple(labels)), edges)


def wedge_power(inter: Interaction, k: int, base: int = 0) -> Interaction:
    """k-fold wedge sum of ``inter`` with itself along ``base``."""
    if k < 1:
        raise InteractionError("wedge power needs k >= 1")
    out = inter
    for _ in range(k - 1):
        out = wedge(WedgeSpec(out, inter, base, base))
    return out


def box(left: Interaction, right: Interaction) -> Interaction:
    """Box product on S1 x S2, state (i, j) stored at index i * |S2| + j.

    A move keeps one factor's pair of states fixed and moves the other
    factor's pair along its own interaction.
    """
    n1, n2 = left.size, right.size

    def idx(i, j):
        return i * n2 + j

    labels = tuple(f"({a},{b})" for a in left.states.labels for b in right.states.labels)
    edges = set()
    # vertex ((i1, j1), (i2, j2)) holds factor pairs (i1, i2) and (j1, j2)
    for (a, b), (c, d) in left.edges:
        for j1 in range(n2):
            for j2 in range(n2):
                edges.add(((idx(a, j1), idx(b, j2)), (idx(c, j1), idx(d, j2))))
    for (a, b), (c, d) in right.edges:
        for i1 in range(n1):
            for i2 in range(n1):
                edges.add(((idx(i1, a), idx(i2, b)), (idx(i1, c), idx(i2, d))))
    return make_interaction(StateSet(labels), edges)


def box_power(inter: Interaction, n: int) -> Interaction:
    if n < 1:
        raise InteractionError("box power needs N >= 1")
    out = inter
    for _ in range(n - 1):
        out = box(out, inter)
    return out


def completion_from_basis(states: StateSet, vectors) -> Interaction:
    """Completion determined directly by a conserved basis (fibers become cliques)."""
    n = len(states)
    fibers: dict = {}
    for i in range(n):
        for j in range(n):
            fibers.setdefault(tuple(v[i] + v[j] for v in vectors), []).append((i, j))
    edges = frozenset((s, t) for cell in fibers.values() for s in cell for t in cell)
    return Interaction(states, edges)


def merged_basis(vectors, s: Vertex, t: Vertex) -> tuple:
    """Basis of the conserved space after joining s and t.

    Picks a vector whose pair sums differ at s and t and subtracts the
    right multiple of it from every other vector; the result is returned
    in normalized RREF. Raises :class:`MergeError` if s and t already agree.
    """
    diffs = [(v[t[0]] + v[t[1]]) - (v[s[0]] + v[s[1]]) for v in vectors]
    k = next((i for i, d in enumerate(diffs) if d != 0), None)
    if k is None:
        raise MergeError(f"merge has no effect on Consv: {s} and {t} lie in one fiber")
    pivot = vectors[k]
    out = [
        [a - (diffs[i] / diffs[k]) * b for a, b in zip(v, pivot)]
        for i, v in enumerate(vectors)
        if i != k
    ]
    return normalize_basis(out, len(pivot)) if out else ()
