"""Local-state sets, interactions on S x S, and their connected components."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


class InteractionError(ValueError):
    """Raised when an interaction or its input is malformed."""


@dataclass(frozen=True)
class StateSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        if not labels:
            raise InteractionError("state set must be non-empty")
        if len(set(labels)) != len(labels):
            raise InteractionError(f"state labels are not distinct: {labels}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def range(cls, size: int) -> "StateSet":
        """The canonical state set {0, ..., size-1}."""
        return cls(tuple(str(i) for i in range(size)))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    @property
    def kappa(self) -> int:
        return len(self.labels) - 1

    def index(self, label) -> int:
        return self.labels.index(str(label))


@dataclass(frozen=True)
class Interaction:
    """A symmetric edge set on the vertices S x S.

    Vertices are pairs of state indices; labels in ``states`` are for
    presentation only. Build instances with :func:`make_interaction`, which
    checks ranges and adds the reversed edges.
    """

    states: StateSet
    edges: frozenset = field(default_factory=frozenset)

    @property
    def size(self) -> int:
        return len(self.states)

    def vertices(self) -> list[Vertex]:
        n = self.size
        return [(i, j) for i in range(n) for j in range(n)]

    def undirected_edges(self) -> list[Edge]:
        """Each edge once (s < t), self-loops dropped, sorted."""
        return sorted((s, t) for s, t in self.edges if s < t)

    def sorted_edges(self, loops: bool = False) -> list[Edge]:
        return sorted(e for e in self.edges if loops or e[0] != e[1])

    def relabel(self, perm: Sequence[int]) -> "Interaction":
        """Image under the state map i -> perm[i] (perm a bijection)."""
        if sorted(perm) != list(range(self.size)):
            raise InteractionError(f"not a permutation of the states: {perm}")
        labels = [""] * self.size
        for i, p in enumerate(perm):
            labels[p] = self.states.labels[i]

        def f(v):
            return (perm[v[0]], perm[v[1]])

        return Interaction(StateSet(tuple(labels)), frozenset((f(s), f(t)) for s, t in self.edges))

    def with_edges(self, extra: Iterable[Edge]) -> "Interaction":
        return make_interaction(self.states, set(self.edges) | set(extra))

    def __repr__(self) -> str:
        return f"Interaction(|S|={self.size}, edges={len(self.undirected_edges())})"


def make_interaction(states: StateSet | int | Sequence[str], raw_edges: Iterable) -> Interaction:
    """Return the symmetric closure of ``raw_edges`` on ``states``.

    ``states`` may be a :class:`StateSet`, a size, or a sequence of labels.
    Each edge is a pair of vertices, each vertex a pair of state indices.
    """
    if isinstance(states, int):
        states = StateSet.range(states)
    elif not isinstance(states, StateSet):
        states = StateSet(tuple(states))
    n = len(states)
    edges = set()
    for raw in raw_edges:
        try:
            (a, b), (c, d) = raw
            s, t = (int(a), int(b)), (int(c), int(d))
        except (TypeError, ValueError):
            raise InteractionError(f"malformed edge {raw!r}") from None
        if not all(0 <= x < n for x in (*s, *t)):
            raise InteractionError(f"edge {s}->{t} has a state index outside 0..{n - 1}")
        edges.add((s, t))
        edges.add((t, s))
    return Interaction(states, frozenset(edges))


@dataclass(frozen=True)
class ComponentPartition:
    cells: tuple[tuple[Vertex, ...], ...]
    lookup: dict = field(compare=False, repr=False)

    def cell_of(self, v: Vertex) -> int:
        return self.lookup[v]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)


def _partition_from_union_find(parent: dict, vertices: list[Vertex]) -> ComponentPartition:
    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    groups: dict = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    cells = sorted(tuple(sorted(g)) for g in groups.values())
    lookup = {v: i for i, cell in enumerate(cells) for v in cell}
    return ComponentPartition(tuple(cells), lookup)


def partition_from_edges(size: int, edges: Iterable[Edge]) -> ComponentPartition:
    vertices = [(i, j) for i in range(size) for j in range(size)]
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, t in edges:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)
    return _partition_from_union_find(parent, vertices)


def components(inter: Interaction) -> ComponentPartition:
    """Connected components of the associated graph (S x S, phi).

    Cells are numbered by their least vertex in lexicographic order.
    """
    return partition_from_edges(inter.size, inter.edges)


def same_component(inter: Interaction, s: Vertex, t: Vertex) -> bool:
    part = components(inter)
    return part.cell_of(tuple(s)) == part.cell_of(tuple(t))


# -- JSON ------------------------------------------------------------------

def interaction_to_dict(inter: Interaction) -> dict:
    return {
        "states": list(inter.states.labels),
        "edges": [[list(s), list(t)] for s, t in inter.sorted_edges(loops=False)],
    }


def interaction_from_dict(data: dict) -> Interaction:
    try:
        states = StateSet(tuple(data["states"]))
        raw = data.get("edges", [])
    except (KeyError, TypeError):
        raise InteractionError("interaction JSON needs 'states' and 'edges'") from None
    return make_interaction(states, raw)


def dumps(inter: Interaction) -> str:
    return json.dumps(interaction_to_dict(inter))


def loads(text: str) -> Interaction:
    return interaction_from_dict(json.loads(text))
