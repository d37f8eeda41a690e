"""Enumeration of equivalence classes of interactions on {0, ..., kappa}.

Every class contains a completion that contains the multi-species
interaction, and every such completion is reached from the multi-species
one by joining two fibers at a time, each join removing exactly one
conserved dimension. The search walks those joins level by level and keys
classes by their canonical form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .algebra import completion_from_basis, merged_basis
from .consv import compute_consv, format_rational
from .core import Interaction, InteractionError, StateSet, interaction_to_dict
from .relations import CanonicalForm, SizeGuardError, canonical_form, canonical_form_of_basis
from .zoo import multi_species, named_members

log = logging.getLogger(__name__)

MAX_KAPPA = 4


@dataclass(frozen=True)
class ClassRecord:
    canonical: CanonicalForm
    representative: Interaction
    dim: int
    separable: bool
    name: Optional[str] = None

    @property
    def basis(self):
        return compute_consv(self.representative).vectors

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "separable": self.separable,
            "name": self.name,
            "basis": [[format_rational(x) for x in row] for row in self.basis],
            "canonical": self.canonical.to_json(),
            "edge_count": len(self.representative.undirected_edges()),
            "representative": interaction_to_dict(self.representative),
        }


@dataclass(frozen=True)
class ClassCatalog:
    kappa: int
    classes: tuple[ClassRecord, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def separable(self) -> "ClassCatalog":
        return ClassCatalog(self.kappa, tuple(c for c in self.classes if c.separable))

    def at_dim(self, dim: int) -> list[ClassRecord]:
        return [c for c in self.classes if c.dim == dim]

    def dim_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for c in self.classes:
            counts[c.dim] = counts.get(c.dim, 0) + 1
        return counts

    def to_json(self) -> dict:
        return {"kappa": self.kappa, "classes": [c.to_json() for c in self.classes]}


def _check_kappa(kappa: int) -> None:
    if kappa > MAX_KAPPA:
        raise SizeGuardError(f"classification supports kappa <= {MAX_KAPPA}, got {kappa}")
    if kappa < 1:
        raise InteractionError(f"classification needs kappa >= 1, got {kappa}")


def _separable(vectors, size: int) -> bool:
    cols = {tuple(v[s] for v in vectors) for s in range(size)}
    return len(cols) == size


def _fiber_representatives(vectors, size: int) -> list:
    """Least vertex of each fiber of the pair-sum map, in vertex order."""
    seen = {}
    for i in range(size):
        for j in range(size):
            key = tuple(v[i] + v[j] for v in vectors)
            seen.setdefault(key, (i, j))
    return sorted(seen.values())


@lru_cache(maxsize=None)
def _names(size: int) -> dict:
    names: dict = {}
    for name, inter in named_members(size):
        names.setdefault(canonical_form(inter), name)
    return names


@lru_cache(maxsize=None)
def _search(kappa: int) -> ClassCatalog:
    size = kappa + 1
    states = StateSet.range(size)
    root = compute_consv(multi_species(kappa)).vectors
    found: dict[CanonicalForm, tuple] = {canonical_form_of_basis(root, size): root}
    frontier = [root]
    labelled_seen = {root}
    while frontier:
        nxt = []
        for vectors in frontier:
            reps = _fiber_representatives(vectors, size)
            for s, t in combinations(reps, 2):
                new = merged_basis(vectors, s, t)
                assert len(new) == len(vectors) - 1, "a join must drop exactly one dimension"
                if new in labelled_seen:
                    continue
                labelled_seen.add(new)
                form = canonical_form_of_basis(new, size)
                if form not in found:
                    found[form] = new
                    nxt.append(new)
        log.debug("kappa=%d: %d classes after level, %d new", kappa, len(found), len(nxt))
        frontier = nxt

    names = _names(size)
    records = []
    for form, vectors in found.items():
        rep = completion_from_basis(states, vectors)
        records.append(ClassRecord(form, rep, len(vectors), _separable(vectors, size), names.get(form)))
    records.sort(key=lambda r: (-r.dim, r.canonical.matrix))
    return ClassCatalog(kappa, tuple(records))


def classify(kappa: int, separable_only: bool = False) -> ClassCatalog:
    _check_kappa(kappa)
    catalog = _search(kappa)
    return catalog.separable() if separable_only else catalog


def classes_at_dim(kappa: int, dim: int) -> list[ClassRecord]:
    return classify(kappa).at_dim(dim)


def identify(inter: Interaction) -> Optional[ClassRecord]:
    _check_kappa(inter.size - 1)
    form = canonical_form(inter)
    for record in classify(inter.size - 1):
        if record.canonical == form:
            return record
    return None
