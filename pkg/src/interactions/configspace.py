"""Configuration spaces S^X over finite site graphs and a bounded IQ checker.

Configurations are encoded as integers in base |S| with site 0 the most
significant digit, so integer order is lexicographic order on tuples.
A check over a finite family of graphs can only refute irreducible
quantification; a PASS certifies the tested graphs and nothing more.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .consv import compute_consv
from .core import Interaction, InteractionError
from .relations import is_exchangeable, is_separable

DEFAULT_BUDGET = 10**6
BUDGET_ENV = "INTERACTIONS_BUDGET"


class BudgetError(InteractionError):
    """The configuration space is larger than the allowed budget."""


@dataclass(frozen=True)
class SiteGraph:
    n: int
    edges: frozenset
    name: str = ""
    connected: bool = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise InteractionError("a site graph needs at least one site")
        sym = set()
        for x, y in self.edges:
            if not (0 <= x < self.n and 0 <= y < self.n):
                raise InteractionError(f"site edge {(x, y)} out of range")
            if x != y:
                sym.add((x, y))
                sym.add((y, x))
        object.__setattr__(self, "edges", frozenset(sym))
        object.__setattr__(self, "connected", _connected(self.n, sym))

    def __str__(self) -> str:
        return self.name or f"graph(n={self.n}, |E|={len(self.edges) // 2})"


def _connected(n: int, edges) -> bool:
    adj: dict = {i: [] for i in range(n)}
    for x, y in edges:
        adj[x].append(y)
    seen = {0}
    stack = [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def path(n: int) -> SiteGraph:
    return SiteGraph(n, frozenset((i, i + 1) for i in range(n - 1)), f"path({n})")


def cycle(n: int) -> SiteGraph:
    if n < 3:
        raise InteractionError("a cycle needs at least 3 sites")
    return SiteGraph(n, frozenset((i, (i + 1) % n) for i in range(n)), f"cycle({n})")


def star(n: int) -> SiteGraph:
    return SiteGraph(n, frozenset((0, i) for i in range(1, n)), f"star({n})")


def complete_graph(n: int) -> SiteGraph:
    return SiteGraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)), f"complete({n})")


FAMILY_BUILDERS = {"paths": path, "cycles": cycle, "stars": star, "complete": complete_graph}


def parse_family(text: str) -> list[SiteGraph]:
    """Parse ``paths:2..5,cycles:3..4,stars:3..4,complete:3``."""
    graphs = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        m = re.fullmatch(r"(paths?|cycles?|stars?|complete):(\d+)(?:\.\.(\d+))?", part)
        if not m:
            raise InteractionError(f"bad graph family item {part!r}")
        kind = m.group(1)
        kind = kind if kind == "complete" else kind.rstrip("s") + "s"
        lo = int(m.group(2))
        hi = int(m.group(3) or lo)
        graphs += [FAMILY_BUILDERS[kind](k) for k in range(lo, hi + 1)]
    return graphs


DEFAULT_FAMILY = "paths:2..5,cycles:3..4"


@dataclass(frozen=True)
class Configuration:
    values: tuple[int, ...]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def shuffle(eta: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """eta^sigma with eta^sigma[z] = eta[sigma[z]]."""
    if sorted(sigma) != list(range(len(eta))):
        raise InteractionError(f"site map {tuple(sigma)} is not a bijection")
    return tuple(eta[sigma[z]] for z in range(len(eta)))


@dataclass
class ConfigSpaceAnalysis:
    interaction: Interaction
    site_graph: SiteGraph
    component_labels: np.ndarray = field(repr=False)
    fiber_labels: np.ndarray = field(repr=False)
    n_components: int
    n_fibers: int
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]]

    @property
    def verdict(self) -> str:
        return "MATCH" if self.witness is None else "MISMATCH"

    def refines(self) -> bool:
        """Every transition component lies inside a single conserved fiber."""
        pairs = np.unique(np.stack([self.component_labels, self.fiber_labels]), axis=1)
        return pairs.shape[1] == self.n_components

    def component_of(self, eta: Sequence[int]) -> int:
        return int(self.component_labels[encode(eta, self.interaction.size)])

    def to_json(self) -> dict:
        return {
            "graph": str(self.site_graph),
            "sites": self.site_graph.n,
            "configurations": int(self.component_labels.size),
            "components": self.n_components,
            "fibers": self.n_fibers,
            "verdict": self.verdict,
            "witness": [list(w) for w in self.witness] if self.witness else None,
        }


def encode(eta: Sequence[int], size: int) -> int:
    code = 0
    for s in eta:
        code = code * size + int(s)
    return code


def decode(code: int, size: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        code, r = divmod(code, size)
        out.append(r)
    return tuple(reversed(out))


def resolve_budget(budget: Optional[int]) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def _integer_basis(inter: Interaction) -> list[list[int]]:
    out = []
    for v in compute_consv(inter).vectors:
        m = lcm(*(Fraction(x).denominator for x in v))
        out.append([int(x * m) for x in v])
    return out


def transition_components(inter: Interaction, g: SiteGraph) -> tuple[int, np.ndarray]:
    """Connected components of (S^X, Phi_E); labels indexed by configuration code."""
    size, n = inter.size, g.n
    total = size**n
    codes = np.arange(total, dtype=np.int64)
    weights = [size ** (n - 1 - x) for x in range(n)]
    digits = [(codes // w) % size for w in weights]

    by_source: dict = {}
    for s, t in inter.edges:
        if s != t:
            by_source.setdefault(s, []).append(t)

    src_parts, dst_parts = [], []
    for x, y in g.edges:
        pair = digits[x] * size + digits[y]
        order = np.argsort(pair, kind="stable")
        bounds = np.searchsorted(pair[order], np.arange(size * size + 1))
        for (a, b), targets in by_source.items():
            src = order[bounds[a * size + b]: bounds[a * size + b + 1]]
            if src.size == 0:
                continue
            for c, d in targets:
                src_parts.append(src)
                dst_parts.append(src + (c - a) * weights[x] + (d - b) * weights[y])
    if src_parts:
        src = np.concatenate(src_parts)
        dst = np.concatenate(dst_parts)
    else:
        src = dst = np.zeros(0, dtype=np.int64)
    adj = coo_matrix((np.ones(src.size, dtype=np.float32), (src, dst)), shape=(total, total)).tocsr()
    count, labels = connected_components(adj, directed=False)
    return count, labels


def fiber_labels(inter: Interaction, g: SiteGraph) -> tuple[int, np.ndarray]:
    """Partition of S^X by the vector of conserved sums over all sites."""
    size, n = inter.size, g.n
    total = size**n
    codes = np.arange(total, dtype=np.int64)
    basis = _integer_basis(inter)
    if not basis:
        return 1, np.zeros(total, dtype=np.int64)
    sums = np.zeros((len(basis), total), dtype=np.int64)
    for x in range(n):
        d = (codes // size ** (n - 1 - x)) % size
        for r, v in enumerate(basis):
            sums[r] += np.asarray(v, dtype=np.int64)[d]
    _, labels = np.unique(sums, axis=1, return_inverse=True)
    labels = labels.reshape(-1)
    return int(labels.max()) + 1, labels


def _relabel_by_first(labels: np.ndarray) -> np.ndarray:
    """Renumber so label order follows first occurrence (deterministic output)."""
    _, first = np.unique(labels, return_index=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(first.size)
    return rank[labels]


def analyze_config_space(inter: Interaction, g: SiteGraph, budget: Optional[int] = None) -> ConfigSpaceAnalysis:
    if not g.connected:
        raise InteractionError(f"site graph {g} is not connected")
    budget = resolve_budget(budget)
    total = inter.size**g.n
    if total > budget:
        raise BudgetError(f"{total} configurations on {g} exceed budget {budget}")

    ncomp, comp = transition_components(inter, g)
    nfib, fib = fiber_labels(inter, g)
    comp = _relabel_by_first(comp)
    fib = _relabel_by_first(fib)

    witness = None
    if ncomp != nfib:
        # least eta whose fiber holds a second component, then its least partner
        pairs = np.unique(np.stack([fib, comp]), axis=1)
        split = np.bincount(pairs[0], minlength=nfib) > 1
        eta = int(np.nonzero(split[fib])[0][0])
        same_fiber = np.nonzero(fib == fib[eta])[0]
        partner = int(same_fiber[comp[same_fiber] != comp[eta]][0])
        witness = (decode(eta, inter.size, g.n), decode(partner, inter.size, g.n))
    return ConfigSpaceAnalysis(inter, g, comp, fib, ncomp, nfib, witness)


@dataclass
class IQReport:
    verdict: str
    analyses: list[ConfigSpaceAnalysis]
    separable: bool
    exchangeable: bool

    @property
    def failure(self) -> Optional[ConfigSpaceAnalysis]:
        return next((a for a in self.analyses if a.witness is not None), None)

    def to_json(self) -> dict:
        fail = self.failure
        return {
            "verdict": self.verdict,
            "note": "FAIL disproves irreducible quantification; PASS only covers the listed graphs",
            "separable": self.separable,
            "exchangeable": self.exchangeable,
            "graphs": [a.to_json() for a in self.analyses],
            "witness": None
            if fail is None
            else {"graph": str(fail.site_graph), "configurations": [list(w) for w in fail.witness]},
        }


def derived_checks(inter: Interaction) -> dict:
    """Cheap necessary conditions: one-site (separable) and two-site (exchangeable)."""
    sep = is_separable(inter)
    exch = is_exchangeable(inter)
    failed = [name for name, ok in (("separable", sep), ("exchangeable", exch)) if not ok]
    return {"separable": sep, "exchangeable": exch, "failed": failed}


def check_iq_bounded(
    inter: Interaction,
    family: Iterable[SiteGraph] | str = DEFAULT_FAMILY,
    budget: Optional[int] = None,
    stop_on_fail: bool = True,
) -> IQReport:
    if isinstance(family, str):
        family = parse_family(family)
    checks = derived_checks(inter)
    analyses = []
    verdict = "PASS"
    for g in family:
        a = analyze_config_space(inter, g, budget)
        analyses.append(a)
        if a.witness is not None:
            verdict = "FAIL"
            if stop_on_fail:
                break
    return IQReport(verdict, analyses, checks["separable"], checks["exchangeable"])
