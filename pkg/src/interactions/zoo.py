"""Named interactions used throughout the package and its tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import WedgeSpec, box_power, wedge
from .core import Interaction, InteractionError, StateSet, make_interaction


def exclusion() -> Interaction:
    return make_interaction(2, [((1, 0), (0, 1))])


def k_exclusion(kappa: int) -> Interaction:
    """Up to kappa particles per site; one particle hops at a time."""
    if kappa < 0:
        raise InteractionError("k-exclusion needs kappa >= 0")
    edges = [
        ((j, k), (j - 1, k + 1))
        for j in range(1, kappa + 1)
        for k in range(kappa)
    ]
    return make_interaction(kappa + 1, edges)


def multi_species(kappa: int) -> Interaction:
    if kappa < 0:
        raise InteractionError("multi-species needs kappa >= 0")
    n = kappa + 1
    return make_interaction(n, [((j, k), (k, j)) for j in range(n) for k in range(n) if j != k])


def glauber() -> Interaction:
    # transcribed from the spin-flip picture: flip either spin, four-cycle on {-1,1}^2
    # index 0 is spin -1, index 1 is spin +1
    edges = [
        ((0, 0), (1, 0)),
        ((0, 0), (0, 1)),
        ((1, 1), (1, 0)),
        ((1, 1), (0, 1)),
    ]
    return make_interaction(StateSet(("-1", "1")), edges)


def complete(kappa: int) -> Interaction:
    n = kappa + 1
    verts = [(i, j) for i in range(n) for j in range(n)]
    return make_interaction(n, [(s, t) for s in verts for t in verts if s < t])


def lge(kappa: int) -> Interaction:
    """Lattice gas with energy: exclusion wedge (kappa-1)-exclusion along 1 and 0."""
    if kappa < 1:
        raise InteractionError("lge needs kappa >= 1")
    return wedge(WedgeSpec(exclusion(), k_exclusion(kappa - 1), base_left=1, base_right=0))


def lge_explicit(kappa: int) -> Interaction:
    """The same interaction written directly on {0, ..., kappa}.

    Hops (j, k) <-> (j-1, k+1) need k >= 1: with k = 0 the move would turn
    an energy unit into a new particle and break particle conservation.
    """
    n = kappa + 1
    edges = [((j, k), (j - 1, k + 1)) for j in range(2, n) for k in range(1, kappa)]
    edges += [((j, k), (k, j)) for j in (0, 1) if j < n for k in range(n) if k != j]
    return make_interaction(n, edges)


def n_lane(kappa: int, lanes: int) -> Interaction:
    """Box power of kappa-exclusion; state index encodes (m_1, ..., m_N) row-major."""
    return box_power(k_exclusion(kappa), lanes)


def n_lane_explicit(kappa: int, lanes: int) -> Interaction:
    """One particle moves within one lane, from the first site to the second."""
    import itertools

    n = kappa + 1
    tuples = list(itertools.product(range(n), repeat=lanes))

    def idx(t):
        out = 0
        for m in t:
            out = out * n + m
        return out

    edges = []
    for m in tuples:
        for p in tuples:
            for i in range(lanes):
                if m[i] >= 1 and p[i] < kappa:
                    m2 = list(m)
                    p2 = list(p)
                    m2[i] -= 1
                    p2[i] += 1
                    edges.append(((idx(m), idx(p)), (idx(m2), idx(p2))))
    return make_interaction(n ** lanes, edges)


def two_species_annihilation() -> Interaction:
    """Two species on {-1, 0, +1} that exchange with vacancies and annihilate in pairs."""
    states = StateSet(("-1", "0", "+1"))
    m, z, p = 0, 1, 2
    edges = [
        ((m, z), (z, m)),
        ((p, z), (z, p)),
        ((p, m), (z, z)),
        ((z, z), (m, p)),
    ]
    return make_interaction(states, edges)


def fig14() -> Interaction:
    # transcribed: multi-species swaps plus (1,1)-(0,2), (1,1)-(2,0), (2,2)-(1,3), (2,2)-(3,1).
    # Conserved space is spanned by xi(j) = j, but the fiber of value 3 splits
    # into {(0,3),(3,0)} and {(1,2),(2,1)}.
    base = multi_species(3)
    extra = [
        ((1, 1), (0, 2)),
        ((1, 1), (2, 0)),
        ((2, 2), (1, 3)),
        ((2, 2), (3, 1)),
    ]
    return base.with_edges(extra)


def new_interaction() -> Interaction:
    """Lattice gas with energy on 4 states plus the move (1,1) <-> (0,3)."""
    return lge(3).with_edges([((1, 1), (0, 3))])


def mips() -> Interaction:
    # transcribed: 0 empty, 1 and 2 particles of opposite orientation;
    # particles hop onto empty sites and flip orientation freely.
    edges = []
    for a in (1, 2):
        edges.append(((a, 0), (0, a)))
    flip = {1: 2, 2: 1}
    for a in range(3):
        for b in range(3):
            if a in flip:
                edges.append(((a, b), (flip[a], b)))
            if b in flip:
                edges.append(((a, b), (a, flip[b])))
    return make_interaction(StateSet(("0", "+", "-")), edges)


def exclusion_wedge_glauber() -> Interaction:
    return wedge(WedgeSpec(exclusion(), glauber(), base_left=1, base_right=0))


def singleton() -> Interaction:
    return make_interaction(1, [])


@dataclass(frozen=True)
class ZooEntry:
    name: str
    builder: Callable[..., Interaction]
    params: tuple[str, ...]
    expected_dim: Callable[..., int]
    expected_separable: bool
    description: str
    defaults: tuple = ()

    def build(self, *args) -> Interaction:
        args = tuple(args) or self.defaults
        if len(args) != len(self.params):
            raise InteractionError(f"{self.name} takes parameters {self.params}, got {args}")
        return self.builder(*args)

    def dim(self, *args) -> int:
        args = tuple(args) or self.defaults
        return self.expected_dim(*args)


ZOO: dict[str, ZooEntry] = {
    e.name: e
    for e in [
        ZooEntry("exclusion", exclusion, (), lambda: 1, True, "simple exclusion on {0,1}"),
        ZooEntry("k-exclusion", k_exclusion, ("kappa",), lambda k: 1, True,
                 "at most kappa particles per site", (2,)),
        ZooEntry("multi-species", multi_species, ("kappa",), lambda k: k, True,
                 "kappa species swapping with each other and with vacancies", (2,)),
        ZooEntry("glauber", glauber, (), lambda: 0, False, "spin flips on {-1,1}"),
        ZooEntry("lge", lge, ("kappa",), lambda k: 2 if k >= 2 else 1, True,
                 "lattice gas with energy", (3,)),
        ZooEntry("n-lane", n_lane, ("kappa", "lanes"), lambda k, n: n, True,
                 "N parallel lanes of kappa-exclusion", (1, 2)),
        ZooEntry("two-species-annihilation", two_species_annihilation, (), lambda: 1, True,
                 "two species with annihilation and creation on {-1,0,+1}"),
        ZooEntry("fig14", fig14, (), lambda: 1, True,
                 "separable and exchangeable, equivalent to 3-exclusion, not irreducibly quantified"),
        ZooEntry("new-interaction", new_interaction, (), lambda: 1, True,
                 "lattice gas with energy where two energy units convert to a particle"),
        ZooEntry("mips", mips, (), lambda: 1, False,
                 "hopping particles with two orientations that flip"),
        ZooEntry("complete", complete, ("kappa",), lambda k: 0, False,
                 "complete graph on S x S", (1,)),
    ]
}


def build(name: str, *params: int) -> Interaction:
    try:
        entry = ZOO[name]
    except KeyError:
        raise InteractionError(f"unknown zoo entry {name!r}; known: {', '.join(ZOO)}") from None
    return entry.build(*params)


def expected_separable(name: str, *params) -> bool:
    entry = ZOO[name]
    if name == "complete":
        args = tuple(params) or entry.defaults
        return args[0] == 0
    return entry.expected_separable


def named_members(size: int) -> list[tuple[str, Interaction]]:
    """Named interactions on ``size`` states, in naming priority order."""
    kappa = size - 1
    out: list[tuple[str, Interaction]] = []
    if size == 1:
        return [("singleton", singleton())]
    if kappa == 1:
        out += [("exclusion", exclusion()), ("glauber", glauber())]
    out.append((f"{kappa}-exclusion", k_exclusion(kappa)))
    out.append((f"{kappa}-multi-species", multi_species(kappa)))
    if kappa >= 2:
        out.append((f"{kappa}-lge", lge(kappa)))
    for k in range(1, kappa + 1):
        lanes = 1
        while (k + 1) ** lanes < size:
            lanes += 1
        if lanes >= 2 and (k + 1) ** lanes == size:
            out.append((f"{lanes}-lane-{k}-exclusion", n_lane(k, lanes)))
    if size == 3:
        out += [("two-species-annihilation", two_species_annihilation()), ("mips", mips())]
    if size == 4:
        out += [("new-interaction", new_interaction()), ("fig14", fig14())]
    out.append(("complete", complete(kappa)))
    return out


def parse_spec(text: str) -> Interaction:
    """Build from ``name`` or ``name:p1,p2`` (also accepts ``name:p1:p2``)."""
    name, _, rest = text.partition(":")
    items = [x.strip() for x in rest.replace(":", ",").split(",") if x.strip()]
    try:
        params = [int(x) for x in items]
    except ValueError:
        raise InteractionError(f"zoo parameters must be integers, got {rest!r}") from None
    return build(name, *params)


def lookup_name(name: str) -> Optional[ZooEntry]:
    return ZOO.get(name)
