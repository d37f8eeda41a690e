import itertools

import pytest
from hypothesis import given, settings

from interactions import (
    InteractionError,
    MergeError,
    WedgeSpec,
    box,
    completion,
    components,
    compute_consv,
    is_exchangeable,
    isomorphic,
    merge,
    wedge,
    wedge_power,
    zoo,
)
from interactions.algebra import completion_from_basis, merged_basis, wedge_index_maps

from test_core import interactions


def small_zoo():
    out = []
    for name, entry in zoo.ZOO.items():
        inter = entry.build()
        if inter.size <= 4:
            out.append((name, inter))
    out.append(("k-exclusion:3", zoo.k_exclusion(3)))
    out.append(("multi-species:3", zoo.multi_species(3)))
    return out


SMALL = small_zoo()


def fibers(inter):
    basis = compute_consv(inter)
    groups = {}
    for v in inter.vertices():
        groups.setdefault(basis.pair_values(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


@settings(max_examples=80, deadline=None)
@given(interactions(max_size=4))
def test_completion_components_are_fibers(inter):
    hat = completion(inter)
    assert sorted(components(hat).cells) == fibers(inter)
    assert compute_consv(hat).vectors == compute_consv(inter).vectors
    assert inter.edges <= hat.edges


@settings(max_examples=60, deadline=None)
@given(interactions(max_size=4))
def test_completion_is_idempotent(inter):
    assert completion(completion(inter)).edges == completion(inter).edges


def test_completion_contains_self_loops():
    hat = completion(zoo.exclusion())
    assert ((0, 0), (0, 0)) in hat.edges


def test_merge_drops_dimension_by_one():
    ms = zoo.multi_species(3)
    merged = merge(ms, (2, 2), (3, 3))
    assert compute_consv(merged).dim == 2
    assert merged_basis(compute_consv(ms).vectors, (2, 2), (3, 3)) == compute_consv(merged).vectors


def test_merge_same_fiber_rejected():
    with pytest.raises(MergeError):
        merge(zoo.exclusion(), (0, 1), (1, 0))


@settings(max_examples=60, deadline=None)
@given(interactions(max_size=4))
def test_merged_basis_matches_recomputation(inter):
    basis = compute_consv(inter)
    verts = inter.vertices()
    for s, t in itertools.islice(itertools.combinations(verts, 2), 0, None, 3):
        if basis.pair_values(s) == basis.pair_values(t):
            continue
        expected = compute_consv(completion(inter).with_edges([(s, t)])).vectors
        assert merged_basis(basis.vectors, s, t) == expected


@pytest.mark.parametrize("a,b", [(x, y) for x in SMALL for y in SMALL], ids=lambda p: p[0])
def test_wedge_dimension_adds(a, b):
    (_, left), (_, right) = a, b
    for bl, br in [(0, 0), (left.size - 1, right.size - 1)]:
        w = wedge(WedgeSpec(left, right, bl, br))
        assert w.size == left.size + right.size - 1
        assert compute_consv(w).dim == compute_consv(left).dim + compute_consv(right).dim


EXCH = [(n, i) for n, i in SMALL if is_exchangeable(i) and i.size <= 3]


@pytest.mark.parametrize("a,b", [(x, y) for x in EXCH for y in EXCH], ids=lambda p: p[0])
def test_box_dimension_adds_for_exchangeable(a, b):
    (_, left), (_, right) = a, b
    p = box(left, right)
    assert p.size == left.size * right.size
    assert compute_consv(p).dim == compute_consv(left).dim + compute_consv(right).dim


def test_wedge_index_maps():
    spec = WedgeSpec(zoo.exclusion(), zoo.k_exclusion(2), base_left=1, base_right=0)
    assert wedge_index_maps(spec) == ([0, 1], [1, 2, 3])


def test_wedge_base_out_of_range():
    with pytest.raises(InteractionError):
        WedgeSpec(zoo.exclusion(), zoo.exclusion(), base_left=2)


def test_wedge_adds_cross_swaps():
    w = wedge(WedgeSpec(zoo.exclusion(), zoo.exclusion()))
    assert ((1, 2), (2, 1)) in w.edges


@pytest.mark.parametrize("kappa", [1, 2, 3])
def test_wedge_power_of_exclusion_is_multi_species(kappa):
    sigma = isomorphic(wedge_power(zoo.exclusion(), kappa), zoo.multi_species(kappa))
    assert sigma is not None and sigma[0] == 0


def test_box_power_two_lane_explicit():
    assert zoo.n_lane(1, 2).edges == zoo.n_lane_explicit(1, 2).edges
    assert zoo.n_lane(2, 2).edges == zoo.n_lane_explicit(2, 2).edges


def test_lge_explicit_matches_wedge():
    for kappa in (1, 2, 3, 4):
        assert zoo.lge(kappa).edges == zoo.lge_explicit(kappa).edges
