from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interactions import compute_consv, config_sum, is_conserved, make_interaction, pair_sum, zoo
from interactions.consv import format_rational, is_constant_on_components, nullspace, parse_rational, rref

from oracles import oracle_dim
from test_core import interactions


def F(*xs):
    return tuple(Fraction(x) for x in xs)


def test_exclusion_basis():
    basis = compute_consv(zoo.exclusion())
    assert basis.dim == 1
    assert basis.vectors == (F(0, 1),)


def test_multi_species_standard_basis():
    basis = compute_consv(zoo.multi_species(3))
    assert basis.vectors == (F(0, 1, 0, 0), F(0, 0, 1, 0), F(0, 0, 0, 1))


def test_k_exclusion_counts_particles():
    assert compute_consv(zoo.k_exclusion(3)).vectors == (F(0, 1, 2, 3),)


def test_glauber_has_no_conserved_quantity():
    assert compute_consv(zoo.glauber()).dim == 0


def test_lge_basis():
    # particle number and energy
    assert compute_consv(zoo.lge(3)).vectors == (F(0, 1, 0, -1), F(0, 0, 1, 2))


def test_new_interaction_basis_proportional():
    (row,) = compute_consv(zoo.new_interaction()).vectors
    assert [x * 2 for x in row] == [0, 2, 3, 4]


def test_normalized_at_zero():
    for entry in zoo.ZOO.values():
        for v in compute_consv(entry.build()).vectors:
            assert v[0] == 0


def test_sums():
    xi = F(0, 1, 2)
    assert pair_sum(xi, (1, 2)) == 3
    assert config_sum(xi, [2, 2, 1, 0]) == 5


def test_is_conserved():
    inter = zoo.k_exclusion(2)
    assert is_conserved(inter, [0, 1, 2])
    assert not is_conserved(inter, [0, 1, 0])
    assert is_conserved(inter, [5, 5, 5])
    with pytest.raises(ValueError):
        is_conserved(inter, [0, 1])


def test_rref_and_nullspace():
    rows, pivots = rref([[2, 4], [1, 2]])
    assert rows == [[1, 2]] and pivots == [0]
    assert nullspace([[1, 1, -1]], 3) == [[-1, 1, 0], [1, 0, 1]]


@pytest.mark.parametrize("text", ["0", "-3", "1/2", "-7/4"])
def test_rational_round_trip(text):
    assert format_rational(parse_rational(text)) == text


@settings(max_examples=150, deadline=None)
@given(interactions(max_size=5))
def test_dimension_matches_fraction_free_oracle(inter):
    assert compute_consv(inter).dim == oracle_dim(inter.size, inter.edges)


@settings(max_examples=100, deadline=None)
@given(interactions(max_size=5))
def test_basis_vectors_conserved_and_constant_on_components(inter):
    basis = compute_consv(inter)
    for v in basis.vectors:
        assert is_conserved(inter, v)
        assert is_constant_on_components(inter, v)


@settings(max_examples=60, deadline=None)
@given(interactions(max_size=4), interactions(max_size=4))
def test_more_edges_fewer_conserved(a, b):
    if a.size != b.size:
        return
    union = a.with_edges(b.edges)
    assert compute_consv(union).dim <= min(compute_consv(a).dim, compute_consv(b).dim)


def test_dim_bounds():
    assert compute_consv(make_interaction(4, [])).dim == 3
    assert compute_consv(zoo.complete(3)).dim == 0
