import pytest

from interactions import InteractionError, compute_consv, is_exchangeable, is_separable, zoo


@pytest.mark.parametrize("name", list(zoo.ZOO))
def test_default_dim_and_separability(name):
    entry = zoo.ZOO[name]
    inter = entry.build()
    assert compute_consv(inter).dim == entry.dim()
    assert is_separable(inter) is zoo.expected_separable(name)


@pytest.mark.parametrize("kappa", [1, 2, 3, 4])
def test_parametrized_families(kappa):
    assert compute_consv(zoo.k_exclusion(kappa)).dim == 1
    assert compute_consv(zoo.multi_species(kappa)).dim == kappa
    assert is_separable(zoo.multi_species(kappa))
    assert compute_consv(zoo.lge(kappa)).dim == (2 if kappa >= 2 else 1)
    assert is_separable(zoo.lge(kappa))


@pytest.mark.parametrize("kappa,lanes", [(1, 1), (1, 2), (2, 2), (1, 3)])
def test_n_lane(kappa, lanes):
    inter = zoo.n_lane(kappa, lanes)
    assert inter.size == (kappa + 1) ** lanes
    assert compute_consv(inter).dim == lanes
    assert is_separable(inter)


def test_fig14_is_separable_and_exchangeable():
    inter = zoo.fig14()
    assert is_separable(inter) and is_exchangeable(inter)
    assert compute_consv(inter).dim == 1


def test_parse_spec():
    assert zoo.parse_spec("k-exclusion:3").edges == zoo.k_exclusion(3).edges
    assert zoo.parse_spec("n-lane:1,2").edges == zoo.n_lane(1, 2).edges
    assert zoo.parse_spec("glauber").edges == zoo.glauber().edges
    with pytest.raises(InteractionError):
        zoo.parse_spec("nope")
    with pytest.raises(InteractionError):
        zoo.parse_spec("lge:x")
    with pytest.raises(InteractionError):
        zoo.parse_spec("exclusion:2")


def test_named_members_cover_sizes():
    names = [n for n, _ in zoo.named_members(4)]
    assert names[:3] == ["3-exclusion", "3-multi-species", "3-lge"]
    assert "2-lane-1-exclusion" in names
