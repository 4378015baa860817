import pytest

from affschubert.lie.rootsys import build_root_system
from affschubert.lie.weyl import CorootElement, lengthS_of
from affschubert.schubert.cpo import (
    a_set_size,
    boundary,
    cpo_subgraphs,
    enumerate_cpos,
    is_cpo,
    top_of,
)


@pytest.mark.parametrize(
    "type_label,rank,expected",
    [
        ("A", 1, 1),
        ("A", 2, 3),
        ("A", 3, 6),
        ("A", 4, 10),
        ("B", 3, 4),
        ("B", 4, 6),
        ("C", 2, 2),
        ("C", 3, 3),
        ("C", 4, 4),
        ("D", 4, 8),
        ("D", 5, 10),
        ("E", 8, 10),
    ],
)
def test_cpo_census(type_label, rank, expected):
    subsets = cpo_subgraphs(build_root_system(type_label, rank))
    assert len(subsets) == expected
    assert all(0 in subset for subset in subsets)


@pytest.mark.parametrize(
    "type_label,rank", [("A", 2), ("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)]
)
def test_cpo_dimension_equals_a_set(type_label, rank, engine):
    rs = build_root_system(type_label, rank)
    cpos = enumerate_cpos(rs, engine)
    assert cpos[0].trivial and cpos[0].top.is_zero()
    for cpo in cpos[1:]:
        assert cpo.dim == cpo.a_size
        assert is_cpo(cpo.top)
        positive = {s for s, v in enumerate(cpo.top.labels()) if v > 0}
        assert positive == set(cpo.neighbors)


def test_e8_tops_have_expected_dimensions():
    rs = build_root_system("E", 8)
    for subset in cpo_subgraphs(rs):
        coords = top_of(rs, subset)
        assert lengthS_of(rs, coords) == a_set_size(rs, boundary(rs, subset))


def test_a2_orbits(a2, engine):
    by_nodes = {cpo.nodes: cpo for cpo in enumerate_cpos(a2, engine)}
    assert by_nodes[(0,)].top.coords == (1, 1)
    assert by_nodes[(0,)].neighbors == (1, 2)
    assert by_nodes[(0,)].dim == 1
    # Both two-node orbits are projective planes.
    assert by_nodes[(0, 1)].dim == 2 and by_nodes[(0, 1)].projective
    assert by_nodes[(0, 2)].dim == 2 and by_nodes[(0, 2)].projective


def test_cpo_projective_flag_matches_poincare(c2, engine):
    for cpo in enumerate_cpos(c2, engine):
        poly = engine.poincare_polynomial(cpo.top)
        assert cpo.projective == all(c == 1 for c in poly.to_list())
        assert poly.is_palindromic()


def test_is_cpo(a2, b3_exceptional):
    assert is_cpo(CorootElement.zero(a2))
    assert is_cpo(CorootElement(a2, (1, 1)))
    assert not is_cpo(CorootElement(a2, (3, 0)))
    assert not is_cpo(b3_exceptional)


def test_cpo_to_dict(a2, engine):
    data = enumerate_cpos(a2, engine)[1].to_dict()
    assert set(data) == {"I", "neighbors", "dim", "a_size", "lambda", "projective"}
    assert data["I"][0] == "s0"
