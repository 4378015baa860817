import pytest

from affschubert.core.errors import LengthMismatch, NotARoot, UnsupportedType
from affschubert.lie import tables
from affschubert.lie.rootsys import (
    Root,
    build_root_system,
    in_coroot_lattice,
    minuscule_nodes,
    pairing,
)


@pytest.mark.parametrize(
    "type_label,rank,count",
    [
        ("A", 1, 1),
        ("A", 2, 3),
        ("A", 3, 6),
        ("B", 3, 9),
        ("C", 2, 4),
        ("C", 3, 9),
        ("D", 4, 12),
        ("E", 6, 36),
        ("E", 7, 63),
        ("E", 8, 120),
        ("F", 4, 24),
        ("G", 2, 6),
    ],
)
def test_positive_root_counts(type_label, rank, count):
    rs = build_root_system(type_label, rank)
    assert rs.num_positive_roots == count
    # Σ exponents = |Φ⁺|
    assert sum(rs.exponents) == count


@pytest.mark.parametrize(
    "type_label,rank,marks",
    [
        ("A", 3, (1, 1, 1)),
        ("B", 3, (1, 2, 2)),
        ("C", 3, (2, 2, 1)),
        ("D", 4, (1, 2, 1, 1)),
        ("E", 8, (2, 3, 4, 6, 5, 4, 3, 2)),
        ("F", 4, (2, 3, 4, 2)),
        ("G", 2, (3, 2)),
    ],
)
def test_highest_root_marks(type_label, rank, marks):
    rs = build_root_system(type_label, rank)
    assert rs.marks == marks
    assert rs.highest_root.coeffs == marks
    assert rs.highest_root.is_long


def test_simple_roots_come_first(b3):
    assert [r.coeffs for r in b3.positive_roots[:3]] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    heights = [r.height for r in b3.positive_roots]
    assert heights == sorted(heights)


def test_exponents_and_degrees():
    assert tables.exponents("D", 4) == [1, 3, 3, 5]
    assert tables.exponents("E", 6) == [1, 4, 5, 7, 8, 11]
    assert tables.degrees("G", 2) == [2, 6]
    assert build_root_system("B", 3).degrees == (2, 4, 6)


@pytest.mark.parametrize(
    "type_label,rank", [("B", 1), ("C", 1), ("D", 3), ("E", 5), ("F", 3), ("A", 0)]
)
def test_unsupported_types(type_label, rank):
    with pytest.raises(UnsupportedType):
        build_root_system(type_label, rank)


def test_unsupported_type_is_value_error():
    with pytest.raises(ValueError):
        build_root_system("H", 3)


def test_build_is_shared():
    assert build_root_system("F", 4) is build_root_system("F", 4)


def test_affine_diagram_shapes(a1, a2, g2, b3):
    assert a1.affine_graph.edges[0, 1]["a1_double"] is True
    assert sorted(a2.affine_graph.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert g2.edge_multiplicity(1, 2) == 3
    assert g2.neighbors(0) == [2]
    assert b3.neighbors(2) == [0, 1, 3]
    assert b3.edge_multiplicity(2, 3) == 2


def test_chevalley_constants(g2, b3, c2):
    assert g2.chevalley_constant(0) == 1
    assert g2.chevalley_constant(1) == 3
    assert g2.chevalley_constant(2) == 1
    assert b3.chevalley_constant(3) == 2
    assert c2.chevalley_constant(1) == 2
    assert c2.chevalley_constant(2) == 1


def test_pairing(g2, a2):
    a1_, a2_ = g2.simple_root(1), g2.simple_root(2)
    assert pairing(g2, a1_, a2_) == -1
    assert pairing(g2, a2_, a1_) == -3
    assert pairing(g2, a1_, a1_) == 2
    with pytest.raises(NotARoot):
        pairing(a2, Root((2, 0)), a2.simple_root(1))


def test_find_and_index(b3):
    root = b3.find_root((1, 2, 2))
    assert root == b3.highest_root
    assert b3.find_root((3, 0, 0)) is None
    with pytest.raises(NotARoot):
        b3.index_of(Root((3, 0, 0)))


def test_highest_root_of_subdiagram(b3):
    assert b3.highest_root_of([2, 3]).coeffs == (0, 1, 2)
    assert b3.highest_root_of([1, 2]).coeffs == (1, 1, 0)


def test_coroot_lattice_membership(a2, b3, c2):
    assert in_coroot_lattice(a2, (1, 1))
    assert in_coroot_lattice(a2, (-1, 2))
    assert not in_coroot_lattice(a2, (1, 0))
    assert in_coroot_lattice(b3, (3, 0, -1))
    assert not in_coroot_lattice(b3, (1, 0, 0))
    assert in_coroot_lattice(c2, (1, 0))
    assert not in_coroot_lattice(c2, (0, 1))
    assert in_coroot_lattice(build_root_system("G", 2), (1, 0))


def test_coroot_lattice_length_mismatch(a2):
    with pytest.raises(LengthMismatch):
        in_coroot_lattice(a2, (1, 1, 1))


def test_minuscule_nodes(a2, b3):
    assert minuscule_nodes(a2) == frozenset({1, 2})
    assert minuscule_nodes(b3) == frozenset({1})
    assert minuscule_nodes(build_root_system("C", 3)) == frozenset({3})
    assert minuscule_nodes(build_root_system("E", 8)) == frozenset()


def test_node_length_classes(b3, g2):
    assert b3.node_length_class[0] == "long"
    assert b3.node_length_class[3] == "short"
    assert g2.node_length_class[1] == "short"
    assert g2.node_length_class[2] == "long"
