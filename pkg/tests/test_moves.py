import pytest

from affschubert.core.errors import NotARoot
from affschubert.lie.moves import (
    AFFINE,
    LINEAR,
    affine_ascent,
    affine_descent,
    connected_finite_subsets,
    detect_named_moves,
    linear_ascent,
    linear_descent,
    pair_partition,
)
from affschubert.lie.rootsys import Root, build_root_system
from affschubert.lie.weyl import CorootElement, lengthS, reflect
from affschubert.order.bruhat import enumerate_levels


def _sweep(rs, max_len):
    for level in enumerate_levels(rs, max_len).values():
        yield from level


@pytest.mark.parametrize("type_label,rank", [("A", 2), ("B", 3), ("C", 2), ("G", 2), ("F", 4)])
def test_pair_partition_covers_every_root(type_label, rank):
    rs = build_root_system(type_label, rank)
    for beta in rs.positive_roots:
        part = pair_partition(rs, beta)
        placed = (
            len(part.null_roots)
            + 2 * len(part.positive_pairs)
            + 2 * len(part.negative_pairs)
        )
        assert placed == rs.num_positive_roots - 1
        for alpha, alpha2 in part.positive_pairs:
            assert alpha.coeffs != alpha2.coeffs


def test_pair_partition_in_a2(a2):
    beta = a2.simple_root(1)
    part = pair_partition(a2, beta)
    assert part.null_roots == frozenset()
    assert [(a.coeffs, b.coeffs) for a, b in part.positive_pairs] == [((0, 1), (1, 1))]
    assert part.negative_pairs == ()


def test_long_negative_pairs_only_for_short_beta(b3):
    short = b3.simple_root(3)
    assert pair_partition(b3, b3.highest_root).long_negative_pairs() == ()
    assert all(
        a.is_long and b.is_long for a, b in pair_partition(b3, short).long_negative_pairs()
    )


def test_pair_partition_rejects_foreign_root(a2):
    with pytest.raises(NotARoot):
        pair_partition(a2, Root((1, 1, 1)))


@pytest.mark.parametrize("type_label,rank,max_len", [("A", 2, 8), ("C", 2, 8), ("G", 2, 8)])
def test_descent_criteria_match_lengths(type_label, rank, max_len):
    rs = build_root_system(type_label, rank)
    for lam in _sweep(rs, max_len):
        target = lengthS(lam) - 1
        for beta in rs.positive_roots:
            assert linear_descent(lam, beta) == (lengthS(reflect(lam, beta, 0)) == target)
            assert affine_descent(lam, beta) == (lengthS(reflect(lam, beta, 1)) == target)


@pytest.mark.slow
@pytest.mark.parametrize("type_label,rank", [("B", 3), ("F", 4)])
def test_descent_criteria_match_lengths_slow(type_label, rank):
    rs = build_root_system(type_label, rank)
    for lam in _sweep(rs, 8):
        target = lengthS(lam) - 1
        for beta in rs.positive_roots:
            assert linear_descent(lam, beta) == (lengthS(reflect(lam, beta, 0)) == target)
            assert affine_descent(lam, beta) == (lengthS(reflect(lam, beta, 1)) == target)


@pytest.mark.parametrize("type_label,rank", [("A", 2), ("C", 2), ("G", 2)])
def test_ascent_criteria_match_lengths(type_label, rank):
    rs = build_root_system(type_label, rank)
    for lam in _sweep(rs, 6):
        target = lengthS(lam) + 1
        for beta in rs.positive_roots:
            assert linear_ascent(lam, beta) == (lengthS(reflect(lam, beta, 0)) == target)
            assert affine_ascent(lam, beta) == (lengthS(reflect(lam, beta, 1)) == target)


def test_simple_descents_are_firings(b3_exceptional, b3):
    # s₃ is the only negative finite node of (3,0,-1)
    assert linear_descent(b3_exceptional, b3.simple_root(3))
    assert not linear_descent(b3_exceptional, b3.simple_root(1))
    assert not linear_descent(b3_exceptional, b3.simple_root(2))


def test_connected_finite_subsets():
    subsets = connected_finite_subsets("A", 3)
    assert frozenset({1, 3}) not in subsets
    assert frozenset({1, 2}) in subsets
    assert frozenset({1, 2, 3}) not in subsets
    assert len(subsets) == 5


def test_named_moves_are_covers(b3, engine):
    for lam in _sweep(b3, 6):
        below = engine.covers(lam)
        for move in detect_named_moves(lam):
            assert move.target in below
            assert move.reflection in (LINEAR, AFFINE)
            assert lengthS(move.target) == lengthS(lam) - 1


def test_named_moves_sorted_and_serialisable(b3_exceptional):
    moves = detect_named_moves(b3_exceptional)
    keys = [(m.kind, m.variant or "", m.subgraph, m.beta.coeffs, m.reflection) for m in moves]
    assert keys == sorted(keys)
    for move in moves:
        data = move.to_dict()
        assert set(data) == {"kind", "variant", "beta", "subgraph", "reflection", "target"}


def test_f4_element_with_two_covers(engine):
    f4 = build_root_system("F", 4)
    lam = CorootElement(f4, (0, -1, 1, -1))
    assert len(engine.covers(lam)) >= 2
    for move in detect_named_moves(lam):
        assert move.target in engine.covers(lam)
