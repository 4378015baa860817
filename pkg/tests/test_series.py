import pytest

from affschubert.lie.rootsys import build_root_system
from affschubert.order.series import (
    Unbounded,
    bott_prefix,
    fork_stats,
    fork_stats_from_path,
    fork_stats_from_series,
    q_binomial,
)


def test_bott_prefix_a2(a2):
    # 1 / ((1 − t)(1 − t²))
    prefix = bott_prefix(a2, 6)
    assert list(prefix.coeffs) == [1, 1, 2, 2, 3, 3, 4]
    assert len(prefix) == 7
    assert prefix[4] == 3
    assert prefix.to_dict() == {"cutoff": 6, "coeffs": [1, 1, 2, 2, 3, 3, 4]}


def test_bott_prefix_a1_and_c2(a1, c2):
    assert list(bott_prefix(a1, 4).coeffs) == [1, 1, 1, 1, 1]
    assert list(bott_prefix(c2, 6).coeffs) == [1, 1, 1, 2, 2, 2, 3]


def test_bott_prefix_rejects_negative_cutoff(a2):
    with pytest.raises(ValueError):
        bott_prefix(a2, -1)
    assert list(bott_prefix(a2, 0).coeffs) == [1]


@pytest.mark.parametrize(
    "type_label,rank,k_g,a",
    [
        ("A", 2, 2, 2),
        ("A", 5, 2, 2),
        ("B", 3, 3, 2),
        ("C", 4, 3, 2),
        ("D", 4, 3, 3),
        ("D", 5, 3, 2),
        ("E", 6, 4, 2),
        ("E", 7, 5, 2),
        ("E", 8, 7, 2),
        ("F", 4, 5, 2),
        ("G", 2, 5, 2),
    ],
)
def test_fork_stats(type_label, rank, k_g, a):
    rs = build_root_system(type_label, rank)
    stats = fork_stats(rs)
    assert (stats.k_G, stats.a) == (k_g, a)
    assert stats.bounded
    assert fork_stats_from_series(rs) == fork_stats_from_path(rs)


def test_fork_stats_a1_unbounded(a1):
    stats = fork_stats(a1)
    assert stats.k_G is Unbounded.INFINITE
    assert stats.a is None
    assert not stats.bounded
    assert str(stats.k_G) == "∞"


def test_q_binomial():
    assert q_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)
    assert q_binomial(5, 0).coeffs == (1,)
    assert q_binomial(5, 5).coeffs == (1,)
    assert q_binomial(3, 1).coeffs == (1, 1, 1)
    assert q_binomial(6, 3).value_at_one() == 20
    assert q_binomial(6, 2).is_palindromic()
    with pytest.raises(ValueError):
        q_binomial(2, 3)
    with pytest.raises(ValueError):
        q_binomial(2, -1)
