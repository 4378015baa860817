import pytest

from affschubert.core.config import SchubertConfig
from affschubert.core.errors import OracleCapExceeded, ResourceLimit, SystemMismatch
from affschubert.lie.rootsys import build_root_system
from affschubert.lie.weyl import CorootElement, lengthS
from affschubert.order.bruhat import BruhatEngine, poincare_polynomial, sorted_elements
from affschubert.order.series import bott_prefix


def test_b3_exceptional_poincare(b3_exceptional, engine):
    poly = engine.poincare_polynomial(b3_exceptional)
    assert poly.to_list() == [1, 1, 1, 2, 2, 2, 2, 1, 1, 1]
    assert engine.is_palindromic(b3_exceptional)
    ideal = engine.order_ideal(b3_exceptional)
    assert len(ideal) == 14
    assert ideal.dim == 9
    assert ideal.top == b3_exceptional


def test_small_a2_ideals(a2, engine):
    zero = CorootElement.zero(a2)
    lam = CorootElement(a2, (1, 1))
    assert engine.covers(lam) == frozenset({zero})
    assert engine.covers(zero) == frozenset()
    assert engine.poincare_polynomial(zero).to_list() == [1]
    assert engine.poincare_polynomial(lam).to_list() == [1, 1]
    assert engine.poincare_polynomial(CorootElement(a2, (0, 3))).to_list() == [1, 1, 2, 1, 1]
    assert engine.covers(CorootElement(a2, (-1, 2))) == frozenset({lam})


def test_ideal_levels_are_consistent(b3_exceptional, engine):
    ideal = engine.order_ideal(b3_exceptional)
    assert sum(ideal.level_sizes()) == len(ideal)
    for k, level in ideal.levels.items():
        assert list(level) == sorted(level, key=lambda mu: mu.coords)
        assert all(lengthS(mu) == k for mu in level)
    assert ideal.sorted_members()[0].is_zero()
    for mu, below in ideal.cover_edges.items():
        assert all(lengthS(nu) == lengthS(mu) - 1 for nu in below)


def test_ideal_to_networkx(b3_exceptional, engine):
    graph = engine.order_ideal(b3_exceptional).to_networkx()
    assert graph.number_of_nodes() == 14
    assert graph.nodes[b3_exceptional]["lengthS"] == 9
    assert graph.out_degree(CorootElement.zero(b3_exceptional.rs)) == 0


def test_bruhat_leq_basics(a2, engine):
    zero = CorootElement.zero(a2)
    top = CorootElement(a2, (0, 3))
    assert engine.bruhat_leq(zero, top)
    assert engine.bruhat_leq(top, top)
    assert not engine.bruhat_leq(top, zero)
    # same length, different element
    assert not engine.bruhat_leq(CorootElement(a2, (3, 0)), top)


def test_bruhat_leq_rejects_mixed_systems(a2, b3_exceptional, engine):
    with pytest.raises(SystemMismatch):
        engine.bruhat_leq(CorootElement.zero(a2), b3_exceptional)
    with pytest.raises(SystemMismatch):
        engine.subword_leq(CorootElement.zero(a2), b3_exceptional)


@pytest.mark.parametrize(
    "type_label,rank", [("A", 2), ("A", 3), ("B", 3), ("C", 2), ("G", 2)]
)
def test_subword_oracle_agrees_with_cover_sweep(type_label, rank, engine):
    rs = build_root_system(type_label, rank)
    members = [lam for level in engine.enumerate_levels(rs, 8).values() for lam in level]
    for lam in members:
        for mu in members:
            assert engine.bruhat_leq(mu, lam) == engine.subword_leq(mu, lam), (mu, lam)


@pytest.mark.parametrize("type_label,rank", [("A", 2), ("C", 2), ("G", 2), ("B", 3)])
def test_covers_stable_under_window_doubling(type_label, rank, engine):
    rs = build_root_system(type_label, rank)
    for level in engine.enumerate_levels(rs, 8).values():
        for lam in level:
            assert engine.covers(lam, window_scale=2) == engine.covers(lam)


@pytest.mark.parametrize(
    "type_label,rank,max_len",
    [
        ("A", 1, 20),
        ("A", 2, 12),
        ("B", 3, 8),
        ("C", 2, 14),
        ("D", 4, 6),
        ("D", 5, 10),
        ("G", 2, 12),
    ],
)
def test_levels_match_bott_series(type_label, rank, max_len, engine):
    rs = build_root_system(type_label, rank)
    levels = engine.enumerate_levels(rs, max_len)
    assert [len(levels[k]) for k in range(max_len + 1)] == list(bott_prefix(rs, max_len).coeffs)
    for k, level in levels.items():
        assert all(lengthS(lam) == k for lam in level)


@pytest.mark.slow
@pytest.mark.parametrize(
    "type_label,rank,max_len",
    [
        ("A", 2, 14),
        ("A", 3, 12),
        ("B", 3, 12),
        ("B", 4, 10),
        ("C", 2, 14),
        ("C", 3, 12),
        ("D", 4, 10),
        ("D", 5, 10),
        ("G", 2, 12),
        ("F", 4, 10),
        ("E", 6, 8),
    ],
)
def test_levels_match_bott_series_full(type_label, rank, max_len, engine):
    rs = build_root_system(type_label, rank)
    levels = engine.enumerate_levels(rs, max_len)
    assert [len(levels[k]) for k in range(max_len + 1)] == list(bott_prefix(rs, max_len).coeffs)


def test_enumerate_levels_rejects_negative(a2, engine):
    with pytest.raises(ValueError):
        engine.enumerate_levels(a2, -1)
    assert engine.enumerate_levels(a2, 0) == {0: [CorootElement.zero(a2)]}


def test_resource_limits(a2, b3_exceptional):
    small = BruhatEngine(SchubertConfig(ideal_member_cap=5))
    with pytest.raises(ResourceLimit):
        small.order_ideal(b3_exceptional)
    few = BruhatEngine(SchubertConfig(level_member_cap=3))
    with pytest.raises(ResourceLimit):
        few.enumerate_levels(a2, 5)


def test_oracle_cap(b3_exceptional):
    capped = BruhatEngine(SchubertConfig(oracle_cap=3))
    with pytest.raises(OracleCapExceeded):
        capped.subword_leq(CorootElement.zero(b3_exceptional.rs), b3_exceptional)


def test_forks_too_soon(a2, b3_exceptional, engine):
    assert not engine.forks_too_soon(CorootElement(a2, (1, 1)))
    assert not engine.forks_too_soon(b3_exceptional)
    f4 = build_root_system("F", 4)
    assert engine.forks_too_soon(CorootElement(f4, (-1, 0, 0, 0)))


@pytest.mark.slow
def test_forks_too_soon_e8_antidominant(engine):
    e8 = build_root_system("E", 8)
    assert engine.forks_too_soon(CorootElement(e8, (0,) * 7 + (-1,)))


def test_engines_do_not_share_caches(b3_exceptional):
    first = BruhatEngine(SchubertConfig())
    second = BruhatEngine(SchubertConfig(ideal_member_cap=5))
    assert len(first.order_ideal(b3_exceptional)) == 14
    with pytest.raises(ResourceLimit):
        second.order_ideal(b3_exceptional)
    first.cache_clear()
    assert len(first.order_ideal(b3_exceptional)) == 14


def test_module_level_api(a2):
    assert poincare_polynomial(CorootElement(a2, (3, 0))).to_list() == [1, 1, 2, 1, 1]
    lams = [CorootElement(a2, (3, 0)), CorootElement.zero(a2), CorootElement(a2, (-1, 2))]
    assert [lam.coords for lam in sorted_elements(lams)] == [(0, 0), (-1, 2), (3, 0)]
