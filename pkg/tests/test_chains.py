import pytest

from affschubert.core.errors import NotAnAscent
from affschubert.lie.rootsys import build_root_system
from affschubert.lie.weyl import CorootElement, ReducedWord, lambda_of
from affschubert.schubert.chains import (
    chain_descriptor,
    chain_pd,
    chain_pd_by_products,
    enumerate_chains,
    is_admissible_path,
    is_chain,
    pd_necessary,
)
from affschubert.schubert.chevalley import chevalley_coeff, cup_products, cup_sequence
from affschubert.schubert.cpo import is_cpo


def _fired(rs, order):
    """Element reached by firing *order* upward from 0."""
    return lambda_of(rs, ReducedWord(tuple(reversed(order))))


def _sequences(rs, max_len, engine):
    return {c.cup_sequence for c in enumerate_chains(rs, max_len, engine)}


def test_c2_cup_sequences(c2):
    assert cup_sequence(CorootElement(c2, (0, 2))) == [1, 2, 1]
    assert cup_sequence(CorootElement(c2, (-1, 0))) == [1, 2, 2, 2]
    assert cup_sequence(CorootElement(c2, (1, -2))) == [1, 2, 2]


def test_c3_cup_sequence():
    c3 = build_root_system("C", 3)
    lam = _fired(c3, (0, 1, 2, 3, 2, 1))
    assert lam.coords == (-1, 0, 0)
    assert cup_sequence(lam) == [1, 2, 2, 2, 2, 2]


def test_a1_cup_sequence_counts_up(a1, engine):
    chains = enumerate_chains(a1, 6, engine)
    assert [c.dim for c in chains] == [1, 2, 3, 4, 5, 6]
    for chain in chains:
        m = chain.dim
        assert chain.top.coords == ((m + 1,) if m % 2 else (-m,))
        assert chain.cup_sequence == tuple(range(1, m + 1))


def test_g2_chains(g2, engine):
    first = _fired(g2, (0, 2, 1, 2, 0))
    second = _fired(g2, (0, 2, 1, 2, 1, 2))
    assert cup_sequence(first) == [1, 1, 3, 2, 2]
    assert cup_sequence(second) == [1, 1, 3, 2, 3, 1]
    assert is_chain(first, engine) and is_chain(second, engine)
    assert not chain_pd(chain_descriptor(second, engine))


def test_b3_quadric(b3, engine):
    lam = _fired(b3, (0, 2, 3, 2, 1))
    assert cup_sequence(lam) == [1, 1, 2, 1, 1]
    chain = chain_descriptor(lam, engine)
    assert chain_pd(chain) and chain_pd_by_products(chain)


def test_f4_sequences(engine):
    found = _sequences(build_root_system("F", 4), 7, engine)
    assert (1, 1, 1, 2, 2) in found
    assert (1, 1, 1, 2, 1, 1, 1) in found


@pytest.mark.parametrize("type_label,rank", [("A", 2), ("B", 3), ("C", 3), ("G", 2), ("F", 4)])
def test_chain_words_are_admissible(type_label, rank, engine):
    rs = build_root_system(type_label, rank)
    for chain in enumerate_chains(rs, 8, engine):
        assert is_admissible_path(rs, chain.word)
        assert lambda_of(rs, chain.word) == chain.top
        assert chain_pd(chain) == chain_pd_by_products(chain)
        assert engine.poincare_polynomial(chain.top).to_list() == [1] * (chain.dim + 1)


@pytest.mark.parametrize("type_label,rank", [("A", 2), ("C", 2), ("G", 2)])
def test_is_chain_matches_poincare(type_label, rank, engine):
    rs = build_root_system(type_label, rank)
    for level in engine.enumerate_levels(rs, 8).values():
        for lam in level:
            coeffs = engine.poincare_polynomial(lam).to_list()
            assert is_chain(lam, engine) == all(c == 1 for c in coeffs)


def test_admissible_path_rejects_bad_words(a2):
    assert is_admissible_path(a2, ReducedWord())
    assert not is_admissible_path(a2, ReducedWord.parse("s0 s1"))
    # back and forth along a simple edge
    assert not is_admissible_path(a2, ReducedWord.parse("s0 s1 s0"))


def test_pd_necessary(a2, c2, b3_exceptional):
    assert pd_necessary(CorootElement.zero(a2))
    assert pd_necessary(CorootElement(c2, (0, 2)))
    assert not pd_necessary(CorootElement(c2, (-1, 0)))
    assert not pd_necessary(b3_exceptional)


def test_chain_pd_agrees_with_necessary_condition(c2, engine):
    for chain in enumerate_chains(c2, 8, engine):
        if chain_pd(chain):
            assert pd_necessary(chain.top)


def test_chevalley_coeff(c2):
    zero = CorootElement.zero(c2)
    assert chevalley_coeff(zero, 0) == 1
    with pytest.raises(NotAnAscent):
        chevalley_coeff(zero, 1)
    with pytest.raises(ValueError):
        chevalley_coeff(zero, 7)
    assert cup_products([1, 2, 2]) == [1, 1, 2, 4]


def test_enumerate_chains_rejects_small_bound(a2, engine):
    with pytest.raises(ValueError):
        enumerate_chains(a2, 0, engine)


def test_chain_descriptor_rejects_non_chain(b3_exceptional, engine):
    with pytest.raises(ValueError):
        chain_descriptor(b3_exceptional, engine)


@pytest.mark.parametrize("type_label,rank", [("A", 2), ("A", 3), ("D", 4)])
def test_simply_laced_chain_is_cpo_iff_projective_space(type_label, rank, engine):
    rs = build_root_system(type_label, rank)
    for chain in enumerate_chains(rs, 8, engine):
        assert is_cpo(chain.top) == all(a == 1 for a in chain.cup_sequence)


def test_c2_quadric_is_a_cpo_chain_but_not_projective(c2, engine):
    tau = CorootElement(c2, (0, 2))
    assert is_cpo(tau) and is_chain(tau, engine)
    assert cup_sequence(tau) == [1, 2, 1]
