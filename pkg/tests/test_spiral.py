import pytest

from affschubert.core.errors import WrongType
from affschubert.lie.weyl import CorootElement, lengthS
from affschubert.order.series import q_binomial
from affschubert.schubert.spiral import PLAIN, PRIME, is_spiral, spiral_for, spiral_lambda


@pytest.mark.parametrize("family", [PLAIN, PRIME])
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_spiral_poincare_is_gaussian_binomial(n, k, family, engine):
    lam = spiral_lambda(n, k, family)
    assert is_spiral(lam)
    assert lengthS(lam) == n * k
    assert engine.poincare_polynomial(lam) == q_binomial(n + k, n)


def test_a2_representatives():
    plain = [spiral_lambda(2, k).coords for k in range(1, 5)]
    prime = [spiral_lambda(2, k, PRIME).coords for k in range(1, 5)]
    assert plain == [(2, -1), (0, 3), (-3, 0), (5, -4)]
    assert prime == [(-1, 2), (3, 0), (0, -3), (-4, 5)]


def test_is_spiral_rejects_other_classes(a2, b3_exceptional):
    assert not is_spiral(CorootElement(a2, (1, 1)))
    assert not is_spiral(CorootElement.zero(a2))
    assert not is_spiral(b3_exceptional)


def test_spiral_for(a2, b3):
    assert spiral_for(a2, 2) == spiral_lambda(2, 2)
    with pytest.raises(WrongType):
        spiral_for(b3, 1)


@pytest.mark.parametrize("n,k,family", [(0, 1, PLAIN), (2, 0, PLAIN), (2, 1, "twisted")])
def test_spiral_lambda_rejects_bad_arguments(n, k, family):
    with pytest.raises(ValueError):
        spiral_lambda(n, k, family)


def test_spiral_lives_in_type_a():
    assert spiral_lambda(3, 2).rs.key == ("A", 3)
    with pytest.raises(WrongType):
        spiral_lambda(3, 2, type_label="C")
