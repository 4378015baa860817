import pytest

from affschubert.order.polynomial import IntPolynomial, dual_polynomial, q_integer, q_product


def test_trailing_zeros_are_trimmed():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial().degree == -1
    assert IntPolynomial((0, 0)).is_zero()


def test_text_forms():
    p = IntPolynomial.parse_digits("1112222111")
    assert p.to_list() == [1, 1, 1, 2, 2, 2, 2, 1, 1, 1]
    assert p.digits() == "1112222111"
    assert p.value_at_one() == 14
    assert str(IntPolynomial((1, 1, 2))) == "1 + t + 2t^2"
    assert str(IntPolynomial((0, 0, 3))) == "3t^2"
    assert str(IntPolynomial()) == "0"
    assert IntPolynomial((1, 12, 1)).digits() == "1,12,1"


def test_arithmetic():
    p = IntPolynomial((1, 1))
    assert (p * p).coeffs == (1, 2, 1)
    assert (p + IntPolynomial((0, 0, 1))).coeffs == (1, 1, 1)
    assert (p - p).is_zero()
    assert p.shift(2).coeffs == (0, 0, 1, 1)
    assert IntPolynomial((1, 2, 3, 4)).truncate(1).coeffs == (1, 2)
    assert (p * IntPolynomial()).is_zero()
    assert IntPolynomial.monomial(3, 2).coeffs == (0, 0, 0, 2)
    with pytest.raises(ValueError):
        p.shift(-1)


def test_exact_division():
    numerator = q_product([2, 3, 4])
    assert numerator.exact_div(q_integer(3)) == q_product([2, 4])
    with pytest.raises(ValueError):
        q_integer(3).exact_div(q_integer(2))
    with pytest.raises(ZeroDivisionError):
        numerator.exact_div(IntPolynomial())
    assert IntPolynomial().exact_div(q_integer(2)).is_zero()


def test_palindromy_and_dual():
    assert IntPolynomial.parse_digits("123444321").is_palindromic()
    assert not IntPolynomial.parse_digits("1122").is_palindromic()
    assert dual_polynomial(IntPolynomial((1, 2, 3))).coeffs == (3, 2, 1)
    assert IntPolynomial.one().is_palindromic()


def test_q_integers():
    assert q_integer(4).coeffs == (1, 1, 1, 1)
    assert q_product([]) == IntPolynomial.one()
    # |W(A2)|(t) = [2][3]
    assert q_product([2, 3]).coeffs == (1, 2, 2, 1)
    with pytest.raises(ValueError):
        q_integer(0)
