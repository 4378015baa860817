"""
order/polynomial.py
-------------------
Integer polynomials in t, used for Poincaré polynomials, series prefixes,
Gaussian binomials and the Levi factor products.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

import numpy as np


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """
    Dense polynomial Σ c_k t^k with integer coefficients.

    Trailing zeros are stripped on construction, so the zero polynomial has
    ``coeffs == ()`` and every other polynomial has a nonzero leading term.
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError(f"Negative degree {degree}")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def parse_digits(cls, text: str) -> "IntPolynomial":
        """``"1112111"`` → 1 + t + t² + 2t³ + t⁴ + t⁵ + t⁶."""
        return cls(tuple(int(ch) for ch in text.strip()))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; −1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def digits(self) -> str:
        """
        Coefficient string in the compact ``1112222111`` form.

        Coefficients above 9 are comma separated instead.
        """
        if any(c < 0 or c > 9 for c in self.coeffs):
            return ",".join(str(c) for c in self.coeffs)
        return "".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            power = "t" if k == 1 else f"t^{k}"
            terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(size))
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            tuple(self.coefficient(k) - other.coefficient(k) for k in range(size))
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        product = np.convolve(
            np.array(self.coeffs, dtype=np.int64), np.array(other.coeffs, dtype=np.int64)
        )
        return IntPolynomial(tuple(int(c) for c in product))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if k < 0:
            raise ValueError(f"Negative shift {k}")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def truncate(self, degree: int) -> "IntPolynomial":
        """Drop every term above *degree*."""
        return IntPolynomial(self.coeffs[: degree + 1])

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """
        Polynomial long division that must leave no remainder.

        Raises:
            ZeroDivisionError: If *divisor* is zero.
            ValueError:        If the division is not exact over the integers.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        remainder = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dd = divisor.degree
        if len(remainder) - 1 < dd:
            if remainder:
                raise ValueError(f"{self} is not divisible by {divisor}")
            return IntPolynomial()
        quotient = [0] * (len(remainder) - dd)
        for k in range(len(quotient) - 1, -1, -1):
            top = remainder[k + dd]
            if top % lead:
                raise ValueError(f"{self} is not divisible by {divisor}")
            q = top // lead
            quotient[k] = q
            if q:
                for j, c in enumerate(divisor.coeffs):
                    remainder[k + j] -= q * c
        if any(remainder):
            raise ValueError(f"{self} is not divisible by {divisor}")
        return IntPolynomial(tuple(quotient))

    # ------------------------------------------------------------------
    # Duality
    # ------------------------------------------------------------------

    def dual(self) -> "IntPolynomial":
        """D f(t) = t^{deg f} f(1/t), i.e. the reversed coefficient list."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


def dual_polynomial(p: IntPolynomial) -> IntPolynomial:
    return p.dual()


def q_integer(d: int) -> IntPolynomial:
    """[d]_t = 1 + t + … + t^{d−1}."""
    if d < 1:
        raise ValueError(f"q-integer needs d >= 1, got {d}")
    return IntPolynomial((1,) * d)


def q_product(ds: Iterable[int]) -> IntPolynomial:
    """Π [d]_t over the given degrees."""
    out = IntPolynomial.one()
    for d in ds:
        out = out * q_integer(d)
    return out
