"""Exact scalar and 2x2 matrix helpers.

Every exponent and matrix entry in this package is a :class:`fractions.Fraction`,
which is always stored in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .errors import InvalidInputError, SingularSwapError

Rational = Union[int, Fraction]


def reduce(numerator: int, denominator: int) -> Fraction:
    """Return ``numerator/denominator`` in lowest terms with positive denominator."""
    if denominator == 0:
        raise InvalidInputError("zero-denominator", "denominator must be nonzero")
    return Fraction(numerator, denominator)


def lcm(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise InvalidInputError("non-positive", f"lcm expects positive integers, got {a}, {b}")
    return math.lcm(a, b)


def unimodular_completion(m: int, n: int) -> Tuple[int, int]:
    """Complete the row ``(m, n)`` to a determinant-one integer matrix.

    Returns the pair ``(r, s)`` of nonnegative integers with ``m*s - n*r == 1``
    whose ``s`` (equivalently ``r``) is smallest.
    """
    if m < 1 or n < 1:
        raise InvalidInputError("non-positive", f"expected positive integers, got ({m}, {n})")
    if math.gcd(m, n) != 1:
        raise InvalidInputError("not-coprime", f"gcd({m}, {n}) != 1")
    s = pow(m, -1, n)  # 0 when n == 1
    if s == 0:
        s = n
    r = (m * s - 1) // n
    return r, s


@dataclass(frozen=True)
class Mat2:
    a11: Fraction
    a12: Fraction
    a21: Fraction
    a22: Fraction

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Rational]]) -> "Mat2":
        (a11, a12), (a21, a22) = rows
        return cls(a11, a12, a21, a22)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @property
    def rows(self) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
        return ((self.a11, self.a12), (self.a21, self.a22))

    @property
    def det(self) -> Fraction:
        return self.a11 * self.a22 - self.a12 * self.a21

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def apply(self, x: Rational, y: Rational) -> Tuple[Fraction, Fraction]:
        """Multiply the column vector ``[x; y]``."""
        return (self.a11 * x + self.a12 * y, self.a21 * x + self.a22 * y)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def to_lists(self):
        return [[str(x) for x in row] for row in self.rows]

    def __str__(self):
        return "[[{}, {}], [{}, {}]]".format(self.a11, self.a12, self.a21, self.a22)


def sw(U: Mat2) -> Mat2:
    """Swap transform of a 2x2 matrix.

    If ``[x1; y2] = U [x2; y1]`` then ``[x1; y1] = sw(U) [x2; y2]``.
    The result has determinant ``U.a11 / U.a22``.
    """
    if U.a22 == 0:
        raise SingularSwapError(f"sw undefined: bottom-right entry of {U} is zero")
    q = U.a22
    return Mat2(U.det / q, U.a12 / q, -U.a21 / q, 1 / q)
