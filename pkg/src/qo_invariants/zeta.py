"""Monodromy zeta functions in factored form.

A zeta function here is a finite product ``prod_a (t**a - 1)**e_a`` with integer,
possibly negative, exponents.  It is never expanded into coefficients.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, Iterable, List, Mapping, Tuple

from .branch import DerivationSequence, LevelInvariants, other, suffix_degrees
from .errors import TheoremViolation


def _divisors(a: int) -> List[int]:
    small, large = [], []
    d = 1
    while d * d <= a:
        if a % d == 0:
            small.append(d)
            if d * d != a:
                large.append(a // d)
        d += 1
    return small + large[::-1]


class CycloProduct:
    """The rational function ``prod_a (t**a - 1)**e_a``.

    Built from a mapping ``{a: e_a}`` or an iterable of ``(a, e_a)`` pairs;
    repeated keys are summed and zero exponents dropped.  Two products compare
    equal when they are the same rational function, which is decided on the
    cyclotomic normal form since ``(t**a - 1)`` factorizations are not unique.
    """

    __slots__ = ("_factors", "_normal")

    def __init__(self, factors: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: Dict[int, int] = defaultdict(int)
        for a, e in items:
            a, e = int(a), int(e)
            if a < 1:
                raise ValueError(f"factor t^{a} - 1 needs a positive exponent")
            acc[a] += e
        self._factors = {a: acc[a] for a in sorted(acc) if acc[a] != 0}
        self._normal = None

    @property
    def factors(self) -> Dict[int, int]:
        return dict(self._factors)

    def __mul__(self, other: "CycloProduct") -> "CycloProduct":
        if not isinstance(other, CycloProduct):
            return NotImplemented
        return CycloProduct([*self._factors.items(), *other._factors.items()])

    def __truediv__(self, other: "CycloProduct") -> "CycloProduct":
        if not isinstance(other, CycloProduct):
            return NotImplemented
        return self * other ** -1

    def __pow__(self, k: int) -> "CycloProduct":
        return CycloProduct({a: e * k for a, e in self._factors.items()})

    def substitute(self, b: int) -> "CycloProduct":
        """Replace ``t`` by ``t**b``."""
        if b < 1:
            raise ValueError("substitution t -> t^b needs b >= 1")
        return CycloProduct({a * b: e for a, e in self._factors.items()})

    def tm1_multiplicity(self) -> int:
        """Order of vanishing at ``t = 1``; each ``t**a - 1`` contributes one."""
        return sum(self._factors.values())

    def degree_sum(self) -> int:
        """Degree of the rational function (numerator minus denominator)."""
        return sum(a * e for a, e in self._factors.items())

    def normal_form(self) -> Dict[int, int]:
        """Exponents of the cyclotomic polynomials ``Phi_d`` in the product."""
        if self._normal is None:
            acc: Dict[int, int] = defaultdict(int)
            for a, e in self._factors.items():
                for d in _divisors(a):
                    acc[d] += e
            self._normal = {d: acc[d] for d in sorted(acc) if acc[d] != 0}
        return dict(self._normal)

    def to_list(self) -> List[List[int]]:
        return [[a, e] for a, e in self._factors.items()]

    def __eq__(self, other):
        if not isinstance(other, CycloProduct):
            return NotImplemented
        return self.normal_form() == other.normal_form()

    def __hash__(self):
        return hash(tuple(self.normal_form().items()))

    def __bool__(self):
        return bool(self._factors)

    def __repr__(self):
        return f"CycloProduct({self._factors})"

    def __str__(self):
        if not self._factors:
            return "1"
        parts = []
        for a, e in self._factors.items():
            base = "(t-1)" if a == 1 else f"(t^{a}-1)"
            parts.append(base if e == 1 else f"{base}^{e}")
        return " ".join(parts)


ONE = CycloProduct()


def tm1(a: int, e: int = 1) -> CycloProduct:
    """``(t**a - 1)**e``"""
    return CycloProduct({a: e})


def mul(p: CycloProduct, q: CycloProduct) -> CycloProduct:
    return p * q


def power(p: CycloProduct, k: int) -> CycloProduct:
    return p ** k


def substitute(p: CycloProduct, b: int) -> CycloProduct:
    return p.substitute(b)


def tm1_multiplicity(p: CycloProduct) -> int:
    return p.tm1_multiplicity()


def degree_sum(p: CycloProduct) -> int:
    return p.degree_sum()


def cyclotomic_normal_form(p: CycloProduct) -> Dict[int, int]:
    return p.normal_form()


def horizontal_zeta_base(inv: LevelInvariants, axis: int) -> CycloProduct:
    """Horizontal zeta function of a one-term branch."""
    d, b, n = inv.d_bullet, inv.b(axis), inv.n(other(axis))
    return CycloProduct([(d, 1), (n * b, 1), (n * d, -b)])


def vertical_zeta_base(inv: LevelInvariants, axis: int) -> CycloProduct:
    """Vertical zeta function of a one-term branch."""
    d, b, n, c = inv.d_bullet, inv.b(axis), inv.n(other(axis)), inv.c_bullet
    if (n * b) % c:
        raise TheoremViolation(f"exponent n*b/c = {n}*{b}/{c} is not an integer")
    return CycloProduct([(1, d), (n * b // c, -c * (d - 1))])


def horizontal_zeta_levels(seq: DerivationSequence) -> List[CycloProduct]:
    """Horizontal zeta functions of every derived branch, k = 0..e-1."""
    axis = seq.axis
    degrees = suffix_degrees(seq)
    top = len(seq) - 1
    out = [ONE] * len(seq)
    out[top] = horizontal_zeta_base(seq[top].invariants, axis)
    for k in range(top - 1, -1, -1):
        inv = seq[k].invariants
        dn, b = degrees[k + 1], inv.b(axis)
        out[k] = horizontal_zeta_base(inv, axis).substitute(dn) * out[k + 1] ** b * tm1(dn, -b)
    return out


def vertical_zeta_levels(seq: DerivationSequence) -> List[CycloProduct]:
    """Vertical zeta functions of every derived branch, k = 0..e-1."""
    axis = seq.axis
    degrees = suffix_degrees(seq)
    top = len(seq) - 1
    out = [ONE] * len(seq)
    out[top] = vertical_zeta_base(seq[top].invariants, axis)
    for k in range(top - 1, -1, -1):
        inv = seq[k].invariants
        dn, b = degrees[k + 1], inv.b(axis)
        out[k] = vertical_zeta_base(inv, axis) ** dn * out[k + 1].substitute(b) * tm1(b, -dn)
    return out


def horizontal_zeta(seq: DerivationSequence) -> CycloProduct:
    return horizontal_zeta_levels(seq)[0]


def vertical_zeta(seq: DerivationSequence) -> CycloProduct:
    return vertical_zeta_levels(seq)[0]
