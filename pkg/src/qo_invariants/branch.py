"""Characteristic tuples of prototype branches and their derivation sequences.

A prototype branch is the series ``sum_j x1**l1j * x2**l2j`` with all
coefficients 1; it is recorded here as the ordered list of exponent pairs
``(l1j, l2j)``.  Axis ``i`` is 1 or 2 and ``other(i)`` is the remaining one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import CannotDeriveError, InvalidInputError, TheoremViolation
from .exact_core import lcm, unimodular_completion

Pair = Tuple[Fraction, Fraction]


def other(axis: int) -> int:
    return 3 - axis


def _check_axis(axis: int) -> None:
    if axis not in (1, 2):
        raise InvalidInputError("bad-axis", f"axis must be 1 or 2, got {axis!r}")


@dataclass(frozen=True)
class CharacteristicTuple:
    terms: Tuple[Pair, ...]

    def __post_init__(self):
        terms = tuple((Fraction(a), Fraction(b)) for a, b in self.terms)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *pairs) -> "CharacteristicTuple":
        """Build from pairs of anything :class:`Fraction` accepts, e.g. ``("2/7", "4/5")``."""
        return cls(tuple(pairs))

    @property
    def e(self) -> int:
        return len(self.terms)

    def exponents(self, coord: int) -> List[Fraction]:
        """The sequence ``l_{coord, j}`` for j = 1..e."""
        return [t[coord - 1] for t in self.terms]

    def leading(self, coord: int) -> Fraction:
        return self.terms[0][coord - 1]

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return " + ".join(f"x1^{a} x2^{b}" for a, b in self.terms)


def _in_lattice(point: Pair, generators: Sequence[Pair]) -> bool:
    # Membership in Z^2 + sum Z*g, via a triangular basis of the scaled integer lattice.
    den = math.lcm(*(x.denominator for g in [*generators, point] for x in g))
    vectors = [(den, 0), (0, den)] + [(int(g[0] * den), int(g[1] * den)) for g in generators]
    pivot, horizontal = (0, 0), 0
    for v in vectors:
        a, b = pivot, v
        while b[1] != 0:
            q = a[1] // b[1]
            a, b = b, (a[0] - q * b[0], a[1] - q * b[1])
        pivot, horizontal = a, math.gcd(horizontal, b[0])
    x, y = int(point[0] * den), int(point[1] * den)
    if y % pivot[1]:
        return False
    return (x - (y // pivot[1]) * pivot[0]) % horizontal == 0


def validate(branch: CharacteristicTuple, strict: bool = False) -> CharacteristicTuple:
    """Check the standing assumptions on a prototype and return it unchanged.

    Raises :class:`InvalidInputError` whose ``code`` is one of ``empty``,
    ``negative-exponent``, ``not-reduced``, ``not-increasing`` and, when
    ``strict`` is set, ``not-essential``.
    """
    terms = branch.terms
    if not terms:
        raise InvalidInputError("empty", "a branch needs at least one term")
    for j, (a, b) in enumerate(terms, 1):
        if a < 0 or b < 0:
            raise InvalidInputError("negative-exponent", f"term {j} has a negative exponent ({a}, {b})")
    a, b = terms[0]
    if a == 0 or b == 0:
        raise InvalidInputError(
            "not-reduced", f"both leading exponents must be nonzero, got ({a}, {b})")
    for j in range(1, len(terms)):
        (a0, b0), (a1, b1) = terms[j - 1], terms[j]
        if not (a0 <= a1 and b0 <= b1 and (a0, b0) != (a1, b1)):
            raise InvalidInputError(
                "not-increasing",
                f"term {j + 1} ({a1}, {b1}) does not strictly follow term {j} ({a0}, {b0})")
    if strict:
        for j in range(len(terms)):
            if _in_lattice(terms[j], terms[:j]):
                raise InvalidInputError(
                    "not-essential",
                    f"term {j + 1} {terms[j]} lies in the group generated by Z^2 and earlier terms")
    return branch


@dataclass(frozen=True)
class LevelInvariants:
    """Constants read off the leading term of one branch.

    ``r1, s1`` complete ``(m2, n2)`` and ``r2, s2`` complete ``(m1, n1)``, so that
    ``m2*s1 - n2*r1 == 1`` and ``m1*s2 - n1*r2 == 1``.
    """

    n1: int
    m1: int
    n2: int
    m2: int
    d_bullet: int
    b1: int
    b2: int
    c_bullet: int
    r1: int
    s1: int
    r2: int
    s2: int

    def n(self, coord: int) -> int:
        return self.n1 if coord == 1 else self.n2

    def m(self, coord: int) -> int:
        return self.m1 if coord == 1 else self.m2

    def b(self, axis: int) -> int:
        return self.b1 if axis == 1 else self.b2

    def r(self, axis: int) -> int:
        return self.r1 if axis == 1 else self.r2

    def s(self, axis: int) -> int:
        return self.s1 if axis == 1 else self.s2

    def leading(self, coord: int) -> Fraction:
        return Fraction(self.n(coord), self.m(coord))

    def as_dict(self):
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def level_invariants(branch: CharacteristicTuple) -> LevelInvariants:
    l1, l2 = branch.terms[0]
    n1, m1 = l1.numerator, l1.denominator
    n2, m2 = l2.numerator, l2.denominator
    d = lcm(m1, m2)
    r1, s1 = unimodular_completion(m2, n2)
    r2, s2 = unimodular_completion(m1, n1)
    return LevelInvariants(
        n1=n1, m1=m1, n2=n2, m2=m2,
        d_bullet=d, b1=d // m2, b2=d // m1,
        c_bullet=math.gcd(n1, n2),
        r1=r1, s1=s1, r2=r2, s2=s2,
    )


def truncate(branch: CharacteristicTuple) -> CharacteristicTuple:
    return CharacteristicTuple(branch.terms[:1])


def _shift(seq: Sequence[Fraction], d: int) -> List[Fraction]:
    # s_{j+1} - s_1 + d*s_1; drops one entry
    head = seq[0]
    return [x - head + d * head for x in seq[1:]]


def derive(branch: CharacteristicTuple, axis: int) -> CharacteristicTuple:
    """One derivation step with respect to ``axis``; the result has one term fewer."""
    _check_axis(axis)
    if branch.e < 2:
        raise CannotDeriveError("a one-term branch has no derived branch")
    inv = level_invariants(branch)
    i, j = axis, other(axis)
    d = inv.d_bullet
    # the other-coordinate line is needed first: it feeds the axis line
    new_j = [inv.m(j) * x for x in _shift(branch.exponents(j), d)]
    b, r, lead = inv.b(i), inv.r(i), branch.leading(i)
    new_i = [b * x + b * r * lead * y for x, y in zip(_shift(branch.exponents(i), d), new_j)]
    pairs = zip(new_i, new_j) if i == 1 else zip(new_j, new_i)
    return CharacteristicTuple(tuple(pairs))


@dataclass(frozen=True)
class Level:
    branch: CharacteristicTuple
    invariants: LevelInvariants


@dataclass(frozen=True)
class DerivationSequence:
    """The branches ``S, S'(i), ..., S^(e-1)(i)`` with their leading-term constants."""

    axis: int
    levels: Tuple[Level, ...]

    def __len__(self):
        return len(self.levels)

    def __getitem__(self, k) -> Level:
        return self.levels[k]

    @property
    def branches(self) -> List[CharacteristicTuple]:
        return [lv.branch for lv in self.levels]

    @property
    def invariants(self) -> List[LevelInvariants]:
        return [lv.invariants for lv in self.levels]

    def d_bullets(self) -> List[int]:
        return [inv.d_bullet for inv in self.invariants]

    def c_bullets(self) -> List[int]:
        return [inv.c_bullet for inv in self.invariants]


def derivation_sequence(branch: CharacteristicTuple, axis: int) -> DerivationSequence:
    _check_axis(axis)
    validate(branch)
    levels = []
    current = branch
    while True:
        levels.append(Level(current, level_invariants(current)))
        if current.e == 1:
            break
        current = derive(current, axis)
    return DerivationSequence(axis, tuple(levels))


def suffix_degrees(seq: DerivationSequence) -> List[int]:
    """Degrees ``d^(k)`` of the derived branches, k = 0..e-1.

    ``d^(k)`` is the product of the truncation degrees from level k upward.
    """
    out = []
    acc = 1
    for inv in reversed(seq.invariants):
        acc *= inv.d_bullet
        out.append(acc)
    return out[::-1]


def surface_degree(seq: DerivationSequence) -> int:
    return suffix_degrees(seq)[0]


def truncation_euler(inv: LevelInvariants, axis: int) -> Fraction:
    """Euler characteristic of the transverse fiber of the one-term truncation."""
    d = inv.d_bullet
    lead = inv.leading(other(axis))
    return d + d * lead - d * d * lead


def transverse_euler(seq: DerivationSequence) -> List[int]:
    """Euler characteristics ``chi^(k)(i)`` of the transverse Milnor fibers, k = 0..e-1.

    Descends from the top level with ``chi = d' chi_bullet + b_i (chi' - d')``.
    The intermediate values are rational; the results must be integers.
    """
    axis = seq.axis
    degrees = suffix_degrees(seq)
    top = len(seq) - 1
    chi = [Fraction(0)] * len(seq)
    chi[top] = truncation_euler(seq[top].invariants, axis)
    for k in range(top - 1, -1, -1):
        inv = seq[k].invariants
        dn = degrees[k + 1]
        chi[k] = dn * truncation_euler(inv, axis) + inv.b(axis) * (chi[k + 1] - dn)
    for k, x in enumerate(chi):
        if x.denominator != 1:
            raise TheoremViolation(f"chi at level {k} (axis {axis}) is not an integer: {x}")
    return [int(x) for x in chi]
