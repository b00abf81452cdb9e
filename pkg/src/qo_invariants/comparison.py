"""Matrices relating the axis-1 and axis-2 derivation sequences.

At every level k >= 1 the exponent vectors of the two derived branches satisfy

    [l1(1); l2(2)] = U [l1(2); l2(1)]     and     [l1(1); l2(1)] = M [l1(2); l2(2)]

componentwise over the terms, with ``M = sw(U)`` an integer matrix of
determinant 1.  Here ``lc(i)`` is the coordinate-c exponent sequence of the
level-k branch derived along axis i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from .branch import DerivationSequence, LevelInvariants, suffix_degrees
from .errors import TheoremViolation
from .exact_core import Mat2, sw


@dataclass(frozen=True)
class ComparisonPair:
    level: int
    U: Mat2
    M: Mat2


@dataclass(frozen=True)
class Check:
    name: str
    level: int
    passed: bool
    witness: Dict[str, Any] = field(default_factory=dict)


@dataclass
class ComparisonReport:
    pairs: List[ComparisonPair]
    checks: List[Check]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]


def u_base(inv0: LevelInvariants) -> Mat2:
    """``U`` at level 1, from the constants of the original branch."""
    return Mat2(
        Fraction(inv0.b1, inv0.m1),
        inv0.b1 * inv0.r1 * inv0.leading(1),
        inv0.b2 * inv0.r2 * inv0.leading(2),
        Fraction(inv0.b2, inv0.m2),
    )


def u_step(U: Mat2, inv_axis1: LevelInvariants, inv_axis2: LevelInvariants) -> Mat2:
    """Advance ``U`` from level k to k+1.

    ``inv_axis1`` and ``inv_axis2`` are the level-k constants of the axis-1 and
    axis-2 sequences.  Starting from the identity at level 0 this reproduces
    :func:`u_base`.
    """
    b1, r1, l11 = inv_axis1.b1, inv_axis1.r1, inv_axis1.leading(1)
    b2, r2, l21 = inv_axis2.b2, inv_axis2.r2, inv_axis2.leading(2)
    m1_2, m2_1 = inv_axis2.m1, inv_axis1.m2
    return Mat2(
        Fraction(b1, m1_2) * U.a11,
        Fraction(b1, m2_1) * U.a12 + b1 * r1 * l11,
        Fraction(b2, m1_2) * U.a21 + b2 * r2 * l21,
        Fraction(b2, m2_1) * U.a22,
    )


def m_from_u(U: Mat2) -> Mat2:
    M = sw(U)
    if not M.is_integral() or M.det != 1:
        raise TheoremViolation(f"sw({U}) = {M} is not in SL(2, Z)")
    return M


def m_step_direct(M: Mat2, inv_axis1: LevelInvariants, inv_axis2: LevelInvariants) -> Mat2:
    """Advance ``M`` from level k to k+1 without passing through ``U``."""
    a, b = inv_axis1, inv_axis2
    s1, r1, s2, r2 = a.s1, a.r1, b.s2, b.r2
    d = a.d_bullet
    m12 = s1 * b.m1 * M.a12 + r1 * b.n1
    m21 = s2 * a.m2 * M.a21 - r2 * a.n2
    m22 = Fraction(a.m2, b.b2) * M.a22
    m11 = b.m1 * b.b2 * s1 * s2 * M.a11 - d * (r1 * s2 * b.leading(2) + r2 * s1 * a.leading(1))
    return Mat2(m11, m12, m21, m22)


def comparison_pairs(seq1: DerivationSequence, seq2: DerivationSequence) -> List[ComparisonPair]:
    """``(U, M)`` for k = 1..e-1; raises if some ``M`` leaves SL(2, Z)."""
    pairs = []
    U = Mat2.identity()
    for k in range(1, len(seq1)):
        U = u_step(U, seq1[k - 1].invariants, seq2[k - 1].invariants)
        pairs.append(ComparisonPair(k, U, m_from_u(U)))
    return pairs


def _prod(xs) -> int:
    return math.prod(xs)


def verify_comparison(seq1: DerivationSequence, seq2: DerivationSequence) -> ComparisonReport:
    """Check every comparison identity between the two sequences.

    Failures are collected as report entries with witness values; nothing is
    raised for a failed identity.
    """
    if seq1.axis != 1 or seq2.axis != 2:
        raise ValueError("expected the axis-1 sequence followed by the axis-2 sequence")
    if seq1[0].branch != seq2[0].branch:
        raise ValueError("sequences come from different branches")
    checks: List[Check] = []

    def check(name, level, passed, **witness):
        checks.append(Check(name, level, bool(passed), {k: _plain(v) for k, v in witness.items()}))

    e = len(seq1)
    deg1, deg2 = suffix_degrees(seq1), suffix_degrees(seq2)
    for k in range(e):
        i1, i2 = seq1[k].invariants, seq2[k].invariants
        check("equal-d-bullet", k, i1.d_bullet == i2.d_bullet, axis1=i1.d_bullet, axis2=i2.d_bullet)
        check("equal-degree", k, deg1[k] == deg2[k], axis1=deg1[k], axis2=deg2[k])
        check("equal-c-bullet", k, i1.c_bullet == i2.c_bullet, axis1=i1.c_bullet, axis2=i2.c_bullet)
        # both lcm's agree with the common d_bullet (two-lcm corollary)
        check("two-lcms", k, math.lcm(i1.m1, i1.m2) == math.lcm(i2.m1, i2.m2),
              axis1=math.lcm(i1.m1, i1.m2), axis2=math.lcm(i2.m1, i2.m2))

    pairs: List[ComparisonPair] = []
    U = Mat2.identity()
    M_direct = Mat2.identity()
    for k in range(1, e):
        lo1, lo2 = seq1[k - 1].invariants, seq2[k - 1].invariants
        U = u_step(U, lo1, lo2)
        M_direct = m_step_direct(M_direct, lo1, lo2)
        check("u-equal-diagonal", k, U.a11 == U.a22, U=U)
        if U.a22 == 0:
            check("m-defined", k, False, U=U)
            break
        M = sw(U)
        pairs.append(ComparisonPair(k, U, M))
        check("m-integral", k, M.is_integral(), M=M)
        check("m-det-one", k, M.det == 1, M=M, det=M.det)
        check("m-direct-recursion", k, M_direct == M, via_u=M, direct=M_direct)

        b1, b2 = seq1[k].branch, seq2[k].branch
        l1_1, l2_1 = b1.exponents(1), b1.exponents(2)
        l1_2, l2_2 = b2.exponents(1), b2.exponents(2)
        for j in range(len(l1_1)):
            got = U.apply(l1_2[j], l2_1[j])
            check("u-relation", k, got == (l1_1[j], l2_2[j]), term=j + 1,
                  expected=[l1_1[j], l2_2[j]], got=list(got))
            got = M.apply(l1_2[j], l2_2[j])
            check("m-relation", k, got == (l1_1[j], l2_1[j]), term=j + 1,
                  expected=[l1_1[j], l2_1[j]], got=list(got))

        # closed form of the common diagonal entry of U
        invs1, invs2 = seq1.invariants[:k], seq2.invariants[:k]
        closed = Fraction(
            _prod(inv.d_bullet for inv in invs1),
            _prod(inv.m1 for inv in invs2) * _prod(inv.m2 for inv in invs1),
        )
        check("u-diagonal-closed-form", k, U.a22 == closed, recursive=U.a22, closed=closed)

    for axis, seq in ((1, seq1), (2, seq2)):
        checks.extend(_denominator_checks(seq, axis))
    checks.extend(_divisibility_checks(seq1, seq2))
    return ComparisonReport(pairs, checks)


def _denominator_checks(seq: DerivationSequence, axis: int) -> List[Check]:
    """The k-th exponent of the other coordinate has denominator ``m m' ... m^(k-1)``.

    Precisely: multiplying it by that product gives an integer coprime to the
    last factor.
    """
    j = 3 - axis
    lam = seq[0].branch.exponents(j)
    out = []
    acc = 1
    for k in range(1, len(lam) + 1):
        last = seq[k - 1].invariants.m(j)
        acc *= last
        num = lam[k - 1] * acc
        ok = num.denominator == 1 and math.gcd(num.numerator, last) == 1
        out.append(Check(f"denominator-structure-axis{axis}", k, ok,
                         {"exponent": str(lam[k - 1]), "denominator": acc, "last_factor": last}))
    return out


def _divisibility_checks(seq1: DerivationSequence, seq2: DerivationSequence) -> List[Check]:
    out = []
    d = p1 = p2 = 1
    for k in range(1, len(seq1) + 1):
        d *= seq1[k - 1].invariants.d_bullet
        p1 *= seq2[k - 1].invariants.m1
        p2 *= seq1[k - 1].invariants.m2
        out.append(Check("lipman-divisibility", k, (p1 * p2) % d == 0,
                         {"degree": d, "product": p1 * p2}))
    return out


def _plain(v):
    if isinstance(v, Mat2):
        return v.to_lists()
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v
