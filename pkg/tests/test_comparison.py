import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import branches
from qo_invariants import (CharacteristicTuple, Mat2, TheoremViolation, derivation_sequence,
                           level_invariants, m_from_u, m_step_direct, u_base, u_step,
                           verify_comparison)
from qo_invariants.comparison import comparison_pairs

F = Fraction
M_ = Mat2.from_rows


class TestUBase:
    def test_section6(self, s6):
        assert u_base(level_invariants(s6)) == M_([[1, 2], [12, 1]])

    def test_half_half(self):
        # m = 2, n = 1 on both sides, d = 2, b = 1, (r, s) = (1, 1)
        inv = level_invariants(CharacteristicTuple.of(("1/2", "1/2")))
        assert u_base(inv) == M_([[F(1, 2), F(1, 2)], [F(1, 2), F(1, 2)]])

    def test_integer_branch(self):
        assert u_base(level_invariants(CharacteristicTuple.of((1, 1)))) == Mat2.identity()

    @given(branches())
    def test_is_step_from_identity(self, t):
        inv = level_invariants(t)
        assert u_step(Mat2.identity(), inv, inv) == u_base(inv)


class TestSection6Steps:
    def test_u_step(self, s6_seqs):
        s1, s2 = s6_seqs
        U2 = u_step(M_([[1, 2], [12, 1]]), s1[1].invariants, s2[1].invariants)
        assert U2 == M_([[1, 4], [993, 1]])
        # (1/2)*12 + 1*1*987
        assert U2.a21 == F(1, 2) * 12 + 1 * 1 * 987

    def test_m_from_u(self):
        assert m_from_u(M_([[1, 2], [12, 1]])) == M_([[-23, 2], [-12, 1]])
        assert m_from_u(M_([[1, 4], [993, 1]])) == M_([[-3971, 4], [-993, 1]])
        assert m_from_u(Mat2.identity()) == Mat2.identity()

    def test_m_from_u_rejects_non_sl2z(self):
        with pytest.raises(TheoremViolation):
            m_from_u(M_([[1, 2], [12, 2]]))
        with pytest.raises(TheoremViolation):
            m_from_u(M_([[1, F(1, 2)], [0, 1]]))

    def test_m_step_direct(self, s6_seqs):
        s1, s2 = s6_seqs
        M1 = M_([[-23, 2], [-12, 1]])
        M2 = m_step_direct(M1, s1[1].invariants, s2[1].invariants)
        # s1' m1'(2) M12 + r1' n1'(2) = 1*2*2 + 0*141
        assert M2.a12 == 4
        assert M2.a22 == 1
        assert M2 == M_([[-3971, 4], [-993, 1]])

    def test_m_step_direct_from_identity(self, s6_seqs):
        s1, s2 = s6_seqs
        assert m_step_direct(Mat2.identity(), s1[0].invariants, s2[0].invariants) == \
            M_([[-23, 2], [-12, 1]])

    def test_pairs(self, s6_seqs):
        pairs = comparison_pairs(*s6_seqs)
        assert [p.level for p in pairs] == [1, 2]
        assert [p.M for p in pairs] == [M_([[-23, 2], [-12, 1]]), M_([[-3971, 4], [-993, 1]])]

    def test_displayed_vector_identities(self, s6_seqs):
        U1, M1 = M_([[1, 2], [12, 1]]), M_([[-23, 2], [-12, 1]])
        M2 = M_([[-3971, 4], [-993, 1]])
        assert M1.apply(F(141, 2), 987) == (F(705, 2), 141)
        assert M1.apply(82, F(2259, 2)) == (373, F(291, 2))
        assert U1.apply(F(141, 2), 141) == (F(705, 2), 987)
        assert U1.apply(82, F(291, 2)) == (373, F(2259, 2))
        assert M2.apply(305, F(606303, 2)) == (1451, F(573, 2))


def test_verify_section6(s6_seqs):
    report = verify_comparison(*s6_seqs)
    assert report.ok, report.failures()
    names = {c.name for c in report.checks}
    assert {"equal-d-bullet", "equal-degree", "equal-c-bullet", "u-relation", "m-relation",
            "m-integral", "m-det-one", "m-direct-recursion", "u-diagonal-closed-form",
            "denominator-structure-axis1", "denominator-structure-axis2",
            "lipman-divisibility"} <= names


def test_verify_reports_failures_with_witnesses(s6):
    # axis-2 levels taken from a different branch with the same leading term
    s1 = derivation_sequence(s6, 1)
    other = derivation_sequence(CharacteristicTuple.of(("2/7", "4/5"), ("5/14", 2), (3, 3)), 2)
    forged = dataclasses.replace(other, levels=(s1.levels[0],) + other.levels[1:])
    report = verify_comparison(s1, forged)
    assert not report.ok
    bad = report.failures()[0]
    assert bad.witness


def test_verify_argument_order(s6_seqs):
    s1, s2 = s6_seqs
    with pytest.raises(ValueError):
        verify_comparison(s2, s1)


@given(branches())
def test_random_branches(t):
    s1, s2 = derivation_sequence(t, 1), derivation_sequence(t, 2)
    report = verify_comparison(s1, s2)
    assert report.ok, report.failures()
    assert len(report.pairs) == t.e - 1
    for p in report.pairs:
        assert p.U.a11 == p.U.a22
        assert p.M.is_integral() and p.M.det == 1


@given(branches())
def test_m_routes_agree(t):
    s1, s2 = derivation_sequence(t, 1), derivation_sequence(t, 2)
    U, M = Mat2.identity(), Mat2.identity()
    for k in range(1, t.e):
        U = u_step(U, s1[k - 1].invariants, s2[k - 1].invariants)
        M = m_step_direct(M, s1[k - 1].invariants, s2[k - 1].invariants)
        assert m_from_u(U) == M
