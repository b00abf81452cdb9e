#!/usr/bin/env python3
"""
Comparing the two derivation sequences.

At every level the two derived branches are related by an SL(2, Z) matrix M,
obtained by swapping an auxiliary rational matrix U.  U is built by a
recursion; M can also be advanced directly, and both routes agree.
"""

from qo_invariants import (CharacteristicTuple, Mat2, derivation_sequence, m_from_u,
                           m_step_direct, u_step, verify_comparison)

branch = CharacteristicTuple.of(("2/7", "4/5"), ("5/14", 1), (2, "19/10"))
s1, s2 = derivation_sequence(branch, 1), derivation_sequence(branch, 2)

U, M = Mat2.identity(), Mat2.identity()
for k in range(1, len(s1)):
    U = u_step(U, s1[k - 1].invariants, s2[k - 1].invariants)
    M = m_step_direct(M, s1[k - 1].invariants, s2[k - 1].invariants)
    print(f"level {k}: U = {U}, sw(U) = {m_from_u(U)}, direct M = {M}")
    for (x11, x21), (x12, x22) in zip(s1[k].branch.terms, s2[k].branch.terms):
        print(f"   M [{x12}; {x22}] = {[str(v) for v in M.apply(x12, x22)]}"
              f"   (axis-1 term: [{x11}; {x21}])")

report = verify_comparison(s1, s2)
print(f"\n{len(report.checks)} comparison checks, all passed: {report.ok}")

# The same machinery on a longer branch.
longer = CharacteristicTuple.of(("1/3", "1/2"), ("1/2", "3/4"), ("5/6", "7/8"), (1, "11/12"))
r = verify_comparison(derivation_sequence(longer, 1), derivation_sequence(longer, 2))
for pair in r.pairs:
    print(f"level {pair.level}: M = {pair.M}, det = {pair.M.det}")
print("all passed:", r.ok)
