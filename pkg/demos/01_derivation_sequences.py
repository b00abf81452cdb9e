#!/usr/bin/env python3
"""
Derivation sequences of a three-term branch.

The branch x1^(2/7) x2^(4/5) + x1^(5/14) x2 + x1^2 x2^(19/10) is derived twice
along each axis.  Each step reads the leading exponents in lowest terms,
forms d = lcm(m1, m2), b_i = d / m_other, c = gcd(n1, n2), and rewrites the
remaining terms.
"""

from qo_invariants import CharacteristicTuple, derivation_sequence, validate
from qo_invariants.branch import suffix_degrees, transverse_euler

branch = CharacteristicTuple.of(("2/7", "4/5"), ("5/14", 1), (2, "19/10"))
validate(branch, strict=True)
print("branch:", branch)

for axis in (1, 2):
    seq = derivation_sequence(branch, axis)
    print(f"\nderiving along axis {axis}")
    for k, level in enumerate(seq):
        inv = level.invariants
        print(f"  S^({k}): {level.branch}")
        print(f"         d_bullet={inv.d_bullet} c_bullet={inv.c_bullet} "
              f"b=({inv.b1}, {inv.b2}) (r1,s1)=({inv.r1},{inv.s1}) (r2,s2)=({inv.r2},{inv.s2})")
    print("  degrees d^(k):", suffix_degrees(seq))
    print("  transverse Euler characteristics:", transverse_euler(seq))

# The degrees and gcds agree across the two axes even though the branches differ.
s1, s2 = derivation_sequence(branch, 1), derivation_sequence(branch, 2)
print("\nd_bullet per level:", s1.d_bullets(), s2.d_bullets())
print("c_bullet per level:", s1.c_bullets(), s2.c_bullets())
