#!/usr/bin/env python3
"""
Horizontal and vertical monodromy zeta functions.

Zeta functions are kept as products of (t^a - 1)^e.  Their degree equals the
Euler characteristic of the transverse Milnor fiber, and in the vertical one
the multiplicity of t - 1 is 1 - xi.
"""

from qo_invariants import (CharacteristicTuple, CycloProduct, derivation_sequence,
                           horizontal_zeta, transverse_euler, vertical_zeta, xi_sequence)

branch = CharacteristicTuple.of(("2/7", "4/5"), ("5/14", 1), (2, "19/10"))

for axis in (1, 2):
    seq = derivation_sequence(branch, axis)
    H, V = horizontal_zeta(seq), vertical_zeta(seq)
    chi = transverse_euler(seq)[0]
    xi = xi_sequence(seq)[0]
    print(f"axis {axis}")
    print("  H =", H)
    print("  V =", V)
    print(f"  degree of H = {H.degree_sum()}, degree of V = {V.degree_sum()}, chi = {chi}")
    print(f"  multiplicity of t-1 in V = {V.tm1_multiplicity()} = 1 - {xi}")
    print("  V in cyclotomic factors:", V.normal_form())

# Products compare as rational functions.
p = CycloProduct({6: 1, 1: 1})
q = CycloProduct([(6, 2), (1, 1), (6, -1)])
print("\n(t^6-1)(t-1) written two ways equal:", p == q)
print("Phi_d exponents of (t^6-1)/(t^2-1):", (CycloProduct({6: 1}) / CycloProduct({2: 1})).normal_form())
