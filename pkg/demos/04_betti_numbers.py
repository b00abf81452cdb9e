#!/usr/bin/env python3
"""
First Betti numbers of the vertical fibration spaces and of the Milnor fiber boundary.

xi^(k) = d^(k+1) (c^(k) - 1)(d^(k) - 1) + xi^(k+1), h1(V) = xi + 1 and
h1(boundary) = 2 xi.
"""

import random
from fractions import Fraction

from qo_invariants import (CharacteristicTuple, InvalidInputError, betti_report,
                           derivation_sequence, validate)

branch = CharacteristicTuple.of(("2/7", "4/5"), ("5/14", 1), (2, "19/10"))
report = betti_report(derivation_sequence(branch, 1), derivation_sequence(branch, 2))
print("worked example:", report)

# A small survey of random two- and three-term branches.
rng = random.Random(3)
rows = []
while len(rows) < 8:
    e = rng.randint(2, 3)
    a = sorted(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(e))
    b = sorted(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(e))
    t = CharacteristicTuple(tuple(zip(a, b)))
    try:
        validate(t, strict=True)
    except InvalidInputError:
        continue
    r = betti_report(derivation_sequence(t, 1), derivation_sequence(t, 2))
    rows.append((str(t), r.xi_levels, r.h1_boundary))

for text, xi, h1 in rows:
    print(f"{text:60s} xi={xi} h1(boundary)={h1}")
