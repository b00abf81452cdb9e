"""Recursive invariants of irreducible reduced quasi-ordinary surface prototypes.

The input is a characteristic tuple: the exponent pairs of a branch
``x1^l11 x2^l21 + x1^l12 x2^l22 + ...``.  From it the package computes the two
derivation sequences, the horizontal and vertical monodromy zeta functions, the
matrices comparing the two sequences, and the first Betti number of the Milnor
fiber boundary.
"""

from .branch import (CharacteristicTuple, DerivationSequence, LevelInvariants, derivation_sequence,
                     derive, level_invariants, suffix_degrees, surface_degree, transverse_euler,
                     truncate, validate)
from .comparison import (ComparisonPair, ComparisonReport, m_from_u, m_step_direct, u_base,
                         u_step, verify_comparison)
from .errors import (CannotDeriveError, InvalidInputError, QOError, SingularSwapError,
                     TheoremViolation)
from .exact_core import Mat2, lcm, reduce, sw, unimodular_completion
from .invariants import BettiReport, betti_report, xi_sequence
from .zeta import (CycloProduct, horizontal_zeta, horizontal_zeta_base, vertical_zeta,
                   vertical_zeta_base)

__version__ = "0.1.0"
