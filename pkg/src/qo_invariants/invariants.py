"""First Betti numbers of the vertical fibration spaces and of the Milnor fiber boundary."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .branch import DerivationSequence, suffix_degrees
from .errors import TheoremViolation
from .zeta import CycloProduct, vertical_zeta


@dataclass(frozen=True)
class BettiReport:
    xi_levels: List[int]
    xi: int
    h1_vertical: int
    h1_boundary: int
    zeta_consistency: bool

    def as_dict(self):
        return {
            "xi_levels": list(self.xi_levels),
            "xi": self.xi,
            "h1_vertical": self.h1_vertical,
            "h1_boundary": self.h1_boundary,
            "zeta_consistency": self.zeta_consistency,
        }


def xi_sequence(seq: DerivationSequence) -> List[int]:
    """Dimensions ``xi^(k)`` of the 1-eigenspace of vertical monodromy, k = 0..e-1."""
    degrees = suffix_degrees(seq)
    top = len(seq) - 1
    xi = [0] * len(seq)
    inv = seq[top].invariants
    xi[top] = (inv.c_bullet - 1) * (inv.d_bullet - 1)
    for k in range(top - 1, -1, -1):
        inv = seq[k].invariants
        xi[k] = degrees[k + 1] * (inv.c_bullet - 1) * (inv.d_bullet - 1) + xi[k + 1]
    return xi


def betti_report(seq1: DerivationSequence, seq2: DerivationSequence,
                 v1: Optional[CycloProduct] = None,
                 v2: Optional[CycloProduct] = None) -> BettiReport:
    """Betti data from both axis sequences and their vertical zeta functions.

    The zeta functions are computed when omitted.  Raises
    :class:`TheoremViolation` if the two axes disagree on ``xi`` or if the
    multiplicity of ``t - 1`` in a vertical zeta function is not ``1 - xi``.
    """
    xi1, xi2 = xi_sequence(seq1), xi_sequence(seq2)
    if xi1 != xi2:
        raise TheoremViolation(f"1-eigenspace dimensions differ across axes: {xi1} vs {xi2}")
    xi = xi1[0]
    v1 = vertical_zeta(seq1) if v1 is None else v1
    v2 = vertical_zeta(seq2) if v2 is None else v2
    mults = (v1.tm1_multiplicity(), v2.tm1_multiplicity())
    if mults != (1 - xi, 1 - xi):
        raise TheoremViolation(
            f"multiplicity of t-1 in the vertical zeta functions is {mults}, expected {1 - xi}")
    return BettiReport(
        xi_levels=xi1,
        xi=xi,
        h1_vertical=xi + 1,
        h1_boundary=2 * xi,
        zeta_consistency=True,
    )
