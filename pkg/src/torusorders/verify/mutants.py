"""Deliberately broken sign functions, used to show the suites have teeth.

Which suites catch which mutant (checked by the test suite):

==================  ==========================================================
flip_cell_sign(m,n) cone_axioms, invariance (for cells off the origin),
                    standard_stability, reference
swap_lex            reference only; the swapped order is itself a valid
                    standard order, so no axiom suite can see it
drop_Q2             chain_Cgamma, convexity with a Cgamma selector, reference
shift_p2            cover_laws, reference
truncate_inverse    magnus_laws, reference
first_letter        convexity with selector G2, cone_axioms, invariance,
                    reference
==================  ==========================================================
"""
from __future__ import annotations

import re

from .. import cover
from ..cover import CellSum
from ..magnus import MagnusSeries
from ..orders import BiOrder, OrderConfig, Sign
from ..words import Word

MUTATIONS = ("flip_cell_sign(m,n)", "swap_lex", "drop_Q2", "shift_p2", "truncate_inverse",
             "first_letter")


class FlipCellSign(BiOrder):
    """Negates every element whose Q2 class has its maximal cell at `cell`."""

    def __init__(self, cfg: OrderConfig, cell: tuple[int, int] = (0, 0)):
        super().__init__(cfg)
        self.cell = cell
        self.name = f"flip_cell_sign({cell[0]},{cell[1]})"

    def sign_nonstandard(self, w: Word) -> Sign:
        s = super().sign_nonstandard(w)
        if self.branch(w) == "Q2" and self.max_cell(self.p2(w)).max_cell == self.cell:
            return -s
        return s

    def sign_standard(self, w: Word) -> Sign:
        s = super().sign_standard(w)
        if self.cfg.kind == "standard" and w.exponent_sum() == (0, 0) and self.p2(w):
            if self.max_cell(self.p2(w)).max_cell == self.cell:
                return -s
        return s


class SwapLex(BiOrder):
    """Uses the opposite tensor lex order from the one in its config."""

    name = "swap_lex"

    def __init__(self, cfg: OrderConfig):
        super().__init__(cfg)
        self._tensor_rows = self._tensor_rows[::-1]


class DropQ2(BiOrder):
    """Skips the cell level: all of [G, G] is ordered by the standard order."""

    name = "drop_Q2"

    def sign_nonstandard(self, w: Word) -> Sign:
        if w.is_identity():
            return Sign.ZERO
        v = w.exponent_sum()
        if v != (0, 0):
            return self.q1_sign(v)
        return self.sign_standard(w)


def _shifted_p2(w: Word) -> CellSum:
    # keys cells by their upper-right corner instead of the lower-left one
    return cover.shift(cover.p2(w), (1, 1))


class ShiftP2(BiOrder):
    name = "shift_p2"
    p2 = staticmethod(_shifted_p2)


def _truncated_expand(w: Word, cap: int) -> MagnusSeries:
    # a^-1 -> 1 - x, dropping x^2 - x^3 + ...
    out = MagnusSeries.one(cap)
    for letter in w.letters:
        v = "x" if abs(letter) == 1 else "y"
        out = out * MagnusSeries(cap, {"": 1, v: 1 if letter > 0 else -1})
    return out


class TruncateInverse(BiOrder):
    name = "truncate_inverse"
    expand = staticmethod(_truncated_expand)


class FirstLetter(BiOrder):
    """Orders words outside [G, G] by their first letter, ignoring the abelian functional."""

    name = "first_letter"

    def sign(self, w: Word) -> Sign:
        if w.exponent_sum() != (0, 0):
            return Sign.POSITIVE if w.letters[0] > 0 else Sign.NEGATIVE
        return super().sign(w)

    __call__ = sign


_CELL = re.compile(r"flip_cell_sign\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


def mutate_order(cfg: OrderConfig, mutation: str) -> BiOrder:
    m = _CELL.match(mutation.strip())
    if m:
        return FlipCellSign(cfg, (int(m.group(1)), int(m.group(2))))
    table = {"swap_lex": SwapLex, "drop_Q2": DropQ2, "shift_p2": ShiftP2,
             "truncate_inverse": TruncateInverse, "first_letter": FirstLetter}
    if mutation not in table:
        raise ValueError(f"unknown mutation {mutation!r}; choose from {MUTATIONS}")
    return table[mutation](cfg)


__all__ = ["mutate_order", "MUTATIONS", "FlipCellSign", "SwapLex", "DropQ2",
           "ShiftP2", "TruncateInverse", "FirstLetter"]
