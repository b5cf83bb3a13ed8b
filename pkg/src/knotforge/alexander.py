"""Alexander polynomial of a knot diagram from its crossing/arc matrix."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, DiagramError, check
from .laurent import (
    ONE,
    T,
    LaurentPoly,
    PolyMatrix,
    determinant,
    eval_at_int,
    normalize_units,
)

__all__ = [
    "AlexanderMatrix",
    "build_matrix",
    "alexander_matrix",
    "alexander_polynomial",
    "knot_determinant",
]

_ONE_MINUS_T = ONE - T
_NEG_ONE = LaurentPoly(-1)


@dataclass(frozen=True)
class AlexanderMatrix:
    full: PolyMatrix
    deleted_row: int
    deleted_col: int

    @property
    def minor(self) -> PolyMatrix:
        return self.full.minor(self.deleted_row, self.deleted_col)


def _require_knot(d: Diagram):
    check(d)
    if d.components != 1:
        raise DiagramError(f"Alexander matrix needs a knot, got {d.components} components")


def build_matrix(d: Diagram) -> PolyMatrix:
    """Crossing x arc matrix, row i for crossing i and column j for arc j.

    A positive crossing contributes ``1 - t`` at its over-arc, ``t`` at the
    incoming under-arc and ``-1`` at the outgoing one; a negative crossing
    swaps the last two.  Contributions accumulate, so a kink whose arcs
    coincide sums them in a single cell.
    """
    _require_knot(d)
    if not d.pd:
        raise DiagramError("the zero-crossing unknot has an empty Alexander matrix")
    n = len(d.pd)
    rows = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for i, c in enumerate(d.crossings):
        row = rows[i]
        row[c.over] = row[c.over] + _ONE_MINUS_T
        if c.sign > 0:
            row[c.under_in] = row[c.under_in] + T
            row[c.under_out] = row[c.under_out] + _NEG_ONE
        else:
            row[c.under_in] = row[c.under_in] + _NEG_ONE
            row[c.under_out] = row[c.under_out] + T
    return PolyMatrix(rows)


def alexander_matrix(d: Diagram, drop_row: int | None = None, drop_col: int | None = None) -> AlexanderMatrix:
    """Full matrix plus the deleted row/column (last ones by default)."""
    full = build_matrix(d)
    r = full.n - 1 if drop_row is None else drop_row
    c = full.n - 1 if drop_col is None else drop_col
    if not (0 <= r < full.n and 0 <= c < full.n):
        raise IndexError(f"row/col ({r}, {c}) out of range for {full.n} crossings")
    return AlexanderMatrix(full, r, c)


def alexander_polynomial(d: Diagram, drop_row: int | None = None, drop_col: int | None = None) -> LaurentPoly:
    """Alexander polynomial in unit-normal form (lowest term ``+c*t^0``)."""
    _require_knot(d)
    if not d.pd:
        if drop_row not in (None, 0) or drop_col not in (None, 0):
            raise IndexError("the zero-crossing unknot has no rows or columns to drop")
        return ONE
    m = alexander_matrix(d, drop_row, drop_col)
    det = determinant(m.minor)
    if det.is_zero():
        raise DiagramError("Alexander minor vanished; diagram is not a knot diagram")
    return normalize_units(det)


def knot_determinant(d: Diagram) -> int:
    """``|Δ(-1)|``."""
    return abs(int(eval_at_int(alexander_polynomial(d), -1)))
