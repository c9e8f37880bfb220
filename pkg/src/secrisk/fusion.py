"""Fusing two individual-scale ratings into one fused-scale result.

Quantitatively the fused value is the arithmetic mean of the two term
scores; linguistically it is the fused term carrying that value. Both
5x5 matrices (for display and checking) are derived from the same rule,
so they can never drift apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .scales import (
    FusedTerm,
    LinguisticTerm,
    Score,
    score_to_fused_term,
)

__all__ = ["MatrixKind", "FusionMatrix", "fuse_quant", "fuse_linguistic", "fusion_matrix"]


class MatrixKind(Enum):
    LINGUISTIC = "linguistic"
    QUANTITATIVE = "quantitative"


def fuse_quant(a: LinguisticTerm, b: LinguisticTerm) -> Score:
    """Quantitative fusion: the mean of the two term scores.

    The sum of the two integer point values is exactly the mean in half
    units, so no division happens.
    """
    return Score(a.points + b.points)


def fuse_linguistic(a: LinguisticTerm, b: LinguisticTerm) -> FusedTerm:
    """Linguistic fusion: the fused term whose score is fuse_quant(a, b)."""
    return score_to_fused_term(fuse_quant(a, b))


@dataclass(frozen=True)
class FusionMatrix:
    """A full 5x5 fusion table of one kind.

    Rows are scale-1 terms (e.g. threats), columns scale-2 terms (e.g.
    business impact). Cells are `FusedTerm` for the linguistic kind and
    `Score` for the quantitative kind.
    """

    kind: MatrixKind
    terms: tuple[LinguisticTerm, ...]
    cells: "dict[tuple[LinguisticTerm, LinguisticTerm], FusedTerm | Score]"

    def cell(self, row: LinguisticTerm, col: LinguisticTerm):
        return self.cells[(row, col)]


def fusion_matrix(kind: MatrixKind) -> FusionMatrix:
    """Materialize the full 25-cell fusion table of the requested kind."""
    terms = tuple(LinguisticTerm)
    if kind is MatrixKind.QUANTITATIVE:
        cells = {(a, b): fuse_quant(a, b) for a in terms for b in terms}
    else:
        cells = {(a, b): fuse_linguistic(a, b) for a in terms for b in terms}
    return FusionMatrix(kind=kind, terms=terms, cells=cells)
