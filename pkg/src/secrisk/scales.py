"""The two rating scales used throughout the engine.

The individual scale has five linguistic terms (V, L, M, H, X) scored 1..5.
The fused scale has nine terms covering the half-step grid 1.0..5.0; it is
what you get when two individual ratings are combined (see `fusion`).

Scores are carried as integer counts of 0.5 steps ("half units") so that
matrix cells, products, and sort keys compare exactly. A score of 3.5 is
stored as 7 half units; no floating point enters the comparison path.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import OffGridScoreError, UnknownTermError

__all__ = [
    "LinguisticTerm",
    "FusedTerm",
    "Score",
    "term_score",
    "fused_term_score",
    "score_to_fused_term",
    "embed_term",
    "parse_term",
]


class LinguisticTerm(Enum):
    """One of the five terms of the individual 5-point scale."""

    VERY_LOW = "V"
    LOW = "L"
    MODERATE = "M"
    HIGH = "H"
    VERY_HIGH = "X"

    @property
    def code(self) -> str:
        return self.value

    @property
    def long_name(self) -> str:
        return _LONG_NAMES[self]

    @property
    def points(self) -> int:
        """Integer score 1..5 of this term."""
        return _POINTS[self]


_LONG_NAMES = {
    LinguisticTerm.VERY_LOW: "Very low",
    LinguisticTerm.LOW: "Low",
    LinguisticTerm.MODERATE: "Moderate",
    LinguisticTerm.HIGH: "High",
    LinguisticTerm.VERY_HIGH: "Very high",
}

_POINTS = {
    LinguisticTerm.VERY_LOW: 1,
    LinguisticTerm.LOW: 2,
    LinguisticTerm.MODERATE: 3,
    LinguisticTerm.HIGH: 4,
    LinguisticTerm.VERY_HIGH: 5,
}


class FusedTerm(Enum):
    """One of the nine terms of the fused scale, in ascending order.

    The four in-between terms (VL, LM, MH, HX) sit on the half steps;
    the other five coincide with the individual scale.
    """

    VERY_LOW = "V"
    VERY_LOW_LOW = "VL"
    LOW = "L"
    LOW_MODERATE = "LM"
    MODERATE = "M"
    MODERATE_HIGH = "MH"
    HIGH = "H"
    HIGH_VERY_HIGH = "HX"
    VERY_HIGH = "X"

    @property
    def code(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Score:
    """A value on the half-step grid 1.0..5.0.

    `half_units` is 2 * value, an integer between 2 and 10. Construct
    from a plain number with `Score.from_value`.
    """

    half_units: int

    def __post_init__(self):
        if not isinstance(self.half_units, int):
            raise OffGridScoreError(
                f"score must be a whole number of half units, got {self.half_units!r}"
            )
        if not 2 <= self.half_units <= 10:
            raise OffGridScoreError(
                f"score {self.half_units / 2} outside the scale range [1.0, 5.0]"
            )

    @classmethod
    def from_value(cls, value: float) -> "Score":
        doubled = value * 2
        half_units = round(doubled)
        if half_units != doubled:
            raise OffGridScoreError(
                f"score {value} is not on the half-step grid (2*value must be an integer)"
            )
        return cls(half_units)

    @property
    def value(self) -> float:
        return self.half_units / 2

    def __str__(self) -> str:
        return f"{self.value:.1f}"


# Fused terms ascend the half-step grid one half unit at a time, so the
# score of the k-th term is (k + 2) half units.
_FUSED_SCORES = {term: Score(index + 2) for index, term in enumerate(FusedTerm)}
_FUSED_BY_HALF_UNITS = {score.half_units: term for term, score in _FUSED_SCORES.items()}


def term_score(term: LinguisticTerm) -> Score:
    """Score of an individual-scale term (V=1.0 .. X=5.0)."""
    return Score(2 * term.points)


def fused_term_score(term: FusedTerm) -> Score:
    """Score of a fused-scale term (V=1.0, VL=1.5, .. X=5.0)."""
    return _FUSED_SCORES[term]


def score_to_fused_term(score: "Score | float | int") -> FusedTerm:
    """The unique fused term with the given score.

    Accepts a `Score` or a plain number; plain numbers must lie on the
    half-step grid in [1.0, 5.0] or `OffGridScoreError` is raised.
    """
    if not isinstance(score, Score):
        score = Score.from_value(score)
    return _FUSED_BY_HALF_UNITS[score.half_units]


def embed_term(term: LinguisticTerm) -> FusedTerm:
    """The fused-scale counterpart of an individual-scale term."""
    return FusedTerm(term.code)


_PARSE_VOCABULARY = {}
for _term in LinguisticTerm:
    _PARSE_VOCABULARY[_term.code.lower()] = _term
    _PARSE_VOCABULARY[_term.long_name.lower()] = _term


def parse_term(text: str) -> LinguisticTerm:
    """Parse an individual-scale term from its letter code or long name.

    Matching is case-insensitive and ignores surrounding whitespace:
    "H", "h", " High " and "very low" all parse.
    """
    key = text.strip().lower()
    term = _PARSE_VOCABULARY.get(key)
    if term is None:
        accepted = ", ".join(
            f"{t.code} ({t.long_name})" for t in LinguisticTerm
        )
        raise UnknownTermError(
            f"unknown scale term {text!r}; accepted terms: {accepted}"
        )
    return term
