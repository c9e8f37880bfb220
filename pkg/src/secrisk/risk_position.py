"""Country security profiles and the risk-position score.

A country's risk position is the weighted sum of three ordinal components:
its security economic intelligence (SEI) position, its readiness across
the three strategic goal areas, and its adverse exposure. Each component
sits on a 1..5 scale.

Two orientations are supported. `literal` feeds the raw scale levels into
the weighted sum exactly as the scales assign them. Under that reading a
fully equipped SB6 country (SEI 5) contributes more risk than a country
considered an enemy by all of the SB6, which is almost certainly not what
an analyst wants; `oriented` therefore inverts SEI and readiness (6 - x)
so that every component grows with risk, and is the default everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum

from .errors import ComponentOutOfRangeError, InvalidWeightsError, ValidationError

__all__ = [
    "SeiLevel",
    "AreaRating",
    "ReadinessProfile",
    "AdverseExposureLevel",
    "Weights",
    "CountryProfile",
    "Orientation",
    "classify_readiness",
    "component_scores",
    "risk_position",
    "country_risk",
]

WEIGHT_SUM_TOLERANCE = 1e-9


class SeiLevel(IntEnum):
    """SEI position 1..5; level 5 is reserved for the Security Big Six.

    Reference points: level 1 fits a state like Iran, level 2 most
    African countries, level 3 a state like Tunisia, level 4 a state
    like Japan.
    """

    ENEMY_OF_ALL_SB6 = 1
    NO_SB6_FRIENDS = 2
    FRIENDLY_DEVELOPING = 3
    INDUSTRIAL_NON_SB6 = 4
    SB6_MEMBER = 5

    @property
    def descriptor(self) -> str:
        return _SEI_DESCRIPTORS[self]


_SEI_DESCRIPTORS = {
    SeiLevel.ENEMY_OF_ALL_SB6: "Considered enemy by all SB6 countries",
    SeiLevel.NO_SB6_FRIENDS: "Has no friends among the SB6 countries",
    SeiLevel.FRIENDLY_DEVELOPING: "Friendly developing countries",
    SeiLevel.INDUSTRIAL_NON_SB6: "Industrial countries not part of the SB6",
    SeiLevel.SB6_MEMBER: "One of the SB6 countries",
}


class AreaRating(IntEnum):
    """Strength rating of one goal area, ascending very_weak..very_strong."""

    VERY_WEAK = 1
    WEAK = 2
    STRONG = 3
    VERY_STRONG = 4

    @property
    def code(self) -> str:
        return self.name.lower()

    @classmethod
    def from_text(cls, text: str) -> "AreaRating":
        key = text.strip().lower().replace(" ", "_")
        for rating in cls:
            if rating.code == key:
                return rating
        accepted = ", ".join(r.code for r in cls)
        raise ValidationError(f"unknown area rating {text!r}; accepted: {accepted}")


@dataclass(frozen=True)
class ReadinessProfile:
    """Per-goal-area strength ratings of a country."""

    homeland_security: AreaRating
    business_continuity: AreaRating
    disaster_recovery: AreaRating

    def ratings(self) -> tuple[AreaRating, AreaRating, AreaRating]:
        return (self.homeland_security, self.business_continuity, self.disaster_recovery)


class AdverseExposureLevel(IntEnum):
    """Hostility environment 1..5, ascending from neutral to pariah.

    Reference points: level 1 fits the Vatican or Switzerland, level 4
    states at war such as the USA, UK or Poland, level 5 states like
    North Korea, Iran or Syria.
    """

    NEUTRAL_NO_ENEMIES = 1
    NOT_NEUTRAL_NO_ENEMIES = 2
    NOT_AT_WAR = 3
    AT_WAR_NOT_TERRORIST = 4
    WIDELY_CONSIDERED_TERRORIST = 5

    @property
    def descriptor(self) -> str:
        return _ADVERSE_DESCRIPTORS[self]


_ADVERSE_DESCRIPTORS = {
    AdverseExposureLevel.NEUTRAL_NO_ENEMIES: "Has no enemies and is neutral",
    AdverseExposureLevel.NOT_NEUTRAL_NO_ENEMIES: "Has no enemies but not neutral",
    AdverseExposureLevel.NOT_AT_WAR: "Not in any war",
    AdverseExposureLevel.AT_WAR_NOT_TERRORIST: "In war but not considered a terrorist country",
    AdverseExposureLevel.WIDELY_CONSIDERED_TERRORIST: "Considered a terrorist country by many countries",
}


@dataclass(frozen=True)
class Weights:
    """Nonnegative component weights that must sum to 1.

    Construction rejects weight vectors whose sum deviates from 1 by more
    than 1e-9; use `Weights.normalized` to rescale an arbitrary
    nonnegative vector instead.
    """

    alpha1: float
    alpha2: float
    alpha3: float

    def __post_init__(self):
        values = (self.alpha1, self.alpha2, self.alpha3)
        if any(a < 0 for a in values):
            raise InvalidWeightsError(f"weights must be nonnegative, got {values}")
        total = sum(values)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise InvalidWeightsError(
                f"weights must sum to 1 (within {WEIGHT_SUM_TOLERANCE}), got sum {total!r}"
            )

    @classmethod
    def normalized(cls, alpha1: float, alpha2: float, alpha3: float) -> "Weights":
        """Rescale a nonnegative weight vector proportionally to sum 1."""
        values = (alpha1, alpha2, alpha3)
        if any(a < 0 for a in values):
            raise InvalidWeightsError(f"weights must be nonnegative, got {values}")
        total = sum(values)
        if total <= 0:
            raise InvalidWeightsError("cannot normalize weights summing to 0")
        return cls(alpha1 / total, alpha2 / total, alpha3 / total)

    @classmethod
    def equal(cls) -> "Weights":
        return cls(1 / 3, 1 / 3, 1 / 3)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha1, self.alpha2, self.alpha3)


@dataclass(frozen=True)
class CountryProfile:
    """Everything needed to place one country on the risk-position scale."""

    name: str
    sei: SeiLevel
    readiness: ReadinessProfile
    adverse: AdverseExposureLevel
    weights: Weights

    def __post_init__(self):
        if not self.name:
            raise ValidationError("country name must be non-empty")


class Orientation(Enum):
    LITERAL = "literal"
    ORIENTED = "oriented"

    @classmethod
    def from_text(cls, text: str) -> "Orientation":
        key = text.strip().lower()
        for orientation in cls:
            if orientation.value == key:
                return orientation
        raise ValidationError(
            f"unknown orientation {text!r}; accepted: literal, oriented"
        )


def classify_readiness(profile: ReadinessProfile) -> int:
    """Readiness level 1 (worst) .. 5 (best) of a per-area profile.

    Level 1: very weak in all three areas.
    Level 2: weak or worse in all three, but not all very weak.
    Level 3: weak or worse in at least one area, strong or better in another.
    Level 4: strong or better in all three, but not all very strong.
    Level 5: very strong in all three areas.

    Total over all 64 profiles and monotone in each area.
    """
    ratings = profile.ratings()
    if all(r == AreaRating.VERY_WEAK for r in ratings):
        return 1
    if all(r <= AreaRating.WEAK for r in ratings):
        return 2
    if any(r <= AreaRating.WEAK for r in ratings):
        return 3
    if all(r == AreaRating.VERY_STRONG for r in ratings):
        return 5
    return 4


def component_scores(profile: CountryProfile, orientation: Orientation) -> tuple[int, int, int]:
    """The three component scores (SEI, readiness, adverse exposure).

    `literal` passes the raw scale levels through; `oriented` replaces the
    SEI and readiness levels with 6 - level so that every component is
    risk-increasing. Adverse exposure already ascends with risk.
    """
    sei = int(profile.sei)
    readiness = classify_readiness(profile.readiness)
    adverse = int(profile.adverse)
    if orientation is Orientation.ORIENTED:
        return (6 - sei, 6 - readiness, adverse)
    return (sei, readiness, adverse)


def risk_position(s1: float, s2: float, s3: float, weights: Weights) -> float:
    """Weighted sum alpha1*s1 + alpha2*s2 + alpha3*s3.

    Each component must lie in [1, 5]; with weights summing to 1 the
    result is bounded by the smallest and largest component.
    """
    for label, s in (("s1", s1), ("s2", s2), ("s3", s3)):
        if not 1 <= s <= 5:
            raise ComponentOutOfRangeError(
                f"component {label}={s} outside the scale range [1, 5]"
            )
    return weights.alpha1 * s1 + weights.alpha2 * s2 + weights.alpha3 * s3


def country_risk(profile: CountryProfile, orientation: Orientation = Orientation.ORIENTED) -> float:
    """Risk position of a country profile under the given orientation."""
    s1, s2, s3 = component_scores(profile, orientation)
    return risk_position(s1, s2, s3, profile.weights)
