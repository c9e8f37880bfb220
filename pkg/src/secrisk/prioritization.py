"""Candidate-asset prioritization.

Each asset gets a risk score by fusing its threat and business-impact
ratings, a priority of risk times control weakness, and a place in the
priority vector sorted by descending priority (ties broken by ascending
asset id, so output never depends on input order).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DuplicateAssetIdError, ValidationError, WeaknessOutOfRangeError
from .fusion import fuse_quant
from .scales import LinguisticTerm, Score

__all__ = [
    "GoalArea",
    "AssetAssessment",
    "PriorityEntry",
    "PriorityVector",
    "asset_risk",
    "asset_priority",
    "prioritize",
]


class GoalArea(Enum):
    """The three strategic goal areas a protected asset can belong to."""

    BUSINESS_CONTINUITY = "business_continuity"
    DISASTER_RECOVERY = "disaster_recovery"
    HOMELAND_SECURITY = "homeland_security"

    @property
    def code(self) -> str:
        return self.value

    @property
    def display(self) -> str:
        return self.value.replace("_", " ")

    @classmethod
    def from_text(cls, text: str) -> "GoalArea":
        key = text.strip().lower().replace(" ", "_")
        for area in cls:
            if area.code == key:
                return area
        accepted = ", ".join(a.code for a in cls)
        raise ValidationError(f"unknown goal area {text!r}; accepted: {accepted}")


def _check_weakness(weakness: int) -> None:
    # Weakness is a point of the *individual* scale: whole numbers only,
    # half steps are rejected.
    if not isinstance(weakness, int) or isinstance(weakness, bool) or not 1 <= weakness <= 5:
        raise WeaknessOutOfRangeError(
            f"weakness out of range: {weakness!r} is not an integer in 1..5"
        )


@dataclass(frozen=True)
class AssetAssessment:
    """One candidate asset with its three ratings.

    An asset belongs to exactly one goal area; enter a multi-area asset
    once per area under distinct ids.
    """

    id: str
    name: str
    goal_area: GoalArea
    threat: LinguisticTerm
    impact: LinguisticTerm
    weakness: int

    def __post_init__(self):
        if not self.id:
            raise ValidationError("asset id must be non-empty")
        _check_weakness(self.weakness)


@dataclass(frozen=True)
class PriorityEntry:
    asset_id: str
    risk: Score
    weakness: int
    priority: Fraction

    @property
    def priority_value(self) -> float:
        return float(self.priority)


@dataclass(frozen=True)
class PriorityVector:
    """Priority entries in descending priority order (ids ascend on ties)."""

    entries: tuple[PriorityEntry, ...]

    def __iter__(self) -> Iterator[PriorityEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def ranks(self) -> dict[str, int]:
        """Asset id -> 1-based rank."""
        return {entry.asset_id: rank for rank, entry in enumerate(self.entries, start=1)}


def asset_risk(threat: LinguisticTerm, impact: LinguisticTerm) -> Score:
    """Fused risk of a threat rating and a business-impact rating."""
    return fuse_quant(threat, impact)


def asset_priority(risk: Score, weakness: int) -> Fraction:
    """Priority = risk * weakness, exact on the half-step grid in [1, 25].

    Carried as a `Fraction` because priorities leave the 1..5 range of
    `Score`.
    """
    _check_weakness(weakness)
    return Fraction(risk.half_units * weakness, 2)


def prioritize(assets: Iterable[AssetAssessment]) -> PriorityVector:
    """Build the priority vector over a scenario's assets.

    Raises `DuplicateAssetIdError` if two assets share an id. An empty
    input yields an empty vector.
    """
    seen: set[str] = set()
    entries = []
    for asset in assets:
        if asset.id in seen:
            raise DuplicateAssetIdError(asset.id)
        seen.add(asset.id)
        risk = asset_risk(asset.threat, asset.impact)
        entries.append(
            PriorityEntry(
                asset_id=asset.id,
                risk=risk,
                weakness=asset.weakness,
                priority=asset_priority(risk, asset.weakness),
            )
        )
    entries.sort(key=lambda e: (-e.priority, e.asset_id))
    return PriorityVector(entries=tuple(entries))
