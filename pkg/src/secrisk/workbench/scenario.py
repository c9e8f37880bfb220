"""Scenario documents: the JSON format analysts edit and exchange.

A scenario bundles one country profile, an orientation, and the candidate
assets. The canonical document looks like:

    {
      "schema_version": 1,
      "label": "National baseline",
      "country": {
        "name": "Arcadia",
        "sei": 5,
        "readiness": {
          "homeland_security": "strong",
          "business_continuity": "strong",
          "disaster_recovery": "strong"
        },
        "adverse": 4,
        "weights": [0.3333333333333333, 0.3333333333333333, 0.3333333333333333]
      },
      "orientation": "oriented",
      "assets": [
        {"id": "a1", "name": "Core civil registry", "goal_area": "homeland_security",
         "threat": "X", "impact": "X", "weakness": 5}
      ]
    }

Scale terms are accepted as letter codes ("X") or long names ("very high"),
case-insensitive. Saving always emits the canonical form above, so saving
the same scenario twice produces identical bytes and load(save(s)) == s.

Validation collects every violation it can find before failing, so the
`validate` subcommand can report them all at once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ..errors import (
    DuplicateAssetIdError,
    ScenarioParseError,
    ScenarioValidationError,
    ValidationError,
)
from ..prioritization import AssetAssessment, GoalArea
from ..risk_position import (
    AdverseExposureLevel,
    AreaRating,
    CountryProfile,
    Orientation,
    ReadinessProfile,
    SeiLevel,
    Weights,
)
from ..scales import parse_term

__all__ = ["Scenario", "load_scenario", "save_scenario", "scenario_to_dict", "scenario_from_dict"]

SCHEMA_VERSION = 1

_READINESS_AREAS = ("homeland_security", "business_continuity", "disaster_recovery")


@dataclass(frozen=True)
class Scenario:
    schema_version: int
    label: str
    country: CountryProfile
    orientation: Orientation
    assets: tuple[AssetAssessment, ...]

    def __post_init__(self):
        if self.schema_version != SCHEMA_VERSION:
            raise ValidationError(
                f"unsupported schema_version {self.schema_version}, expected {SCHEMA_VERSION}"
            )
        seen: set[str] = set()
        for asset in self.assets:
            if asset.id in seen:
                raise DuplicateAssetIdError(asset.id)
            seen.add(asset.id)


class _Builder:
    """Accumulates violations while extracting typed fields from raw JSON."""

    def __init__(self):
        self.violations: list[str] = []

    def fail(self, path: str, message: str) -> None:
        self.violations.append(f"{path}: {message}")

    def expect_mapping(self, value: Any, path: str, allowed: tuple[str, ...]) -> dict:
        if not isinstance(value, dict):
            self.fail(path, f"expected an object, got {type(value).__name__}")
            return {}
        for key in value:
            if key not in allowed:
                self.fail(path, f"unknown field {key!r}")
        return value

    def expect_str(self, mapping: dict, key: str, path: str, default: str | None = None) -> str | None:
        if key not in mapping:
            if default is not None:
                return default
            self.fail(path, f"missing required field {key!r}")
            return None
        value = mapping[key]
        if not isinstance(value, str):
            self.fail(f"{path}.{key}", f"expected a string, got {type(value).__name__}")
            return None
        return value

    def expect_int(self, mapping: dict, key: str, path: str) -> int | None:
        if key not in mapping:
            self.fail(path, f"missing required field {key!r}")
            return None
        value = mapping[key]
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail(f"{path}.{key}", f"expected an integer, got {value!r}")
            return None
        return value


def _build_country(builder: _Builder, raw: Any) -> CountryProfile | None:
    mapping = builder.expect_mapping(
        raw, "country", ("name", "sei", "readiness", "adverse", "weights")
    )
    name = builder.expect_str(mapping, "name", "country")
    if name == "":
        builder.fail("country.name", "must be non-empty")

    sei = None
    level = builder.expect_int(mapping, "sei", "country")
    if level is not None:
        try:
            sei = SeiLevel(level)
        except ValueError:
            builder.fail("country.sei", f"SEI level {level} not in 1..5")

    readiness = None
    if "readiness" not in mapping:
        builder.fail("country", "missing required field 'readiness'")
    else:
        areas = builder.expect_mapping(mapping["readiness"], "country.readiness", _READINESS_AREAS)
        ratings = {}
        for area in _READINESS_AREAS:
            text = builder.expect_str(areas, area, "country.readiness")
            if text is None:
                continue
            try:
                ratings[area] = AreaRating.from_text(text)
            except ValidationError as exc:
                builder.fail(f"country.readiness.{area}", str(exc))
        if len(ratings) == len(_READINESS_AREAS):
            readiness = ReadinessProfile(**ratings)

    adverse = None
    level = builder.expect_int(mapping, "adverse", "country")
    if level is not None:
        try:
            adverse = AdverseExposureLevel(level)
        except ValueError:
            builder.fail("country.adverse", f"adverse-exposure level {level} not in 1..5")

    weights = None
    if "weights" not in mapping:
        builder.fail("country", "missing required field 'weights'")
    else:
        raw_weights = mapping["weights"]
        if (
            not isinstance(raw_weights, list)
            or len(raw_weights) != 3
            or not all(isinstance(w, (int, float)) and not isinstance(w, bool) for w in raw_weights)
        ):
            builder.fail("country.weights", f"expected an array of 3 numbers, got {raw_weights!r}")
        else:
            try:
                weights = Weights(*(float(w) for w in raw_weights))
            except ValidationError as exc:
                builder.fail("country.weights", str(exc))

    if None in (name, sei, readiness, adverse, weights):
        return None
    return CountryProfile(name=name, sei=sei, readiness=readiness, adverse=adverse, weights=weights)


def _build_asset(builder: _Builder, raw: Any, index: int) -> AssetAssessment | None:
    path = f"assets[{index}]"
    mapping = builder.expect_mapping(
        raw, path, ("id", "name", "goal_area", "threat", "impact", "weakness")
    )
    asset_id = builder.expect_str(mapping, "id", path)
    if asset_id == "":
        builder.fail(f"{path}.id", "must be non-empty")
        asset_id = None
    name = builder.expect_str(mapping, "name", path, default="")

    goal_area = None
    text = builder.expect_str(mapping, "goal_area", path)
    if text is not None:
        try:
            goal_area = GoalArea.from_text(text)
        except ValidationError as exc:
            builder.fail(f"{path}.goal_area", str(exc))

    terms = {}
    for field in ("threat", "impact"):
        text = builder.expect_str(mapping, field, path)
        if text is None:
            continue
        try:
            terms[field] = parse_term(text)
        except ValidationError as exc:
            builder.fail(f"{path}.{field}", str(exc))

    weakness = builder.expect_int(mapping, "weakness", path)
    if weakness is not None and not 1 <= weakness <= 5:
        builder.fail(f"{path}.weakness", f"weakness out of range: {weakness} not in 1..5")
        weakness = None

    if None in (asset_id, goal_area, weakness) or len(terms) != 2:
        return None
    return AssetAssessment(
        id=asset_id,
        name=name,
        goal_area=goal_area,
        threat=terms["threat"],
        impact=terms["impact"],
        weakness=weakness,
    )


def scenario_from_dict(doc: Any) -> Scenario:
    """Build a validated `Scenario` from parsed JSON.

    Raises `ScenarioValidationError` listing every violation found.
    """
    builder = _Builder()
    mapping = builder.expect_mapping(
        doc, "document", ("schema_version", "label", "country", "orientation", "assets")
    )

    version = builder.expect_int(mapping, "schema_version", "document")
    if version is not None and version != SCHEMA_VERSION:
        builder.fail("schema_version", f"unsupported value {version}, expected {SCHEMA_VERSION}")

    label = builder.expect_str(mapping, "label", "document", default="")

    country = None
    if "country" not in mapping:
        builder.fail("document", "missing required field 'country'")
    else:
        country = _build_country(builder, mapping["country"])

    orientation = Orientation.ORIENTED
    if "orientation" in mapping:
        text = builder.expect_str(mapping, "orientation", "document")
        if text is not None:
            try:
                orientation = Orientation.from_text(text)
            except ValidationError as exc:
                builder.fail("orientation", str(exc))

    assets: list[AssetAssessment] = []
    raw_assets = mapping.get("assets", [])
    if not isinstance(raw_assets, list):
        builder.fail("assets", f"expected an array, got {type(raw_assets).__name__}")
    else:
        seen: set[str] = set()
        for index, raw in enumerate(raw_assets):
            asset = _build_asset(builder, raw, index)
            # duplicate detection runs on raw ids so it still fires when
            # some other field of the asset failed to build
            raw_id = raw.get("id") if isinstance(raw, dict) else None
            if isinstance(raw_id, str) and raw_id:
                if raw_id in seen:
                    builder.fail(f"assets[{index}].id", f"duplicate asset id {raw_id!r}")
                    continue
                seen.add(raw_id)
            if asset is not None:
                assets.append(asset)

    if builder.violations:
        raise ScenarioValidationError(builder.violations)
    return Scenario(
        schema_version=SCHEMA_VERSION,
        label=label,
        country=country,
        orientation=orientation,
        assets=tuple(assets),
    )


def load_scenario(path: "Path | str") -> Scenario:
    """Load and validate a scenario document from disk."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return scenario_from_dict(doc)


def scenario_to_dict(scenario: Scenario) -> dict:
    """The canonical document form of a scenario (fixed key order)."""
    country = scenario.country
    return {
        "schema_version": scenario.schema_version,
        "label": scenario.label,
        "country": {
            "name": country.name,
            "sei": int(country.sei),
            "readiness": {
                "homeland_security": country.readiness.homeland_security.code,
                "business_continuity": country.readiness.business_continuity.code,
                "disaster_recovery": country.readiness.disaster_recovery.code,
            },
            "adverse": int(country.adverse),
            "weights": list(country.weights.as_tuple()),
        },
        "orientation": scenario.orientation.value,
        "assets": [
            {
                "id": asset.id,
                "name": asset.name,
                "goal_area": asset.goal_area.code,
                "threat": asset.threat.code,
                "impact": asset.impact.code,
                "weakness": asset.weakness,
            }
            for asset in scenario.assets
        ],
    }


def scenario_to_text(scenario: Scenario) -> str:
    return json.dumps(scenario_to_dict(scenario), indent=2, ensure_ascii=False) + "\n"


def save_scenario(scenario: Scenario, path: "Path | str") -> None:
    """Write the canonical document form; byte-stable across repeated saves."""
    Path(path).write_text(scenario_to_text(scenario), encoding="utf-8")
