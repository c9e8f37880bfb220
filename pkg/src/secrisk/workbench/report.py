"""Assessment reports: the engine's outputs assembled for reading.

A report pairs the country's risk position (with its components and the
orientation they were computed under) with the full priority vector,
grouped a second time by the three strategic goal areas. Scale-derived
values render with one decimal place, the risk position with four.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ScenarioParseError
from ..prioritization import GoalArea, prioritize
from ..risk_position import Orientation, classify_readiness, component_scores, risk_position
from ..scales import LinguisticTerm, Score
from .scenario import Scenario

__all__ = [
    "ReportRow",
    "RiskPositionSummary",
    "AssessmentReport",
    "run_report",
    "render_text",
    "render_risk_position",
    "render_priority_table",
    "render_structured",
    "report_to_dict",
    "report_from_dict",
    "parse_report",
]

GOAL_AREA_ORDER = (
    GoalArea.BUSINESS_CONTINUITY,
    GoalArea.DISASTER_RECOVERY,
    GoalArea.HOMELAND_SECURITY,
)


@dataclass(frozen=True)
class ReportRow:
    rank: int
    asset_id: str
    name: str
    goal_area: GoalArea
    threat: LinguisticTerm
    impact: LinguisticTerm
    risk: Score
    weakness: int
    priority: Fraction


@dataclass(frozen=True)
class RiskPositionSummary:
    orientation: Orientation
    sei_level: int
    readiness_level: int
    adverse_level: int
    components: tuple[float, float, float]
    weights: tuple[float, float, float]
    value: float


@dataclass(frozen=True)
class AssessmentReport:
    label: str
    country: str
    risk_position: RiskPositionSummary
    rows: tuple[ReportRow, ...]

    def rows_for(self, area: GoalArea) -> tuple[ReportRow, ...]:
        """The goal-area sub-table, in main-table (priority) order."""
        return tuple(row for row in self.rows if row.goal_area is area)


def run_report(scenario: Scenario) -> AssessmentReport:
    """Assemble the full report for a scenario. Pure; never mutates input."""
    country = scenario.country
    components = component_scores(country, scenario.orientation)
    summary = RiskPositionSummary(
        orientation=scenario.orientation,
        sei_level=int(country.sei),
        readiness_level=classify_readiness(country.readiness),
        adverse_level=int(country.adverse),
        components=tuple(float(c) for c in components),
        weights=country.weights.as_tuple(),
        value=risk_position(*components, country.weights),
    )

    assets_by_id = {asset.id: asset for asset in scenario.assets}
    rows = []
    for rank, entry in enumerate(prioritize(scenario.assets), start=1):
        asset = assets_by_id[entry.asset_id]
        rows.append(
            ReportRow(
                rank=rank,
                asset_id=asset.id,
                name=asset.name,
                goal_area=asset.goal_area,
                threat=asset.threat,
                impact=asset.impact,
                risk=entry.risk,
                weakness=entry.weakness,
                priority=entry.priority,
            )
        )
    return AssessmentReport(
        label=scenario.label,
        country=country.name,
        risk_position=summary,
        rows=tuple(rows),
    )


def _format_table(headers: list[str], rows: list[list[str]], right_aligned: set[int]) -> list[str]:
    widths = [
        max(len(headers[i]), *(len(row[i]) for row in rows)) if rows else len(headers[i])
        for i in range(len(headers))
    ]
    lines = []
    for cells in [headers] + rows:
        parts = []
        for i, cell in enumerate(cells):
            if i in right_aligned:
                parts.append(cell.rjust(widths[i]))
            else:
                parts.append(cell.ljust(widths[i]))
        lines.append("  ".join(parts).rstrip())
    return lines


def _asset_table(rows: "tuple[ReportRow, ...]", with_goal_area: bool) -> list[str]:
    if not rows:
        return ["(no assets)"]
    headers = ["rank", "id", "name", "goal area", "threat", "impact", "risk", "weakness", "priority"]
    right = {0, 6, 7, 8}
    if not with_goal_area:
        headers = headers[:3] + headers[4:]
        right = {0, 5, 6, 7}
    body = []
    for row in rows:
        cells = [
            str(row.rank),
            row.asset_id,
            row.name,
            row.goal_area.display,
            row.threat.code,
            row.impact.code,
            str(row.risk),
            f"{row.weakness:.1f}",
            f"{float(row.priority):.1f}",
        ]
        if not with_goal_area:
            del cells[3]
        body.append(cells)
    return _format_table(headers, body, right)


def _section(title: str) -> list[str]:
    return [title, "-" * len(title)]


def _summary_lines(report: AssessmentReport) -> list[str]:
    summary = report.risk_position
    weights = " / ".join(f"{w:.4f}" for w in summary.weights)
    return [
        f"Scenario:     {report.label}",
        f"Country:      {report.country}",
        f"Orientation:  {summary.orientation.value}",
        "",
        *_section("Risk position"),
        f"SEI position       level {summary.sei_level}   component {summary.components[0]:.1f}",
        f"Readiness          level {summary.readiness_level}   component {summary.components[1]:.1f}",
        f"Adverse exposure   level {summary.adverse_level}   component {summary.components[2]:.1f}",
        f"Weights            {weights}",
        f"Risk position      {summary.value:.4f}",
    ]


def render_risk_position(report: AssessmentReport) -> str:
    """Just the risk-position block, for the risk-position subcommand."""
    return "\n".join(_summary_lines(report)) + "\n"


def render_priority_table(report: AssessmentReport) -> str:
    """Just the priority vector, for the prioritize subcommand."""
    lines = [f"Priority vector: {report.label}", *_asset_table(report.rows, with_goal_area=True)]
    return "\n".join(lines) + "\n"


def render_text(report: AssessmentReport) -> str:
    """Plain-text report with aligned columns; deterministic per report."""
    lines = [
        "Security risk assessment",
        "========================",
        "",
        *_summary_lines(report),
        "",
        *_section("Asset priorities"),
        *_asset_table(report.rows, with_goal_area=True),
    ]
    for area in GOAL_AREA_ORDER:
        title = area.display.capitalize()
        lines += ["", *_section(title), *_asset_table(report.rows_for(area), with_goal_area=False)]
    return "\n".join(lines) + "\n"


def report_to_dict(report: AssessmentReport) -> dict:
    summary = report.risk_position
    return {
        "schema_version": 1,
        "kind": "assessment_report",
        "label": report.label,
        "country": report.country,
        "orientation": summary.orientation.value,
        "risk_position": {
            "sei_level": summary.sei_level,
            "readiness_level": summary.readiness_level,
            "adverse_level": summary.adverse_level,
            "components": list(summary.components),
            "weights": list(summary.weights),
            "value": summary.value,
        },
        "priorities": [
            {
                "rank": row.rank,
                "id": row.asset_id,
                "name": row.name,
                "goal_area": row.goal_area.code,
                "threat": row.threat.code,
                "impact": row.impact.code,
                "risk": row.risk.value,
                "weakness": row.weakness,
                "priority": float(row.priority),
            }
            for row in report.rows
        ],
        "goal_areas": {
            area.code: [row.asset_id for row in report.rows_for(area)]
            for area in GOAL_AREA_ORDER
        },
    }


def report_from_dict(doc: dict) -> AssessmentReport:
    """Rebuild a report from its structured form (inverse of report_to_dict)."""
    summary_doc = doc["risk_position"]
    summary = RiskPositionSummary(
        orientation=Orientation.from_text(doc["orientation"]),
        sei_level=summary_doc["sei_level"],
        readiness_level=summary_doc["readiness_level"],
        adverse_level=summary_doc["adverse_level"],
        components=tuple(summary_doc["components"]),
        weights=tuple(summary_doc["weights"]),
        value=summary_doc["value"],
    )
    rows = tuple(
        ReportRow(
            rank=row["rank"],
            asset_id=row["id"],
            name=row["name"],
            goal_area=GoalArea.from_text(row["goal_area"]),
            threat=LinguisticTerm(row["threat"]),
            impact=LinguisticTerm(row["impact"]),
            risk=Score.from_value(row["risk"]),
            weakness=row["weakness"],
            priority=Fraction(row["priority"]),
        )
        for row in doc["priorities"]
    )
    return AssessmentReport(
        label=doc["label"],
        country=doc["country"],
        risk_position=summary,
        rows=rows,
    )


def render_structured(report: AssessmentReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def parse_report(text: str) -> AssessmentReport:
    """Parse a structured report back; round-trips with render_structured."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(f"structured report: line {exc.lineno}: {exc.msg}") from exc
    return report_from_dict(doc)
