"""What-if support: diffing two scenarios' rankings and risk positions."""

from __future__ import annotations

from dataclasses import dataclass

from ..risk_position import country_risk
from .report import run_report
from .scenario import Scenario

__all__ = ["RankChange", "ScenarioDelta", "compare_scenarios", "render_delta"]


@dataclass(frozen=True)
class RankChange:
    asset_id: str
    old_rank: int
    new_rank: int

    @property
    def change(self) -> int:
        """Positive when the asset moved toward the top of the vector."""
        return self.old_rank - self.new_rank


@dataclass(frozen=True)
class ScenarioDelta:
    """Differences from scenario a (old) to scenario b (new).

    Every asset id present in either scenario appears exactly once: in
    `changes` (present in both), `added` (only in b) or `removed` (only
    in a).
    """

    old_label: str
    new_label: str
    changes: tuple[RankChange, ...]
    added: tuple[str, ...]
    removed: tuple[str, ...]
    old_risk_position: float
    new_risk_position: float

    @property
    def risk_position_delta(self) -> float:
        return self.new_risk_position - self.old_risk_position


def compare_scenarios(a: Scenario, b: Scenario) -> ScenarioDelta:
    """Rank changes and risk-position difference (b minus a).

    Each scenario's risk position is computed under its own orientation.
    """
    old_ranks = run_report(a).rows
    new_ranks = run_report(b).rows
    old_by_id = {row.asset_id: row.rank for row in old_ranks}
    new_by_id = {row.asset_id: row.rank for row in new_ranks}

    changes = tuple(
        sorted(
            (
                RankChange(asset_id=asset_id, old_rank=old_by_id[asset_id], new_rank=new_rank)
                for asset_id, new_rank in new_by_id.items()
                if asset_id in old_by_id
            ),
            key=lambda c: (c.new_rank, c.asset_id),
        )
    )
    added = tuple(sorted(set(new_by_id) - set(old_by_id)))
    removed = tuple(sorted(set(old_by_id) - set(new_by_id)))

    return ScenarioDelta(
        old_label=a.label,
        new_label=b.label,
        changes=changes,
        added=added,
        removed=removed,
        old_risk_position=country_risk(a.country, a.orientation),
        new_risk_position=country_risk(b.country, b.orientation),
    )


def render_delta(delta: ScenarioDelta) -> str:
    lines = [
        f"Scenario delta: {delta.old_label} -> {delta.new_label}",
        f"Risk position: {delta.old_risk_position:.4f} -> {delta.new_risk_position:.4f}"
        f" (delta {delta.risk_position_delta:+.4f})",
        "",
        "Rank changes",
    ]
    if delta.changes:
        for c in delta.changes:
            lines.append(f"  {c.asset_id}: rank {c.old_rank} -> {c.new_rank} ({c.change:+d})")
    else:
        lines.append("  (no assets in common)")
    lines.append(f"Added:   {', '.join(delta.added) if delta.added else '(none)'}")
    lines.append(f"Removed: {', '.join(delta.removed) if delta.removed else '(none)'}")
    return "\n".join(lines) + "\n"
