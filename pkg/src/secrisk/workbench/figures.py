"""Report figures rendered to files next to the textual output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from ..fusion import MatrixKind, fusion_matrix
from ..scales import LinguisticTerm
from .report import GOAL_AREA_ORDER, AssessmentReport

__all__ = ["render_report_figures"]

_AREA_COLORS = {area: color for area, color in zip(GOAL_AREA_ORDER, ("#1b9e77", "#d95f02", "#7570b3"))}


def _priority_chart(report: AssessmentReport, path: Path) -> None:
    fig, ax = plt.subplots(figsize=(8, max(2.5, 0.4 * len(report.rows) + 1.5)))
    if report.rows:
        rows = list(reversed(report.rows))  # top priority ends up on top
        labels = [f"{r.asset_id}  {r.name}".rstrip() for r in rows]
        values = [float(r.priority) for r in rows]
        colors = [_AREA_COLORS[r.goal_area] for r in rows]
        bars = ax.barh(range(len(rows)), values, color=colors)
        ax.set_yticks(range(len(rows)), labels=labels)
        ax.bar_label(bars, fmt="%.1f", padding=3)
        ax.set_xlim(0, 26.5)
    else:
        ax.text(0.5, 0.5, "no assets", ha="center", va="center", transform=ax.transAxes)
    ax.set_xlabel("priority (risk x weakness)")
    ax.set_title(f"Asset priorities: {report.label}")
    handles = [plt.Rectangle((0, 0), 1, 1, color=_AREA_COLORS[a]) for a in GOAL_AREA_ORDER]
    ax.legend(handles, [a.display for a in GOAL_AREA_ORDER], loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _risk_matrix_chart(report: AssessmentReport, path: Path) -> None:
    terms = list(LinguisticTerm)
    matrix = fusion_matrix(MatrixKind.QUANTITATIVE)
    grid = [[matrix.cell(row, col).value for col in terms] for row in terms]

    fig, ax = plt.subplots(figsize=(6.5, 5.5))
    image = ax.imshow(grid, cmap="RdYlGn_r", vmin=1.0, vmax=5.0, origin="lower")
    ax.set_xticks(range(5), labels=[t.code for t in terms])
    ax.set_yticks(range(5), labels=[t.code for t in terms])
    ax.set_xlabel("business impact")
    ax.set_ylabel("threat")
    for i in range(5):
        for j in range(5):
            ax.text(j, i, f"{grid[i][j]:.1f}", ha="center", va="center", fontsize=9)

    # Mark where the scenario's assets fall; spread shared cells slightly.
    cell_counts: dict[tuple[int, int], int] = {}
    for row in report.rows:
        i = row.threat.points - 1
        j = row.impact.points - 1
        offset = cell_counts.get((i, j), 0)
        cell_counts[(i, j)] = offset + 1
        ax.plot(j + 0.32, i - 0.30 + 0.17 * offset, marker="o", color="black", markersize=4)
        ax.annotate(
            row.asset_id,
            (j + 0.32, i - 0.30 + 0.17 * offset),
            textcoords="offset points",
            xytext=(4, -3),
            fontsize=7,
        )
    fig.colorbar(image, ax=ax, label="fused risk")
    ax.set_title(f"Risk matrix: {report.label}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _risk_position_chart(report: AssessmentReport, path: Path) -> None:
    summary = report.risk_position
    labels = ["SEI", "readiness", "adverse\nexposure"]
    fig, ax = plt.subplots(figsize=(5, 4))
    bars = ax.bar(labels, summary.components, color="#80b1d3")
    ax.bar_label(bars, fmt="%.1f")
    ax.axhline(summary.value, color="#d7301f", linewidth=1.5)
    ax.annotate(
        f"risk position {summary.value:.4f}",
        (0.98, summary.value),
        xycoords=("axes fraction", "data"),
        ha="right",
        va="bottom",
        color="#d7301f",
        fontsize=9,
    )
    ax.set_ylim(0, 5.5)
    ax.set_ylabel(f"component score ({summary.orientation.value})")
    ax.set_title(f"Risk position: {report.country}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_report_figures(report: AssessmentReport, out_dir: "Path | str") -> list[Path]:
    """Render the report's figures as PNG files; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    targets = {
        out_dir / "priorities.png": _priority_chart,
        out_dir / "risk_matrix.png": _risk_matrix_chart,
        out_dir / "risk_position.png": _risk_position_chart,
    }
    for path, renderer in targets.items():
        renderer(report, path)
    return list(targets)
