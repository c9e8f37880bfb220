"""Append-only store of assessment runs.

Layout: one directory per run under the store root, named by the run id
(UTC timestamp plus a content digest), holding the canonical scenario,
both report renderings, and a small metadata record. Runs are written to
a hidden staging directory and renamed into place, so readers only ever
see complete snapshots and never need a lock.

Writers serialize on an exclusive advisory flock over `<root>/.lock`; a
second concurrent writer gets `StoreLockedError` instead of blocking.
Existing run directories are never modified.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import os
import shutil
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path

from ..errors import StoreLockedError
from .report import AssessmentReport, parse_report, render_structured, render_text
from .scenario import Scenario, load_scenario, save_scenario, scenario_to_text

__all__ = ["RunStore", "store_run", "list_runs"]

LOCK_FILE = ".lock"


class RunStore:
    def __init__(self, root: "Path | str"):
        self.root = Path(root)

    @property
    def lock_path(self) -> Path:
        return self.root / LOCK_FILE

    @contextmanager
    def _write_lock(self):
        self.root.mkdir(parents=True, exist_ok=True)
        fd = os.open(self.lock_path, os.O_CREAT | os.O_WRONLY, 0o644)
        try:
            try:
                fcntl.flock(fd, fcntl.LOCK_EX | fcntl.LOCK_NB)
            except (BlockingIOError, PermissionError) as exc:
                raise StoreLockedError(
                    f"run store {self.root} is locked by another writer"
                ) from exc
            yield
        finally:
            os.close(fd)  # releases the flock

    def store(self, scenario: Scenario, report: AssessmentReport) -> str:
        """Persist one immutable run snapshot; returns its run id."""
        scenario_text = scenario_to_text(scenario)
        report_json = render_structured(report)
        digest = hashlib.sha256((scenario_text + report_json).encode("utf-8")).hexdigest()

        with self._write_lock():
            while True:
                stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S%fZ")
                run_id = f"{stamp}-{digest[:12]}"
                run_dir = self.root / run_id
                if not run_dir.exists():
                    break

            staging = self.root / f".staging-{run_id}"
            staging.mkdir()
            try:
                save_scenario(scenario, staging / "scenario.json")
                (staging / "report.json").write_text(report_json, encoding="utf-8")
                (staging / "report.txt").write_text(render_text(report), encoding="utf-8")
                meta = {
                    "run_id": run_id,
                    "created_utc": datetime.now(timezone.utc).isoformat(),
                    "label": scenario.label,
                    "digest": digest,
                }
                (staging / "meta.json").write_text(
                    json.dumps(meta, indent=2) + "\n", encoding="utf-8"
                )
                os.replace(staging, run_dir)
            except BaseException:
                shutil.rmtree(staging, ignore_errors=True)
                raise
        return run_id

    def list_runs(self) -> list[str]:
        """Run ids in chronological (= lexicographic) order."""
        if not self.root.is_dir():
            return []
        return sorted(
            entry.name
            for entry in self.root.iterdir()
            if entry.is_dir() and not entry.name.startswith(".")
        )

    def run_dir(self, run_id: str) -> Path:
        return self.root / run_id

    def load_run(self, run_id: str) -> tuple[Scenario, AssessmentReport]:
        run_dir = self.run_dir(run_id)
        scenario = load_scenario(run_dir / "scenario.json")
        report = parse_report((run_dir / "report.json").read_text(encoding="utf-8"))
        return scenario, report


def store_run(scenario: Scenario, report: AssessmentReport, store_dir: "Path | str") -> str:
    return RunStore(store_dir).store(scenario, report)


def list_runs(store_dir: "Path | str") -> list[str]:
    return RunStore(store_dir).list_runs()
