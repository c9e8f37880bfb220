import fcntl
import random

import pytest

from secrisk import RunStore, StoreLockedError, list_runs, run_report, store_run

from scenario_builders import random_scenario


@pytest.fixture
def scenario():
    return random_scenario(random.Random(808), max_assets=6)


def snapshot(root):
    return {p: p.read_bytes() for p in sorted(root.rglob("*")) if p.is_file()}


def test_store_then_list(tmp_path, scenario):
    run_id = store_run(scenario, run_report(scenario), tmp_path / "store")
    assert list_runs(tmp_path / "store") == [run_id]


def test_storing_twice_gives_distinct_ids(tmp_path, scenario):
    store = RunStore(tmp_path / "store")
    report = run_report(scenario)
    first = store.store(scenario, report)
    second = store.store(scenario, report)
    assert first != second
    assert store.list_runs() == sorted([first, second])


def test_store_is_append_only(tmp_path, scenario):
    store = RunStore(tmp_path / "store")
    report = run_report(scenario)
    first = store.store(scenario, report)
    before = snapshot(store.run_dir(first))
    rng = random.Random(1)
    for _ in range(3):
        other = random_scenario(rng, max_assets=4)
        store.store(other, run_report(other))
    assert snapshot(store.run_dir(first)) == before
    assert set(store.list_runs()) >= {first}


def test_concurrent_writer_gets_store_locked(tmp_path, scenario):
    store = RunStore(tmp_path / "store")
    report = run_report(scenario)
    store.store(scenario, report)
    # a second writer holds the advisory lock on its own descriptor
    with open(store.lock_path, "w") as holder:
        fcntl.flock(holder, fcntl.LOCK_EX)
        with pytest.raises(StoreLockedError):
            store.store(scenario, report)
    # released: writing works again
    store.store(scenario, report)
    assert len(store.list_runs()) == 2


def test_run_snapshot_contents(tmp_path, scenario):
    store = RunStore(tmp_path / "store")
    report = run_report(scenario)
    run_id = store.store(scenario, report)
    run_dir = store.run_dir(run_id)
    assert {p.name for p in run_dir.iterdir()} == {
        "scenario.json",
        "report.json",
        "report.txt",
        "meta.json",
    }
    loaded_scenario, loaded_report = store.load_run(run_id)
    assert loaded_scenario == scenario
    assert loaded_report == report


def test_readers_see_no_partial_runs(tmp_path, scenario):
    store = RunStore(tmp_path / "store")
    store.store(scenario, run_report(scenario))
    for run_id in store.list_runs():
        assert not run_id.startswith(".")
        assert (store.run_dir(run_id) / "meta.json").exists()


def test_list_runs_on_missing_store(tmp_path):
    assert list_runs(tmp_path / "never-created") == []
