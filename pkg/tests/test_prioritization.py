import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from secrisk import (
    AssetAssessment,
    DuplicateAssetIdError,
    GoalArea,
    LinguisticTerm,
    Score,
    WeaknessOutOfRangeError,
    asset_priority,
    asset_risk,
    prioritize,
)

from scenario_builders import random_assets

V = LinguisticTerm.VERY_LOW
M = LinguisticTerm.MODERATE
H = LinguisticTerm.HIGH
X = LinguisticTerm.VERY_HIGH


def make_asset(asset_id, threat, impact, weakness, area=GoalArea.BUSINESS_CONTINUITY):
    return AssetAssessment(
        id=asset_id, name=asset_id, goal_area=area, threat=threat, impact=impact, weakness=weakness
    )


def reference_order(entries):
    """Independent brute-force reference: repeatedly select the best entry
    by comparing it against every other remaining one."""
    remaining = list(entries)
    ordered = []
    while remaining:
        best = remaining[0]
        for candidate in remaining[1:]:
            if candidate.priority > best.priority or (
                candidate.priority == best.priority and candidate.asset_id < best.asset_id
            ):
                best = candidate
        remaining.remove(best)
        ordered.append(best)
    return ordered


def test_asset_risk_examples():
    assert asset_risk(X, X).value == 5.0
    assert asset_risk(H, M).value == 3.5
    assert asset_risk(V, V).value == 1.0


def test_asset_priority_examples():
    assert asset_priority(Score.from_value(5.0), 5) == Fraction(25)
    assert asset_priority(Score.from_value(3.5), 4) == Fraction(14)  # 3.5 * 4 by hand
    assert asset_priority(Score.from_value(1.0), 1) == Fraction(1)


@pytest.mark.parametrize("weakness", [0, 6, -1, 2.5, "3", True])
def test_asset_priority_rejects_non_individual_scale_weakness(weakness):
    with pytest.raises(WeaknessOutOfRangeError):
        asset_priority(Score.from_value(3.0), weakness)


def test_asset_assessment_validates_weakness():
    with pytest.raises(WeaknessOutOfRangeError):
        make_asset("a1", X, X, 6)


def test_empty_scenario_gives_empty_vector():
    assert len(prioritize([])) == 0


def test_two_asset_example():
    vector = prioritize([make_asset("a1", X, X, 5), make_asset("a2", V, V, 1)])
    assert [e.asset_id for e in vector] == ["a1", "a2"]
    assert [float(e.priority) for e in vector] == [25.0, 1.0]


def test_ties_break_by_ascending_id():
    vector = prioritize([make_asset("b", M, M, 2), make_asset("a", M, M, 2)])
    assert [e.asset_id for e in vector] == ["a", "b"]
    assert all(e.priority == Fraction(6) for e in vector)


def test_duplicate_ids_rejected():
    with pytest.raises(DuplicateAssetIdError) as excinfo:
        prioritize([make_asset("db1", M, M, 2), make_asset("db1", H, H, 3)])
    assert "db1" in str(excinfo.value)


def test_output_independent_of_input_order():
    rng = random.Random(7)
    assets = random_assets(rng, 40)
    shuffled = assets[:]
    rng.shuffle(shuffled)
    assert prioritize(assets) == prioritize(shuffled)


def test_matches_brute_force_reference_on_random_scenarios():
    rng = random.Random(99)
    for _ in range(25):
        assets = random_assets(rng, rng.randint(0, 60))
        vector = prioritize(assets)
        assert [e.asset_id for e in vector] == [
            e.asset_id for e in reference_order(vector.entries)
        ]
        assert sorted(e.asset_id for e in vector) == sorted(a.id for a in assets)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_priorities_on_half_grid_and_ids_permuted(data):
    rng = random.Random(data.draw(st.integers(0, 2**20)))
    assets = random_assets(rng, rng.randint(0, 30))
    vector = prioritize(assets)
    assert sorted(e.asset_id for e in vector) == sorted(a.id for a in assets)
    for entry in vector:
        assert Fraction(1) <= entry.priority <= Fraction(25)
        assert (entry.priority * 2).denominator == 1  # half-step grid
    priorities = [e.priority for e in vector]
    assert priorities == sorted(priorities, reverse=True)
    for left, right in zip(vector.entries, vector.entries[1:]):
        if left.priority == right.priority:
            assert left.asset_id < right.asset_id


def upgrade(asset, rng):
    """Raise exactly one of threat, impact, weakness; None if already maxed."""
    terms = list(LinguisticTerm)
    options = []
    if asset.threat.points < 5:
        options.append("threat")
    if asset.impact.points < 5:
        options.append("impact")
    if asset.weakness < 5:
        options.append("weakness")
    if not options:
        return None
    field = rng.choice(options)
    if field == "threat":
        return AssetAssessment(asset.id, asset.name, asset.goal_area,
                               terms[rng.randint(asset.threat.points, 4)], asset.impact,
                               asset.weakness)
    if field == "impact":
        return AssetAssessment(asset.id, asset.name, asset.goal_area, asset.threat,
                               terms[rng.randint(asset.impact.points, 4)], asset.weakness)
    return AssetAssessment(asset.id, asset.name, asset.goal_area, asset.threat, asset.impact,
                           rng.randint(asset.weakness + 1, 5))


def test_single_asset_upgrade_never_lowers_rank():
    rng = random.Random(4242)
    checked = 0
    while checked < 100:
        assets = random_assets(rng, rng.randint(1, 25))
        target = rng.choice(assets)
        upgraded = upgrade(target, rng)
        if upgraded is None:
            continue
        checked += 1
        before = prioritize(assets).ranks()[target.id]
        after_assets = [upgraded if a.id == target.id else a for a in assets]
        after = prioritize(after_assets).ranks()[target.id]
        assert after <= before, (target, upgraded)
