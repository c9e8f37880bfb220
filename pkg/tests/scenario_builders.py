"""Random scenario generation for property and acceptance tests."""

from __future__ import annotations

import random

from secrisk import (
    AdverseExposureLevel,
    AreaRating,
    AssetAssessment,
    CountryProfile,
    GoalArea,
    LinguisticTerm,
    Orientation,
    ReadinessProfile,
    Scenario,
    SeiLevel,
    Weights,
)

TERMS = list(LinguisticTerm)
AREAS = list(GoalArea)
RATINGS = list(AreaRating)


def random_weights(rng: random.Random) -> Weights:
    while True:
        raw = [rng.random() for _ in range(3)]
        if sum(raw) > 0.1:
            return Weights.normalized(*raw)


def random_country(rng: random.Random, name: str = "Testland") -> CountryProfile:
    return CountryProfile(
        name=name,
        sei=SeiLevel(rng.randint(1, 5)),
        readiness=ReadinessProfile(
            homeland_security=rng.choice(RATINGS),
            business_continuity=rng.choice(RATINGS),
            disaster_recovery=rng.choice(RATINGS),
        ),
        adverse=AdverseExposureLevel(rng.randint(1, 5)),
        weights=random_weights(rng),
    )


def random_assets(rng: random.Random, count: int) -> list[AssetAssessment]:
    ids = rng.sample(range(10 * count + 10), count)
    return [
        AssetAssessment(
            id=f"a{value:05d}",
            name=f"asset {value}",
            goal_area=rng.choice(AREAS),
            threat=rng.choice(TERMS),
            impact=rng.choice(TERMS),
            weakness=rng.randint(1, 5),
        )
        for value in ids
    ]


def random_scenario(rng: random.Random, max_assets: int = 20) -> Scenario:
    return Scenario(
        schema_version=1,
        label=f"scenario {rng.randint(0, 999999)}",
        country=random_country(rng),
        orientation=rng.choice(list(Orientation)),
        assets=tuple(random_assets(rng, rng.randint(0, max_assets))),
    )
