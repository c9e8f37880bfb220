"""secrisk: country risk-position scoring and asset prioritization.

The engine rates a country's security risk position from three ordinal
components (SEI position, readiness, adverse exposure) and ranks candidate
assets by priority = fused risk x control weakness. The workbench layer
adds scenario documents, reports, what-if comparison, an append-only run
store, and a CLI.
"""

from .errors import (
    ComponentOutOfRangeError,
    DuplicateAssetIdError,
    InvalidWeightsError,
    OffGridScoreError,
    ScenarioParseError,
    ScenarioValidationError,
    SecriskError,
    StoreLockedError,
    UnknownTermError,
    ValidationError,
    WeaknessOutOfRangeError,
)
from .fusion import FusionMatrix, MatrixKind, fuse_linguistic, fuse_quant, fusion_matrix
from .prioritization import (
    AssetAssessment,
    GoalArea,
    PriorityEntry,
    PriorityVector,
    asset_priority,
    asset_risk,
    prioritize,
)
from .risk_position import (
    AdverseExposureLevel,
    AreaRating,
    CountryProfile,
    Orientation,
    ReadinessProfile,
    SeiLevel,
    Weights,
    classify_readiness,
    component_scores,
    country_risk,
    risk_position,
)
from .scales import (
    FusedTerm,
    LinguisticTerm,
    Score,
    embed_term,
    fused_term_score,
    parse_term,
    score_to_fused_term,
    term_score,
)
from .workbench.compare import RankChange, ScenarioDelta, compare_scenarios
from .workbench.report import AssessmentReport, run_report
from .workbench.scenario import Scenario, load_scenario, save_scenario
from .workbench.store import RunStore, list_runs, store_run

__version__ = "0.1.0"
