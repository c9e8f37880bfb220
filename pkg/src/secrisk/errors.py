"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: validation and parse failures exit 1,
I/O failures (including a locked run store) exit 2.
"""


class SecriskError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SecriskError):
    """An invariant on a value or document was violated."""


class UnknownTermError(ValidationError):
    """Text did not match any term of the scale vocabulary."""


class OffGridScoreError(ValidationError):
    """A score was outside [1.0, 5.0] or not a multiple of 0.5."""


class ComponentOutOfRangeError(ValidationError):
    """A risk-position component was outside [1, 5]."""


class InvalidWeightsError(ValidationError):
    """Weights were negative or did not sum to 1."""


class WeaknessOutOfRangeError(ValidationError):
    """A control-weakness point was outside the integer range 1..5."""


class DuplicateAssetIdError(ValidationError):
    """Two assets in one scenario share an id."""

    def __init__(self, asset_id: str):
        self.asset_id = asset_id
        super().__init__(f"duplicate asset id {asset_id!r}")


class ScenarioValidationError(ValidationError):
    """One or more invariants of a scenario document were violated."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("\n".join(self.violations))


class ScenarioParseError(SecriskError):
    """A scenario document could not be parsed at all."""


class StoreLockedError(SecriskError):
    """Another writer currently holds the run store's write lock."""
