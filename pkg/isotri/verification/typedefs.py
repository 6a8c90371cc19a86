"""Type definitions for the verification suite."""
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import TypedDict

from isotri.oracle.typedefs import OracleConfig


class FailureDetail(TypedDict):
    """Type-definition for one failing sample of a check."""

    index: int
    """Index of the sample in the seeded stream."""
    item: str
    """Which inequality or condition failed."""
    margin: float
    """Observed slack; negative when the inequality is violated."""
    inputs: Dict[str, float]
    """The sampled parameters, enough to reproduce the failure."""


class CheckReport(BaseModel):
    """Outcome of one seeded check."""

    model_config = ConfigDict(frozen=True)

    lemma_id: str
    samples: int
    failures: int
    worst_margin: float
    seed: int
    details: List[FailureDetail] = Field(default_factory=list)
    tally: Dict[str, int] = Field(default_factory=dict)
    """Optional counts per category, e.g. winner types."""

    @model_validator(mode="after")
    def _failures_match_details(self) -> "CheckReport":
        if (self.failures == 0) != (not self.details):
            raise ValueError("failures must be zero exactly when details is empty")
        return self

    @property
    def passed(self) -> bool:
        return self.failures == 0


class SuiteConfig(BaseModel):
    """How many samples to draw, from which seed and with how many threads."""

    model_config = ConfigDict(frozen=True)

    samples: int = Field(default=10_000, ge=1)
    seed: int = 0
    max_workers: int = Field(default=1, ge=1)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    """Oracle settings of the checks that run the oracle."""
