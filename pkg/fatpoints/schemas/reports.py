from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.word import WeylWord


class ReductionStatus(str, Enum):
    PRE_STANDARD = "PreStandard"
    STANDARD = "Standard"
    NOT_EFFECTIVE = "NotEffective"


class ReductionReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    result: DivisorClass
    word: WeylWord = WeylWord()
    status: ReductionStatus
    # Amount removed by Clamp moves, indexed by the slot at the time of clamping.
    clamp_total: tuple[int, ...] = ()

    @property
    def is_effective(self) -> bool:
        return self.status is not ReductionStatus.NOT_EFFECTIVE


class QuadricReport(BaseModel):
    """Outcome of peeling Q = 2H - E_1 - ... - E_9 off a class on the blow-up of P^3."""
    model_config = ConfigDict(frozen=True)

    result: DivisorClass
    status: ReductionStatus
    peeled: int = Field(0, ge=0)


class FailureReason(str, Enum):
    BAD_NUMERICS = "BadNumerics"
    NEGATIVE_MULT_NOT_EXCEPTIONAL = "NegativeMultNotExceptional"
    STALLED_POSITIVE_F = "StalledPositiveF"
    NEGATIVE_DEGREE = "NegativeDegree"


class MinusOneCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    verdict: bool
    chain: tuple[DivisorClass, ...]
    failure_reason: Optional[FailureReason] = None
    # Moves taking chain[0] to chain[-1]; on accept, chain[-1] is some E_i.
    word: WeylWord = WeylWord()

    @model_validator(mode="after")
    def check_reason(self) -> "MinusOneCertificate":
        if self.verdict and self.failure_reason is not None:
            raise ValueError("an accepted certificate carries no failure reason")
        if not self.verdict and self.failure_reason is None:
            raise ValueError("a rejected certificate needs a failure reason")
        return self


class Basis(str, Enum):
    UNCONDITIONAL = "Unconditional"
    PROVEN_RANGE = "ProvenRange"
    CONJECTURAL = "Conjectural"


class DimensionResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    h0: int = Field(..., ge=0)
    chi: int
    expected: int = Field(..., ge=0)
    basis: Basis
    reduced: DivisorClass
    status: ReductionStatus = ReductionStatus.STANDARD

    @model_validator(mode="after")
    def check_expected(self) -> "DimensionResult":
        if self.expected != max(self.chi, 0):
            raise ValueError("expected dimension must be max(chi, 0)")
        return self
