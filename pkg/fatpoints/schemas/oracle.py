from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime

from fatpoints.core.errors import OracleError
from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.reports import Basis

# Residues below 2^31 keep every product of two of them inside int64.
MAX_PRIME = 2**31 - 1


class InterpolationProblem(BaseModel):
    """
    Degree-d forms on P^n vanishing to order m_i at random points over F_p.
    Multiplicities 0 impose nothing and are dropped.
    """
    model_config = ConfigDict(frozen=True)

    ambient_dim: int = Field(..., ge=1)
    degree: int = Field(..., ge=0)
    mults: tuple[int, ...] = ()
    prime: int = MAX_PRIME
    seed: int = Field(0, ge=0)
    trials: int = Field(3, ge=1)

    @field_validator("mults", mode="before")
    @classmethod
    def drop_zero_mults(cls, v):
        v = tuple(v)
        if any(m < 0 for m in v):
            raise ValueError("multiplicity conditions must be nonnegative")
        return tuple(m for m in v if m != 0)

    @model_validator(mode="after")
    def check_prime(self) -> "InterpolationProblem":
        if self.prime > MAX_PRIME:
            raise OracleError(f"p = {self.prime} exceeds the largest supported modulus {MAX_PRIME}")
        if not isprime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.prime <= max((self.degree, *self.mults)):
            raise ValueError(f"p = {self.prime} must exceed the degree and every multiplicity")
        return self

    @classmethod
    def from_class(
        cls, d: DivisorClass, prime: int, seed: int = 0, trials: int = 3
    ) -> "InterpolationProblem":
        return cls(
            ambient_dim=d.ambient_dim,
            degree=d.degree,
            mults=d.mults,
            prime=prime,
            seed=seed,
            trials=trials,
        )


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    divisor: DivisorClass
    # The class handed to the oracle: the standard form, or the clamped input.
    oracle_class: Optional[DivisorClass] = None
    oracle_h0: int = Field(..., ge=0)
    algorithm_h0: int = Field(..., ge=0)
    basis: Basis
    agree: bool


class SweepReport(BaseModel):
    ambient_dim: int
    checked: int = 0
    agreed: int = 0
    not_effective: int = 0
    not_effective_sound: int = 0
    disagreements: list[VerificationReport] = []

    @property
    def binding_disagreements(self) -> list[VerificationReport]:
        """Disagreements outside the purely conjectural range."""
        return [v for v in self.disagreements if v.basis is not Basis.CONJECTURAL]
