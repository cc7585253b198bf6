from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from fatpoints.core.errors import NotARootError, PreconditionError


class DivisorClass(BaseModel):
    """
    The class D = dH - sum(m_i E_i) on the blow-up of P^n at r points.

    Sign convention: the exceptional class E_i is stored with degree 0 and
    multiplicity -1 in slot i.
    """
    model_config = ConfigDict(frozen=True)

    ambient_dim: int = Field(..., ge=2)
    degree: int
    mults: tuple[int, ...] = ()

    @property
    def r(self) -> int:
        return len(self.mults)

    def padded(self, length: int) -> tuple[int, ...]:
        """Multiplicities extended with zeros up to ``length`` slots."""
        if length <= len(self.mults):
            return self.mults
        return self.mults + (0,) * (length - len(self.mults))

    def with_values(self, degree: int, mults: tuple[int, ...] | list[int]) -> "DivisorClass":
        return DivisorClass(ambient_dim=self.ambient_dim, degree=degree, mults=tuple(mults))

    def trimmed(self, keep: int) -> "DivisorClass":
        """Drop trailing zero slots beyond the first ``keep``."""
        mults = list(self.mults)
        while len(mults) > keep and mults[-1] == 0:
            mults.pop()
        if len(mults) == len(self.mults):
            return self
        return self.with_values(self.degree, mults)

    def normalized(self) -> "DivisorClass":
        return self.trimmed(0)

    def exceptional_slot(self) -> Optional[int]:
        """Slot i (1-based) when the class is E_i, otherwise None."""
        if self.degree != 0:
            return None
        nonzero = [i for i, m in enumerate(self.mults) if m != 0]
        if len(nonzero) == 1 and self.mults[nonzero[0]] == -1:
            return nonzero[0] + 1
        return None

    def __str__(self) -> str:
        return " ".join(str(v) for v in (self.degree, *self.mults))


class RootClass(DivisorClass):
    """A class R with R.R = -2 along which W(X) reflects."""

    @model_validator(mode="after")
    def check_root(self) -> "RootClass":
        square = (self.ambient_dim - 1) * self.degree**2 - sum(m * m for m in self.mults)
        if square != -2:
            raise NotARootError(f"R.R = {square}, a root needs R.R = -2")
        return self

    @classmethod
    def cremona_root(cls, ambient_dim: int, r: int = 0) -> "RootClass":
        """F = H - E_1 - ... - E_{n+1}."""
        length = max(r, ambient_dim + 1)
        mults = (1,) * (ambient_dim + 1) + (0,) * (length - ambient_dim - 1)
        return cls(ambient_dim=ambient_dim, degree=1, mults=mults)

    @classmethod
    def simple(cls, ambient_dim: int, r: int, i: int) -> "RootClass":
        """F_i = E_i - E_{i+1}, for 1 <= i <= r - 1."""
        if not 1 <= i < r:
            raise PreconditionError(f"F_{i} needs 1 <= i < r = {r}")
        mults = [0] * r
        mults[i - 1] = -1
        mults[i] = 1
        return cls(ambient_dim=ambient_dim, degree=0, mults=tuple(mults))
