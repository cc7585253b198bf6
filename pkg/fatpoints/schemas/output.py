from typing import Any, Optional

from pydantic import BaseModel

from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.word import WeylWord


class CommandOutput(BaseModel):
    """
    JSON document printed by ``--json``. The class fields are always present;
    the rest appear only for commands that produce them.
    """
    n: int
    degree: int
    mults: list[int]
    word: Optional[WeylWord] = None
    status: Optional[str] = None
    h0: Optional[int] = None
    chi: Optional[int] = None
    expected: Optional[int] = None
    basis: Optional[str] = None
    clamp_total: Optional[list[int]] = None
    peeled: Optional[int] = None
    verdict: Optional[bool] = None
    failure_reason: Optional[str] = None
    chain: Optional[list[list[int]]] = None
    oracle_h0: Optional[int] = None
    algorithm_h0: Optional[int] = None
    agree: Optional[bool] = None
    extra: Optional[dict[str, Any]] = None

    @classmethod
    def for_class(cls, d: DivisorClass, **fields: Any) -> "CommandOutput":
        return cls(n=d.ambient_dim, degree=d.degree, mults=list(d.mults), **fields)

    def render(self) -> str:
        return self.model_dump_json(exclude_none=True)
