from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field


class Transposition(BaseModel):
    """sigma_i: swaps slots i and i+1 (1-based)."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["transposition"] = "transposition"
    slot: int = Field(..., ge=1)


class CremonaMove(BaseModel):
    """sigma: the reflection along F = H - E_1 - ... - E_{n+1}."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["cremona"] = "cremona"


class Clamp(BaseModel):
    """
    Raises a negative multiplicity in ``slot`` by ``amount`` to zero.
    Not an element of W(X): h0 is preserved but the step cannot be undone.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["clamp"] = "clamp"
    slot: int = Field(..., ge=1)
    amount: int = Field(..., gt=0)


Move = Annotated[Union[Transposition, CremonaMove, Clamp], Field(discriminator="kind")]


class WeylWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    moves: tuple[Move, ...] = ()

    @property
    def is_weyl(self) -> bool:
        return not any(isinstance(move, Clamp) for move in self.moves)

    @property
    def cremona_count(self) -> int:
        return sum(1 for move in self.moves if isinstance(move, CremonaMove))

    def __len__(self) -> int:
        return len(self.moves)
