import itertools
import re
from typing import Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from fatpoints.core.errors import ClassExpressionError
from fatpoints.schemas.divisor import DivisorClass

_NOTATION = re.compile(r"^L(\d+)\(\s*(-?\d+)\s*(?:;(.*))?\)$")
_TERM = re.compile(r"^(?:\((-?\d+)\)|(-?\d+))(?:\^(\d+))?$")
_NESTED = re.compile(r"^\[(-?\d+)(?:,(.*))?\]$")
_NESTED_TERM = re.compile(r"\[(-?\d+),(\d+)\]|(-?\d+)")


class ClassExpression(BaseModel):
    """
    A class as typed on the command line: a flat list ``d m1 m2 ...`` (commas
    and one enclosing pair of brackets allowed), the exponent notation
    ``Ln(d; m1^a1, m2^a2, ...)``, or the nested list ``[d, [m1, a1], ...]``
    where a bare integer counts once.
    """
    model_config = ConfigDict(frozen=True)

    ambient_dim: Optional[int] = Field(None, ge=2)
    degree: int
    mults: tuple[int, ...] = ()
    notation: Literal["flat", "exponent"] = "flat"

    @classmethod
    def parse(cls, tokens: Sequence[str] | str) -> "ClassExpression":
        if isinstance(tokens, str):
            tokens = [tokens]
        text = " ".join(tokens).strip()
        if not text:
            raise ClassExpressionError("empty class expression")
        compact = re.sub(r"\s+", "", text)
        if compact.startswith("L"):
            return cls._parse_notation(compact)
        if compact.count("[") > 1:
            return cls._parse_nested(compact)
        return cls._parse_flat(text)

    @classmethod
    def _parse_flat(cls, text: str) -> "ClassExpression":
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        if "[" in body or "]" in body:
            raise ClassExpressionError(f"unbalanced brackets in {text!r}")
        parts = [p for p in re.split(r"[\s,]+", body) if p]
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ClassExpressionError(f"cannot read {text!r} as a list of integers")
        if not values:
            raise ClassExpressionError(f"no degree in {text!r}")
        return cls(degree=values[0], mults=tuple(values[1:]), notation="flat")

    @classmethod
    def _parse_nested(cls, text: str) -> "ClassExpression":
        match = _NESTED.match(text)
        if not match:
            raise ClassExpressionError(f"expected [d, [m1, a1], ...], got {text!r}")
        degree, body = int(match.group(1)), match.group(2)
        mults: list[int] = []
        for term in _split_top_level(body or ""):
            term_match = _NESTED_TERM.fullmatch(term)
            if not term_match:
                raise ClassExpressionError(f"cannot read multiplicity term {term!r}")
            if term_match.group(3) is not None:
                mults.append(int(term_match.group(3)))
            else:
                mults.extend([int(term_match.group(1))] * int(term_match.group(2)))
        return cls(degree=degree, mults=tuple(mults), notation="exponent")

    @classmethod
    def _parse_notation(cls, text: str) -> "ClassExpression":
        match = _NOTATION.match(text)
        if not match:
            raise ClassExpressionError(f"expected Ln(d; m1^a1, ...), got {text!r}")
        ambient_dim, degree, body = int(match.group(1)), int(match.group(2)), match.group(3)
        if ambient_dim < 2:
            raise ClassExpressionError(f"L{ambient_dim}: n must be at least 2")
        mults: list[int] = []
        for term in filter(None, (body or "").split(",")):
            term_match = _TERM.match(term)
            if not term_match:
                raise ClassExpressionError(f"cannot read multiplicity term {term!r}")
            value = int(term_match.group(1) or term_match.group(2))
            mults.extend([value] * int(term_match.group(3) or 1))
        return cls(ambient_dim=ambient_dim, degree=degree, mults=tuple(mults), notation="exponent")

    def to_class(self, ambient_dim: Optional[int] = None) -> DivisorClass:
        given = self.ambient_dim
        if ambient_dim is not None and given is not None and ambient_dim != given:
            raise ClassExpressionError(
                f"--n {ambient_dim} does not match L{self.ambient_dim} in the class expression"
            )
        n = ambient_dim if ambient_dim is not None else self.ambient_dim
        if n is None:
            raise ClassExpressionError(
                "ambient dimension unknown: pass --n or use Ln(...) notation"
            )
        return DivisorClass(ambient_dim=n, degree=self.degree, mults=self.mults)


def format_flat(d: DivisorClass) -> str:
    return str(d)


def format_notation(d: DivisorClass) -> str:
    terms = []
    for value, group in itertools.groupby(d.mults):
        count = len(list(group))
        shown = f"({value})" if value < 0 else str(value)
        terms.append(shown if count == 1 else f"{shown}^{count}")
    if not terms:
        return f"L{d.ambient_dim}({d.degree})"
    return f"L{d.ambient_dim}({d.degree};{','.join(terms)})"


def _split_top_level(body: str) -> list[str]:
    """Split on commas outside brackets; empty terms are kept so they can be rejected."""
    if not body:
        return []
    terms: list[str] = []
    depth = start = 0
    for i, ch in enumerate(body):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ClassExpressionError(f"unbalanced brackets in {body!r}")
        elif ch == "," and depth == 0:
            terms.append(body[start:i])
            start = i + 1
    if depth != 0:
        raise ClassExpressionError(f"unbalanced brackets in {body!r}")
    terms.append(body[start:])
    return terms
