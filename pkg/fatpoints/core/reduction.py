"""
Reduction of a class to pre-standard or standard form.

Every step preserves h0: permutations and the Cremona reflection are Weyl moves,
and a negative multiplicity m_i < 0 means E_i is a fixed component of any
effective class, so clamping it to 0 leaves h0 unchanged.

Stall criterion (also applied to non-effective input): a class with sorted
nonnegative multiplicities and 0 <= d < m_1, or with d < 0, has h0 = 0, since a
nonzero form of degree d has multiplicity at most d at every point.
"""
import logging

from fatpoints.core.lattice import cremona, sort_desc
from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.reports import ReductionReport, ReductionStatus
from fatpoints.schemas.word import Clamp, CremonaMove, Move, WeylWord

logger = logging.getLogger(__name__)


def is_pre_standard(d: DivisorClass) -> bool:
    n = d.ambient_dim
    m = d.padded(n + 1)
    if d.degree < m[0]:
        return False
    if any(a < b for a, b in zip(d.mults, d.mults[1:])):
        return False
    return (n - 1) * d.degree >= sum(m[: n + 1])


def is_standard(d: DivisorClass) -> bool:
    return is_pre_standard(d) and (d.r == 0 or d.mults[-1] >= 0)


def _f_dot_padded(d: DivisorClass) -> int:
    n = d.ambient_dim
    return (n - 1) * d.degree - sum(d.mults[: n + 1])


def pre_standard_form(d: DivisorClass) -> ReductionReport:
    """
    Loop: sort; apply sigma while D.F < 0. Only Weyl moves are used, so the
    word is invertible and h0 is preserved at every step.
    """
    n = d.ambient_dim
    current = d.with_values(d.degree, d.padded(n + 1))
    moves: list[Move] = []
    while True:
        current, word = sort_desc(current)
        moves.extend(word.moves)
        if current.degree < 0:
            status = ReductionStatus.NOT_EFFECTIVE
            break
        if _f_dot_padded(current) >= 0:
            if current.degree >= current.mults[0]:
                status = ReductionStatus.PRE_STANDARD
            else:
                status = ReductionStatus.NOT_EFFECTIVE
            break
        current = cremona(current)
        moves.append(CremonaMove())
        logger.debug("cremona -> %s", current)

    result = current.trimmed(d.r)
    logger.debug("pre_standard_form(%s) = %s [%s]", d, result, status.value)
    return ReductionReport(result=result, word=WeylWord(moves=tuple(moves)), status=status)


def standardize(d: DivisorClass) -> ReductionReport:
    """
    Loop: sort; clamp negative multiplicities to 0; stop on d < 0, on the zero
    class, or once D.F >= 0; otherwise apply sigma. The result has the same h0 as
    the input, or the input is certified non-effective.
    """
    n = d.ambient_dim
    current = d.with_values(d.degree, d.padded(n + 1))
    clamp_total = [0] * current.r
    moves: list[Move] = []
    while True:
        current, word = sort_desc(current)
        moves.extend(word.moves)

        mults = list(current.mults)
        for i, m in enumerate(mults):
            if m < 0:
                moves.append(Clamp(slot=i + 1, amount=-m))
                clamp_total[i] += -m
                mults[i] = 0
        if mults != list(current.mults):
            current = current.with_values(current.degree, mults)

        if current.degree < 0:
            status = ReductionStatus.NOT_EFFECTIVE
            break
        if current.degree == 0 and not any(mults):
            status = ReductionStatus.STANDARD
            break
        if _f_dot_padded(current) >= 0:
            if current.degree >= mults[0]:
                status = ReductionStatus.STANDARD
            else:
                status = ReductionStatus.NOT_EFFECTIVE
            break
        current = cremona(current)
        moves.append(CremonaMove())
        logger.debug("cremona -> %s", current)

    result = current.trimmed(d.r)
    while len(clamp_total) > result.r and clamp_total[-1] == 0:
        clamp_total.pop()
    logger.debug("standardize(%s) = %s [%s]", d, result, status.value)
    return ReductionReport(
        result=result,
        word=WeylWord(moves=tuple(moves)),
        status=status,
        clamp_total=tuple(clamp_total),
    )
