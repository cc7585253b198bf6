"""
(-1)-classes: integral effective classes with E^2 = E.K = -1. Each one is a
Weyl image of an exceptional class E_i, which is what both the descent test and
the enumeration below rely on.
"""
import logging
from collections import Counter, deque
from functools import lru_cache
from typing import Iterator, Optional

from sympy.utilities.iterables import multiset_combinations, multiset_permutations

from fatpoints.core.config import settings
from fatpoints.core.dimension import dim2
from fatpoints.core.errors import AmbientDimensionError, PreconditionError
from fatpoints.core.lattice import cremona, f_dot, intersect, k_dot, self_intersection, sort_desc
from fatpoints.core.reduction import pre_standard_form
from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.reports import FailureReason, MinusOneCertificate, ReductionStatus
from fatpoints.schemas.word import CremonaMove, Move, WeylWord

logger = logging.getLogger(__name__)


def is_minus_one_class(e: DivisorClass) -> MinusOneCertificate:
    if self_intersection(e) != -1 or k_dot(e) != -1:
        return MinusOneCertificate(
            verdict=False, chain=(e,), failure_reason=FailureReason.BAD_NUMERICS
        )

    chain = [e]
    moves: list[Move] = []
    current = e
    reason: Optional[FailureReason] = None
    # Each pass either stops or applies sigma with E.F < 0, lowering the degree.
    while True:
        ordered, word = sort_desc(current)
        if word.moves:
            chain.append(ordered)
            moves.extend(word.moves)
        current = ordered
        if current.exceptional_slot() is not None:
            break
        if current.degree <= 0:
            reason = FailureReason.NEGATIVE_DEGREE
            break
        # A (-1)-class with m_i < 0 contains E_i in its base locus, so it is E_i.
        if any(m < 0 for m in current.mults):
            reason = FailureReason.NEGATIVE_MULT_NOT_EXCEPTIONAL
            break
        if f_dot(current) >= 0:
            reason = FailureReason.STALLED_POSITIVE_F
            break
        current = cremona(current)
        chain.append(current)
        moves.append(CremonaMove())

    return MinusOneCertificate(
        verdict=reason is None,
        chain=tuple(chain),
        failure_reason=reason,
        word=WeylWord(moves=tuple(moves)),
    )


def minus_one_descent_word(e: DivisorClass) -> WeylWord:
    """A word w with w(E) = E_i; raises when E is not a (-1)-class."""
    certificate = is_minus_one_class(e)
    if not certificate.verdict:
        raise PreconditionError(f"{e} is not a (-1)-class ({certificate.failure_reason.value})")
    return certificate.word


def _check_enumeration_bounds(r: int, d_max: int) -> None:
    if r < 1:
        raise PreconditionError(f"r must be at least 1, got {r}")
    if d_max < 0:
        raise PreconditionError(f"d_max must be nonnegative, got {d_max}")
    if r > settings.ENUMERATE_MAX_SLOTS:
        raise PreconditionError(
            f"r = {r} exceeds the enumeration limit of {settings.ENUMERATE_MAX_SLOTS} slots"
        )


@lru_cache(maxsize=256)
def _canonical_minus_one(ambient_dim: int, r: int, d_max: int) -> tuple[DivisorClass, ...]:
    """
    Sorted representatives of all (-1)-classes of degree <= d_max, by breadth-first
    search upwards from E_r. The descent of a (-1)-class has strictly decreasing
    degree, so running it backwards (permute, then sigma raising the degree)
    never leaves the bound and reaches every class.
    """
    n = ambient_dim
    length = max(r, n + 1)
    start = (0, (0,) * (r - 1) + (-1,))
    seen = {start}
    queue = deque([start])
    found: list[DivisorClass] = []
    while queue:
        degree, mults = queue.popleft()
        found.append(DivisorClass(ambient_dim=n, degree=degree, mults=mults))
        padded = mults + (0,) * (length - r)
        for head in multiset_combinations(list(padded), n + 1):
            t = (n - 1) * degree - sum(head)
            if t <= 0 or degree + t > d_max:
                continue
            rest = Counter(padded)
            rest.subtract(head)
            image = [m + t for m in head] + list(rest.elements())
            if r < length:
                # The padding slots must come back as zeros.
                spare = Counter(image)
                if spare[0] < length - r:
                    continue
                spare[0] -= length - r
                image = list(spare.elements())
            key = (degree + t, tuple(sorted(image, reverse=True)))
            if key not in seen:
                seen.add(key)
                queue.append(key)
    found.sort(key=lambda c: (c.degree, tuple(-m for m in c.mults)))
    logger.debug("%d canonical (-1)-classes for n=%d r=%d d<=%d", len(found), n, r, d_max)
    return tuple(found)


def iter_canonical_minus_one(ambient_dim: int, r: int, d_max: int) -> Iterator[DivisorClass]:
    _check_enumeration_bounds(r, d_max)
    yield from _canonical_minus_one(ambient_dim, r, d_max)


def iter_slot_assignments(representative: DivisorClass) -> Iterator[DivisorClass]:
    """Every distinct permutation of the multiplicities of ``representative``."""
    for mults in multiset_permutations(list(representative.mults)):
        yield representative.with_values(representative.degree, mults)


def iter_minus_one(ambient_dim: int, r: int, d_max: int) -> Iterator[DivisorClass]:
    """All (-1)-classes of degree <= d_max, one representative orbit at a time."""
    for rep in iter_canonical_minus_one(ambient_dim, r, d_max):
        yield from iter_slot_assignments(rep)


def enumerate_minus_one(ambient_dim: int, r: int, d_max: int) -> set[DivisorClass]:
    return set(iter_minus_one(ambient_dim, r, d_max))


def negative_classes(d: DivisorClass, d_max: int) -> list[tuple[DivisorClass, int]]:
    """(-1)-classes E of degree <= d_max with D.E < 0, each with the product D.E."""
    if d.r == 0:
        return []
    pairs = []
    for e in iter_minus_one(d.ambient_dim, d.r, d_max):
        product = intersect(d, e)
        if product < 0:
            pairs.append((e, product))
    return pairs


def special_witness(
    d: DivisorClass, d_max: Optional[int] = None
) -> Optional[tuple[DivisorClass, int]]:
    """
    A (-1)-curve E with D.E <= -2 among those of degree <= d_max, the most
    negative first. The search is bounded: no degree bound for a witness is known.
    """
    if d.ambient_dim != 2:
        raise AmbientDimensionError("special witnesses are (-1)-curves of the plane blow-up")
    bound = settings.WITNESS_MAX_DEGREE if d_max is None else d_max
    candidates = [pair for pair in negative_classes(d, bound) if pair[1] <= -2]
    if not candidates:
        return None
    return min(candidates, key=lambda pair: pair[1])


def is_special2(d: DivisorClass) -> bool:
    """Special means 0 < h0 and h0 > max(chi, 0)."""
    if d.ambient_dim != 2:
        raise AmbientDimensionError(f"is_special2 needs n = 2, got n = {d.ambient_dim}")
    result = dim2(d)
    return result.h0 > 0 and result.h0 > result.expected


def is_sum_of_minus_one_classes(d: DivisorClass) -> bool:
    """
    True when the pre-standard form is sum(a_i E_i) with a_i >= 0, not all zero,
    so D itself is a sum of (-1)-classes.
    """
    report = pre_standard_form(d)
    result = report.result
    return (
        report.status is ReductionStatus.PRE_STANDARD
        and result.degree == 0
        and all(m <= 0 for m in result.mults)
        and any(m < 0 for m in result.mults)
    )
