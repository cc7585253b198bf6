"""
Integer model of Pic(X), X the blow-up of P^n at r points in very general position.

The quadratic form is diagonal in the basis H, E_1, ..., E_r with H^2 = n - 1 and
E_i^2 = -1. The class K = K_X / (n - 1) is rational for general n, so it is only
exposed through the integer pairing ``k_dot``.

Classes with different numbers of slots are compared by padding the shorter
multiplicity list with zeros: extra points of multiplicity 0 change nothing.
"""
import logging
from fractions import Fraction

from fatpoints.core.errors import (
    AmbientDimensionError,
    NotARootError,
    PreconditionError,
    WordNotInvertibleError,
)
from fatpoints.schemas.divisor import DivisorClass, RootClass
from fatpoints.schemas.word import Clamp, CremonaMove, Move, Transposition, WeylWord

logger = logging.getLogger(__name__)


def _check_same_space(d1: DivisorClass, d2: DivisorClass) -> None:
    if d1.ambient_dim != d2.ambient_dim:
        raise AmbientDimensionError(
            f"classes live on blow-ups of P^{d1.ambient_dim} and P^{d2.ambient_dim}"
        )


def hyperplane(ambient_dim: int, r: int = 0) -> DivisorClass:
    return DivisorClass(ambient_dim=ambient_dim, degree=1, mults=(0,) * r)


def exceptional(ambient_dim: int, r: int, i: int) -> DivisorClass:
    """E_i, stored with multiplicity -1 in slot i."""
    if not 1 <= i <= r:
        raise PreconditionError(f"E_{i} needs 1 <= i <= r = {r}")
    mults = [0] * r
    mults[i - 1] = -1
    return DivisorClass(ambient_dim=ambient_dim, degree=0, mults=tuple(mults))


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    _check_same_space(d1, d2)
    # zip stops at the shorter list, which is the zero padding.
    return (d1.ambient_dim - 1) * d1.degree * d2.degree - sum(
        a * b for a, b in zip(d1.mults, d2.mults)
    )


def self_intersection(d: DivisorClass) -> int:
    return intersect(d, d)


def k_dot(d: DivisorClass) -> int:
    """D.K = sum(m_i) - (n + 1) d."""
    return sum(d.mults) - (d.ambient_dim + 1) * d.degree


def k_self(ambient_dim: int, r: int) -> Fraction:
    """K^2 = n + 3 + 4/(n - 1) - r."""
    if ambient_dim < 2:
        raise AmbientDimensionError(f"n must be at least 2, got {ambient_dim}")
    return Fraction(ambient_dim + 3) + Fraction(4, ambient_dim - 1) - r


def f_dot(d: DivisorClass) -> int:
    """D.F = (n - 1) d - (m_1 + ... + m_{n+1})."""
    n = d.ambient_dim
    return (n - 1) * d.degree - sum(d.mults[: n + 1])


def is_k_orthogonal(d: DivisorClass) -> bool:
    return k_dot(d) == 0


def generators(ambient_dim: int, r: int) -> list[RootClass]:
    """Simple roots F, F_1, ..., F_{r-1}; their reflections generate W(X)."""
    roots = [RootClass.cremona_root(ambient_dim, r)]
    roots.extend(RootClass.simple(ambient_dim, max(r, ambient_dim + 1), i) for i in range(1, r))
    return roots


def simple_root_pairings(d: DivisorClass) -> tuple[int, list[int], int]:
    """
    (D.(H - (n-1)E_1), [D.F_1, ..., D.F_{r-1}], D.F). All three are nonnegative
    exactly when D is in pre-standard form.
    """
    n = d.ambient_dim
    m = d.padded(max(d.r, 1))
    first = (n - 1) * d.degree - (n - 1) * m[0]
    return first, [m[i] - m[i + 1] for i in range(len(m) - 1)], f_dot(d)


def reflect(d: DivisorClass, root: DivisorClass) -> DivisorClass:
    """sigma_R(D) = D + (D.R) R."""
    _check_same_space(d, root)
    if not isinstance(root, RootClass) and self_intersection(root) != -2:
        raise NotARootError(f"R.R = {self_intersection(root)}, a root needs R.R = -2")
    t = intersect(d, root)
    length = max(d.r, root.r)
    mults = [a + t * b for a, b in zip(d.padded(length), root.padded(length))]
    return d.with_values(d.degree + t * root.degree, mults).trimmed(d.r)


def cremona(d: DivisorClass) -> DivisorClass:
    """The action of sigma = sigma_F: t = D.F is added to d and to m_1, ..., m_{n+1}."""
    n = d.ambient_dim
    m = list(d.padded(n + 1))
    t = (n - 1) * d.degree - sum(m[: n + 1])
    for i in range(n + 1):
        m[i] += t
    return d.with_values(d.degree + t, m).trimmed(d.r)


def sort_desc(d: DivisorClass) -> tuple[DivisorClass, WeylWord]:
    """
    Sort multiplicities in non-increasing order with adjacent transpositions.
    Stable: equal multiplicities keep their relative order.
    """
    m = list(d.mults)
    moves: list[Move] = []
    for end in range(len(m) - 1, 0, -1):
        swapped = False
        for i in range(end):
            if m[i] < m[i + 1]:
                m[i], m[i + 1] = m[i + 1], m[i]
                moves.append(Transposition(slot=i + 1))
                swapped = True
        if not swapped:
            break
    if not moves:
        return d, WeylWord()
    return d.with_values(d.degree, m), WeylWord(moves=tuple(moves))


def transpose(d: DivisorClass, slot: int) -> DivisorClass:
    m = list(d.padded(slot + 1))
    m[slot - 1], m[slot] = m[slot], m[slot - 1]
    return d.with_values(d.degree, m).trimmed(d.r)


def apply_move(d: DivisorClass, move: Move) -> DivisorClass:
    if isinstance(move, Transposition):
        return transpose(d, move.slot)
    if isinstance(move, CremonaMove):
        return cremona(d)
    m = list(d.padded(move.slot))
    m[move.slot - 1] += move.amount
    return d.with_values(d.degree, m).trimmed(d.r)


def apply_word(d: DivisorClass, word: WeylWord) -> DivisorClass:
    for move in word.moves:
        d = apply_move(d, move)
    return d


def invert_word(word: WeylWord) -> WeylWord:
    if not word.is_weyl:
        raise WordNotInvertibleError("word contains Clamp moves, which are not Weyl group elements")
    return WeylWord(moves=tuple(reversed(word.moves)))


def root_lattice_type(ambient_dim: int, r: int) -> str:
    """Type of the lattice K^perp, or INDEFINITE when K^2 <= 0."""
    if r < 1:
        raise PreconditionError(f"r must be at least 1, got {r}")
    if k_self(ambient_dim, r) <= 0:
        return "INDEFINITE"
    if r <= ambient_dim + 2:
        return f"A_{r}"
    if r == ambient_dim + 3:
        return f"D_{r}"
    # K^2 > 0 with r > n + 3 leaves only these.
    return {(2, 6): "E_6", (2, 7): "E_7", (2, 8): "E_8", (3, 7): "E_7", (4, 8): "E_8"}[
        (ambient_dim, r)
    ]
