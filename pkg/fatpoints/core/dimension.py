"""
Euler characteristics and the conjectural h0 algorithms.

dim2 (plane): an effective class in standard form is non-special, so h0 is
max(chi, 0) of the standard form.

dim3 (space): after standardizing, the quadric Q = 2H - E_1 - ... - E_9 is peeled
off while q(D) = chi(D|_Q) <= 0; on the remaining class h0 is given by an
explicit binomial formula, special exactly when d < m_1 + m_2 - 1. Proven for
r <= 8 and for all m_i <= 4.
"""
import itertools
import logging
import math

from fatpoints.core.errors import AmbientDimensionError, NotStandardError, PreconditionError
from fatpoints.core.reduction import is_standard, standardize
from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.reports import Basis, DimensionResult, QuadricReport, ReductionStatus

logger = logging.getLogger(__name__)

QUADRIC_POINTS = 9
PROVEN_MAX_POINTS = 8
PROVEN_MAX_MULT = 4


def poly_binomial(x: int, k: int) -> int:
    """C(x, k) as a degree-k polynomial in x, so also defined for negative x."""
    numerator = 1
    for i in range(k):
        numerator *= x - i
    return numerator // math.factorial(k)


def chi(d: DivisorClass) -> int:
    """C(d + n, n) - sum C(m_i + n - 1, n), binomials taken as polynomials."""
    n = d.ambient_dim
    return poly_binomial(d.degree + n, n) - sum(poly_binomial(m + n - 1, n) for m in d.mults)


def expected_dim(d: DivisorClass) -> int:
    return max(chi(d), 0)


def _require_dim(d: DivisorClass, ambient_dim: int, operation: str) -> None:
    if d.ambient_dim != ambient_dim:
        raise AmbientDimensionError(f"{operation} needs n = {ambient_dim}, got n = {d.ambient_dim}")


def dim2(d: DivisorClass) -> DimensionResult:
    _require_dim(d, 2, "dim2")
    chi_d = chi(d)
    report = standardize(d)
    reduced = report.result
    if report.status is ReductionStatus.NOT_EFFECTIVE:
        value, basis = 0, Basis.UNCONDITIONAL
    elif not any(reduced.mults):
        value, basis = poly_binomial(reduced.degree + 2, 2), Basis.UNCONDITIONAL
    else:
        value, basis = max(chi(reduced), 0), Basis.CONJECTURAL
    logger.debug("dim2(%s) = %d [%s]", d, value, basis.value)
    return DimensionResult(
        h0=value,
        chi=chi_d,
        expected=max(chi_d, 0),
        basis=basis,
        reduced=reduced,
        status=report.status,
    )


def restrict_to_quadric(d: DivisorClass) -> DivisorClass:
    """
    Class of D|_Q in the plane model of Q (P^2 blown up at 10 points):
    (2d - m_1; d - m_1, d - m_1, m_2, ..., m_9) with m sorted descending.
    """
    _require_dim(d, 3, "restrict_to_quadric")
    m = sorted(d.padded(QUADRIC_POINTS), reverse=True)
    return DivisorClass(
        ambient_dim=2,
        degree=2 * d.degree - m[0],
        mults=(d.degree - m[0], d.degree - m[0], *m[1:QUADRIC_POINTS]),
    )


def q_value(d: DivisorClass) -> int:
    """q(D) = (d + 1)^2 - 1/2 sum_{i<=9} m_i (m_i + 1)."""
    _require_dim(d, 3, "q_value")
    if not is_standard(d):
        raise NotStandardError(f"q(D) is defined for standard classes, got {d}")
    m = d.padded(QUADRIC_POINTS)[:QUADRIC_POINTS]
    return (d.degree + 1) ** 2 - sum(x * (x + 1) // 2 for x in m)


def _subtract_quadric(d: DivisorClass) -> DivisorClass:
    m = list(d.padded(QUADRIC_POINTS))
    for i in range(QUADRIC_POINTS):
        m[i] -= 1
    return d.with_values(d.degree - 2, m)


def quad(d: DivisorClass) -> QuadricReport:
    """
    Standardize, then subtract Q while q <= 0. Each subtraction lowers the degree
    by 2, so the loop ends either with q > 0 or with a non-effective class.
    """
    _require_dim(d, 3, "quad")
    current = d
    peeled = 0
    while True:
        report = standardize(current)
        if report.status is ReductionStatus.NOT_EFFECTIVE:
            return QuadricReport(result=report.result, status=report.status, peeled=peeled)
        current = report.result
        if q_value(current) > 0:
            return QuadricReport(result=current, status=ReductionStatus.STANDARD, peeled=peeled)
        current = _subtract_quadric(current)
        peeled += 1
        logger.debug("peeled Q -> %s", current)


def _require_formula_range(d: DivisorClass, operation: str) -> None:
    _require_dim(d, 3, operation)
    if not is_standard(d):
        raise NotStandardError(f"{operation} needs a standard class, got {d}")
    if q_value(d) <= 0:
        raise PreconditionError(f"{operation} needs q(D) > 0, got q = {q_value(d)} for {d}")


def h0_formula3(d: DivisorClass) -> int:
    """
    C(d+3, 3) - sum C(m_i+2, 3) + sum over pairs i < j with m_i + m_j > d + 1
    of C(m_i + m_j - d + 1, 3). May be negative.
    """
    _require_formula_range(d, "h0_formula3")
    value = poly_binomial(d.degree + 3, 3) - sum(poly_binomial(x + 2, 3) for x in d.mults)
    for mi, mj in itertools.combinations(d.mults, 2):
        if mi + mj > d.degree + 1:
            value += poly_binomial(mi + mj - d.degree + 1, 3)
    return value


def is_special3(d: DivisorClass) -> bool:
    _require_formula_range(d, "is_special3")
    m = d.padded(2)
    return d.degree < m[0] + m[1] - 1


def _in_proven_range(d: DivisorClass) -> bool:
    points = sum(1 for m in d.mults if m != 0)
    return points <= PROVEN_MAX_POINTS or max(d.mults, default=0) <= PROVEN_MAX_MULT


def dim3(d: DivisorClass) -> DimensionResult:
    _require_dim(d, 3, "dim3")
    chi_d = chi(d)
    report = quad(d)
    reduced = report.result
    # Peeling Q relies on the conjecture; a class decided without peeling is not.
    conditional_basis = Basis.PROVEN_RANGE if _in_proven_range(d) else Basis.CONJECTURAL
    if report.status is ReductionStatus.NOT_EFFECTIVE:
        value = 0
        basis = Basis.UNCONDITIONAL if report.peeled == 0 else conditional_basis
    elif not any(reduced.mults):
        value = poly_binomial(reduced.degree + 3, 3)
        basis = Basis.UNCONDITIONAL if report.peeled == 0 else conditional_basis
    else:
        value = max(h0_formula3(reduced), 0)
        basis = conditional_basis
    logger.debug("dim3(%s) = %d [%s, %d peeled]", d, value, basis.value, report.peeled)
    return DimensionResult(
        h0=value,
        chi=chi_d,
        expected=max(chi_d, 0),
        basis=basis,
        reduced=reduced,
        status=report.status,
    )


def h0(d: DivisorClass) -> DimensionResult:
    if d.ambient_dim == 2:
        return dim2(d)
    if d.ambient_dim == 3:
        return dim3(d)
    raise AmbientDimensionError(f"h0 is only available for n = 2, 3; got n = {d.ambient_dim}")


def is_special(d: DivisorClass) -> bool:
    result = h0(d)
    return result.h0 > 0 and result.h0 > result.expected


def nonspecial_threshold3(m: int) -> int:
    """Smallest d with (d + 1)^2 > 9 m (m + 1) / 2, i.e. q > 0 for L_3(d; m^9)."""
    if m < 0:
        raise PreconditionError(f"m must be nonnegative, got {m}")
    bound = 9 * m * (m + 1)
    d = max(math.isqrt(bound // 2) - 1, 0)
    while 2 * (d + 1) ** 2 <= bound:
        d += 1
    return d
