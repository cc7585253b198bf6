"""
Unconditional h0 at desk scale: rank of the fat-point interpolation matrix over
F_p at random points.

Columns are the monomials of degree <= d in an affine chart of P^n. For a point
x and a multiplicity m there is one row per multi-index b with |b| < m, holding
the Hasse derivative D^(b) x^a = prod_j C(a_j, b_j) x_j^(a_j - b_j) of each
monomial. Hasse derivatives carry no factorial denominators, so the conditions
are exact for every m < p.

Random points can only be more special than very general ones, so each trial
gives an upper bound on the generic h0; the minimum over trials is returned.
"""
import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from fatpoints.core.config import settings
from fatpoints.core.dimension import h0
from fatpoints.core.errors import AmbientDimensionError, OracleError
from fatpoints.core.reduction import standardize
from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.oracle import MAX_PRIME, InterpolationProblem, VerificationReport
from fatpoints.schemas.reports import ReductionStatus

logger = logging.getLogger(__name__)


def _exponents(nvars: int, max_total: int) -> np.ndarray:
    """All exponent vectors a in N^nvars with |a| <= max_total, graded order."""
    vectors = [
        a for a in itertools.product(range(max_total + 1), repeat=nvars) if sum(a) <= max_total
    ]
    vectors.sort(key=lambda a: (sum(a), a))
    return np.array(vectors, dtype=np.int64).reshape(len(vectors), nvars)


def _hasse_table(x: int, orders: int, degree: int, prime: int) -> np.ndarray:
    """T[b, a] = C(a, b) x^(a - b) mod p for b < orders, a <= degree."""
    powers = [pow(x, e, prime) for e in range(degree + 1)]
    table = np.zeros((orders, degree + 1), dtype=np.int64)
    for b in range(orders):
        for a in range(b, degree + 1):
            table[b, a] = math.comb(a, b) % prime * powers[a - b] % prime
    return table


def interpolation_matrix(
    problem: InterpolationProblem, points: np.ndarray
) -> np.ndarray:
    n, d, p = problem.ambient_dim, problem.degree, problem.prime
    columns = _exponents(n, d)
    blocks = []
    for point, m in zip(points, problem.mults):
        orders = _exponents(n, m - 1)
        block = np.ones((len(orders), len(columns)), dtype=np.int64)
        for j in range(n):
            table = _hasse_table(int(point[j]), m, d, p)
            block = block * table[np.ix_(orders[:, j], columns[:, j])] % p
        blocks.append(block)
    if not blocks:
        return np.zeros((0, len(columns)), dtype=np.int64)
    return np.vstack(blocks)


def rank_mod_p(matrix: np.ndarray, prime: int) -> int:
    """
    Rank over F_p by row reduction on int64 arrays; entries stay below p < 2^31,
    so every product fits before reduction.
    """
    if prime > MAX_PRIME:
        raise OracleError(f"p = {prime} exceeds the largest supported modulus {MAX_PRIME}")
    a = np.array(matrix, dtype=np.int64) % prime
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.flatnonzero(a[rank:, col])
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inverse = pow(int(a[rank, col]), prime - 2, prime)
        a[rank, col:] = a[rank, col:] * inverse % prime
        below = rank + 1 + np.flatnonzero(a[rank + 1:, col])
        if below.size:
            factors = a[below, col]
            a[below, col:] = (a[below, col:] - np.outer(factors, a[rank, col:])) % prime
        rank += 1
    return rank


def _sample_points(problem: InterpolationProblem, trial: int) -> np.ndarray:
    rng = np.random.default_rng([problem.seed, trial])
    count = len(problem.mults)
    while True:
        points = rng.integers(0, problem.prime, size=(count, problem.ambient_dim), dtype=np.int64)
        if len({tuple(row) for row in points.tolist()}) == count:
            return points
        logger.debug("coincident points in trial %d, resampling", trial)


def _run_trial(problem: InterpolationProblem, trial: int, columns: int) -> int:
    points = _sample_points(problem, trial)
    matrix = interpolation_matrix(problem, points)
    rank = rank_mod_p(matrix, problem.prime)
    logger.debug(
        "trial %d (seed %d): matrix %dx%d, rank %d", trial, problem.seed, *matrix.shape, rank
    )
    return columns - rank


def h0_interpolation(problem: InterpolationProblem) -> int:
    n, d = problem.ambient_dim, problem.degree
    columns = math.comb(d + n, n)
    rows = sum(math.comb(m - 1 + n, n) for m in problem.mults)
    cap = settings.ORACLE_MAX_MATRIX_DIM
    if columns > cap or rows > cap:
        raise OracleError(f"interpolation matrix {rows}x{columns} exceeds the cap of {cap}")
    if not problem.mults:
        return columns

    trials = range(problem.trials)
    if settings.ORACLE_WORKERS > 1 and problem.trials > 1:
        with ThreadPoolExecutor(max_workers=settings.ORACLE_WORKERS) as pool:
            values = list(pool.map(lambda t: _run_trial(problem, t, columns), trials))
    else:
        values = [_run_trial(problem, t, columns) for t in trials]
    return min(values)


def _clamped(d: DivisorClass) -> DivisorClass:
    return d.with_values(d.degree, [max(m, 0) for m in d.mults])


def verify_class(
    d: DivisorClass,
    prime: Optional[int] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
) -> VerificationReport:
    """
    Compare dim2/dim3 with the oracle. A standard form is handed to the oracle
    directly; a non-effective verdict is checked on the input with negative
    multiplicities clamped, which has the same h0.
    """
    if d.ambient_dim not in (2, 3):
        raise AmbientDimensionError(f"verification covers n = 2, 3; got n = {d.ambient_dim}")
    prime = settings.ORACLE_PRIME if prime is None else prime
    if prime > MAX_PRIME:
        raise OracleError(f"p = {prime} exceeds the largest supported modulus {MAX_PRIME}")
    seed = settings.ORACLE_SEED if seed is None else seed
    trials = settings.ORACLE_TRIALS if trials is None else trials

    result = h0(d)
    report = standardize(d)
    target = report.result if report.status is ReductionStatus.STANDARD else _clamped(d)
    if target.degree < 0:
        oracle_value = 0
    else:
        problem = InterpolationProblem.from_class(target, prime=prime, seed=seed, trials=trials)
        oracle_value = h0_interpolation(problem)

    verification = VerificationReport(
        divisor=d,
        oracle_class=target,
        oracle_h0=oracle_value,
        algorithm_h0=result.h0,
        basis=result.basis,
        agree=oracle_value == result.h0,
    )
    if verification.agree:
        logger.info("verified %s: h0 = %d", d, result.h0)
    else:
        logger.warning(
            "disagreement on %s: algorithm %d, oracle %d [%s]",
            d,
            result.h0,
            oracle_value,
            result.basis.value,
        )
    return verification
