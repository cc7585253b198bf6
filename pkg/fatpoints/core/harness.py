"""Sweeps of small classes checked against the interpolation oracle."""
import itertools
import logging
from typing import Iterator, Optional

from fatpoints.core.config import settings
from fatpoints.core.dimension import h0
from fatpoints.core.oracle import h0_interpolation
from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.oracle import InterpolationProblem, SweepReport, VerificationReport
from fatpoints.schemas.reports import ReductionStatus

logger = logging.getLogger(__name__)


def sweep_classes(
    ambient_dim: int, d_max: int, r_max: int, m_max: int
) -> Iterator[DivisorClass]:
    """
    Classes (d; m_1 >= ... >= m_r >= 1) with 0 <= d <= d_max, r <= r_max and
    m_i <= m_max. Zero multiplicities and reorderings are left out since they do
    not change h0.
    """
    for degree in range(d_max + 1):
        for r in range(r_max + 1):
            for mults in itertools.combinations_with_replacement(range(m_max, 0, -1), r):
                yield DivisorClass(ambient_dim=ambient_dim, degree=degree, mults=mults)


def run_sweep(
    ambient_dim: int,
    d_max: int,
    r_max: int,
    m_max: int,
    prime: Optional[int] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
) -> SweepReport:
    prime = settings.ORACLE_PRIME if prime is None else prime
    seed = settings.ORACLE_SEED if seed is None else seed
    trials = settings.ORACLE_TRIALS if trials is None else trials

    report = SweepReport(ambient_dim=ambient_dim)
    for d in sweep_classes(ambient_dim, d_max, r_max, m_max):
        result = h0(d)
        problem = InterpolationProblem.from_class(d, prime=prime, seed=seed, trials=trials)
        oracle_value = h0_interpolation(problem)
        report.checked += 1
        if result.status is ReductionStatus.NOT_EFFECTIVE:
            report.not_effective += 1
            if oracle_value == 0:
                report.not_effective_sound += 1
        if oracle_value == result.h0:
            report.agreed += 1
            continue
        logger.warning(
            "disagreement on %s: algorithm %d, oracle %d [%s]",
            d,
            result.h0,
            oracle_value,
            result.basis.value,
        )
        report.disagreements.append(
            VerificationReport(
                divisor=d,
                oracle_class=d,
                oracle_h0=oracle_value,
                algorithm_h0=result.h0,
                basis=result.basis,
                agree=False,
            )
        )
    logger.info(
        "sweep n=%d d<=%d r<=%d m<=%d: %d/%d agree, %d/%d non-effective verdicts sound",
        ambient_dim,
        d_max,
        r_max,
        m_max,
        report.agreed,
        report.checked,
        report.not_effective_sound,
        report.not_effective,
    )
    return report
