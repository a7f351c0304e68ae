"""Correlation curves, CHSH assembly, and uniformity testing.

The CHSH combination used throughout is
``S = E(a1,b1) - E(a1,b2) + E(a2,b1) + E(a2,b2)``.  For the shared-phase
signal model every term is the triangular correlator evaluated at the
setting difference, which caps ``|S|`` at 2; the exact quantum value for
the same settings lives in :mod:`phasebit.oracle`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy import stats as _scipy_stats

from .phase import TWO_PI, PhaseModel, chunk_quota, make_phase_stream, substream
from .signals import (
    CorrelationEstimate,
    analytic_correlation,
    dichotomic_array,
    estimate_correlation,
)


@dataclass(frozen=True)
class CurvePoint:
    """One grid point of the correlation curve: exact value next to estimate."""

    delta: float
    analytic: float
    estimated: CorrelationEstimate


@dataclass(frozen=True)
class ChshResult:
    """Four-correlator CHSH estimate.

    ``terms`` holds ``E(a1,b1), E(a1,b2), E(a2,b1), E(a2,b2)`` in that
    order; ``s_value`` combines them with signs ``+ - + +`` and
    ``s_stderr`` adds their errors in quadrature.
    """

    angles: tuple[float, float, float, float]
    terms: tuple[
        CorrelationEstimate,
        CorrelationEstimate,
        CorrelationEstimate,
        CorrelationEstimate,
    ]
    s_value: float
    s_stderr: float


class KsResult(NamedTuple):
    statistic: float
    critical_1pct: float


def correlation_curve(
    model: PhaseModel,
    deltas: Sequence[float],
    n: int,
    *,
    workers: int = 1,
) -> list[CurvePoint]:
    """Estimated vs analytic correlation over a grid of angle separations.

    Each grid point runs on its own leapfrog substream of one base stream,
    so the whole curve is reproducible from the model alone and independent
    of the worker count.
    """
    deltas = [float(d) for d in deltas]
    if not deltas:
        raise ValueError("deltas must be non-empty")
    if n < 1:
        raise ValueError("n must be >= 1")
    base = make_phase_stream(model)
    points = []
    for i, delta in enumerate(deltas):
        sub = substream(base, i, len(deltas))
        est = estimate_correlation(sub, 0.0, delta, n, workers=workers)
        points.append(CurvePoint(delta, analytic_correlation(delta), est))
    return points


def chsh_classical(
    model: PhaseModel,
    a1: float,
    a2: float,
    b1: float,
    b2: float,
    n: int,
    *,
    shared_trials: bool = True,
    workers: int = 1,
) -> ChshResult:
    """CHSH estimate on the shared-phase signal model.

    With ``shared_trials`` every trial evaluates all four correlators from
    the same phase draw (the model assigns every setting a value at once);
    otherwise each correlator runs on its own substream of ``n`` fresh
    trials.  Either way each term uses ``n`` samples.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    angles = (float(a1), float(a2), float(b1), float(b2))
    pairs = (
        (angles[0], angles[2]),
        (angles[0], angles[3]),
        (angles[1], angles[2]),
        (angles[1], angles[3]),
    )
    base = make_phase_stream(model)
    if shared_trials:
        totals = [0, 0, 0, 0]
        for chunk in range(workers):
            sub = substream(base, chunk, workers)
            _, phi = sub.take(chunk_quota(n, chunk, workers))
            signs = {ang: dichotomic_array(phi, ang) for ang in dict.fromkeys(angles)}
            for k, (x, y) in enumerate(pairs):
                totals[k] += int((signs[x] * signs[y]).sum(dtype=np.int64))
        terms = tuple(CorrelationEstimate.from_product_sum(tot, n) for tot in totals)
    else:
        terms = tuple(
            estimate_correlation(substream(base, k, 4), x, y, n, workers=workers)
            for k, (x, y) in enumerate(pairs)
        )
    s_value = terms[0].mean - terms[1].mean + terms[2].mean + terms[3].mean
    s_stderr = math.sqrt(sum(t.stderr**2 for t in terms))
    return ChshResult(angles, terms, s_value, s_stderr)


def analytic_chsh(a1: float, a2: float, b1: float, b2: float) -> float:
    """CHSH value assembled from the exact triangular correlator.

    Bounded by 2 in absolute value for every choice of settings.
    """
    m = analytic_correlation
    return m(a1 - b1) - m(a1 - b2) + m(a2 - b1) + m(a2 - b2)


def ks_uniformity(samples: Sequence[float]) -> KsResult:
    """Kolmogorov-Smirnov statistic against the uniform law on ``[0, 2*pi)``.

    Returns the exact two-sided statistic together with the asymptotic 1%
    critical value ``1.63 / sqrt(n)``.
    """
    x = np.asarray(samples, dtype=np.float64).reshape(-1)
    if x.size < 100:
        raise ValueError("need at least 100 samples")
    if not np.all(np.isfinite(x)) or float(x.min()) < 0.0 or float(x.max()) >= TWO_PI:
        raise ValueError("samples must lie in [0, 2*pi)")
    statistic = float(_scipy_stats.kstest(x, lambda v: v / TWO_PI).statistic)
    return KsResult(statistic, 1.63 / math.sqrt(x.size))
