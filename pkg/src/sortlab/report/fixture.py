"""Embedded reference dataset: published per-p summary statistics.

Nine cells of the n=1000, 100-trial geometric experiment, kept exactly
as published.  They serve as the regression fixture (mean count fitted
against p) and as the comparison baseline for fresh simulations.  The
values are load-bearing for the acceptance suite; a checksum test
guards them against drift.
"""

from __future__ import annotations

from ..montecarlo import TrialSummary
from ..polyfit import DataPoint

__all__ = ["REFERENCE_N", "REFERENCE_ROWS", "REFERENCE_TRIALS", "reference_points"]

REFERENCE_N = 1000
REFERENCE_TRIALS = 100

# (p, mean count, sd of count, cv of count), exactly as published.
_ROWS = (
    (0.1, 30590.93, 1785.8720, 0.05838),
    (0.2, 17548.08, 1294.4680, 0.0737669),
    (0.3, 12175.57, 1035.9940, 0.0850879),
    (0.4, 9110.45, 784.3701, 0.0860956),
    (0.5, 6832.90, 750.3445, 0.1098135),
    (0.6, 5336.36, 602.0993, 0.1128296),
    (0.7, 4192.42, 588.1761, 0.1402951),
    (0.8, 3116.07, 417.2080, 0.1338892),
    (0.9, 2164.99, 353.7879, 0.1634132),
)

REFERENCE_ROWS: tuple[TrialSummary, ...] = tuple(
    TrialSummary(p=p, n=REFERENCE_N, trials=REFERENCE_TRIALS, mean_c=mean, sd_c=sd, cv_c=cv)
    for p, mean, sd, cv in _ROWS
)


def reference_points() -> list[DataPoint]:
    """The fixture as regression input: x = p, y = mean count."""
    return [DataPoint(x=row.p, y=row.mean_c) for row in REFERENCE_ROWS]
