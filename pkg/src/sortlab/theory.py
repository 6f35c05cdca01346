"""Closed-form expectations for the interchange-count experiment.

For iid input, a pair (i, j) is out of order with probability
P[a(i) > a(j)] = (1 - P[a(i) = a(j)]) / 2, by symmetry.  Continuous
input has tie probability 0, so the interchange probability is exactly
1/2; geometric(p) input ties with probability sum_r (p(1-p)^r)^2, whose
closed form is p/(2-p), giving interchange probability (1-p)/(2-p).

The expected count n(n-1)/2 * P[a(i) > a(j)] is, by linearity, the
exact expectation of the inversion count of the unsorted array
(:func:`sortlab.algorithms.count_inversions`).  It is *not* the
expectation of the exchange-sort swap count, which depends on the joint
order structure; reports keep the two quantities side by side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .distributions import ContinuousUniform, Geometric, InputModel

__all__ = [
    "TheoryPrediction",
    "expected_interchanges",
    "interchange_probability",
    "predict",
    "tie_probability",
    "tie_probability_series",
]

_MAX_SERIES_TERMS = 10**6


def tie_probability(model: InputModel) -> float:
    """P[a(i) = a(j)] for two independent draws from `model`."""
    if isinstance(model, ContinuousUniform):
        return 0.0
    if isinstance(model, Geometric):
        # closed form of sum_r p^2 (1-p)^(2r) = p^2 / (1 - (1-p)^2)
        return model.p / (2.0 - model.p)
    raise TypeError(f"unknown input model: {model!r}")


def tie_probability_series(pmf: Callable[[int], float], tol: float) -> float:
    """P[a(i) = a(j)] = sum_r pmf(r)^2, truncated to accuracy `tol`.

    The remainder after r = R is at most (1 - sum_{r<=R} pmf(r))^2, so
    summation stops once that bound drops below `tol` (for the geometric
    pmf the bound is the exact (1-p)^(2R+2) tail envelope).  Raises if
    one million terms do not reach it, which signals a pmf whose mass
    does not concentrate.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    total_mass = 0.0
    total_sq = 0.0
    for r in range(_MAX_SERIES_TERMS):
        f = pmf(r)
        total_mass += f
        total_sq += f * f
        remainder = max(0.0, 1.0 - total_mass)
        if remainder * remainder < tol:
            return total_sq
    raise RuntimeError(
        f"tie-probability series did not converge to tol={tol} within {_MAX_SERIES_TERMS} terms"
    )


def interchange_probability(model: InputModel) -> float:
    """P[a(i) > a(j)] = (1 - P[a(i) = a(j)]) / 2 for iid draws."""
    return 0.5 * (1.0 - tie_probability(model))


def expected_interchanges(model: InputModel, n: int) -> float:
    """n(n-1)/2 pairs times the per-pair interchange probability.

    Exact expectation of the inversion count of an n-element iid array.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (n * (n - 1) / 2.0) * interchange_probability(model)


@dataclass(frozen=True)
class TheoryPrediction:
    """Closed-form quantities for one (model, n) configuration."""

    n: int
    model: InputModel
    tie_probability: float
    interchange_probability: float
    expected_interchanges: float


def predict(model: InputModel, n: int) -> TheoryPrediction:
    """Bundle all closed-form quantities for `model` at array length `n`."""
    return TheoryPrediction(
        n=n,
        model=model,
        tie_probability=tie_probability(model),
        interchange_probability=interchange_probability(model),
        expected_interchanges=expected_interchanges(model, n),
    )
