"""Repeated-trial experiment harness: sample, sort, count, aggregate.

Each (n, p) cell runs `trials` independent repetitions of drawing a
geometric array and counting operations with the configured counter,
then reduces the counts to mean, standard deviation (population
convention, dividing by the trial count), and coefficient of variation.

Determinism contract: cell seeds derive from the master seed and the
p-grid index, trial seeds from the cell seed and the trial index, and
trials are reduced in trial-index order.  Output is therefore
bit-identical whether cells run serially or on worker processes.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algorithms import count_inversions, exchange_selection_sort, textbook_selection_sort
from .distributions import RandomSource, geometric, mix64, sample_array

__all__ = [
    "COUNTER_MODES",
    "ExperimentConfig",
    "RunningMoments",
    "TrialSummary",
    "run_cell",
    "run_experiment",
]

COUNTER_MODES = ("exchange_interchanges", "textbook_interchanges", "inversions")
SAMPLER_METHODS = ("inverse", "loop")


@dataclass(frozen=True)
class ExperimentConfig:
    """Array length, trial count, p grid, counter choice, and seeding."""

    n: int
    trials: int
    p_values: tuple[float, ...]
    counter_mode: str = "exchange_interchanges"
    master_seed: int = 0
    sampler_method: str = "inverse"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not self.p_values:
            raise ValueError("p_values must be nonempty")
        for p in self.p_values:
            if not 0.0 < p <= 1.0:
                raise ValueError(f"p must be in (0,1], got {p}")
        if any(a >= b for a, b in zip(self.p_values, self.p_values[1:])):
            raise ValueError(f"p_values must be strictly increasing, got {self.p_values}")
        if self.counter_mode not in COUNTER_MODES:
            raise ValueError(
                f"counter_mode must be one of {COUNTER_MODES}, got {self.counter_mode!r}"
            )
        if self.sampler_method not in SAMPLER_METHODS:
            raise ValueError(
                f"sampler_method must be one of {SAMPLER_METHODS}, got {self.sampler_method!r}"
            )
        if not 0 <= self.master_seed < 2**64:
            raise ValueError(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}")


@dataclass(frozen=True)
class TrialSummary:
    """Aggregated counts for one (p, n) cell; cv_c is None when mean_c is 0."""

    p: float
    n: int
    trials: int
    mean_c: float
    sd_c: float
    cv_c: float | None

    def __post_init__(self):
        if self.sd_c < 0.0:
            raise ValueError(f"sd_c must be >= 0, got {self.sd_c}")


class RunningMoments:
    """Streaming mean and second central moment (Welford's update).

    Single-pass and shift-free, so the sd does not suffer the
    sum-of-squares minus squared-mean cancellation at large counts.
    """

    def __init__(self):
        self.count = 0
        self._mean = 0.0
        self._m2 = 0.0

    def add(self, value: float) -> None:
        self.count += 1
        delta = value - self._mean
        self._mean += delta / self.count
        self._m2 += delta * (value - self._mean)

    @property
    def mean(self) -> float:
        if self.count == 0:
            raise ValueError("no values added")
        return self._mean

    @property
    def population_sd(self) -> float:
        if self.count == 0:
            raise ValueError("no values added")
        return math.sqrt(max(self._m2, 0.0) / self.count)


def _count_for_trial(arr, counter_mode: str) -> int:
    if counter_mode == "exchange_interchanges":
        return exchange_selection_sort(arr)[1].interchanges
    if counter_mode == "textbook_interchanges":
        return textbook_selection_sort(arr)[1].interchanges
    return count_inversions(arr)


def run_cell(config: ExperimentConfig, p: float, cell_seed: int) -> TrialSummary:
    """Run all trials of one grid cell and reduce them in trial order."""
    model = geometric(p)
    moments = RunningMoments()
    for trial_index in range(config.trials):
        trial_src = RandomSource(mix64(cell_seed, trial_index))
        arr = sample_array(trial_src, model, config.n, method=config.sampler_method)
        moments.add(float(_count_for_trial(arr, config.counter_mode)))
    mean_c = moments.mean
    sd_c = moments.population_sd
    return TrialSummary(
        p=p,
        n=config.n,
        trials=config.trials,
        mean_c=mean_c,
        sd_c=sd_c,
        cv_c=sd_c / mean_c if mean_c > 0.0 else None,
    )


def _cell_args(config: ExperimentConfig):
    for index, p in enumerate(config.p_values):
        yield p, mix64(config.master_seed, index)


def _run_cell_star(args) -> TrialSummary:
    config, p, cell_seed = args
    return run_cell(config, p, cell_seed)


def run_experiment(config: ExperimentConfig, jobs: int = 1) -> tuple[TrialSummary, ...]:
    """One TrialSummary per grid p, in grid order.

    `jobs` > 1 fans cells out to worker processes; per-cell seeding and
    ordered collection keep the result bit-identical to a serial run.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    work = [(config, p, seed) for p, seed in _cell_args(config)]
    if jobs == 1 or len(work) == 1:
        return tuple(_run_cell_star(args) for args in work)
    with ProcessPoolExecutor(max_workers=min(jobs, len(work))) as pool:
        return tuple(pool.map(_run_cell_star, work))
