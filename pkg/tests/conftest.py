"""Shared fixtures and the acceptance-criteria summary hook."""

from __future__ import annotations

import pytest

from sortlab.montecarlo import ExperimentConfig, run_experiment

# (criterion number, passed, detail) tuples recorded by test_acceptance.
ACCEPTANCE_RESULTS: list[tuple[int, bool, str]] = []


def record_criterion(number: int, passed: bool, detail: str = "") -> bool:
    ACCEPTANCE_RESULTS.append((number, passed, detail))
    return passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE_RESULTS):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}"
        if detail:
            line += f" - {detail}"
        terminalreporter.write_line(line)


_GRID = tuple(round(0.1 * i, 1) for i in range(1, 10))
_ACCEPTANCE_SEED = 42


@pytest.fixture(scope="session")
def exchange_cells():
    """Full-scale exchange-mode run shared by the Table-reproduction criteria."""
    config = ExperimentConfig(
        n=1000,
        trials=100,
        p_values=_GRID,
        counter_mode="exchange_interchanges",
        master_seed=_ACCEPTANCE_SEED,
    )
    return run_experiment(config, jobs=4)


@pytest.fixture(scope="session")
def inversion_cells():
    """Full-scale inversion-mode run for the theory-bridge criterion."""
    config = ExperimentConfig(
        n=1000,
        trials=100,
        p_values=_GRID,
        counter_mode="inversions",
        master_seed=_ACCEPTANCE_SEED,
    )
    return run_experiment(config, jobs=4)
