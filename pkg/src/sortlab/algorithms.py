"""Instrumented sorting algorithms and an inversion-count oracle.

Two selection-sort variants are provided, with exact operation tallies:

* :func:`exchange_selection_sort` — the swap-eager double loop that
  swaps a[i], a[j] whenever a[i] > a[j].  Always performs n(n-1)/2
  comparisons; the interchange count is the measured quantity in the
  Monte Carlo experiments.
* :func:`textbook_selection_sort` — find the minimum of the unsorted
  suffix, one swap per pass (at most n-1 interchanges).

Neither variant is stable.  All operations are pure: the input sequence
is never mutated, and calls are safe from concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "OpCounters",
    "count_inversions",
    "exchange_selection_sort",
    "textbook_selection_sort",
]


@dataclass(frozen=True)
class OpCounters:
    """Exact comparison and interchange tallies for one sort execution."""

    comparisons: int
    interchanges: int

    def __post_init__(self):
        if self.comparisons < 0 or self.interchanges < 0:
            raise ValueError("counts must be nonnegative")
        if self.interchanges > self.comparisons:
            raise ValueError(
                f"interchanges ({self.interchanges}) cannot exceed comparisons ({self.comparisons})"
            )


def _exchange_sort_list(seq) -> tuple[list, int]:
    # Literal double loop: i < j, swap on strict a[i] > a[j].
    a = list(seq)
    n = len(a)
    swaps = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            if a[i] > a[j]:
                a[i], a[j] = a[j], a[i]
                swaps += 1
    return a, swaps


def _exchange_sort_ndarray(arr: np.ndarray) -> tuple[np.ndarray, int]:
    # Pass i swaps exactly at the strict running minima of a[i:], and each
    # swapped slot receives the previous running-minimum value.  This
    # reproduces the double loop's swap count and final array without the
    # inner Python loop.
    a = arr.copy()
    n = a.size
    swaps = 0
    for i in range(n - 1):
        s = a[i:]
        runmin = np.minimum.accumulate(s)
        hits = np.flatnonzero(s[1:] < runmin[:-1]) + 1
        if hits.size:
            s[hits] = runmin[hits - 1]
            s[0] = runmin[-1]
            swaps += int(hits.size)
    return a, swaps


def exchange_selection_sort(seq: Sequence | np.ndarray) -> tuple[list | np.ndarray, OpCounters]:
    """Sort by the swap-eager double loop, counting every operation.

    Returns a sorted copy plus counters.  Comparisons are always
    n(n-1)/2; ties are never swapped (strict > test).  ndarray input
    comes back as an ndarray, anything else as a list.
    """
    if isinstance(seq, np.ndarray):
        if seq.ndim != 1:
            raise ValueError(f"expected a 1-d array, got shape {seq.shape}")
        out, swaps = _exchange_sort_ndarray(seq)
    else:
        out, swaps = _exchange_sort_list(seq)
    n = len(out)
    return out, OpCounters(comparisons=n * (n - 1) // 2, interchanges=swaps)


def _textbook_sort_list(seq) -> tuple[list, int]:
    a = list(seq)
    n = len(a)
    swaps = 0
    for i in range(n - 1):
        m = i
        for j in range(i + 1, n):
            if a[j] < a[m]:
                m = j
        if m != i:
            a[i], a[m] = a[m], a[i]
            swaps += 1
    return a, swaps


def _textbook_sort_ndarray(arr: np.ndarray) -> tuple[np.ndarray, int]:
    a = arr.copy()
    n = a.size
    swaps = 0
    for i in range(n - 1):
        m = i + int(np.argmin(a[i:]))  # argmin takes the first minimum, like the loop
        if m != i:
            a[i], a[m] = a[m], a[i]
            swaps += 1
    return a, swaps


def textbook_selection_sort(seq: Sequence | np.ndarray) -> tuple[list | np.ndarray, OpCounters]:
    """Sort by minimum-of-suffix selection, one swap per pass at most.

    Comparisons are always n(n-1)/2; the swap is skipped when the
    minimum is already in place, so interchanges <= n-1.
    """
    if isinstance(seq, np.ndarray):
        if seq.ndim != 1:
            raise ValueError(f"expected a 1-d array, got shape {seq.shape}")
        out, swaps = _textbook_sort_ndarray(seq)
    else:
        out, swaps = _textbook_sort_list(seq)
    n = len(out)
    return out, OpCounters(comparisons=n * (n - 1) // 2, interchanges=swaps)


def count_inversions(seq: Sequence | np.ndarray) -> int:
    """Number of ordered pairs i < j with a[i] > a[j]; ties contribute 0.

    Merge-sort based, O(n log n).  The input is left untouched.
    """
    a = seq.tolist() if isinstance(seq, np.ndarray) else list(seq)
    total = 0
    width = 1
    n = len(a)
    buf = a[:]
    while width < n:
        for lo in range(0, n - width, 2 * width):
            mid = lo + width
            hi = min(mid + width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if a[j] < a[i]:  # strictly smaller element jumps left of mid-i survivors
                    buf[k] = a[j]
                    total += mid - i
                    j += 1
                else:
                    buf[k] = a[i]
                    i += 1
                k += 1
            buf[k : k + mid - i] = a[i:mid]
            k += mid - i
            buf[k:hi] = a[j:hi]
            a[lo:hi] = buf[lo:hi]
        width *= 2
    return total
