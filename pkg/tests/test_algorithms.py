"""Instrumented sorts: correctness, exact counter semantics, fast-path parity."""

from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sortlab.algorithms import (
    OpCounters,
    _exchange_sort_list,
    _exchange_sort_ndarray,
    _textbook_sort_list,
    _textbook_sort_ndarray,
    count_inversions,
    exchange_selection_sort,
    textbook_selection_sort,
)

# Small nonnegative ints force ties, the regime that separates the two sorts.
tied_lists = st.lists(st.integers(min_value=0, max_value=6), min_size=0, max_size=40)


def brute_force_inversions(seq) -> int:
    items = list(seq)
    return sum(
        1
        for i in range(len(items))
        for j in range(i + 1, len(items))
        if items[i] > items[j]
    )


class TestOpCounters:
    def test_validation(self):
        with pytest.raises(ValueError):
            OpCounters(comparisons=-1, interchanges=0)
        with pytest.raises(ValueError):
            OpCounters(comparisons=3, interchanges=4)
        c = OpCounters(comparisons=3, interchanges=2)
        assert (c.comparisons, c.interchanges) == (3, 2)


class TestExchangeSelectionSort:
    def test_known_small_cases(self):
        assert exchange_selection_sort([])[1] == OpCounters(0, 0)
        assert exchange_selection_sort([5])[1] == OpCounters(0, 0)
        assert exchange_selection_sort([1, 2])[1] == OpCounters(1, 0)
        assert exchange_selection_sort([2, 1])[1] == OpCounters(1, 1)
        # [3,2,1]: (0,1) swaps, (0,2) swaps, (1,2) swaps.
        assert exchange_selection_sort([3, 2, 1])[1] == OpCounters(3, 3)
        # Ties never swap under strict >.
        assert exchange_selection_sort([4, 4, 4])[1] == OpCounters(3, 0)

    @given(tied_lists)
    def test_sorts_and_counts(self, items):
        result, counters = exchange_selection_sort(items)
        n = len(items)
        assert result == sorted(items)
        assert Counter(result) == Counter(items)
        assert counters.comparisons == n * (n - 1) // 2
        assert 0 <= counters.interchanges <= counters.comparisons

    @given(tied_lists)
    def test_input_untouched_and_type_preserved(self, items):
        original = list(items)
        result, _ = exchange_selection_sort(items)
        assert items == original
        assert isinstance(result, list)

        arr = np.array(original, dtype=np.int64)
        result_arr, _ = exchange_selection_sort(arr)
        assert isinstance(result_arr, np.ndarray)
        assert result_arr.tolist() == sorted(original)
        assert arr.tolist() == original

    @given(tied_lists)
    def test_ndarray_fast_path_matches_literal_loop(self, items):
        _, swaps_list = _exchange_sort_list(items)
        _, swaps_arr = _exchange_sort_ndarray(np.array(items, dtype=np.int64))
        assert swaps_arr == swaps_list

    def test_fast_path_parity_on_seeded_batch(self):
        rng = np.random.default_rng(321)
        for _ in range(300):
            n = int(rng.integers(0, 80))
            arr = rng.integers(0, 8, size=n)
            _, swaps_list = _exchange_sort_list(arr.tolist())
            _, swaps_arr = _exchange_sort_ndarray(arr.astype(np.int64))
            assert swaps_arr == swaps_list

    def test_floats_supported(self):
        data = [0.3, 0.1, 0.2, 0.1]
        result, counters = exchange_selection_sort(data)
        assert result == sorted(data)
        assert counters.comparisons == 6


class TestTextbookSelectionSort:
    def test_known_small_cases(self):
        assert textbook_selection_sort([3, 2, 1])[1] == OpCounters(3, 1)
        assert textbook_selection_sort([1, 2, 3])[1] == OpCounters(3, 0)
        assert textbook_selection_sort([2, 1])[1] == OpCounters(1, 1)

    @given(tied_lists)
    def test_sorts_with_few_swaps(self, items):
        result, counters = textbook_selection_sort(items)
        n = len(items)
        assert result == sorted(items)
        assert Counter(result) == Counter(items)
        assert counters.comparisons == n * (n - 1) // 2
        assert counters.interchanges <= max(n - 1, 0)

    @given(tied_lists)
    def test_ndarray_fast_path_matches_literal_loop(self, items):
        _, swaps_list = _textbook_sort_list(items)
        _, swaps_arr = _textbook_sort_ndarray(np.array(items, dtype=np.int64))
        assert swaps_arr == swaps_list

    @given(tied_lists)
    def test_never_swaps_more_than_exchange_on_reversed_runs(self, items):
        # Both sort; the textbook variant is the low-swap one by design.
        _, ex = exchange_selection_sort(items)
        _, tb = textbook_selection_sort(items)
        assert tb.interchanges <= max(len(items) - 1, 0)
        assert ex.comparisons == tb.comparisons


class TestCountInversions:
    def test_known_values(self):
        assert count_inversions([]) == 0
        assert count_inversions([1]) == 0
        assert count_inversions([1, 2, 3]) == 0
        assert count_inversions([3, 2, 1]) == 3
        assert count_inversions([5, 4, 3, 2, 1]) == 10
        assert count_inversions([1, 1, 1]) == 0
        assert count_inversions([2, 1, 2, 1]) == 3

    @given(st.lists(st.integers(min_value=-50, max_value=50), max_size=60))
    def test_matches_brute_force(self, items):
        assert count_inversions(items) == brute_force_inversions(items)

    def test_matches_brute_force_on_seeded_batch(self):
        rng = np.random.default_rng(654)
        for _ in range(1000):
            n = int(rng.integers(0, 50))
            arr = rng.integers(0, 10, size=n)
            assert count_inversions(arr) == brute_force_inversions(arr.tolist())

    @given(st.lists(st.integers(min_value=0, max_value=5), max_size=40))
    @settings(max_examples=60)
    def test_input_untouched(self, items):
        original = list(items)
        count_inversions(items)
        assert items == original

    def test_reversed_is_maximal(self):
        n = 30
        assert count_inversions(list(range(n, 0, -1))) == n * (n - 1) // 2
