"""Session-scoped exhaustive enumerations shared across test modules.

The heavy streams (full word scans up to order 8, all partitions up to
[-7, 7], run distributions up to order 10) are computed once per session
so the acceptance criteria can share them.
"""

import os

import pytest

from flatstir.bijection import iter_flattened_letters
from flatstir.tables import count_runs_via_bijection
from flatstir.typeb import generate_typeb
from flatstir.words import count_stirling_stats, generate_flattened_filter

WORKERS = min(4, os.cpu_count() or 1)


@pytest.fixture(scope="session")
def filter_stats():
    """Exhaustive scan results for doubled words, order 1..8."""
    return {n: count_stirling_stats(n, 2, workers=WORKERS if n >= 8 else 1) for n in range(1, 9)}


@pytest.fixture(scope="session")
def flat_words():
    """All flattened doubled words (as objects) for orders 1..8, via the filter."""
    return {n: list(generate_flattened_filter(n, 2)) for n in range(1, 9)}


@pytest.fixture(scope="session")
def partitions():
    """All canonical type B partitions of [-n, n] for n = 0..7."""
    return {n: list(generate_typeb(n)) for n in range(0, 8)}


@pytest.fixture(scope="session")
def bijection_runs():
    """Run-count distribution of flattened doubled words, order 1..10, via images."""
    return {n: count_runs_via_bijection(n) for n in range(1, 11)}


@pytest.fixture(scope="session")
def flat_letter_sets():
    """Letter-tuple sets of the partition-image stream, orders 1..8."""
    return {n: set(iter_flattened_letters(n)) for n in range(1, 9)}
