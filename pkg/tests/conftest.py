"""Shared hypothesis strategies and settings for the test suite."""

from hypothesis import settings

import hypothesis.strategies as st

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def partitions(max_part=8, max_len=6):
    """Strategy producing valid partitions as weakly decreasing tuples."""
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda xs: tuple(sorted(xs, reverse=True))
    )


def bipartitions(max_part=6, max_len=4):
    """Strategy producing pairs of partitions."""
    return st.tuples(partitions(max_part, max_len), partitions(max_part, max_len))


def charge_tuples(level, low=-6, high=8):
    """Strategy producing integer charges of a fixed level."""
    return st.tuples(*(st.integers(low, high) for _ in range(level)))
