from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from levelkit.partitions import (Partition, UnequalTotals, dominates, enumerate_partitions,
                                 level, parse_partition, partition_sum, preceding)

from oracles import covers, dom, longest_chains, partitions_of


def test_dominates_examples():
    assert dominates((3, 1), (2, 2))
    assert dominates((2, 1, 1), (2, 1, 1))
    assert not dominates((2, 2), (3, 1))
    with pytest.raises(UnequalTotals):
        dominates((2,), (1,))


def test_preceding_examples():
    assert preceding((3, 1)) == {(2, 2)}
    assert preceding((1, 1, 1)) == set()
    assert preceding((3, 3)) == {(3, 2, 1)}


def test_level_examples():
    assert level((2, 1, 1)) == 1
    assert level((1, 1, 1, 1)) == 0
    assert level((3, 2)) == 4
    assert level((3, 3)) == 5


def test_sum_examples():
    assert partition_sum([(2,), (1, 1)]) == (3, 1)
    assert partition_sum([(2, 1), ()]) == (2, 1)
    assert partition_sum([(2, 1), (2, 1)]) == (4, 2)


def test_enumerate_examples():
    assert enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert enumerate_partitions(1) == [(1,)]
    assert len(enumerate_partitions(5)) == 7
    for n in range(1, 11):
        assert enumerate_partitions(n) == partitions_of(n)


def test_parse_partition():
    assert parse_partition("3,2") == (3, 2)
    assert parse_partition("(2, 1, 1)") == (2, 1, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_dominance_is_partial_order():
    for n in range(1, 9):
        parts = enumerate_partitions(n)
        for a in parts:
            assert dominates(a, a)
            for b in parts:
                if a != b and dominates(a, b):
                    assert not dominates(b, a)
                    for c in parts:
                        if dominates(b, c):
                            assert dominates(a, c)


def test_preceding_matches_brute_force_covers():
    for n in range(1, 13):
        parts = partitions_of(n)
        for a in parts:
            assert preceding(a) == covers(a, parts), a


def test_level_matches_longest_chain():
    for n in range(1, 11):
        for a, depth in longest_chains(n).items():
            assert level(a) == depth, a


def test_level_extremes():
    for n in range(1, 11):
        assert level((n,)) == max(level(a) for a in enumerate_partitions(n))
        assert level((1,) * n) == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 14).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)),
                                                       st.sampled_from(partitions_of(n)))))
def test_dominates_agrees_with_prefix_sums(pair):
    a, b = pair
    assert dominates(a, b) == dom(a, b)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 14).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_covers_lower_level_by_at_least_one(a):
    for b in preceding(a):
        assert dominates(a, b) and a != b
        assert level(b) <= level(a) - 1
