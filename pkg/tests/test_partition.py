from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hookzeta.partition import (
    SkewShape,
    addable_rim_hooks,
    conjugate,
    contains,
    format_partition,
    hook,
    is_hook,
    is_rim_hook,
    parse_partition,
    partition,
    partitions_of,
    z,
)


def brute_partitions(n):
    """Every multiset of positive parts summing to n, found by filtering compositions."""
    found = set()
    for mask in product((0, 1), repeat=max(n - 1, 0)):
        parts, run = [], 1
        for cut in mask:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        if n:
            parts.append(run)
        found.add(tuple(sorted(parts, reverse=True)))
    return found


def test_partitions_of_small():
    assert partitions_of(0) == ((),)
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(partitions_of(7)) == 15


@pytest.mark.parametrize("n", range(0, 13))
def test_partitions_match_exhaustive_enumeration(n):
    parts = partitions_of(n)
    assert len(parts) == len(set(parts))
    assert set(parts) == brute_partitions(n)
    assert list(parts) == sorted(parts, reverse=True)


def test_partition_validation():
    assert partition([3, 1, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 1)) == (2, 1)


@pytest.mark.parametrize("n", range(0, 13))
def test_conjugate_is_involutive(n):
    for lam in partitions_of(n):
        assert conjugate(conjugate(lam)) == lam
        assert sum(conjugate(lam)) == n


def test_hooks_and_their_conjugates():
    for size in range(1, 13):
        for a in range(1, size + 1):
            b = size - a
            lam = hook(a, b)
            assert is_hook(lam)
            assert conjugate(lam) == hook(b + 1, a - 1)
    for n in range(1, 13):
        for lam in partitions_of(n):
            assert is_hook(lam) == (len(lam) <= 1 or all(x == 1 for x in lam[1:]))


def test_is_rim_hook_examples():
    assert is_rim_hook(SkewShape((4, 3, 1), (2,))) == (True, 3)
    assert is_rim_hook(SkewShape((2, 2), ())) == (False, 0)
    assert is_rim_hook(SkewShape((2, 1), (1,))) == (False, 0)
    assert is_rim_hook(SkewShape((3,), (3,))) == (False, 0)


def test_is_rim_hook_rejects_bad_skew():
    with pytest.raises(ValueError):
        is_rim_hook(SkewShape((2,), (1, 1)))


def test_addable_rim_hooks_examples():
    assert set(addable_rim_hooks((), 3)) == {((3,), 1), ((2, 1), 2), ((1, 1, 1), 3)}
    assert set(addable_rim_hooks((1,), 2)) == {((3,), 1), ((1, 1, 1), 2)}
    assert addable_rim_hooks((), 1) == (((1,), 1),)


def test_addable_rim_hooks_exhaustive():
    # beta-number enumeration against a cell-level search over every
    # candidate outer shape
    for total in range(1, 15):
        for size in range(total):
            r = total - size
            for lam in partitions_of(size):
                found = addable_rim_hooks(lam, r)
                assert len(found) == len(set(found))
                expected = set()
                for mu in partitions_of(total):
                    if contains(mu, lam):
                        ok, ht = is_rim_hook(SkewShape(mu, lam))
                        if ok:
                            expected.add((mu, ht))
                assert set(found) == expected, (lam, r)


def test_z_examples():
    assert z(()) == 1
    assert z((1, 1, 1)) == 6
    assert z((3, 1)) == 3


@pytest.mark.parametrize("n", range(1, 9))
def test_class_sizes_sum_to_group_order(n):
    assert sum(factorial(n) // z(lam) for lam in partitions_of(n)) == factorial(n)
    assert all(factorial(n) % z(lam) == 0 for lam in partitions_of(n))


@given(st.lists(st.integers(1, 9), max_size=8))
def test_format_parse_roundtrip(parts):
    lam = tuple(sorted(parts, reverse=True))
    text = format_partition(lam)
    assert parse_partition(text) == lam
    assert " " not in text


def test_parse_accepts_empty_forms():
    assert parse_partition("[]") == ()
    assert parse_partition("()") == ()
    assert parse_partition("3,1,1") == (3, 1, 1)
