"""Partition basics checked against brute-force cell-set oracles."""

import pytest
from hypothesis import given, strategies as st

from mulli import (
    MAX_CELLS,
    as_partition,
    conjugate,
    diagonal_hook_lengths,
    durfee_length,
    format_partition,
    hook_length,
    is_bg_partition,
    is_p_regular,
    is_self_conjugate,
    parse_partition,
    self_conjugate_from_diagonal_hooks,
    truncate_to_durfee,
)


def cells(lam):
    return {(i, j) for i, part in enumerate(lam, start=1) for j in range(1, part + 1)}


partitions = st.lists(st.integers(1, 12), max_size=8).map(lambda xs: tuple(sorted(xs, reverse=True)))

# strictly decreasing positive odd numbers, the free coordinates of a
# self-conjugate partition
odd_hook_tuples = st.sets(st.integers(0, 10), max_size=6).map(
    lambda ks: tuple(sorted((2 * k + 1 for k in ks), reverse=True))
)


def test_as_partition_normalizes():
    assert as_partition([5, 2, 2, 1]) == (5, 2, 2, 1)
    assert as_partition(()) == ()
    assert as_partition(iter((3, 1))) == (3, 1)


@pytest.mark.parametrize("bad", [(2, 3), (0,), (-1,), (3, 0), (1.5,), (True,)])
def test_as_partition_rejects(bad):
    with pytest.raises(ValueError):
        as_partition(bad)


def test_as_partition_size_cap():
    with pytest.raises(ValueError):
        as_partition((MAX_CELLS + 1,))


def test_parse_partition():
    assert parse_partition("5,2,2,1") == (5, 2, 2, 1)
    assert parse_partition("7,5,2^3,1^2") == (7, 5, 2, 2, 2, 1, 1)
    assert parse_partition(" 9 , 2 , 1^7 ") == (9, 2, 1, 1, 1, 1, 1, 1, 1)
    assert parse_partition("") == ()
    assert parse_partition("-") == ()


@pytest.mark.parametrize("bad", ["1,3", "2^0", "x", "3,^2", "2^-1"])
def test_parse_partition_rejects(bad):
    with pytest.raises(ValueError):
        parse_partition(bad)


def test_format_partition():
    assert format_partition((5, 2, 2, 1)) == "5,2,2,1"
    assert format_partition(()) == ""


@given(partitions)
def test_parse_inverts_format(lam):
    assert parse_partition(format_partition(lam)) == lam


def test_conjugate_golden():
    # transpose by hand: (5,2,2,1) has columns of heights 4,3,1,1,1
    assert conjugate((5, 2, 2, 1)) == (4, 3, 1, 1, 1)
    assert conjugate(()) == ()


@given(partitions)
def test_conjugate_is_the_transpose(lam):
    assert cells(conjugate(lam)) == {(j, i) for i, j in cells(lam)}


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_is_self_conjugate():
    assert is_self_conjugate((3, 2, 1))
    assert is_self_conjugate(())
    assert not is_self_conjugate((3, 1))


def test_durfee_length():
    assert durfee_length(()) == 0
    assert durfee_length((1,)) == 1
    assert durfee_length((3, 2, 1)) == 2
    assert durfee_length((4, 3, 1, 1, 1)) == 2
    assert durfee_length((3, 3, 3)) == 3


def test_hook_length_golden():
    # (3,2,1) at the corner: arm 2, leg 2, plus the cell
    assert hook_length((3, 2, 1), 1, 1) == 5
    assert hook_length((3, 2, 1), 2, 2) == 1
    with pytest.raises(ValueError):
        hook_length((3, 2, 1), 3, 2)
    with pytest.raises(ValueError):
        hook_length((3, 2, 1), 0, 1)


@given(partitions.filter(bool))
def test_hook_length_counts_the_hook(lam):
    box = cells(lam)
    for i, j in box:
        hook = {(i, jj) for jj in range(j, lam[i - 1] + 1)} | {(ii, j) for ii in range(i, len(lam) + 1) if (ii, j) in box}
        assert hook_length(lam, i, j) == len(hook)


def test_diagonal_hook_lengths():
    assert diagonal_hook_lengths((6, 5, 2, 2, 2, 1)) == (11, 7)
    assert diagonal_hook_lengths((9, 2, 1, 1, 1, 1, 1, 1, 1)) == (17, 1)
    assert diagonal_hook_lengths(()) == ()


def test_self_conjugate_from_diagonal_hooks_golden():
    assert self_conjugate_from_diagonal_hooks((17, 1)) == (9, 2, 1, 1, 1, 1, 1, 1, 1)
    assert self_conjugate_from_diagonal_hooks((11, 7)) == (6, 5, 2, 2, 2, 1)
    assert self_conjugate_from_diagonal_hooks(()) == ()


@pytest.mark.parametrize("bad", [(4,), (3, 3), (1, 3), (5, -1)])
def test_self_conjugate_from_diagonal_hooks_rejects(bad):
    with pytest.raises(ValueError):
        self_conjugate_from_diagonal_hooks(bad)


@given(odd_hook_tuples)
def test_diagonal_hooks_round_trip(hooks):
    lam = self_conjugate_from_diagonal_hooks(hooks)
    assert is_self_conjugate(lam)
    assert diagonal_hook_lengths(lam) == hooks
    assert sum(lam) == sum(hooks)


def test_is_p_regular():
    assert is_p_regular((9, 6, 3, 1), 3)
    assert not is_p_regular((2, 1, 1, 1), 3)
    assert is_p_regular((1, 1), 3)
    assert is_p_regular((), 3)


def test_is_bg_partition():
    # diagonal hooks 13, 5, 1
    assert is_bg_partition((7, 4, 3, 2, 1, 1, 1), 3)
    assert not is_bg_partition((5, 4, 4, 4, 1), 3)  # h_11 = 9
    assert not is_bg_partition((3, 3, 3), 3)  # h_22 = 3
    assert not is_bg_partition((2, 1), 3)  # h_11 = 3
    assert not is_bg_partition((3, 1), 3)  # not self-conjugate
    assert is_bg_partition((), 3)


def test_truncate_to_durfee():
    assert truncate_to_durfee((3, 2, 1)) == (3, 2)
    assert truncate_to_durfee((1,)) == (1,)
    with pytest.raises(ValueError):
        truncate_to_durfee(())


@pytest.mark.parametrize("p", [2, 1, 0, -3, 4, 3.0])
def test_odd_p_is_enforced(p):
    with pytest.raises(ValueError):
        is_p_regular((2, 1), p)
