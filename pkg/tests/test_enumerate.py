import pytest

from tabx.enumerate import (
    count_sdt,
    count_syt,
    domino_tilings,
    enum_admissible,
    enum_admissible_chains,
    enum_classes,
    enum_sdt,
    enum_syt,
    shapes_of_size,
    standard_labelings,
)
from tabx.shapes import GroupType, partitions
from tabx.tableau import render

C, D = GroupType.C, GroupType.D


@pytest.mark.parametrize("shape,count", [((2, 1), 2), ((1, 1, 1), 1), ((3, 2), 5), ((3, 3), 5), ((), 1)])
def test_syt_counts(shape, count):
    assert count_syt(shape) == count
    assert len(list(enum_syt(shape))) == count


def test_syt_stream_matches_count_up_to_eight():
    for m in range(9):
        for lam in partitions(m):
            tabs = list(enum_syt(lam))
            assert len(tabs) == len(set(tabs)) == count_syt(lam)


def test_sdt_of_3_3_in_type_d():
    assert {render(T, sep=" / ") for T in enum_sdt(D, shape=(3, 3))} == {
        "1 2 2 / 1 3 3",
        "1 2 3 / 1 2 3",
        "1 1 3 / 2 2 3",
    }


def test_small_counts():
    assert count_sdt(C, size=2) == 6
    assert count_sdt(D, size=1) == 2
    assert len(enum_admissible(D, size=1)) == 1  # [2] is not an orbit shape in type D
    assert count_sdt(GroupType.B, size=0) == 1
    assert len(enum_classes(D, "opcl", shape=(3, 3))) == 6
    assert len(enum_classes(D, "cl", shape=(3, 3))) == 3


@pytest.mark.parametrize("t", list(GroupType))
def test_generator_matches_tiling_oracle(t):
    for n in range(5):
        oracle = sum(standard_labelings(til, t) for lam in shapes_of_size(t, n) for til in domino_tilings(lam, t))
        assert count_sdt(t, size=n) == oracle


@pytest.mark.parametrize("t", list(GroupType))
def test_admissible_two_ways(t):
    for n in range(6):
        assert enum_admissible_chains(t, size=n) == enum_admissible(t, size=n)


def test_output_is_sorted_and_unique():
    tabs = enum_sdt(C, size=4)
    keys = [T.sort_key() for T in tabs]
    assert keys == sorted(keys)
    assert len(set(tabs)) == len(tabs)


def test_bad_arguments():
    with pytest.raises(ValueError):
        enum_sdt(D)
    with pytest.raises(ValueError):
        enum_sdt(D, shape=(3,), size=1)
    with pytest.raises(ValueError):
        enum_sdt(D, shape=(3,))  # odd square count
    with pytest.raises(ValueError):
        enum_sdt(GroupType.B, shape=(2, 2))
    with pytest.raises(ValueError):
        enum_sdt(C, size=-1)
