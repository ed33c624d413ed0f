import pytest
from hypothesis import given

from tabx.shapes import GroupType
from tabx.tableau import parse_tableau
from tabx.tau import first_checked_index, tau

from conftest import standard_tableaux

D = GroupType.D


def test_tau_examples(t_d1):
    T = parse_tableau("1 1 3 3 / 2 2", D)
    result = tau(T, D)
    assert 2 in result and 3 not in result
    assert 1 not in result  # D(1) horizontal
    assert 2 not in tau(t_d1) and 3 not in tau(t_d1)


def test_single_vertical_type_c():
    assert tau(parse_tableau("1 / 1", GroupType.C)).indices == {1}


def test_type_d_marks_low_indices(t_d1):
    result = tau(t_d1)
    assert result.unverified == {1, 2}
    assert result.describe() == "1*"
    assert result.verified() == set()
    assert tau(parse_tableau("1 / 1", GroupType.C)).unverified == set()


def test_first_checked_index():
    assert first_checked_index(D) == 3
    assert first_checked_index(GroupType.B) == 1


def test_type_mismatch(t_d1):
    with pytest.raises(ValueError):
        tau(t_d1, "C")


@given(standard_tableaux(max_n=7))
def test_indices_in_range(T):
    result = tau(T)
    assert all(1 <= i <= T.n for i in result.indices)
    assert result.restricted(3) <= result.indices
