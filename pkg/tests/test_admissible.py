import pytest

from tabx.admissible import DominoKind, domino_kind, inadmissible_dominos, is_admissible, kinds
from tabx.enumerate import enum_admissible, enum_sdt
from tabx.shapes import GroupType, is_orbit_shape
from tabx.tableau import parse_tableau

IP, IM, N, BAD = DominoKind.I_PLUS, DominoKind.I_MINUS, DominoKind.N, DominoKind.INADMISSIBLE_HORIZONTAL


def test_t_c_verdicts(t_c, t_c_prime):
    assert is_admissible(t_c)
    verdict = is_admissible(t_c_prime)
    assert not verdict
    assert verdict.failing_index == 2


def test_t_d12_admissible(t_d12):
    assert is_admissible(t_d12, GroupType.D)


def test_type_mismatch(t_c):
    with pytest.raises(ValueError):
        is_admissible(t_c, GroupType.D)


def test_t_c_kinds(t_c):
    assert kinds(t_c) == {1: IM, 2: IP, 3: IM, 4: IP, 5: N}


def test_t_d12_kinds(t_d12):
    assert domino_kind(t_d12, 6) is IP
    assert domino_kind(t_d12, 7) is IM


def test_inadmissible_horizontal():
    T = parse_tableau("1 1", GroupType.D)
    assert domino_kind(T, 1) is BAD
    assert inadmissible_dominos(T) == [1]
    with pytest.raises(ValueError):
        domino_kind(parse_tableau("0 1 1", GroupType.B), 0)


@pytest.mark.parametrize("t", list(GroupType))
def test_horizontals_in_admissible_tableaux_are_n(t):
    for n in range(6):
        for T in enum_admissible(t, size=n):
            for k, kind in kinds(T).items():
                if T.is_horizontal(k):
                    assert kind is N
                else:
                    assert kind in (IP, IM)


@pytest.mark.parametrize("t", list(GroupType))
def test_bad_horizontal_breaks_orbit_shape(t):
    """Adding an inadmissible horizontal to an admissible prefix leaves the orbit shapes."""
    for n in range(1, 6):
        for T in enum_sdt(t, size=n):
            if is_admissible(T.prefix(n - 1)) and domino_kind(T, n) is BAD:
                assert not is_orbit_shape(T.shape(), t)


@pytest.mark.parametrize("t", [GroupType.B, GroupType.C])
def test_prefix_sizes_alternate(t):
    for n in range(1, 6):
        for T in enum_admissible(t, size=n):
            assert 1 in T.dominos
            assert [sum(s) % 2 for s in T.prefix_shapes()] == [int(t.has_zero_square)] * (n + 1)
