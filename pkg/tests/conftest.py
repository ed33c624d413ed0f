import pytest
from hypothesis import strategies as st

from tabx.enumerate import _addable_dominos
from tabx.fixtures import T_C, T_C_PRIME, T_D1, T_D2, T_D12
from tabx.shapes import GroupType
from tabx.tableau import DominoTableau, parse_tableau


@st.composite
def standard_tableaux(draw, types=tuple(GroupType), max_n=6):
    """Grow a random standard domino tableau one domino at a time."""
    t = draw(st.sampled_from(types))
    n = draw(st.integers(0, max_n))
    doms = {0: ((1, 1),)} if t.has_zero_square else {}
    cells = frozenset(doms.get(0, ()))
    for k in range(1, n + 1):
        options = _addable_dominos(cells)
        dom = options[draw(st.integers(0, len(options) - 1))]
        doms[k] = dom
        cells = cells | set(dom)
    return DominoTableau(t, doms)


@pytest.fixture
def t_c():
    return parse_tableau(T_C)


@pytest.fixture
def t_c_prime():
    return parse_tableau(T_C_PRIME)


@pytest.fixture
def t_d12():
    return parse_tableau(T_D12)


@pytest.fixture
def t_d1():
    return parse_tableau(T_D1)


@pytest.fixture
def t_d2():
    return parse_tableau(T_D2)


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, list[str]] = {}


def report_criterion(number: int, passed: bool, text: str) -> None:
    ACCEPTANCE.setdefault(number, []).append(f"criterion {number}: {'PASS' if passed else 'FAIL'} {text}")
    print(ACCEPTANCE[number][-1])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        for line in ACCEPTANCE[number]:
            terminalreporter.write_line(line)
