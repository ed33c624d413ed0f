"""Acceptance criteria 1-11, each at its stated bound.

Every criterion prints a PASS/FAIL line. Two sub-parts do not hold as
stated; they print FAIL and are marked as strict expected failures so the
rest of the suite stays green.
"""

import itertools

import pytest

from tabx.bijection import phi, psi
from tabx.cycles import ParityClass, blocked, cycles, move_through_set
from tabx.enumerate import domino_tilings, enum_admissible, enum_classes, enum_sdt, shapes_of_size, standard_labelings
from tabx.fixtures import by_name, replay
from tabx.shapes import GroupType
from tabx.signed import Mode, all_classes, parse_signed
from tabx.tableau import render
from tabx.verify import (
    admissible_shape,
    cycle_law_violation,
    orbit_count_violation,
    orbit_shapes_upto,
    sdt,
    sdt_shape,
    structural_violation,
    tau_embed_differences,
    tau_orbit_violation,
)

from conftest import report_criterion

TYPES = list(GroupType)
D = GroupType.D
MAX_SQUARES = 10


def shapes_upto_ten(t):
    return orbit_shapes_upto(t, MAX_SQUARES)


def test_criterion_1_type_c_example():
    bad = replay(by_name("t_c")) + replay(by_name("t_c_prime"))
    bad += replay(by_name("t_c_mt2")) + replay(by_name("t_c_mt4"))
    report_criterion(1, not bad, "verdicts, kinds, cycles and MT(2), MT(4) images of the type C example")
    assert not bad, bad


def test_criterion_2_cluster_example():
    bad = replay(by_name("t_d12"))
    report_criterion(2, not bad, "T_D12 clusters, initial cycle, nesting and periphery")
    assert not bad, bad


def test_criterion_3_shape_3_3():
    opcl = enum_classes(D, "opcl", shape=(3, 3))
    images = [phi(x) for x in opcl]
    expected = set(enum_sdt(D, shape=(3, 3))) | set(enum_sdt(D, shape=(4, 2)))
    listed = {
        render(phi(x), sep=" / ")
        for name in ("t_d1_pp", "t_d1_mp", "t_d1_pm", "t_d1_mm", "t_d2_p", "t_d2_m")
        for x in [parse_signed(by_name(name).text)]
    }
    cl = enum_classes(D, "cl", shape=(3, 3))
    cl_images = [phi(x) for x in cl]
    ok = (
        len(opcl) == 6
        and len(set(images)) == 6
        and set(images) == expected
        and listed == {render(T, sep=" / ") for T in images}
        and len(cl) == 3
        and sorted(cl_images, key=lambda T: T.sort_key()) == enum_sdt(D, shape=(3, 3))
    )
    bad = [m for name in ("t_d1_pp", "t_d1_mp", "t_d1_pm", "t_d1_mm", "t_d2_p", "t_d2_m") for m in replay(by_name(name))]
    ok = ok and not bad
    report_criterion(3, ok, f"type D [3,3]: {len(opcl)} opcl classes onto {len(expected)} tableaux, {len(cl)} cl classes")
    assert ok, bad


def test_criterion_4_bijection():
    problems = []
    for t in TYPES:
        for n in range(5):
            targets = set(sdt(t, n))
            classes = enum_classes(t, "opcl", size=n)
            images = [phi(x) for x in classes]
            if len(classes) != len(targets) or len(set(images)) != len(images) or set(images) != targets:
                problems.append(f"{t.value} n={n}: phi is not a bijection")
            problems += [f"{t.value} n={n}: psi(phi(x)) != x" for x, S in zip(classes, images) if psi(S) != x][:1]
            problems += [f"{t.value} n={n}: phi(psi(S)) != S" for S in targets if phi(psi(S)) != S][:1]
    report_criterion(4, not problems, "phi/psi inverse bijections, types B C D, n <= 4")
    assert not problems, problems


def test_criterion_5_shape_bijection():
    problems = []
    count = 0
    for t in TYPES:
        for lam in shapes_upto_ten(t):
            count += 1
            images = [phi(x) for T in admissible_shape(t, lam) for x in all_classes(T, Mode.CL)]
            if len(images) != len(set(images)) or set(images) != set(sdt_shape(t, lam)):
                problems.append(f"{t.value} {list(lam)}")
    report_criterion(5, not problems, f"closed classes onto SDT(shape) for {count} orbit shapes with <= 10 squares")
    assert not problems, problems


def _movable_cycles(max_n=4):
    for t in TYPES:
        for n in range(max_n + 1):
            for T in sdt(t, n):
                for c in ParityClass:
                    for cy in cycles(T, c):
                        yield t, T, c, cy


def test_criterion_6_moving_through_laws():
    problems = []
    checked = 0
    for t, T, c, cy in _movable_cycles():
        if blocked(T, cy):
            continue
        checked += 1
        why = cycle_law_violation(T, c, cy)
        if why:
            problems.append(f"{t.value} {render(T, sep=' / ')} {cy.describe()}: {why}")
    report_criterion(6, not problems, f"four laws on {checked} movable cycles, <= 4 dominos")
    assert not problems, problems[:3]


@pytest.mark.xfail(strict=True, reason="type B cycles through D(1) end on the zero square and cannot be moved")
def test_criterion_6_every_cycle_movable():
    stuck = [(t, T, cy) for t, T, c, cy in _movable_cycles() if blocked(T, cy)]
    report_criterion(6, not stuck, f"every cycle movable: {len(stuck)} type B cycles end on the zero square (known conflict)")
    assert not stuck


def test_criterion_7_order_independence():
    problems = []
    tried = 0
    for t in TYPES:
        for n in range(4):
            for x in enum_classes(t, "opcl", size=n):
                cs = x.structure
                cys = [cs.initial_cycle(cs.by_id(k)) for k, s in x.signs.items() if s > 0]
                if len(cys) < 2:
                    continue
                tried += 1
                results = {move_through_set(x.tableau, cys, order=p) for p in itertools.permutations(range(len(cys)))}
                if len(results) != 1:
                    problems.append(repr(x))
    report_criterion(7, not problems, f"all moving orders agree on {tried} classes, n <= 3")
    assert not problems, problems


def test_criterion_8_structure():
    problems = []
    total = 0
    for t in TYPES:
        for n in range(6):
            for T in enum_admissible(t, size=n):
                total += 1
                why = structural_violation(T)
                if why:
                    problems.append(f"{t.value} {render(T, sep=' / ')}: {why}")
    report_criterion(8, not problems, f"cluster structure on {total} admissible tableaux, <= 5 dominos")
    assert not problems, problems[:3]


def test_criterion_9_orbit_counts():
    problems = [why for t in TYPES for lam in shapes_upto_ten(t) if (why := orbit_count_violation(t, lam))]
    report_criterion(9, not problems, "A_u orbits = closed classes = SDT(shape), <= 10 squares")
    assert not problems, problems


def test_criterion_10_tau_on_orbits():
    problems = [why for t in TYPES for lam in shapes_upto_ten(t) if (why := tau_orbit_violation(t, lam))]
    report_criterion(10, not problems, "tau of phi constant on A_u orbits (type D from index 3)")
    assert not problems, problems


@pytest.mark.xfail(strict=True, reason="positive two-domino closed clusters change tau")
def test_criterion_10_tau_after_embed():
    differing = 0
    unexplained = []
    for t in TYPES:
        for lam in shapes_upto_ten(t):
            d, u = tau_embed_differences(t, lam)
            differing += d
            unexplained += u
    report_criterion(
        10, differing == 0,
        f"tau(phi(embed(x))) = tau(|x|): {differing} classes differ, {len(unexplained)} unexplained (known conflict)",
    )
    # anything beyond the documented two-domino pattern is a real failure
    assert not unexplained, unexplained[:3]
    assert differing == 0


def test_criterion_11_count_oracle():
    counts = {}
    for t in (GroupType.C, D):
        oracle = sum(standard_labelings(tiling, t) for lam in shapes_of_size(t, 2) for tiling in domino_tilings(lam, t))
        counts[t.value] = (oracle, len(enum_sdt(t, size=2)))
    ok = all(o == 6 and g == 6 for o, g in counts.values())
    report_criterion(11, ok, f"|SDT(2)| oracle vs generator: {counts}")
    assert ok
