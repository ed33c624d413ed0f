"""The maps between signed classes and standard domino tableaux.

``phi`` moves through the initial cycles of the positively signed clusters
of a class. ``psi`` undoes it: the inadmissible dominos of a standard
tableau are exactly the images of moved initial dominos, so moving back
through their cycles restores an admissible tableau and its signs.
"""

from __future__ import annotations

import itertools

from tabx.admissible import DominoKind, is_admissible, kinds
from tabx.clusters import ClusterStructure
from tabx.cycles import Cycle, ParityClass, cycle, move_through_set
from tabx.shapes import GroupType
from tabx.signed import Mode, SignedClass, embed, forget_open
from tabx.tableau import DominoTableau


MAX_ORDER_CHECK = 3


class UncoveredInadmissible(ValueError):
    """The tableau is not in the image of ``phi``."""


class AdmissibilityFailure(ValueError):
    """Moving back through the distinguished cycles did not give an admissible tableau."""


def sigma(x: SignedClass) -> list[Cycle]:
    """Initial cycles of the positively signed clusters, by increasing initial label."""
    if x.mode is Mode.CL:
        x = embed(x)
    cs = x.structure
    return [cs.initial_cycle(c) for c in sorted(x.positive_clusters, key=lambda c: c.id)]


def phi(x: SignedClass, *, check_order: bool = False) -> DominoTableau:
    """Move through ``sigma(x)``.

    With ``check_order`` every ordering is tried and compared, as long as
    there are at most ``MAX_ORDER_CHECK`` cycles.
    """
    cys = sigma(x)
    out = move_through_set(x.tableau, cys)
    if check_order and 1 < len(cys) <= MAX_ORDER_CHECK:
        for perm in itertools.permutations(range(len(cys))):
            other = move_through_set(x.tableau, cys, order=perm)
            if other != out:
                raise AssertionError(f"moving order {perm} changes the image of {x!r}")
    return out


def _check_type(T: DominoTableau, t) -> None:
    if t is not None and GroupType.parse(t) is not T.type:
        raise ValueError(f"tableau has type {T.type.value}, expected {GroupType.parse(t).value}")


def iota(T: DominoTableau, t=None) -> list[Cycle]:
    """Cycles of ``T`` that carry its inadmissible dominos.

    The smallest inadmissible domino not yet covered starts the next cycle;
    its left square is fixed, which picks the parity class.
    """
    _check_type(T, t)
    inadmissible = sorted(k for k, v in kinds(T).items() if v is DominoKind.INADMISSIBLE_HORIZONTAL)
    covered: set[int] = set()
    out: list[Cycle] = []
    for k in inadmissible:
        if k in covered:
            continue
        c = ParityClass.of_square(min(T.domino(k)))
        cy = cycle(T, k, c)
        if cy.initial != k:
            raise UncoveredInadmissible(f"inadmissible domino {k} is not the smallest label of its {c.value}-cycle")
        out.append(cy)
        covered |= cy.members
    return out


def psi(T: DominoTableau, t=None, mode: Mode | str = Mode.OPCL) -> SignedClass:
    _check_type(T, t)
    mode = Mode.parse(mode)
    cys = iota(T)
    base = move_through_set(T, cys)
    adm = is_admissible(base)
    if not adm:
        raise AdmissibilityFailure(f"restored tableau fails admissibility at prefix {adm.failing_index}")
    cs = ClusterStructure(base)
    signs = {c.id: -1 for c in cs.signable}
    for cy in cys:
        if cy.initial not in signs:
            raise AdmissibilityFailure(f"domino {cy.initial} does not start an open or closed cluster")
        cluster = cs.by_id(cy.initial)
        restored = cs.initial_cycle(cluster)
        if restored.members != cy.members or restored.parity is not cy.parity:
            raise AdmissibilityFailure(f"cycle through {cy.initial} is not the initial cycle of its cluster")
        signs[cluster.id] = 1
    x = SignedClass(base, Mode.OPCL, signs)
    return forget_open(x) if mode is Mode.CL else x
