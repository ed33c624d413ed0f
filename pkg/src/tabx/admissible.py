"""Admissibility of domino tableaux and the I+/I-/N classification of dominos."""

from __future__ import annotations

import enum
from typing import NamedTuple

from tabx.shapes import GroupType, is_orbit_shape
from tabx.tableau import DominoTableau


class DominoKind(enum.Enum):
    I_PLUS = "I+"
    I_MINUS = "I-"
    N = "N"
    INADMISSIBLE_HORIZONTAL = "inadmissible"


class Admissibility(NamedTuple):
    ok: bool
    failing_index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_type(T: DominoTableau, t: GroupType) -> None:
    if T.type is not t:
        raise ValueError(f"tableau has type {T.type.value}, expected {t.value}")


def is_admissible(T: DominoTableau, t: GroupType | None = None) -> Admissibility:
    """Every prefix shape must be an orbit shape; reports the first failing prefix.

    Prefixes are checked from index 0 in type B (the zero square alone) and
    from index 1 in types C and D.
    """
    t = T.type if t is None else t
    _check_type(T, t)
    shapes = T.prefix_shapes()
    start = 0 if t.has_zero_square else 1
    for i in range(start, len(shapes)):
        if not is_orbit_shape(shapes[i], t):
            return Admissibility(False, i)
    return Admissibility(True)


def kind_at(t: GroupType, squares: tuple[tuple[int, int], ...]) -> DominoKind:
    """Kind of a domino occupying ``squares``, read off its column parity."""
    (i1, j1), (i2, j2) = squares
    eps = t.epsilon
    if j1 == j2:
        return DominoKind.I_PLUS if (-1) ** j1 == -eps else DominoKind.I_MINUS
    left = min(j1, j2)
    return DominoKind.N if (-1) ** left == eps else DominoKind.INADMISSIBLE_HORIZONTAL


def domino_kind(T: DominoTableau, k: int, t: GroupType | None = None) -> DominoKind:
    t = T.type if t is None else t
    if k == 0:
        raise ValueError("the zero domino has no kind")
    return kind_at(t, T.domino(k))


def kinds(T: DominoTableau) -> dict[int, DominoKind]:
    return {k: kind_at(T.type, T.domino(k)) for k in T.labels}


def inadmissible_dominos(T: DominoTableau) -> list[int]:
    return [k for k, kind in kinds(T).items() if kind is DominoKind.INADMISSIBLE_HORIZONTAL]
