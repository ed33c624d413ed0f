"""Fixed and variable squares, moving through dominos and cycles.

Each domino has one square of each checkerboard parity. For a parity class
the square of the class parity is *fixed*; moving a domino through keeps
its fixed square and swings the variable square to the opposite side of
it. A cycle is a set of dominos closed under "my new square is your old
one"; a closed cycle keeps the shape, an open one trades a vacated square
for an acquired one.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from tabx.tableau import DominoTableau, InvariantError, Square


class ParityClass(enum.Enum):
    BC = "BC"  # fixed squares have i + j odd
    DD = "DD"  # fixed squares have i + j even

    @property
    def fixed_parity(self) -> int:
        return 1 if self is ParityClass.BC else 0

    @classmethod
    def of_square(cls, square: Square) -> ParityClass:
        """Class in which ``square`` is fixed."""
        return cls.BC if sum(square) % 2 else cls.DD

    @classmethod
    def parse(cls, text: str | ParityClass) -> ParityClass:
        if isinstance(text, ParityClass):
            return text
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown parity class {text!r}; expected BC or DD") from None


class CycleError(ValueError):
    """A cycle cannot be moved through in the given tableau."""


@dataclass(frozen=True)
class Cycle:
    parity: ParityClass
    labels: tuple[int, ...]
    closed: bool
    vacated: Square | None = None
    acquired: Square | None = None

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.labels)

    @property
    def initial(self) -> int:
        return min(self.labels)

    def __contains__(self, k: object) -> bool:
        return k in self.labels

    def __len__(self) -> int:
        return len(self.labels)

    def describe(self) -> str:
        kind = "closed" if self.closed else "open"
        body = ",".join(str(k) for k in self.labels)
        return f"class={self.parity.value} {kind} labels={{{body}}}"


def fixed_square(T: DominoTableau, k: int, c: ParityClass) -> Square:
    if k == 0:
        raise ValueError("the zero square is not a domino")
    for s in T.domino(k):
        if sum(s) % 2 == c.fixed_parity:
            return s
    raise InvariantError(f"domino {k} has no square of parity {c.fixed_parity}")


def variable_square(T: DominoTableau, k: int, c: ParityClass) -> Square:
    f = fixed_square(T, k, c)
    (v,) = [s for s in T.domino(k) if s != f]
    return v


def mt_position(T: DominoTableau, k: int, c: ParityClass) -> tuple[Square, Square]:
    """Position of D(k) after moving it through, as ``(fixed, new_variable)``."""
    f = fixed_square(T, k, c)
    v = variable_square(T, k, c)
    i, j = f
    if v == (i + 1, j) or v == (i, j - 1):
        # variable below or left: go right when the up-right label is smaller
        new = (i, j + 1) if T.boundary_label((i - 1, j + 1)) < k else (i - 1, j)
    else:
        # variable above or right: go left when the down-left label is larger
        new = (i, j - 1) if T.boundary_label((i + 1, j - 1)) > k else (i + 1, j)
    return f, new


def _moves(T: DominoTableau, c: ParityClass) -> dict[int, tuple[Square, Square]]:
    """For every domino: (old variable square, new variable square)."""
    out = {}
    for k in T.labels:
        _, new = mt_position(T, k, c)
        out[k] = (variable_square(T, k, c), new)
    return out


def cycle(T: DominoTableau, k: int, c: ParityClass) -> Cycle:
    """The ``c``-cycle of ``T`` through label ``k``."""
    if k == 0 or k not in T.dominos:
        raise KeyError(f"no domino labelled {k}")
    return _cycle_from_moves(T, k, c, _moves(T, c))


def _cycle_from_moves(T: DominoTableau, k: int, c: ParityClass, moves) -> Cycle:
    landing: dict[Square, int] = {}
    for label, (_, new) in moves.items():
        landing[new] = label

    def succ(x: int) -> int | None:
        lab = T.label_at(moves[x][1])
        return lab if lab else None  # the zero square never joins a cycle

    def pred(x: int) -> int | None:
        return landing.get(moves[x][0])

    members = {k}
    stack = [k]
    while stack:
        x = stack.pop()
        for y in (succ(x), pred(x)):
            if y is not None and y not in members:
                members.add(y)
                stack.append(y)

    heads = [x for x in members if pred(x) is None]
    if not heads:
        start = min(members)
    elif len(heads) == 1:
        start = heads[0]
    else:
        raise InvariantError(f"{c.value}-cycle through {k} has several open ends")
    order = [start]
    seen = {start}
    x = succ(start)
    while x is not None and x not in seen:
        order.append(x)
        seen.add(x)
        x = succ(x)
    if len(order) != len(members):
        raise InvariantError(f"{c.value}-cycle through {k} is not a single chain")
    if heads:
        tail = order[-1]
        return Cycle(c, tuple(order), False, vacated=moves[start][0], acquired=moves[tail][1])
    return Cycle(c, tuple(order), True)


def cycles(T: DominoTableau, c: ParityClass) -> list[Cycle]:
    """All ``c``-cycles of ``T``, ordered by their smallest label."""
    moves = _moves(T, c)
    out: list[Cycle] = []
    seen: set[int] = set()
    for k in T.labels:
        if k in seen:
            continue
        cy = _cycle_from_moves(T, k, c, moves)
        seen |= cy.members
        out.append(cy)
    return out


def _relocate(T: DominoTableau, cy: Cycle, *, check_standard: bool) -> DominoTableau:
    changes = {k: mt_position(T, k, cy.parity) for k in cy.labels}
    return T.with_dominos(changes, check_standard=check_standard)


def blocked(T: DominoTableau, cy: Cycle) -> bool:
    """Whether ``cy`` would push a domino onto the zero square."""
    return T.type.has_zero_square and cy.acquired == (1, 1)


def move_through_cycle(T: DominoTableau, cy: Cycle, *, check_standard: bool = True) -> DominoTableau:
    """Move every domino of ``cy`` through.

    With ``check_standard`` a non-standard image raises :class:`CycleError`;
    without it the image only has to be a valid tiling. Cycles through D(1)
    in the class where the origin corner is variable give such images.
    """
    current = cycle(T, cy.labels[0], cy.parity)
    if current.members != cy.members:
        raise CycleError(f"{cy.describe()} is not a cycle of this tableau")
    if blocked(T, current):
        raise CycleError(f"{cy.describe()} ends on the zero square")
    try:
        return _relocate(T, current, check_standard=check_standard)
    except ValueError as exc:
        raise CycleError(f"moving through {cy.describe()} does not give a standard tableau: {exc}") from None


def move_through(T: DominoTableau, k: int, c: ParityClass) -> DominoTableau:
    """Image of ``T`` under moving through the ``c``-cycle containing ``k``."""
    return move_through_cycle(T, cycle(T, k, c))


def move_through_set(
    T: DominoTableau,
    cycle_set: Iterable[Cycle],
    *,
    order: Sequence[int] | None = None,
) -> DominoTableau:
    """Move through pairwise disjoint cycles one after another.

    Cycles are applied in increasing order of their smallest label unless
    ``order`` (a permutation of indices into the sorted cycles) is given.
    Each cycle must still be a cycle of the intermediate tableau; this holds
    for initial cycles of signed clusters but not for arbitrary cycle sets.
    """
    cys = sorted(cycle_set, key=lambda cy: cy.initial)
    for a, b in itertools.combinations(cys, 2):
        if a.members & b.members:
            raise CycleError(f"cycles {a.describe()} and {b.describe()} overlap")
    if order is not None:
        cys = [cys[i] for i in order]
    for cy in cys:
        current = cycle(T, cy.initial, cy.parity)
        if current.members != cy.members:
            raise CycleError(f"{cy.describe()} stopped being a cycle partway through the sequence")
        T = move_through_cycle(T, current)
    return T
