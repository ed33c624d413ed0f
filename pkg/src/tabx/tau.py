"""The tau-invariant of a standard domino tableau.

Index ``i`` belongs to tau(T) when ``i == 1`` and D(1) is vertical, or when
``i > 1`` and D(i-1) lies higher than D(i). In type D the conditions for
indices 1 and 2 follow a convention that has not been checked against the
geometric definition; those indices are reported but marked.
"""

from __future__ import annotations

from dataclasses import dataclass

from tabx.shapes import GroupType
from tabx.tableau import DominoTableau


@dataclass(frozen=True)
class TauSet:
    indices: frozenset[int]
    n: int
    unverified: frozenset[int] = frozenset()

    def restricted(self, start: int) -> frozenset[int]:
        return frozenset(i for i in self.indices if i >= start)

    def verified(self) -> frozenset[int]:
        return self.indices - self.unverified

    def __contains__(self, i: object) -> bool:
        return i in self.indices

    def describe(self) -> str:
        parts = []
        for i in sorted(self.indices):
            parts.append(f"{i}*" if i in self.unverified else str(i))
        return " ".join(parts)


def first_checked_index(t: GroupType) -> int:
    """Smallest index whose rule is taken as settled for type ``t``."""
    return 3 if t is GroupType.D else 1


def tau(T: DominoTableau, t: GroupType | str | None = None) -> TauSet:
    if t is not None and GroupType.parse(t) is not T.type:
        raise ValueError(f"tableau has type {T.type.value}, expected {GroupType.parse(t).value}")
    n = T.n
    out = set()
    if n >= 1 and T.is_vertical(1):
        out.add(1)
    for i in range(2, n + 1):
        if T.lies_higher(i - 1, i):
            out.add(i)
    unverified = frozenset(i for i in (1, 2) if i <= n) if T.type is GroupType.D else frozenset()
    return TauSet(frozenset(out), n, unverified)
