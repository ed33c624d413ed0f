"""Partitions and the classification of nilpotent orbit shapes.

A partition is kept as a plain tuple of positive integers in weakly
decreasing order, without trailing zeros. Orbits of the isometry group of
an epsilon-symmetric form are indexed by the partitions in which every part
value ``i`` with ``(-1)**i == epsilon`` has even multiplicity.

Type D very even partitions split into two orbits of the adjoint group; that
doubling is not modelled here.
"""

from __future__ import annotations

import enum
from collections import Counter
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


class GroupType(enum.Enum):
    B = "B"
    C = "C"
    D = "D"

    @property
    def epsilon(self) -> int:
        return -1 if self is GroupType.C else 1

    @property
    def has_zero_square(self) -> bool:
        return self is GroupType.B

    def square_count(self, n: int) -> int:
        """Number of squares covered by a tableau with ``n`` dominos."""
        return 2 * n + 1 if self.has_zero_square else 2 * n

    def domino_count(self, squares: int) -> int | None:
        """Inverse of :meth:`square_count`, or None on a parity mismatch."""
        extra = 1 if self.has_zero_square else 0
        if squares < extra or (squares - extra) % 2:
            return None
        return (squares - extra) // 2

    @classmethod
    def parse(cls, text: str | GroupType) -> GroupType:
        if isinstance(text, GroupType):
            return text
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown group type {text!r}; expected B, C or D") from None


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple (trailing zeros dropped)."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ValueError(f"partition {parts} is not weakly decreasing")
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition {parts} has non-positive parts")
    return tuple(parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"6,4"`` style input. An empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",") if p != ""]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return make_partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def is_orbit_shape(lam: Sequence[int], t: GroupType) -> bool:
    """True iff ``lam`` indexes a nilpotent orbit of type ``t``.

    Size mismatches (even size in type B, odd size in C or D) give False.
    """
    size = sum(lam)
    if (size % 2 == 1) != t.has_zero_square:
        return False
    eps = t.epsilon
    counts = Counter(lam)
    return all(mult % 2 == 0 for part, mult in counts.items() if (-1) ** part == eps)


def b_lambda(lam: Sequence[int], t: GroupType) -> frozenset[int]:
    """Distinct parts ``r`` with ``(-1)**r == -epsilon``; one Z/2 factor each."""
    eps = t.epsilon
    return frozenset(r for r in lam if (-1) ** r == -eps)


def partitions(m: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``m`` in reverse lexicographic order."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def orbit_shapes(m: int, t: GroupType) -> list[Partition]:
    return [lam for lam in partitions(m) if is_orbit_shape(lam, t)]


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))
