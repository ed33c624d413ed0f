"""Exhaustive generators for standard Young and domino tableaux.

These are the brute-force oracles behind the verification suite. Output
order is deterministic: tableaux are sorted by shape, then by the
row-major reading of their occupancy grid.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from tabx.admissible import is_admissible
from tabx.shapes import GroupType, Partition, is_orbit_shape, make_partition, partitions
from tabx.tableau import DominoTableau, Square, cells_shape

# -- standard Young tableaux ---------------------------------------------


def enum_syt(shape: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Standard Young tableaux of ``shape`` as tuples of rows, lexicographically."""
    shape = make_partition(shape)
    n = sum(shape)
    found: list[tuple[tuple[int, ...], ...]] = []

    def grow(filled: list[int], rows: list[list[int]], label: int) -> None:
        if label > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i, length in enumerate(shape):
            if filled[i] < length and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                rows[i].append(label)
                grow(filled, rows, label + 1)
                rows[i].pop()
                filled[i] -= 1

    grow([0] * len(shape), [[] for _ in shape], 1)
    yield from sorted(found)


@lru_cache(maxsize=None)
def count_syt(shape: Partition) -> int:
    """Backtracking count over removable corners, independent of :func:`enum_syt`."""
    shape = make_partition(shape)
    if sum(shape) == 0:
        return 1
    total = 0
    for i, length in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if length > below:
            smaller = list(shape)
            smaller[i] -= 1
            total += count_syt(make_partition(smaller))
    return total


# -- standard domino tableaux --------------------------------------------


def _addable_dominos(cells: frozenset[Square]) -> list[tuple[Square, Square]]:
    """Dominos whose addition keeps ``cells`` a Young diagram."""
    rows = cells_shape(cells)
    out = []
    nrows = len(rows)
    for i in range(1, nrows + 2):
        length = rows[i - 1] if i <= nrows else 0
        above = rows[i - 2] if i >= 2 else None
        # horizontal in row i at columns length+1, length+2
        if above is None or above >= length + 2:
            out.append(((i, length + 1), (i, length + 2)))
        # vertical in column length+1, rows i and i+1
        below = rows[i] if i < nrows else 0
        if (above is None or above >= length + 1) and below == length:
            out.append(((i, length + 1), (i + 1, length + 1)))
    return out


def _grow(t: GroupType, n: int, target: Partition | None) -> Iterator[DominoTableau]:
    start: dict[int, tuple[Square, ...]] = {0: ((1, 1),)} if t.has_zero_square else {}
    target_cells = None
    if target is not None:
        target_cells = {(i, j) for i, length in enumerate(target, 1) for j in range(1, length + 1)}

    def rec(doms: dict[int, tuple[Square, ...]], cells: frozenset[Square], k: int):
        if k > n:
            yield DominoTableau(t, doms, check_standard=False)
            return
        for dom in _addable_dominos(cells):
            if target_cells is not None and not (dom[0] in target_cells and dom[1] in target_cells):
                continue
            doms[k] = dom
            yield from rec(doms, cells | set(dom), k + 1)
            del doms[k]

    yield from rec(dict(start), frozenset(start.get(0, ())), 1)


def _sorted(tabs: Iterable[DominoTableau]) -> list[DominoTableau]:
    return sorted(tabs, key=DominoTableau.sort_key)


def _resolve(t: GroupType, shape: Sequence[int] | None, size: int | None) -> tuple[int, Partition | None]:
    if (shape is None) == (size is None):
        raise ValueError("give exactly one of shape and size")
    if shape is not None:
        shape = make_partition(shape)
        n = t.domino_count(sum(shape))
        if n is None:
            raise ValueError(f"shape {list(shape)} has the wrong size parity for type {t.value}")
        return n, shape
    if size < 0:
        raise ValueError("size must be non-negative")
    return size, None


def enum_sdt(t: GroupType, *, shape: Sequence[int] | None = None, size: int | None = None) -> list[DominoTableau]:
    """All standard domino tableaux of the given shape, or with ``size`` dominos."""
    n, lam = _resolve(t, shape, size)
    return _sorted(_grow(t, n, lam))


def count_sdt(t: GroupType, *, shape: Sequence[int] | None = None, size: int | None = None) -> int:
    return len(enum_sdt(t, shape=shape, size=size))


def enum_admissible(t: GroupType, *, shape: Sequence[int] | None = None, size: int | None = None) -> list[DominoTableau]:
    """Admissible tableaux, filtered out of :func:`enum_sdt`."""
    return [T for T in enum_sdt(t, shape=shape, size=size) if is_admissible(T)]


def enum_admissible_chains(t: GroupType, *, shape: Sequence[int] | None = None, size: int | None = None) -> list[DominoTableau]:
    """Admissible tableaux grown directly, pruning at every non-orbit prefix shape."""
    n, lam = _resolve(t, shape, size)
    start: dict[int, tuple[Square, ...]] = {0: ((1, 1),)} if t.has_zero_square else {}
    target_cells = None
    if lam is not None:
        target_cells = {(i, j) for i, length in enumerate(lam, 1) for j in range(1, length + 1)}
    out: list[DominoTableau] = []

    def rec(doms, cells, k):
        if k > n:
            out.append(DominoTableau(t, doms, check_standard=False))
            return
        for dom in _addable_dominos(cells):
            if target_cells is not None and not set(dom) <= target_cells:
                continue
            new = cells | set(dom)
            if not is_orbit_shape(cells_shape(new), t):
                continue
            doms[k] = dom
            rec(doms, new, k + 1)
            del doms[k]

    rec(dict(start), frozenset(start.get(0, ())), 1)
    return _sorted(out)


def enum_classes(
    t: GroupType,
    mode="opcl",
    *,
    shape: Sequence[int] | None = None,
    size: int | None = None,
) -> list:
    """Every signed class on every admissible tableau, in tableau order."""
    from tabx.signed import all_classes

    return [x for T in enum_admissible(t, shape=shape, size=size) for x in all_classes(T, mode)]


def shapes_of_size(t: GroupType, n: int) -> list[Partition]:
    """All partitions of the square count for ``n`` dominos."""
    return list(partitions(t.square_count(n)))


def domino_tilings(shape: Sequence[int], t: GroupType) -> list[frozenset[frozenset[Square]]]:
    """Every tiling of ``shape`` by dominos (zero square reserved in type B).

    Used as an oracle independent of the growth generator: combined with
    :func:`standard_labelings` it recounts SDT.
    """
    cells = {(i, j) for i, length in enumerate(shape, 1) for j in range(1, length + 1)}
    if t.has_zero_square:
        cells.discard((1, 1))
    out: list[frozenset[frozenset[Square]]] = []

    def rec(free: set[Square], acc: list[frozenset[Square]]):
        if not free:
            out.append(frozenset(acc))
            return
        s = min(free)
        for other in ((s[0], s[1] + 1), (s[0] + 1, s[1])):
            if other in free:
                free -= {s, other}
                acc.append(frozenset((s, other)))
                rec(free, acc)
                acc.pop()
                free |= {s, other}

    rec(cells, [])
    return out


def standard_labelings(tiling: Iterable[frozenset[Square]], t: GroupType) -> int:
    """Number of labelings of a tiling in which every label prefix is a Young diagram."""
    doms = list(tiling)
    count = 0
    for perm in itertools.permutations(range(len(doms))):
        cells = {(1, 1)} if t.has_zero_square else set()
        ok = True
        for idx in perm:
            cells |= doms[idx]
            if not all((i == 1 or (i - 1, j) in cells) and (j == 1 or (i, j - 1) in cells) for i, j in cells):
                ok = False
                break
        count += ok
    return count
