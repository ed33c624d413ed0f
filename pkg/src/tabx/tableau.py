"""Standard domino tableaux.

Squares are ``(row, column)`` pairs, 1-based, with ``(1, 1)`` the upper left
corner. A tableau maps labels to dominos; in type B the label 0 is the
single zero square at ``(1, 1)``.

Text format: an optional ``type: B|C|D`` header, then one line per row with
labels separated by single spaces, top row first. ``key: value`` lines such
as ``mode:`` and ``signs:`` belong to signed files and are skipped here. A
single line may also use ``/`` to separate rows (``"1 2 / 1 2"``).
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterable, Iterator, Mapping

from tabx.shapes import GroupType, Partition

Square = tuple[int, int]
INF = math.inf


class ParseError(ValueError):
    """Malformed tableau text."""


class ValidationError(ValueError):
    """Well-formed text that does not describe a valid tableau."""


class InvariantError(RuntimeError):
    """An internal invariant failed; indicates a bug or corrupted input."""


def _adjacent(a: Square, b: Square) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def is_young_diagram(cells: Iterable[Square]) -> bool:
    cells = set(cells)
    for i, j in cells:
        if i > 1 and (i - 1, j) not in cells:
            return False
        if j > 1 and (i, j - 1) not in cells:
            return False
    return True


def cells_shape(cells: Iterable[Square]) -> Partition:
    counts: dict[int, int] = defaultdict(int)
    for i, _ in cells:
        counts[i] += 1
    return tuple(counts[i] for i in sorted(counts))


class DominoTableau:
    """An immutable labelled tiling. Equality compares type and occupancy."""

    __slots__ = ("type", "_dominos", "_grid", "_hash")

    def __init__(
        self,
        t: GroupType,
        dominos: Mapping[int, Iterable[Square]],
        *,
        check_standard: bool = True,
    ) -> None:
        self.type = t
        doms: dict[int, tuple[Square, ...]] = {}
        grid: dict[Square, int] = {}
        for label, squares in dominos.items():
            sq = tuple(sorted(squares))
            doms[label] = sq
            for s in sq:
                if s[0] < 1 or s[1] < 1:
                    raise ValidationError(f"label {label} has non-positive coordinates {s}")
                if s in grid:
                    raise ValidationError(f"labels {grid[s]} and {label} overlap at {s}")
                grid[s] = label
        self._dominos = dict(sorted(doms.items()))
        self._grid = grid
        self._hash: int | None = None
        self._validate_structure()
        if check_standard and not self.is_standard():
            raise ValidationError("tableau is not standard")

    def _validate_structure(self) -> None:
        labels = list(self._dominos)
        zero = self._dominos.get(0)
        if self.type.has_zero_square:
            if zero != ((1, 1),):
                raise ValidationError("type B tableaux need the zero square at (1, 1) and nowhere else")
        elif zero is not None:
            raise ValidationError(f"type {self.type.value} tableaux have no zero square")
        nonzero = [k for k in labels if k != 0]
        if nonzero != list(range(1, len(nonzero) + 1)):
            raise ValidationError(f"labels must be 1..n without gaps, got {nonzero}")
        for k in nonzero:
            sq = self._dominos[k]
            if len(sq) != 2:
                raise ValidationError(f"label {k} occupies {len(sq)} squares, expected 2")
            if not _adjacent(*sq):
                raise ValidationError(f"label {k} squares {sq} are not edge-adjacent")

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        """Number of dominos, not counting the zero square."""
        return len(self._dominos) - (1 if 0 in self._dominos else 0)

    @property
    def labels(self) -> list[int]:
        """Domino labels 1..n."""
        return [k for k in self._dominos if k != 0]

    @property
    def dominos(self) -> Mapping[int, tuple[Square, ...]]:
        return self._dominos

    @property
    def grid(self) -> Mapping[Square, int]:
        return self._grid

    def domino(self, k: int) -> tuple[Square, ...]:
        try:
            return self._dominos[k]
        except KeyError:
            raise KeyError(f"no domino labelled {k}") from None

    def label_at(self, square: Square) -> int | None:
        return self._grid.get(square)

    def boundary_label(self, square: Square) -> float:
        """Label used by the moving-through comparisons.

        Row or column 0 reads as 0, an unoccupied square with positive
        coordinates reads as +inf.
        """
        i, j = square
        if i <= 0 or j <= 0:
            return 0
        label = self._grid.get(square)
        return INF if label is None else label

    def is_vertical(self, k: int) -> bool:
        a, b = self.domino(k)
        return a[1] == b[1] and a[0] != b[0]

    def is_horizontal(self, k: int) -> bool:
        a, b = self.domino(k)
        return a[0] == b[0] and a[1] != b[1]

    # -- shape and prefixes ----------------------------------------------

    def shape(self) -> Partition:
        return cells_shape(self._grid)

    def prefix(self, i: int) -> DominoTableau:
        """Sub-tableau of the labels ``<= i`` (zero square kept in type B)."""
        if not 0 <= i <= self.n:
            raise IndexError(f"prefix index {i} outside 0..{self.n}")
        return DominoTableau(
            self.type,
            {k: sq for k, sq in self._dominos.items() if k <= i},
            check_standard=False,
        )

    def prefix_shapes(self) -> list[Partition]:
        """``[shape(prefix(0)), ..., shape(prefix(n))]`` without building tableaux."""
        cells = list(self._dominos.get(0, ()))
        shapes = [cells_shape(cells)]
        for k in self.labels:
            cells.extend(self._dominos[k])
            shapes.append(cells_shape(cells))
        return shapes

    def is_standard(self) -> bool:
        cells: set[Square] = set(self._dominos.get(0, ()))
        for k in self.labels:
            cells.update(self._dominos[k])
            if not is_young_diagram(cells):
                return False
        return True

    def lies_higher(self, k: int, l: int) -> bool:
        """True iff every row of D(k) is strictly above every row of D(l)."""
        rows_k = [s[0] for s in self.domino(k)]
        rows_l = [s[0] for s in self.domino(l)]
        return max(rows_k) < min(rows_l)

    # -- value semantics -------------------------------------------------

    def rows(self) -> list[list[int]]:
        out: dict[int, dict[int, int]] = defaultdict(dict)
        for (i, j), k in self._grid.items():
            out[i][j] = k
        return [[out[i][j] for j in sorted(out[i])] for i in sorted(out)]

    def with_dominos(self, changes: Mapping[int, Iterable[Square]], *, check_standard: bool = True) -> DominoTableau:
        doms = dict(self._dominos)
        doms.update({k: tuple(v) for k, v in changes.items()})
        return DominoTableau(self.type, doms, check_standard=check_standard)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DominoTableau):
            return NotImplemented
        return self.type is other.type and self._grid == other._grid

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.type, frozenset(self._grid.items())))
        return self._hash

    def sort_key(self) -> tuple:
        """Row-major reading of the occupancy grid; used for deterministic ordering."""
        return (self.shape(), tuple(tuple(r) for r in self.rows()))

    def __repr__(self) -> str:
        return f"DominoTableau({self.type.value}, {render(self, sep=' / ')!r})"

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)


def empty_tableau(t: GroupType) -> DominoTableau:
    return DominoTableau(t, {0: [(1, 1)]} if t.has_zero_square else {})


def render(T: DominoTableau, *, sep: str = "\n", header: bool = False) -> str:
    """Text form of ``T``; ``parse_tableau(render(T), T.type) == T``."""
    body = sep.join(" ".join(str(k) for k in row) for row in T.rows())
    if header:
        return f"type: {T.type.value}\n{body}" if body else f"type: {T.type.value}"
    return body


def split_document(text: str) -> tuple[dict[str, str], list[list[str]]]:
    """Separate ``key: value`` header lines from the label rows."""
    headers: dict[str, str] = {}
    rows: list[list[str]] = []
    lines = text.splitlines()
    if len(lines) == 1 and "/" in lines[0] and ":" not in lines[0]:
        lines = lines[0].split("/")
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            key = key.strip().lower()
            if key in headers:
                raise ParseError(f"duplicate header {key!r}")
            headers[key] = value.strip()
            continue
        if "/" in line:
            pieces = line.split("/")
        else:
            pieces = [line]
        for piece in pieces:
            tokens = piece.split()
            if not tokens:
                raise ParseError(f"empty row in {raw!r}")
            rows.append(tokens)
    return headers, rows


def parse_tableau(text: str, t: GroupType | str | None = None) -> DominoTableau:
    """Parse the text format; ``t`` may be omitted when a ``type:`` header is present."""
    headers, rows = split_document(text)
    header_type = headers.get("type")
    if header_type is not None:
        try:
            ht = GroupType.parse(header_type)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        if t is not None and GroupType.parse(t) is not ht:
            raise ValidationError(f"header says type {ht.value}, caller asked for {GroupType.parse(t).value}")
        t = ht
    if t is None:
        raise ParseError("no group type given and no 'type:' header")
    t = GroupType.parse(t)
    cells: dict[int, list[Square]] = defaultdict(list)
    for i, tokens in enumerate(rows, start=1):
        for j, tok in enumerate(tokens, start=1):
            try:
                k = int(tok)
            except ValueError:
                raise ParseError(f"row {i}: {tok!r} is not an integer label") from None
            if k < 0:
                raise ParseError(f"row {i}: negative label {k}")
            cells[k].append((i, j))
    return DominoTableau(t, cells)
