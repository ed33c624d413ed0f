"""Clusters of an admissible domino tableau.

Squares of different dominos are linked when

* they are horizontal neighbours, unless the left one belongs to an I-
  domino and the right one to an I+ domino;
* they are vertical neighbours ``(a, b)`` over ``(a + 1, b)`` in a column
  whose verticals are I+, and the label at ``(a, b + 1)`` exceeds the label
  at ``(a + 1, b)`` (a missing square reads as +inf). Columns whose
  verticals are I- carry no vertical links.

Column 0 acts as a virtual strip belonging to ``cl(0)`` whose kind follows
the same column parity rule, so in type C every column 1 domino lands in
``cl(0)``; in types B and D the strip never links. Clusters are the
connected components. In types B and C the cluster of D(1) is ``cl(0)``;
it holds the zero square and never carries a sign. A cluster is
identified by its smallest label.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from tabx.admissible import DominoKind, is_admissible, kinds
from tabx.cycles import Cycle, ParityClass, cycle
from tabx.shapes import GroupType
from tabx.tableau import DominoTableau, InvariantError, Square


class ClusterKind(enum.Enum):
    CL0 = "cl0"
    OPEN = "open"
    CLOSED = "closed"


class NotAdmissibleError(ValueError):
    pass


@dataclass(frozen=True)
class Cluster:
    labels: frozenset[int]
    kind: ClusterKind
    parity: ParityClass

    @property
    def id(self) -> int:
        return min(self.labels)

    @property
    def signed(self) -> bool:
        return self.kind is not ClusterKind.CL0

    def describe(self) -> str:
        body = ",".join(str(k) for k in sorted(self.labels))
        return f"id={self.id} kind={self.kind.value} class={self.parity.value} labels={{{body}}}"


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _column_is_plus(t: GroupType, j: int) -> bool:
    return (-1) ** j == -t.epsilon


def _linked(T: DominoTableau, kind: dict[int, DominoKind], a: Square, b: Square) -> bool:
    """Link rule for two edge-adjacent squares of different dominos."""
    ka, kb = T.label_at(a), T.label_at(b)
    if a[0] == b[0]:
        left, right = (ka, kb) if a[1] < b[1] else (kb, ka)
        if left == 0:
            return True
        return not (kind[left] is DominoKind.I_MINUS and kind[right] is DominoKind.I_PLUS)
    upper, lower = (a, b) if a[0] < b[0] else (b, a)
    if not _column_is_plus(T.type, upper[1]):
        return False
    return T.boundary_label((upper[0], upper[1] + 1)) > T.label_at(lower)


def _linked_to_edge(T: DominoTableau, kind: dict[int, DominoKind], square: Square) -> bool:
    """Whether a column 1 square links to the virtual column 0 strip."""
    k = T.label_at(square)
    if k == 0:
        return True
    edge_is_minus = not _column_is_plus(T.type, 0)
    return not (edge_is_minus and kind[k] is DominoKind.I_PLUS)


class ClusterStructure:
    """All clusters of an admissible tableau, with the derived geometry."""

    def __init__(self, T: DominoTableau) -> None:
        adm = is_admissible(T)
        if not adm:
            raise NotAdmissibleError(f"tableau is not admissible (prefix {adm.failing_index} fails)")
        self.tableau = T
        self.kinds = kinds(T)
        self.clusters = self._build()
        self._by_label = {k: c for c in self.clusters for k in c.labels}

    def _build(self) -> list[Cluster]:
        T = self.tableau
        t = T.type
        edge = -1
        dsu = _DSU([*T.dominos, edge])
        for (i, j), k in T.grid.items():
            if j == 1 and t is not GroupType.D and _linked_to_edge(T, self.kinds, (i, j)):
                dsu.union(k, edge)
            for nb in ((i, j + 1), (i + 1, j)):
                l = T.label_at(nb)
                if l is None or l == k:
                    continue
                if _linked(T, self.kinds, (i, j), nb):
                    dsu.union(k, l)
        groups: dict[int, set[int]] = {}
        for k in [*T.dominos, edge]:
            groups.setdefault(dsu.find(k), set()).add(k)
        raw: list[frozenset[int]] = []
        zero_group: frozenset[int] | None = None
        for g in groups.values():
            labels = frozenset(g - {0, edge})
            if not labels:
                continue
            raw.append(labels)
            if t is not GroupType.D and (1 in labels or 0 in g or edge in g):
                if zero_group is not None:
                    raise InvariantError("cl(0) split into several components")
                zero_group = labels
        out = []
        for labels in sorted(raw, key=min):
            parity = ParityClass.of_square(min(T.domino(min(labels))))
            if labels == zero_group:
                kind = ClusterKind.CL0
            else:
                kind = ClusterKind.OPEN if self._touches_right(labels, raw) else ClusterKind.CLOSED
            out.append(Cluster(labels, kind, parity))
        return out

    def _touches_right(self, labels: frozenset[int], raw) -> bool:
        T = self.tableau
        closure = set(labels)
        for other in raw:
            if other != labels and _nested(T, other, labels):
                closure |= other
        for k in labels:
            if self.kinds[k] not in (DominoKind.I_PLUS, DominoKind.N):
                continue
            for i, j in T.domino(k):
                right = T.label_at((i, j + 1))
                if right is None or right not in closure:
                    return True
        return False

    def cluster_of(self, k: int) -> Cluster:
        return self._by_label[k]

    def by_id(self, ident: int) -> Cluster:
        c = self._by_label.get(ident)
        if c is None or c.id != ident:
            raise KeyError(f"no cluster with id {ident}")
        return c

    @property
    def open(self) -> list[Cluster]:
        return [c for c in self.clusters if c.kind is ClusterKind.OPEN]

    @property
    def closed(self) -> list[Cluster]:
        return [c for c in self.clusters if c.kind is ClusterKind.CLOSED]

    @property
    def signable(self) -> list[Cluster]:
        return [c for c in self.clusters if c.kind is not ClusterKind.CL0]

    @cached_property
    def cl0(self) -> Cluster | None:
        for c in self.clusters:
            if c.kind is ClusterKind.CL0:
                return c
        return None

    def nested_in(self, inner: Cluster, outer: Cluster) -> bool:
        return _nested(self.tableau, inner.labels, outer.labels)

    def closure_bar(self, c: Cluster) -> frozenset[int]:
        out = set(c.labels)
        for other in self.clusters:
            if other is not c and self.nested_in(other, c):
                out |= other.labels
        return frozenset(out)

    def periphery(self, c: Cluster) -> frozenset[int]:
        T = self.tableau
        bar = self.closure_bar(c)
        out = set()
        for k in bar:
            for i, j in T.domino(k):
                for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                    l = T.label_at(nb)
                    if l is None or l not in bar:
                        out.add(k)
        return frozenset(out)

    def initial_cycle(self, c: Cluster) -> Cycle:
        if c.kind is ClusterKind.CL0:
            raise ValueError("cl(0) has no initial cycle")
        return cycle(self.tableau, c.id, c.parity)

    def b_T(self, r: int) -> Cluster | None:
        """Cluster holding a domino that ends a row of length ``r``."""
        T = self.tableau
        for a, length in enumerate(T.shape(), start=1):
            if length == r:
                k = T.label_at((a, length))
                if k == 0:
                    return self.cl0
                return self.cluster_of(k)
        return None


def _extent(T: DominoTableau, labels) -> tuple[int, int, int, int]:
    squares = [s for k in labels for s in T.domino(k)]
    rows = [s[0] for s in squares]
    cols = [s[1] for s in squares]
    return min(rows), max(rows), min(cols), max(cols)


def _nested(T: DominoTableau, inner, outer) -> bool:
    r0, r1, c0, c1 = _extent(T, inner)
    R0, R1, C0, C1 = _extent(T, outer)
    return r0 > R0 and r1 < R1 and c0 > C0 and c1 < C1


def clusters(T: DominoTableau) -> list[Cluster]:
    return ClusterStructure(T).clusters
