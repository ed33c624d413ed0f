"""Signed domino tableaux, their cluster classes, and the A_u action.

A signed tableau puts a sign on every I+ domino. Two signed tableaux with
the same underlying tableau are equivalent when the sign products agree on
every open and closed cluster (mode ``opcl``) or on every closed cluster
(mode ``cl``). A class is stored directly as one sign per relevant cluster,
keyed by the cluster's smallest label.

Signed file format: the tableau text, a ``mode: opcl|cl`` header and a
trailing ``signs: 1=+ 3=-`` line.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping

from tabx.admissible import DominoKind, kinds
from tabx.clusters import Cluster, ClusterKind, ClusterStructure
from tabx.shapes import b_lambda
from tabx.tableau import DominoTableau, InvariantError, ParseError, ValidationError, parse_tableau, render, split_document


class Mode(enum.Enum):
    OPCL = "opcl"
    CL = "cl"

    @classmethod
    def parse(cls, text: str | Mode) -> Mode:
        if isinstance(text, Mode):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown mode {text!r}; expected opcl or cl") from None


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def required_clusters(cs: ClusterStructure, mode: Mode) -> list[Cluster]:
    if mode is Mode.OPCL:
        return cs.signable
    return cs.closed


@dataclass(frozen=True)
class SignedTableau:
    tableau: DominoTableau
    signs: Mapping[int, int]

    def __post_init__(self) -> None:
        plus = {k for k, v in kinds(self.tableau).items() if v is DominoKind.I_PLUS}
        if set(self.signs) != plus:
            raise ValidationError(f"signs must cover exactly the I+ dominos {sorted(plus)}")
        if any(s not in (1, -1) for s in self.signs.values()):
            raise ValidationError("signs must be +1 or -1")


class SignedClass:
    """An admissible tableau with one sign per cluster required by ``mode``."""

    __slots__ = ("tableau", "mode", "signs", "__dict__")

    def __init__(self, tableau: DominoTableau, mode: Mode, signs: Mapping[int, int]) -> None:
        self.tableau = tableau
        self.mode = Mode.parse(mode)
        self.signs = dict(sorted(signs.items()))
        keys = {c.id for c in required_clusters(self.structure, self.mode)}
        if set(self.signs) != keys:
            raise ValidationError(
                f"mode {self.mode.value} needs signs on clusters {sorted(keys)}, got {sorted(self.signs)}"
            )
        if any(s not in (1, -1) for s in self.signs.values()):
            raise ValidationError("signs must be +1 or -1")

    @cached_property
    def structure(self) -> ClusterStructure:
        return ClusterStructure(self.tableau)

    @property
    def positive_clusters(self) -> list[Cluster]:
        return [self.structure.by_id(k) for k, s in self.signs.items() if s > 0]

    def with_signs(self, changes: Mapping[int, int]) -> SignedClass:
        signs = dict(self.signs)
        signs.update(changes)
        return SignedClass(self.tableau, self.mode, signs)

    def key(self) -> tuple:
        return (self.tableau, self.mode, tuple(self.signs.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedClass):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def sort_key(self) -> tuple:
        return (self.tableau.sort_key(), tuple((k, -s) for k, s in self.signs.items()))

    def format_signs(self) -> str:
        return " ".join(f"{k}={_sign_char(s)}" for k, s in self.signs.items())

    def __repr__(self) -> str:
        return f"SignedClass({render(self.tableau, sep=' / ')!r}, {self.mode.value}, {{{self.format_signs()}}})"


def class_of(s: SignedTableau, mode: Mode | str) -> SignedClass:
    """Multiply the I+ signs inside each cluster the mode keeps."""
    mode = Mode.parse(mode)
    cs = ClusterStructure(s.tableau)
    signs = {}
    for c in required_clusters(cs, mode):
        signs[c.id] = math.prod(s.signs[k] for k in c.labels if k in s.signs)
    return SignedClass(s.tableau, mode, signs)


def all_classes(T: DominoTableau, mode: Mode | str) -> Iterator[SignedClass]:
    """Every sign assignment on the clusters ``mode`` keeps, all-plus first."""
    mode = Mode.parse(mode)
    cs = ClusterStructure(T)
    ids = [c.id for c in required_clusters(cs, mode)]
    for combo in itertools.product((1, -1), repeat=len(ids)):
        yield SignedClass(T, mode, dict(zip(ids, combo)))


def forget_open(x: SignedClass) -> SignedClass:
    if x.mode is not Mode.OPCL:
        raise ValueError("forget_open expects an opcl class")
    closed = {c.id for c in x.structure.closed}
    return SignedClass(x.tableau, Mode.CL, {k: s for k, s in x.signs.items() if k in closed})


def embed(x: SignedClass) -> SignedClass:
    """View a closed-cluster class as an opcl class with every open cluster negative."""
    if x.mode is not Mode.CL:
        raise ValueError("embed expects a cl class")
    signs = dict(x.signs)
    for c in x.structure.open:
        signs[c.id] = -1
    return SignedClass(x.tableau, Mode.OPCL, signs)


def au_generator(x: SignedClass, r: int) -> SignedClass:
    """Action of the generator attached to the part ``r`` of B_lambda."""
    if x.mode is not Mode.OPCL:
        raise ValueError("A_u acts on opcl classes")
    T = x.tableau
    if r not in b_lambda(T.shape(), T.type):
        raise ValueError(f"{r} is not in B_lambda of shape {list(T.shape())} (type {T.type.value})")
    row = T.shape().index(r) + 1
    if T.label_at((row, r)) == 0:
        return x
    target = x.structure.b_T(r)
    if target is None:
        raise InvariantError(f"no row of length {r}")
    if target.kind is ClusterKind.CL0:
        return x
    if target.kind is ClusterKind.CLOSED:
        raise InvariantError(f"b_T({r}) is a closed cluster; the action is only defined on open clusters")
    return x.with_signs({target.id: -x.signs[target.id]})


def au_element(x: SignedClass, parts) -> SignedClass:
    """Apply the product of generators indexed by the subset ``parts`` of B_lambda."""
    for r in sorted(parts):
        x = au_generator(x, r)
    return x


def au_orbit(x: SignedClass) -> frozenset[SignedClass]:
    T = x.tableau
    gens = sorted(b_lambda(T.shape(), T.type))
    seen = {x}
    frontier = [x]
    while frontier:
        y = frontier.pop()
        for r in gens:
            z = au_generator(y, r)
            if z not in seen:
                seen.add(z)
                frontier.append(z)
    return frozenset(seen)


def parse_signed(text: str, t=None, mode: Mode | str | None = None) -> SignedClass:
    headers, _ = split_document(text)
    header_mode = headers.get("mode")
    if header_mode is not None:
        hm = Mode.parse(header_mode)
        if mode is not None and Mode.parse(mode) is not hm:
            raise ValidationError(f"header says mode {hm.value}, caller asked for {Mode.parse(mode).value}")
        mode = hm
    if mode is None:
        raise ParseError("no mode given and no 'mode:' header")
    T = parse_tableau(text, t)
    signs: dict[int, int] = {}
    for item in headers.get("signs", "").split():
        key, eq, val = item.partition("=")
        if not eq or val not in ("+", "-"):
            raise ParseError(f"bad sign entry {item!r}; expected <id>=+ or <id>=-")
        try:
            signs[int(key)] = 1 if val == "+" else -1
        except ValueError:
            raise ParseError(f"bad cluster id in {item!r}") from None
    return SignedClass(T, Mode.parse(mode), signs)


def format_signed(x: SignedClass) -> str:
    body = render(x.tableau)
    lines = [f"type: {x.tableau.type.value}", f"mode: {x.mode.value}"]
    if body:
        lines.append(body)
    lines.append(f"signs: {x.format_signs()}".rstrip())
    return "\n".join(lines)
