"""Exhaustive verification suites behind ``tabx verify``.

Every suite walks all tableaux or classes up to a size bound and records
one :class:`Check` per (property, type). A failing check carries the first
counterexample found.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable

from tabx.admissible import DominoKind, is_admissible
from tabx.bijection import phi, psi
from tabx.clusters import ClusterKind, ClusterStructure
from tabx.cycles import ParityClass, blocked, cycle, cycles, fixed_square, move_through_cycle, move_through_set
from tabx.enumerate import (
    count_syt,
    domino_tilings,
    enum_admissible_chains,
    enum_sdt,
    enum_syt,
    shapes_of_size,
    standard_labelings,
)
from tabx.fixtures import fixtures, replay
from tabx.shapes import GroupType, Partition, b_lambda, orbit_shapes, partitions
from tabx.signed import Mode, all_classes, au_orbit, embed, forget_open
from tabx.tableau import DominoTableau, render
from tabx.tau import first_checked_index, tau

SUITES = ("bijection", "involution", "order-independence", "clusters", "infsup", "tau", "counts")


@dataclass
class Check:
    suite: str
    name: str
    type: str
    passed: bool
    detail: str = ""
    counterexample: str | None = None
    # the stated property is known not to hold as written; the check is
    # reported but does not fail the run
    known_conflict: bool = False

    @property
    def status(self) -> str:
        if self.passed:
            return "pass"
        return "xfail" if self.known_conflict else "FAIL"


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "FAIL" for c in self.checks)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"suite={c.suite} check={c.name} type={c.type or '-'} result={c.status}"
            if c.detail:
                line += f" detail={c.detail!r}"
            if c.counterexample:
                line += f" counterexample={c.counterexample!r}"
            lines.append(line)
        counts = {k: sum(c.status == k for c in self.checks) for k in ("pass", "xfail", "FAIL")}
        lines.append(f"summary passed={counts['pass']} known-conflicts={counts['xfail']} failed={counts['FAIL']}")
        return "\n".join(lines)

    def to_json(self) -> str:
        checks = [dict(asdict(c), status=c.status) for c in self.checks]
        return json.dumps({"ok": self.ok, "checks": checks}, indent=2)


def _show(T: DominoTableau) -> str:
    return f"{T.type.value}: {render(T, sep=' / ')}"


# cached enumerations; everything below is pure so sharing is safe


@lru_cache(maxsize=None)
def sdt(t: GroupType, n: int) -> tuple[DominoTableau, ...]:
    return tuple(enum_sdt(t, size=n))


@lru_cache(maxsize=None)
def sdt_shape(t: GroupType, lam: Partition) -> tuple[DominoTableau, ...]:
    return tuple(enum_sdt(t, shape=lam))


@lru_cache(maxsize=None)
def admissible(t: GroupType, n: int) -> tuple[DominoTableau, ...]:
    return tuple(T for T in sdt(t, n) if is_admissible(T))


@lru_cache(maxsize=None)
def admissible_shape(t: GroupType, lam: Partition) -> tuple[DominoTableau, ...]:
    return tuple(T for T in sdt_shape(t, lam) if is_admissible(T))


@lru_cache(maxsize=None)
def structure(T: DominoTableau) -> ClusterStructure:
    return ClusterStructure(T)


def orbit_shapes_upto(t: GroupType, max_squares: int) -> list[Partition]:
    out = []
    for m in range(max_squares + 1):
        if t.domino_count(m) is not None:
            out.extend(orbit_shapes(m, t))
    return out


# -- suites ----------------------------------------------------------------


def suite_bijection(types, max_size: int, report: Report) -> None:
    for t in types:
        for n in range(max_size + 1):
            classes = [x for T in admissible(t, n) for x in all_classes(T, Mode.OPCL)]
            targets = set(sdt(t, n))
            images: dict[DominoTableau, object] = {}
            bad = None
            for x in classes:
                S = phi(x)
                if S in images or S not in targets:
                    bad = bad or f"{x!r} -> {_show(S)}"
                images[S] = x
                if psi(S) != x:
                    bad = bad or f"psi(phi({x!r})) differs"
            for S in targets:
                if S not in images:
                    bad = bad or f"{_show(S)} not hit"
                elif phi(psi(S)) != S:
                    bad = bad or f"phi(psi({_show(S)})) differs"
            detail = f"n={n} classes={len(classes)} sdt={len(targets)}"
            report.add(Check("bijection", "phi-onto-sdt", t.value, bad is None and len(classes) == len(targets), detail, bad))
        max_squares = t.square_count(max_size)
        bad = None
        count = 0
        for lam in orbit_shapes_upto(t, max_squares):
            cl = [x for T in admissible_shape(t, lam) for x in all_classes(T, Mode.CL)]
            imgs = [phi(x) for x in cl]
            count += 1
            if set(imgs) != set(sdt_shape(t, lam)) or len(imgs) != len(set(imgs)):
                bad = bad or f"shape {list(lam)}: {len(set(imgs))} images, {len(sdt_shape(t, lam))} tableaux"
        report.add(Check("bijection", "closed-classes-onto-shape", t.value, bad is None, f"orbit shapes={count}", bad))


def cycle_law_violation(T: DominoTableau, c: ParityClass, cy) -> str | None:
    """The first moving-through law ``cy`` breaks, or None."""
    U = move_through_cycle(T, cy, check_standard=False)
    back = move_through_cycle(U, cycle(U, cy.initial, c), check_standard=False)
    if back != T:
        return "moving through twice is not the identity"
    lost, gained = set(T.grid) - set(U.grid), set(U.grid) - set(T.grid)
    if cy.closed and (lost or gained):
        return "closed cycle changed the shape"
    if not cy.closed and (len(lost), len(gained)) != (1, 1):
        return "open cycle did not trade exactly one square"
    for k in T.labels:
        if k and U.label_at(fixed_square(T, k, c)) != k:
            return f"fixed square of {k} changed"
    return None


def suite_involution(types, max_size: int, report: Report) -> None:
    for t in types:
        bad = None
        total = blocked_count = nonstandard = 0
        for n in range(max_size + 1):
            for T in sdt(t, n):
                for c in ParityClass:
                    for cy in cycles(T, c):
                        if blocked(T, cy):
                            blocked_count += 1
                            continue
                        total += 1
                        why = cycle_law_violation(T, c, cy)
                        if why:
                            bad = bad or f"{_show(T)} {cy.describe()}: {why}"
                        if not move_through_cycle(T, cy, check_standard=False).is_standard():
                            nonstandard += 1
        detail = f"cycles={total} nonstandard-images={nonstandard}"
        report.add(Check("involution", "moving-through-laws", t.value, bad is None, detail, bad))
        report.add(
            Check(
                "involution", "every-cycle-movable", t.value, blocked_count == 0,
                f"cycles ending on the zero square={blocked_count}", known_conflict=True,
            )
        )


def suite_order(types, max_size: int, report: Report) -> None:
    for t in types:
        bad = None
        tried = 0
        for n in range(max_size + 1):
            for T in admissible(t, n):
                for x in all_classes(T, Mode.OPCL):
                    cs = structure(T)
                    cys = [cs.initial_cycle(cs.by_id(k)) for k, s in x.signs.items() if s > 0]
                    if len(cys) < 2:
                        continue
                    tried += 1
                    results = {move_through_set(T, cys, order=p) for p in itertools.permutations(range(len(cys)))}
                    if len(results) != 1:
                        bad = bad or repr(x)
        report.add(Check("order-independence", "all-orders-agree", t.value, bad is None, f"classes={tried}", bad))


def suite_clusters(types, max_size: int, report: Report) -> None:
    mismatches = [m for fx in fixtures() for m in replay(fx)]
    report.add(Check("clusters", "fixtures-replay", "", not mismatches, f"fixtures={len(fixtures())}", "; ".join(mismatches) or None))
    for t in types:
        bad = None
        for lam in orbit_shapes_upto(t, t.square_count(max_size)):
            lhs = sum(2 ** len(structure(T).closed) for T in admissible_shape(t, lam))
            if lhs != len(sdt_shape(t, lam)):
                bad = bad or f"shape {list(lam)}: {lhs} vs {len(sdt_shape(t, lam))}"
        report.add(Check("clusters", "closed-sign-count-per-shape", t.value, bad is None, "", bad))
        for n in range(max_size + 1):
            lhs = sum(2 ** len(structure(T).signable) for T in admissible(t, n))
            rhs = len(sdt(t, n))
            report.add(Check("clusters", "signable-count", t.value, lhs == rhs, f"n={n} {lhs} vs {rhs}", None if lhs == rhs else f"n={n}"))


def structural_violation(T: DominoTableau) -> str | None:
    cs = structure(T)
    kind = cs.kinds
    lam = T.shape()
    b_ids = set()
    for r in b_lambda(lam, T.type):
        c = cs.b_T(r)
        if c is not None:
            b_ids.add(c.id)
    for C in cs.signable:
        if not cs.initial_cycle(C).members <= C.labels:
            return f"initial cycle leaves cluster {C.id}"
        rows: dict[int, list] = {}
        for k in C.labels:
            for s in T.domino(k):
                rows.setdefault(s[0], []).append(s)
        for squares in rows.values():
            if kind[T.label_at(min(squares, key=lambda s: s[1]))] is not DominoKind.I_PLUS:
                return f"row-leftmost domino of cluster {C.id} is not I+"
            right = kind[T.label_at(max(squares, key=lambda s: s[1]))]
            if C.kind is ClusterKind.CLOSED and right is not DominoKind.I_MINUS:
                return f"row-rightmost domino of closed cluster {C.id} is not I-"
        if C.kind is ClusterKind.CLOSED and kind[C.id] is not DominoKind.I_PLUS:
            return f"initial domino of closed cluster {C.id} is not I+"
        if C.kind is ClusterKind.OPEN and C.id not in b_ids:
            return f"open cluster {C.id} is not b_T(r) for any r"
    return None


def suite_infsup(types, max_size: int, report: Report) -> None:
    for t in types:
        bad = None
        total = 0
        for n in range(max_size + 1):
            for T in admissible(t, n):
                total += 1
                why = structural_violation(T)
                if why:
                    bad = bad or f"{_show(T)}: {why}"
        report.add(Check("infsup", "cluster-structure", t.value, bad is None, f"tableaux={total}", bad))


def tau_orbit_violation(t: GroupType, lam: Partition) -> str | None:
    start = first_checked_index(t)
    seen = set()
    for T in admissible_shape(t, lam):
        for x in all_classes(T, Mode.OPCL):
            if x in seen:
                continue
            orbit = au_orbit(x)
            seen |= orbit
            if len({tau(phi(y)).restricted(start) for y in orbit}) != 1:
                return f"tau varies on the orbit of {x!r}"
    return None


def _two_domino_shift(x, index: int) -> bool:
    """Whether D(index-1), D(index) form a positively signed two-domino closed cluster of ``x``."""
    for k, s in x.signs.items():
        c = x.structure.by_id(k)
        if s > 0 and c.labels == frozenset((index - 1, index)):
            return True
    return False


def tau_embed_differences(t: GroupType, lam: Partition) -> tuple[int, list[str]]:
    """Classes where tau(phi(embed(x))) and tau(|x|) differ; the unexplained ones are listed.

    A difference is explained when every differing index ``i`` comes from a
    positively signed closed cluster made of exactly D(i-1) and D(i).
    """
    start = first_checked_index(t)
    differing = 0
    unexplained = []
    for T in admissible_shape(t, lam):
        for x in all_classes(T, Mode.CL):
            diff = tau(phi(embed(x))).restricted(start) ^ tau(T).restricted(start)
            if diff:
                differing += 1
                if not all(_two_domino_shift(x, i) for i in diff):
                    unexplained.append(repr(x))
    return differing, unexplained


def suite_tau(types, max_size: int, report: Report) -> None:
    for t in types:
        shapes = orbit_shapes_upto(t, t.square_count(max_size))
        bad = None
        for lam in shapes:
            bad = bad or tau_orbit_violation(t, lam)
        report.add(Check("tau", "orbit-constancy", t.value, bad is None, f"from index {first_checked_index(t)}", bad))
        differing = 0
        unexplained: list[str] = []
        for lam in shapes:
            d, u = tau_embed_differences(t, lam)
            differing += d
            unexplained += u
        report.add(
            Check(
                "tau", "closed-moves-keep-tau", t.value, differing == 0,
                f"differing classes={differing} unexplained={len(unexplained)}",
                unexplained[0] if unexplained else None,
                known_conflict=not unexplained,
            )
        )


def orbit_count_violation(t: GroupType, lam: Partition) -> str | None:
    orbits = set()
    for T in admissible_shape(t, lam):
        for x in all_classes(T, Mode.OPCL):
            orbit = au_orbit(x)
            if len({forget_open(y) for y in orbit}) != 1:
                return f"forget_open not constant on the orbit of {x!r}"
            orbits.add(orbit)
    closed = sum(1 for T in admissible_shape(t, lam) for _ in all_classes(T, Mode.CL))
    if not len(orbits) == closed == len(sdt_shape(t, lam)):
        return f"shape {list(lam)}: orbits={len(orbits)} closed classes={closed} sdt={len(sdt_shape(t, lam))}"
    return None


def suite_counts(types, max_size: int, report: Report) -> None:
    for t in types:
        for n in range(max_size + 1):
            oracle = sum(standard_labelings(til, t) for lam in shapes_of_size(t, n) for til in domino_tilings(lam, t))
            got = len(sdt(t, n))
            report.add(Check("counts", "sdt-vs-tiling-oracle", t.value, got == oracle, f"n={n} {got} vs {oracle}", None))
            chains = enum_admissible_chains(t, size=n)
            report.add(Check("counts", "admissible-filter-vs-growth", t.value, chains == list(admissible(t, n)), f"n={n} {len(chains)}", None))
        bad = None
        for lam in orbit_shapes_upto(t, t.square_count(max_size)):
            why = orbit_count_violation(t, lam)
            if why:
                bad = bad or why
        report.add(Check("counts", "au-orbits-vs-closed-classes", t.value, bad is None, "", bad))
    bad = None
    for m in range(2 * max_size + 2):
        for lam in partitions(m):
            if count_syt(lam) != len(list(enum_syt(lam))):
                bad = bad or str(list(lam))
    report.add(Check("counts", "syt-stream-vs-count", "", bad is None, "", bad))


_RUNNERS = {
    "bijection": suite_bijection,
    "involution": suite_involution,
    "order-independence": suite_order,
    "clusters": suite_clusters,
    "infsup": suite_infsup,
    "tau": suite_tau,
    "counts": suite_counts,
}


def verify(suite: str = "all", types: Iterable = tuple(GroupType), max_size: int = 4) -> Report:
    if suite != "all" and suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)} or all")
    types = [GroupType.parse(t) for t in types]
    if max_size < 0:
        raise ValueError("max size must be non-negative")
    report = Report()
    for name in SUITES if suite == "all" else (suite,):
        _RUNNERS[name](types, max_size, report)
    return report
