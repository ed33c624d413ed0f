"""Worked examples bundled with the package, with their expected artifacts.

Each fixture is a tableau (or signed class) in file format plus a list of
checks. :func:`replay` recomputes every check and returns the mismatches;
an empty list means the fixture still holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from tabx.admissible import is_admissible, kinds
from tabx.bijection import phi, psi
from tabx.clusters import ClusterStructure
from tabx.cycles import ParityClass, cycles, move_through
from tabx.signed import parse_signed
from tabx.tableau import parse_tableau, render
from tabx.tau import tau


@dataclass(frozen=True)
class Fixture:
    name: str
    text: str
    checks: tuple[tuple, ...] = field(default=())
    signed: bool = False

    @property
    def filename(self) -> str:
        return f"{self.name}.tab"


def _f(name, text, *checks, signed=False) -> Fixture:
    return Fixture(name, text.strip() + "\n", tuple(checks), signed)


T_C = "type: C\n1 2 3 4 5 5\n1 2 3 4"
T_C_PRIME = "type: C\n1 2 2 3 3 5 5\n1 4 4"
T_D12 = "type: D\n1 3 3 5 5 11\n1 4 6 7 8 11\n2 4 6 7 8 12\n2 9 9 10 10 12"
T_D1 = "type: D\n1 2 3\n1 2 3"
T_D2 = "type: D\n1 2 2\n1 3 3"

_BIG = "1,2,3,4,5,8,9,10,11,12"

FIXTURES: tuple[Fixture, ...] = (
    _f(
        "t_c", T_C,
        ("admissible", None, True),
        ("kinds", None, {1: "I-", 2: "I+", 3: "I-", 4: "I+", 5: "N"}),
        ("cycles", "BC", [{1}, {2, 3}, {4, 5}]),
        ("cycles", "DD", [{1, 2}, {3, 4}, {5}]),
        ("move_through", (2, "BC"), "1 2 2 4 5 5 / 1 3 3 4"),
        ("move_through", (4, "BC"), "1 2 3 4 4 5 5 / 1 2 3"),
        ("clusters", None, [
            "id=1 kind=cl0 class=DD labels={1}",
            "id=2 kind=closed class=BC labels={2,3}",
            "id=4 kind=open class=BC labels={4,5}",
        ]),
    ),
    _f(
        "t_c_prime", T_C_PRIME,
        ("admissible", None, False),
        ("failing_index", None, 2),
        ("cycles", "BC", [{1}, {2, 3, 4, 5}]),
        ("cycles", "DD", [{1, 2, 3, 4, 5}]),
    ),
    _f("t_c_mt2", "type: C\n1 2 2 4 5 5\n1 3 3 4", ("shape", None, (6, 4))),
    _f("t_c_mt4", "type: C\n1 2 3 4 4 5 5\n1 2 3", ("shape", None, (7, 3))),
    _f(
        "t_d12", T_D12,
        ("admissible", None, True),
        ("clusters", None, [
            f"id=1 kind=closed class=DD labels={{{_BIG}}}",
            "id=6 kind=closed class=BC labels={6,7}",
        ]),
        ("cycle_sets", "DD", [{1, 3, 5, 11, 12, 10, 9, 2}, {4, 6}, {7, 8}]),
        ("cycle_sets", "BC", [{6, 7}]),
        ("nested", (6, 1), True),
        ("nested", (1, 6), False),
        ("periphery", 1, {1, 3, 5, 11, 12, 10, 9, 2}),
        ("closure_bar", 1, set(range(1, 13))),
        ("initial_cycle", 1, {1, 3, 5, 11, 12, 10, 9, 2}),
        ("initial_cycle", 6, {6, 7}),
    ),
    _f(
        "t_d1", T_D1,
        ("admissible", None, True),
        ("clusters", None, [
            "id=1 kind=closed class=DD labels={1,2}",
            "id=3 kind=open class=DD labels={3}",
        ]),
        ("tau_indices", (2, 3), set()),
    ),
    _f(
        "t_d2", T_D2,
        ("admissible", None, True),
        ("clusters", None, ["id=1 kind=open class=DD labels={1,2,3}"]),
    ),
    _f("t_d1_pp", "mode: opcl\n" + T_D1 + "\nsigns: 1=+ 3=+", ("phi", None, "1 1 3 3 / 2 2"), ("psi", None, True), signed=True),
    _f("t_d1_mp", "mode: opcl\n" + T_D1 + "\nsigns: 1=- 3=+", ("phi", None, "1 2 3 3 / 1 2"), ("psi", None, True), signed=True),
    _f("t_d1_pm", "mode: opcl\n" + T_D1 + "\nsigns: 1=+ 3=-", ("phi", None, "1 1 3 / 2 2 3"), ("psi", None, True), signed=True),
    _f("t_d1_mm", "mode: opcl\n" + T_D1 + "\nsigns: 1=- 3=-", ("phi", None, "1 2 3 / 1 2 3"), ("psi", None, True), signed=True),
    _f("t_d2_p", "mode: opcl\n" + T_D2 + "\nsigns: 1=+", ("phi", None, "1 1 2 2 / 3 3"), ("psi", None, True), signed=True),
    _f("t_d2_m", "mode: opcl\n" + T_D2 + "\nsigns: 1=-", ("phi", None, "1 2 2 / 1 3 3"), ("psi", None, True), signed=True),
    # closed-cluster classes; no mode header so the file works with --mode cl
    _f("t_d1_plus", T_D1 + "\nsigns: 1=+", ("phi_cl", None, "1 1 3 / 2 2 3"), signed=True),
    _f("t_d1_minus", T_D1 + "\nsigns: 1=-", ("phi_cl", None, "1 2 3 / 1 2 3"), signed=True),
    _f("t_d2_cl", T_D2 + "\nsigns:", ("phi_cl", None, "1 2 2 / 1 3 3"), signed=True),
)


def fixtures() -> list[Fixture]:
    return list(FIXTURES)


def by_name(name: str) -> Fixture:
    for f in FIXTURES:
        if f.name == name:
            return f
    raise KeyError(name)


def _rendered(T) -> str:
    return render(T, sep=" / ")


def _evaluate(fx: Fixture, artifact: str, arg):
    if artifact in ("phi", "psi"):
        x = parse_signed(fx.text)
        if artifact == "phi":
            return _rendered(phi(x))
        return psi(phi(x), mode=x.mode) == x
    if artifact == "phi_cl":
        return _rendered(phi(parse_signed(fx.text, mode="cl")))
    T = parse_tableau(fx.text)
    if artifact == "admissible":
        return bool(is_admissible(T))
    if artifact == "failing_index":
        return is_admissible(T).failing_index
    if artifact == "kinds":
        return {k: v.value for k, v in kinds(T).items()}
    if artifact == "cycles":
        return [set(cy.labels) for cy in cycles(T, ParityClass.parse(arg))]
    if artifact == "cycle_sets":
        return [set(cy.labels) for cy in cycles(T, ParityClass.parse(arg))]
    if artifact == "move_through":
        k, c = arg
        return _rendered(move_through(T, k, ParityClass.parse(c)))
    if artifact == "shape":
        return T.shape()
    if artifact == "tau_indices":
        return set(tau(T).indices) & set(arg)
    cs = ClusterStructure(T)
    if artifact == "clusters":
        return [c.describe() for c in cs.clusters]
    if artifact == "nested":
        inner, outer = arg
        return cs.nested_in(cs.by_id(inner), cs.by_id(outer))
    if artifact == "periphery":
        return set(cs.periphery(cs.by_id(arg)))
    if artifact == "closure_bar":
        return set(cs.closure_bar(cs.by_id(arg)))
    if artifact == "initial_cycle":
        return set(cs.initial_cycle(cs.by_id(arg)).labels)
    raise KeyError(f"unknown artifact {artifact!r}")


def _matches(artifact: str, got, expected) -> bool:
    if artifact == "cycle_sets":
        # only the listed cycles are pinned down
        return all(e in got for e in expected)
    return got == expected


def replay(fx: Fixture) -> list[str]:
    """Mismatches between recomputed and expected artifacts."""
    bad = []
    for artifact, arg, expected in fx.checks:
        try:
            got = _evaluate(fx, artifact, arg)
        except Exception as exc:  # report, do not abort the replay
            bad.append(f"{fx.name}: {artifact}({arg}) raised {type(exc).__name__}: {exc}")
            continue
        if not _matches(artifact, got, expected):
            bad.append(f"{fx.name}: {artifact}({arg}) = {got!r}, expected {expected!r}")
    return bad


def write_files(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for fx in FIXTURES:
        path = directory / fx.filename
        path.write_text(fx.text)
        out.append(path)
    return out
