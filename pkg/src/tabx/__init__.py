"""Domino tableaux for the classical types: admissibility, cycles, clusters,
signed classes and the bijection onto standard domino tableaux."""

from tabx.admissible import DominoKind, domino_kind, is_admissible, kinds
from tabx.bijection import iota, phi, psi, sigma
from tabx.clusters import Cluster, ClusterKind, ClusterStructure, clusters
from tabx.cycles import Cycle, CycleError, ParityClass, cycle, cycles, move_through, move_through_cycle, move_through_set
from tabx.shapes import GroupType, b_lambda, is_orbit_shape, orbit_shapes
from tabx.signed import Mode, SignedClass, SignedTableau, au_generator, au_orbit, class_of, embed, forget_open, format_signed, parse_signed
from tabx.tableau import DominoTableau, InvariantError, ParseError, ValidationError, parse_tableau, render
from tabx.tau import TauSet, tau

__version__ = "0.1.0"

__all__ = [
    "Cluster", "ClusterKind", "ClusterStructure", "Cycle", "CycleError", "DominoKind", "DominoTableau",
    "GroupType", "InvariantError", "Mode", "ParityClass", "ParseError", "SignedClass", "SignedTableau",
    "TauSet", "ValidationError", "au_generator", "au_orbit", "b_lambda", "class_of", "clusters", "cycle",
    "cycles", "domino_kind", "embed", "forget_open", "format_signed", "iota", "is_admissible", "is_orbit_shape", "kinds",
    "move_through", "move_through_cycle", "move_through_set", "orbit_shapes", "parse_signed", "parse_tableau", "phi",
    "psi", "render", "sigma", "tau",
]
