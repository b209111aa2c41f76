"""Parity invariants of free knots: the integer l and the words phi, psi."""
from .gauss import (
    ChordDiagram,
    Chord,
    parse_diagram,
    serialize_diagram,
    linked,
    degree,
    rotate_basepoint,
    cut,
    reverse,
    connected_sum,
)
from .parity import classify, verify_parity_facts
from .moves import enumerate_moves, apply_move, random_walk
from .groups import GroupWord, NormalForm, reduce, equal, cyclic_normal_form, dihedral_shift, quotient_to_G
from .invariants import invariant_l, phi, psi, invariants, closed_invariants, slice_obstruction

__all__ = [
    "ChordDiagram",
    "Chord",
    "parse_diagram",
    "serialize_diagram",
    "linked",
    "degree",
    "rotate_basepoint",
    "cut",
    "reverse",
    "connected_sum",
    "classify",
    "verify_parity_facts",
    "enumerate_moves",
    "apply_move",
    "random_walk",
    "GroupWord",
    "NormalForm",
    "reduce",
    "equal",
    "cyclic_normal_form",
    "dihedral_shift",
    "quotient_to_G",
    "invariant_l",
    "phi",
    "psi",
    "invariants",
    "closed_invariants",
    "slice_obstruction",
]
