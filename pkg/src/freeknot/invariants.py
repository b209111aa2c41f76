"""The integer invariant l and the word invariants phi (in G) and psi (in G')."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import groups
from .gauss import CLOSED, LONG, ChordDiagram, UnsupportedOperation, cut
from .groups import G, GPRIME, DihedralElement, GroupWord, NormalForm
from .parity import LETTER_A, ChordClassification, classify


def _require_long(D: ChordDiagram, what: str) -> None:
    if D.kind != LONG:
        raise UnsupportedOperation(f"{what} is defined for long diagrams; use closed_invariants")


def _l_from(cls: ChordClassification) -> int:
    c = cls.counts
    return 2 * c["sort1"] - 2 * c["sort2"]


def _phi_from(letters) -> GroupWord:
    return GroupWord(tuple((x, 1) for x in letters), G)


def _psi_from(letters) -> GroupWord:
    # 0-based index odd <=> 1-based position even
    return GroupWord(
        tuple((x, -1 if (i % 2 and x != LETTER_A) else 1) for i, x in enumerate(letters)),
        GPRIME,
    )


def invariant_l(D: ChordDiagram) -> int:
    _require_long(D, "l")
    return _l_from(classify(D))


def phi(D: ChordDiagram) -> GroupWord:
    _require_long(D, "phi")
    return _phi_from(classify(D).letters)


def psi(D: ChordDiagram) -> GroupWord:
    _require_long(D, "psi")
    return _psi_from(classify(D).letters)


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    l: int
    phi: GroupWord
    psi: GroupWord
    phi_nf: NormalForm
    psi_nf: NormalForm
    shift: DihedralElement
    counts: dict

    def to_dict(self) -> dict:
        return {
            "kind": LONG,
            "n": self.n,
            "l": self.l,
            "phi": str(self.phi),
            "psi": str(self.psi),
            "phi_nf": str(self.phi_nf),
            "psi_nf": str(self.psi_nf),
            "shift": str(self.shift.shift),
            "reflected": self.shift.reflected,
            "counts": self.counts,
        }


def invariants(D: ChordDiagram) -> InvariantBundle:
    _require_long(D, "invariants")
    cls = classify(D)
    ph, ps = _phi_from(cls.letters), _psi_from(cls.letters)
    phi_nf = groups.reduce(ph)
    return InvariantBundle(
        n=D.n,
        l=_l_from(cls),
        phi=ph,
        psi=ps,
        phi_nf=phi_nf,
        psi_nf=groups.reduce(ps),
        shift=groups.dihedral_shift(phi_nf),
        counts=cls.counts,
    )


@dataclass(frozen=True)
class ClosedBundle:
    """Invariants of a closed diagram.

    ``psi_classes`` counts the conjugacy classes of psi over all 2n cuts.
    Its support (at most two classes, swapped by ``groups.invert_b``) is the
    move-invariant part; ``psi_canonical`` is its least member and
    ``phi_class`` the single conjugacy class of phi in G.
    """

    n: int
    abs_l: int
    psi_classes: tuple[tuple[NormalForm, int], ...]
    psi_canonical: NormalForm
    phi_class: NormalForm
    counts: dict

    def to_dict(self) -> dict:
        return {
            "kind": CLOSED,
            "n": self.n,
            "abs_l": self.abs_l,
            "psi_canonical": str(self.psi_canonical),
            "phi_class": str(self.phi_class),
            "psi_classes": {str(nf): k for nf, k in self.psi_classes},
            "counts": self.counts,
        }


def closed_invariants(D: ChordDiagram) -> ClosedBundle:
    if D.kind != CLOSED:
        raise UnsupportedOperation("closed_invariants needs a closed diagram")
    cls = classify(D)
    letters = cls.letters
    # types ignore positions, so every cut reads a rotation of the same letters
    classes: Counter = Counter()
    for p in range(max(D.size, 1)):
        rotated = letters[p:] + letters[:p]
        classes[groups.cyclic_normal_form(_psi_from(rotated))] += 1
    ordered = tuple(sorted(classes.items(), key=lambda kv: kv[0].sort_key()))
    return ClosedBundle(
        n=D.n,
        abs_l=abs(_l_from(cls)),
        psi_classes=ordered,
        psi_canonical=ordered[0][0],
        phi_class=groups.cyclic_normal_form(_phi_from(letters)),
        counts=cls.counts,
    )


def closed_invariants_by_cutting(D: ChordDiagram) -> list[tuple[int, NormalForm]]:
    """(l, cyclic psi class) for every cut, computed from the cut diagrams themselves."""
    out = []
    for p in range(max(D.size, 1)):
        K = cut(D, p)
        out.append((invariant_l(K), groups.cyclic_normal_form(psi(K))))
    return out


def signature(D: ChordDiagram) -> tuple:
    """Values a move must preserve: (l, phi NF, psi NF) for long diagrams,
    (|l|, phi class, canonical psi class) for closed ones."""
    if D.kind == LONG:
        b = invariants(D)
        return (b.l, str(b.phi_nf), str(b.psi_nf))
    b = closed_invariants(D)
    return (b.abs_l, str(b.phi_class), str(b.psi_canonical))


@dataclass(frozen=True)
class SliceReport:
    not_slice: bool
    l: int
    sort1: int
    sort2: int

    @property
    def verdict(self) -> str:
        return "not slice" if self.not_slice else "no obstruction from l"

    def __str__(self):
        if self.not_slice:
            return f"not slice (l = {self.l}: {self.sort1} sort1, {self.sort2} sort2 odd chords)"
        return "no obstruction from l"


def slice_obstruction(D: ChordDiagram) -> SliceReport:
    cls = classify(D)
    c = cls.counts
    l = _l_from(cls)
    return SliceReport(l != 0, l if D.kind == LONG else abs(l), c["sort1"], c["sort2"])
