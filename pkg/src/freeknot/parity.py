"""Gaussian parity, type and sort of chords.

Positions are 1-based throughout: "odd position" means position 1, 3, ...
For closed diagrams the sort is taken relative to the stored basepoint.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .gauss import Chord, ChordDiagram, linked_masks

EVEN = "even"
ODD = "odd"
LETTER_A = "a"
LETTER_B = "b"
LETTER_BP = "b'"


@dataclass(frozen=True)
class ChordClass:
    chord: Chord
    parity: str
    chord_type: Optional[int]  # 1 or 2, odd chords only
    chord_sort: Optional[int]  # 1 or 2, odd chords only
    letter: str
    degree: int
    linked_even: int


@dataclass(frozen=True)
class ChordClassification:
    diagram: ChordDiagram
    classes: dict[str, ChordClass]
    letters: tuple[str, ...] = field(repr=False)

    def __getitem__(self, label: str) -> ChordClass:
        return self.classes[label]

    def __iter__(self):
        return iter(self.classes.values())

    @cached_property
    def counts(self) -> dict[str, int]:
        c = Counter()
        for cc in self.classes.values():
            c[cc.parity] += 1
            if cc.parity == ODD:
                c[f"type{cc.chord_type}"] += 1
                c[f"sort{cc.chord_sort}"] += 1
        return {k: c[k] for k in (EVEN, ODD, "type1", "type2", "sort1", "sort2")}


def _raw(mate: tuple[int, ...]):
    """Per chord (keyed by first endpoint index): degree, #linked even, parity flag."""
    masks = linked_masks(mate)
    odd = {i: len(ks) & 1 for i, ks in masks.items()}
    linked_even = {i: sum(1 for k in ks if not odd[k]) for i, ks in masks.items()}
    return masks, odd, linked_even


def classify(D: ChordDiagram) -> ChordClassification:
    masks, odd, linked_even = _raw(D.mate)
    classes = {}
    for i in sorted(masks):
        j = D.mate[i]
        label = D.tokens[i]
        chord = Chord(label, i + 1, j + 1)
        deg = len(masks[i])
        if not odd[i]:
            classes[label] = ChordClass(chord, EVEN, None, None, LETTER_A, deg, linked_even[i])
            continue
        type1 = linked_even[i] % 2 == 0
        # 0-based index i even <=> 1-based position odd
        both_odd_pos = i % 2 == 0 and j % 2 == 0
        both_even_pos = i % 2 == 1 and j % 2 == 1
        sort1 = (both_odd_pos and type1) or (both_even_pos and not type1)
        classes[label] = ChordClass(
            chord,
            ODD,
            1 if type1 else 2,
            1 if sort1 else 2,
            LETTER_B if type1 else LETTER_BP,
            deg,
            linked_even[i],
        )
    letters = tuple(classes[t].letter for t in D.tokens)
    return ChordClassification(D, classes, letters)


@dataclass
class FactReport:
    move: object
    checked: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, name: str, cond: bool, detail: str = "") -> None:
        self.checked.append(name)
        if not cond:
            self.violations.append(f"{name}: {detail}" if detail else name)


def _lemma(report: FactReport, cls: ChordClassification, when: str) -> None:
    for cc in cls:
        same = (cc.chord.first - cc.chord.second) % 2 == 0
        report.check(
            f"endpoint-parity lemma ({when})",
            same == (cc.parity == ODD),
            f"chord {cc.chord.label} {cc.chord.endpoints} is {cc.parity}",
        )


def verify_parity_facts(D: ChordDiagram, m, after: Optional[ChordDiagram] = None) -> FactReport:
    """Check the four parity facts (and derived rules) for one move application.

    ``after`` may be passed to check a precomputed (or deliberately wrong)
    result instead of ``apply_move(D, m)``.
    """
    from .moves import R1Add, R1Remove, R2Add, R2Remove, R3, apply_move, site_positions

    if after is None:
        after = apply_move(D, m)
    before_cls = classify(D)
    after_cls = classify(after)
    rep = FactReport(m)
    for cls, when in ((before_cls, "before"), (after_cls, "after")):
        rep.check(f"#odd chords even ({when})", cls.counts[ODD] % 2 == 0, str(cls.counts))
        _lemma(rep, cls, when)

    if isinstance(m, (R1Add, R1Remove)):
        if isinstance(m, R1Add):
            new = set(after.labels()) - set(D.labels())
            rep.check("R1 creates one chord", len(new) == 1 and after.n == D.n + 1, f"{len(new)} new chords")
            involved = [after_cls[x] for x in new]
        else:
            label = D.tokens[site_positions(D, m.site)[0] - 1]
            involved = [before_cls[label]]
        for cc in involved:
            rep.check("R1 chord is even", cc.parity == EVEN, f"chord {cc.chord.label} is {cc.parity}")
    elif isinstance(m, (R2Add, R2Remove)):
        if isinstance(m, R2Add):
            pair = [after_cls[x] for x in set(after.labels()) - set(D.labels())]
        else:
            pair = [before_cls[x] for x in {D.tokens[q - 1] for q in site_positions(D, m.site1)}]
        if len(pair) != 2:
            rep.check("R2 involves two chords", False, f"{len(pair)} chords")
            return rep
        c, d = pair
        rep.check("R2 pair shares parity", c.parity == d.parity, f"{c.parity} vs {d.parity}")
        if c.parity == ODD and d.parity == ODD:
            rep.check("R2 odd pair shares type", c.chord_type == d.chord_type)
            rep.check("R2 odd pair has opposite sorts", c.chord_sort != d.chord_sort)
    elif isinstance(m, R3):
        sites = [site_positions(D, s) for s in m.sites]
        tri = sorted({D.tokens[p - 1] for s in sites for p in s})
        odd_count = sum(before_cls[x].parity == ODD for x in tri)
        rep.check("R3 triangle has 0 or 2 odd chords", odd_count in (0, 2), f"{odd_count} odd")
        for label, cc in before_cls.classes.items():
            new = after_cls.classes.get(label)
            if new is None:
                rep.check("R3 keeps every chord", False, label)
                continue
            rep.check("R3 preserves parity", cc.parity == new.parity, label)
            if cc.parity != ODD:
                continue
            rep.check("R3 preserves sort", cc.chord_sort == new.chord_sort, label)
            if label in tri:
                others = [x for x in tri if x != label]
                n_even = sum(before_cls[x].parity == EVEN for x in others)
                should_flip = n_even == 1
            else:
                should_flip = False
            rep.check(
                "R3 type-flip rule",
                (cc.chord_type != new.chord_type) == should_flip,
                f"{label}: type {cc.chord_type}->{new.chord_type}",
            )
    return rep
