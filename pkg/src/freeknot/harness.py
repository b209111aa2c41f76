"""Empirical invariance checks: random walks, exhaustive single moves, and probes."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import groups
from .gauss import LONG, ChordDiagram, connected_sum, serialize_diagram
from .invariants import invariants, psi, signature
from .moves import Move, apply_move, describe, enumerate_moves, move_to_dict, random_walk
from .parity import verify_parity_facts


@dataclass
class Failure:
    before: ChordDiagram
    after: ChordDiagram
    move: Move
    values_before: tuple
    values_after: tuple
    reasons: list[str]
    diagram_index: int = 0
    trial: int = 0
    step: int = 0

    def to_dict(self) -> dict:
        return {
            "diagram_index": self.diagram_index,
            "trial": self.trial,
            "step": self.step,
            "before": serialize_diagram(self.before),
            "after": serialize_diagram(self.after),
            "move": move_to_dict(self.move),
            "values_before": list(self.values_before),
            "values_after": list(self.values_after),
            "reasons": self.reasons,
        }

    def __str__(self):
        return "\n".join(
            [
                f"counterexample (diagram #{self.diagram_index}, trial {self.trial}, step {self.step})",
                f"  before: {serialize_diagram(self.before)}",
                f"  move:   {describe(self.move)}",
                f"  after:  {serialize_diagram(self.after)}",
                f"  values before: {self.values_before}",
                f"  values after:  {self.values_after}",
                *(f"  - {r}" for r in self.reasons),
            ]
        )


def check_step(before: ChordDiagram, m: Move, after: ChordDiagram, sig_before=None, sig_after=None) -> Optional[Failure]:
    sig_before = sig_before if sig_before is not None else signature(before)
    sig_after = sig_after if sig_after is not None else signature(after)
    reasons = []
    names = ("l", "phi", "psi") if before.kind == LONG else ("|l|", "phi class", "psi class")
    for name, x, y in zip(names, sig_before, sig_after):
        if x != y:
            reasons.append(f"{name} changed: {x} -> {y}")
    facts = verify_parity_facts(before, m, after)
    reasons.extend(facts.violations)
    if reasons:
        return Failure(before, after, m, sig_before, sig_after, reasons)
    return None


def minimal(failures: Iterable[Failure]) -> Optional[Failure]:
    return min(failures, key=lambda f: (f.before.n, f.step, f.diagram_index, f.trial), default=None)


@dataclass
class WalkSummary:
    walks: int = 0
    steps: int = 0
    truncated: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def walk_seed(seed: int, index: int, trial: int) -> str:
    return f"{seed}:{index}:{trial}"


def check_walks(
    diagrams: list[ChordDiagram],
    steps: int,
    trials: int,
    seed: int,
    max_chords: Optional[int],
    apply: Optional[Callable] = None,
) -> WalkSummary:
    """Run ``trials`` walks per diagram; every step must keep the signature and the parity facts."""
    summary = WalkSummary()
    for i, D in enumerate(diagrams):
        for t in range(trials):
            report = random_walk(D, steps, walk_seed(seed, i, t), max_chords, apply=apply)
            summary.walks += 1
            summary.steps += len(report.steps) - 1
            summary.truncated += report.truncated
            for k in range(1, len(report.steps)):
                prev, cur = report.steps[k - 1], report.steps[k]
                fail = check_step(prev.diagram, cur.move, cur.diagram, prev.values, cur.values)
                if fail is None and cur.values != report.initial.values:
                    fail = Failure(prev.diagram, cur.diagram, cur.move, report.initial.values, cur.values, ["drift from initial values"])
                if fail is not None:
                    fail.diagram_index, fail.trial, fail.step = i, t, k
                    summary.failures.append(fail)
                    break
    return summary


def check_all_moves(D: ChordDiagram, max_chords: Optional[int] = None) -> tuple[int, list[Failure]]:
    """Apply every single applicable move (increasing ones within ``max_chords``)."""
    sig = signature(D)
    failures = []
    moves = enumerate_moves(D, allow_increasing=max_chords is not None, max_chords=max_chords)
    for m in moves:
        after = apply_move(D, m)
        fail = check_step(D, m, after, sig)
        if fail is not None:
            failures.append(fail)
    return len(moves), failures


@dataclass
class SumFinding:
    left: str
    right: str
    psi_sum: str
    psi_product: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def connected_sum_probe(pairs: Iterable[tuple[ChordDiagram, ChordDiagram]]) -> tuple[int, list[SumFinding]]:
    """Test psi(K1 # K2) == psi(K1) * psi(K2) in G'; return (#pairs, counterexamples)."""
    count, findings = 0, []
    for K1, K2 in pairs:
        count += 1
        lhs = psi(connected_sum(K1, K2))
        rhs = psi(K1) * psi(K2)
        if not groups.equal(lhs, rhs):
            findings.append(
                SumFinding(
                    serialize_diagram(K1),
                    serialize_diagram(K2),
                    str(groups.reduce(lhs)),
                    str(groups.reduce(rhs)),
                )
            )
    return count, findings


def shift_vs_l(diagrams: Iterable[ChordDiagram]) -> tuple[int, list[tuple[str, int, int]]]:
    """Compare twice the dihedral shift of phi with l; return (#checked, discrepancies)."""
    count, out = 0, []
    for D in diagrams:
        b = invariants(D)
        count += 1
        if b.shift.reflected or b.shift.displacement != b.l:
            out.append((serialize_diagram(D), b.l, b.shift.displacement))
    return count, out
