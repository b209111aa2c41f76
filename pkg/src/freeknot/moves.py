"""Reidemeister moves on Gauss diagrams and seeded random move walks.

A *site* is a pair of adjacent positions, named by its first position ``s``:
``(s, s+1)`` or, on closed diagrams only, the wrap-around pair ``(2n, 1)``
named ``2n``.  A *gap* ``g`` is the slot after position ``g`` (gap 0 is the
start of a long diagram, or the basepoint of a closed one).

R3 is the formal triangle move: three disjoint sites whose six endpoints
belong to three chords, each chord joining two of the sites; applying it
transposes the two endpoints inside every site.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Optional, Union

from .gauss import CLOSED, LONG, ChordDiagram, DiagramError, fresh_labels, serialize_diagram

CROSSED = "crossed"
NESTED = "nested"


class InapplicableMove(DiagramError):
    pass


@dataclass(frozen=True)
class R1Add:
    gap: int
    name = "R1Add"


@dataclass(frozen=True)
class R1Remove:
    site: int
    name = "R1Remove"


@dataclass(frozen=True)
class R2Add:
    gap1: int
    gap2: int
    config: str
    name = "R2Add"


@dataclass(frozen=True)
class R2Remove:
    site1: int
    site2: int
    name = "R2Remove"


@dataclass(frozen=True)
class R3:
    sites: tuple[int, int, int]
    name = "R3"


Move = Union[R1Add, R1Remove, R2Add, R2Remove, R3]
_MOVE_TYPES = {cls.name: cls for cls in (R1Add, R1Remove, R2Add, R2Remove, R3)}


def move_to_dict(m: Move) -> dict:
    d = asdict(m)
    if "sites" in d:
        d["sites"] = list(d["sites"])
    return {"move": m.name, **d}


def move_from_dict(d: dict) -> Move:
    d = dict(d)
    cls = _MOVE_TYPES[d.pop("move")]
    if "sites" in d:
        d["sites"] = tuple(d["sites"])
    return cls(**d)


def describe(m: Move) -> str:
    args = ", ".join(f"{k}={v}" for k, v in asdict(m).items())
    return f"{m.name}({args})"


def _sites(D: ChordDiagram) -> list[int]:
    m = D.size
    if m == 0:
        return []
    if D.kind == LONG:
        return list(range(1, m))
    return list(range(1, m + 1)) if m > 2 else [1]


def _gaps(D: ChordDiagram) -> list[int]:
    if D.kind == LONG:
        return list(range(D.size + 1))
    return list(range(max(D.size, 1)))


def site_positions(D: ChordDiagram, s: int) -> tuple[int, int]:
    if s not in _sites(D):
        raise InapplicableMove(f"site {s} does not exist in a {D.kind} diagram of size {D.size}")
    return (s, s + 1) if s < D.size else (D.size, 1)


def _site_chords(D: ChordDiagram, s: int) -> tuple[int, int]:
    """Chord ids (first-endpoint indices, 0-based) at the two positions of a site."""
    p, q = site_positions(D, s)
    mate = D.mate
    return min(p - 1, mate[p - 1]), min(q - 1, mate[q - 1])


def _decreasing_and_r3(D: ChordDiagram) -> list[Move]:
    sites = _sites(D)
    out: list[Move] = []
    site_pair: dict[int, tuple[int, int]] = {}
    for s in sites:
        x, y = _site_chords(D, s)
        if x == y:
            out.append(R1Remove(s))
        else:
            site_pair[s] = (x, y)

    by_pair: dict[frozenset, list[int]] = {}
    for s, (x, y) in site_pair.items():
        by_pair.setdefault(frozenset((x, y)), []).append(s)

    def disjoint(*ss):
        pos = [p for s in ss for p in site_positions(D, s)]
        return len(set(pos)) == len(pos)

    for key, ss in by_pair.items():
        for s1, s2 in combinations(ss, 2):
            if disjoint(s1, s2):
                out.append(R2Remove(s1, s2))

    triangles = set()
    chords_with = {}
    for key in by_pair:
        for c in key:
            chords_with.setdefault(c, set()).update(key - {c})
    for key, ss in by_pair.items():
        x, y = sorted(key)
        for z in chords_with.get(x, ()):
            if z <= y or z not in chords_with.get(y, ()):
                continue
            for s1 in ss:
                for s2 in by_pair[frozenset((x, z))]:
                    for s3 in by_pair[frozenset((y, z))]:
                        if disjoint(s1, s2, s3):
                            triangles.add(tuple(sorted((s1, s2, s3))))
    for t in sorted(triangles):
        out.append(R3(t))
    return out


def _odd_by_positions(D: ChordDiagram, c: int) -> bool:
    return (c - D.mate[c]) % 2 == 0


def _check_r3_parity(D: ChordDiagram, m: R3) -> None:
    chords = {c for s in m.sites for c in _site_chords(D, s)}
    n_odd = sum(_odd_by_positions(D, c) for c in chords)
    if n_odd not in (0, 2):
        raise AssertionError(f"R3 triangle {m.sites} on {serialize_diagram(D)} has {n_odd} odd chords")


def _increasing_counts(D: ChordDiagram, allow_increasing: bool, max_chords: Optional[int]) -> tuple[int, int]:
    if not allow_increasing:
        return 0, 0
    n_gaps = len(_gaps(D))
    r1 = n_gaps if max_chords is None or D.n + 1 <= max_chords else 0
    r2 = n_gaps * (n_gaps + 1) if max_chords is None or D.n + 2 <= max_chords else 0
    return r1, r2


def _r2add_at(D: ChordDiagram, k: int) -> R2Add:
    gaps = _gaps(D)
    for i, g1 in enumerate(gaps):
        block = 2 * (len(gaps) - i)
        if k < block:
            return R2Add(g1, gaps[i + k // 2], (CROSSED, NESTED)[k % 2])
        k -= block
    raise IndexError(k)


def enumerate_moves(D: ChordDiagram, allow_increasing: bool = False, max_chords: Optional[int] = None) -> list[Move]:
    """All applicable moves, in a fixed order.

    Order: R1Remove, R2Remove, R3 (by sites), then R1Add by gap, then R2Add
    by (gap1, gap2, config).  Increasing moves respect ``max_chords``.
    """
    out = _decreasing_and_r3(D)
    for m in out:
        if isinstance(m, R3):
            _check_r3_parity(D, m)
    r1, r2 = _increasing_counts(D, allow_increasing, max_chords)
    if r1:
        out.extend(R1Add(g) for g in _gaps(D))
    if r2:
        out.extend(_r2add_at(D, k) for k in range(r2))
    return out


def count_moves(D: ChordDiagram, allow_increasing: bool = False, max_chords: Optional[int] = None) -> int:
    r1, r2 = _increasing_counts(D, allow_increasing, max_chords)
    return len(_decreasing_and_r3(D)) + r1 + r2


def sample_move(D: ChordDiagram, rng: random.Random, max_chords: Optional[int] = None) -> Optional[Move]:
    """Uniform choice from ``enumerate_moves(D, True, max_chords)`` without building the add moves."""
    fixed = _decreasing_and_r3(D)
    r1, r2 = _increasing_counts(D, True, max_chords)
    total = len(fixed) + r1 + r2
    if total == 0:
        return None
    k = rng.randrange(total)
    if k < len(fixed):
        return fixed[k]
    k -= len(fixed)
    if k < r1:
        return R1Add(_gaps(D)[k])
    return _r2add_at(D, k - r1)


def _delete(tokens: tuple[str, ...], positions) -> tuple[str, ...]:
    drop = {p - 1 for p in positions}
    return tuple(t for i, t in enumerate(tokens) if i not in drop)


def _check_gap(D: ChordDiagram, g: int) -> None:
    if g not in _gaps(D):
        raise InapplicableMove(f"gap {g} out of range for a {D.kind} diagram of size {D.size}")


def apply_move(D: ChordDiagram, m: Move) -> ChordDiagram:
    toks = D.tokens
    if isinstance(m, R1Add):
        _check_gap(D, m.gap)
        (x,) = fresh_labels(toks, 1)
        return ChordDiagram(D.kind, toks[: m.gap] + (x, x) + toks[m.gap :])
    if isinstance(m, R1Remove):
        x, y = _site_chords(D, m.site)
        if x != y:
            raise InapplicableMove(f"site {m.site} does not hold a single chord")
        return ChordDiagram(D.kind, _delete(toks, site_positions(D, m.site)))
    if isinstance(m, R2Add):
        _check_gap(D, m.gap1)
        _check_gap(D, m.gap2)
        if m.gap1 > m.gap2:
            raise InapplicableMove("R2Add needs gap1 <= gap2")
        if m.config not in (CROSSED, NESTED):
            raise InapplicableMove(f"unknown R2 configuration {m.config!r}")
        x, y = fresh_labels(toks, 2)
        second = (x, y) if m.config == CROSSED else (y, x)
        new = toks[: m.gap1] + (x, y) + toks[m.gap1 : m.gap2] + second + toks[m.gap2 :]
        return ChordDiagram(D.kind, new)
    if isinstance(m, R2Remove):
        a, b = site_positions(D, m.site1), site_positions(D, m.site2)
        if len(set(a) | set(b)) != 4:
            raise InapplicableMove("R2Remove sites overlap")
        ca, cb = set(_site_chords(D, m.site1)), set(_site_chords(D, m.site2))
        if len(ca) != 2 or ca != cb:
            raise InapplicableMove("R2Remove sites do not hold the same two chords")
        return ChordDiagram(D.kind, _delete(toks, a + b))
    if isinstance(m, R3):
        _validate_r3(D, m)
        new = list(toks)
        for s in m.sites:
            p, q = site_positions(D, s)
            new[p - 1], new[q - 1] = new[q - 1], new[p - 1]
        return ChordDiagram(D.kind, tuple(new))
    raise TypeError(f"not a move: {m!r}")


def _validate_r3(D: ChordDiagram, m: R3) -> None:
    if len(m.sites) != 3:
        raise InapplicableMove("R3 needs three sites")
    pos = [p for s in m.sites for p in site_positions(D, s)]
    if len(set(pos)) != 6:
        raise InapplicableMove("R3 sites overlap")
    pairs = [frozenset(_site_chords(D, s)) for s in m.sites]
    if any(len(p) != 2 for p in pairs) or len(set(pairs)) != 3 or len(frozenset().union(*pairs)) != 3:
        raise InapplicableMove("R3 sites do not form a chord triangle")


def inverse_move(D: ChordDiagram, m: Move) -> Move:
    """A move undoing ``m`` on ``apply_move(D, m)``.

    Exact for long diagrams.  On closed diagrams, undoing a removal at the
    wrap-around site restores the diagram up to rotation of the basepoint.
    """
    if isinstance(m, R3):
        return m
    if isinstance(m, R1Add):
        return R1Remove(m.gap + 1)
    if isinstance(m, R2Add):
        return R2Remove(m.gap1 + 1, m.gap2 + 3)
    closed = D.kind == CLOSED
    if isinstance(m, R1Remove):
        gap = m.site - 1
        # on a circle the end gap is the basepoint gap
        if m.site == D.size or (closed and gap == D.size - 2):
            gap = 0
        return R1Add(gap)
    if isinstance(m, R2Remove):
        s1, s2 = sorted((m.site1, m.site2))
        p1, p2 = site_positions(D, s1), site_positions(D, s2)
        crossed = D.tokens[p1[0] - 1] == D.tokens[p2[0] - 1]
        config = CROSSED if crossed else NESTED
        gaps = (0, s1 - 2) if s2 == D.size else (s1 - 1, s2 - 3)
        if closed:
            gaps = sorted(0 if g == D.size - 4 else g for g in gaps)
        return R2Add(gaps[0], gaps[1], config)
    raise TypeError(f"not a move: {m!r}")


@dataclass
class WalkStep:
    move: Optional[Move]
    diagram: ChordDiagram
    values: tuple

    def to_dict(self) -> dict:
        return {
            "move": None if self.move is None else move_to_dict(self.move),
            "diagram": serialize_diagram(self.diagram),
            "values": list(self.values),
        }


@dataclass
class WalkReport:
    seed: object
    max_chords: Optional[int]
    steps: list[WalkStep] = field(default_factory=list)
    truncated: bool = False

    @property
    def initial(self) -> WalkStep:
        return self.steps[0]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "max_chords": self.max_chords,
            "truncated": self.truncated,
            "steps": [s.to_dict() for s in self.steps],
        }


def random_walk(
    D: ChordDiagram,
    steps: int,
    seed,
    max_chords: Optional[int] = None,
    apply=None,
) -> WalkReport:
    """Seeded walk choosing uniformly among applicable moves at each step.

    ``values`` at each step are ``invariants.signature`` of the snapshot.
    ``apply`` overrides ``apply_move`` (used to self-test the harness).
    """
    from .invariants import signature

    if steps < 0:
        raise ValueError("steps must be >= 0")
    apply = apply or apply_move
    rng = random.Random(seed)
    report = WalkReport(seed, max_chords)
    report.steps.append(WalkStep(None, D, signature(D)))
    for _ in range(steps):
        m = sample_move(D, rng, max_chords)
        if m is None:
            report.truncated = True
            break
        D = apply(D, m)
        report.steps.append(WalkStep(m, D, signature(D)))
    return report
