"""Gauss diagrams of long and closed free knots.

A diagram is stored as its token sequence: the i-th token names the chord
owning position i (1-based).  Closed diagrams carry an implicit basepoint
between position 2n and position 1, so both kinds share one representation
and differ only in which moves and operations are legal.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

LONG = "long"
CLOSED = "closed"
KINDS = (LONG, CLOSED)

_TOKEN_RE = re.compile(r"^[A-Za-z0-9_]+$")


class DiagramError(ValueError):
    pass


class ParseError(DiagramError):
    pass


class UnsupportedOperation(DiagramError):
    pass


@dataclass(frozen=True)
class Chord:
    label: str
    first: int
    second: int

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.first, self.second)


def _mate_of(tokens: tuple[str, ...]) -> tuple[int, ...]:
    seen: dict[str, int] = {}
    mate = [-1] * len(tokens)
    for i, tok in enumerate(tokens):
        if tok in seen:
            j = seen.pop(tok)
            if j < 0:
                raise DiagramError(f"token {tok!r} appears more than twice")
            mate[i], mate[j] = j, i
            seen[tok] = -1
        else:
            seen[tok] = i
    for tok, j in seen.items():
        if j >= 0:
            raise DiagramError(f"token {tok!r} appears once")
    return tuple(mate)


@dataclass(frozen=True, eq=False)
class ChordDiagram:
    """A free-knot diagram.  Equality and hashing ignore chord labels."""

    kind: str
    tokens: tuple[str, ...]
    mate: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DiagramError(f"unknown diagram kind {self.kind!r}")
        tokens = tuple(self.tokens)
        object.__setattr__(self, "tokens", tokens)
        for tok in tokens:
            if not isinstance(tok, str) or not _TOKEN_RE.match(tok):
                raise DiagramError(f"bad chord label {tok!r}")
        object.__setattr__(self, "mate", _mate_of(tokens))

    @classmethod
    def from_pairs(cls, kind: str, pairs: Iterable[tuple[int, int]]) -> "ChordDiagram":
        """Build a diagram from 1-based endpoint pairs, labelled A, B, ... by first endpoint."""
        pairs = sorted(tuple(sorted(p)) for p in pairs)
        size = 2 * len(pairs)
        tokens: list[str | None] = [None] * size
        for label, (p, q) in zip(label_names(), pairs):
            if not (1 <= p < q <= size) or tokens[p - 1] or tokens[q - 1]:
                raise DiagramError(f"invalid chord endpoints {(p, q)}")
            tokens[p - 1] = tokens[q - 1] = label
        return cls(kind, tuple(tokens))

    @property
    def n(self) -> int:
        return len(self.tokens) // 2

    @property
    def size(self) -> int:
        return len(self.tokens)

    @property
    def is_long(self) -> bool:
        return self.kind == LONG

    def partner(self, p: int) -> int:
        return self.mate[p - 1] + 1

    def chords(self) -> list[Chord]:
        """Chords ordered by first endpoint."""
        return [Chord(self.tokens[i], i + 1, j + 1) for i, j in enumerate(self.mate) if i < j]

    def chord(self, label: str) -> Chord:
        try:
            i = self.tokens.index(label)
        except ValueError:
            raise DiagramError(f"chord {label!r} not in diagram") from None
        return Chord(label, i + 1, self.mate[i] + 1)

    def labels(self) -> list[str]:
        return [self.tokens[i] for i, j in enumerate(self.mate) if i < j]

    def pairs(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i, j in enumerate(self.mate) if i < j]

    def canonical(self) -> "ChordDiagram":
        """Same diagram with chords renamed A, B, ... in order of first occurrence."""
        return ChordDiagram(self.kind, canonical_tokens(self.mate))

    def key(self) -> tuple:
        return (self.kind, self.mate)

    def __eq__(self, other):
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.kind == other.kind and self.mate == other.mate

    def __hash__(self):
        return hash((self.kind, self.mate))

    def __str__(self):
        return serialize_diagram(self)


ChordRef = Union[Chord, str]


def label_names() -> Iterator[str]:
    """A, B, ..., Z, AA, AB, ... (spreadsheet column order)."""
    width = 1
    while True:
        for k in range(26**width):
            name = []
            for _ in range(width):
                k, r = divmod(k, 26)
                name.append(chr(ord("A") + r))
            yield "".join(reversed(name))
        width += 1


def canonical_tokens(mate: tuple[int, ...]) -> tuple[str, ...]:
    names = label_names()
    out: list[str] = [""] * len(mate)
    for i, j in enumerate(mate):
        if i < j:
            out[i] = out[j] = next(names)
    return tuple(out)


def fresh_labels(used: Iterable[str], count: int) -> list[str]:
    used = set(used)
    out = []
    for name in label_names():
        if name not in used:
            out.append(name)
            if len(out) == count:
                return out
    raise AssertionError("unreachable")


def parse_diagram(text: str) -> ChordDiagram:
    """Parse ``long: A B A B`` / ``closed: ...``."""
    head, sep, body = text.strip().partition(":")
    head = head.strip()
    if not sep:
        raise ParseError(f"missing ':' after header in {text.strip()!r}")
    if head not in KINDS:
        raise ParseError(f"unknown header {head!r}")
    tokens = body.split()
    counts: dict[str, int] = {}
    for tok in tokens:
        if not _TOKEN_RE.match(tok):
            raise ParseError(f"bad token {tok!r}")
        counts[tok] = counts.get(tok, 0) + 1
    for tok, c in counts.items():
        if c != 2:
            raise ParseError(f"token {tok!r} appears {c} times (expected 2)")
    return ChordDiagram(head, tuple(tokens))


def serialize_diagram(D: ChordDiagram) -> str:
    tokens = canonical_tokens(D.mate)
    return f"{D.kind}:" + "".join(" " + t for t in tokens)


def read_corpus(lines: Iterable[str]) -> list[tuple[int, ChordDiagram]]:
    """Parse a corpus; returns ``(line_number, diagram)`` pairs.

    Blank lines and lines starting with ``#`` are skipped.  A ParseError is
    re-raised with the 1-based line number prepended.
    """
    out = []
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            out.append((lineno, parse_diagram(s)))
        except DiagramError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return out


def _index(D: ChordDiagram, c: ChordRef) -> int:
    label = c.label if isinstance(c, Chord) else c
    try:
        i = D.tokens.index(label)
    except ValueError:
        raise DiagramError(f"chord {label!r} not in diagram") from None
    if isinstance(c, Chord) and {i + 1, D.mate[i] + 1} != {c.first, c.second}:
        raise DiagramError(f"chord {c} does not match diagram")
    return i


def _linked_idx(mate: tuple[int, ...], i: int, j: int) -> bool:
    p, q = sorted((i, mate[i]))
    r, s = mate[j], j
    return (p < r < q) != (p < s < q)


def linked(D: ChordDiagram, c: ChordRef, d: ChordRef) -> bool:
    """True iff the endpoints of ``c`` and ``d`` alternate.

    Uses stored positions for closed diagrams too; alternation on the circle
    does not depend on where it is cut.
    """
    i, j = _index(D, c), _index(D, d)
    if i == D.mate[j] or i == j:
        raise DiagramError("linked() needs two distinct chords")
    return _linked_idx(D.mate, i, j)


def linked_masks(mate: tuple[int, ...]) -> dict[int, set[int]]:
    """Map each chord (by first-endpoint index) to the set of chords linked with it."""
    firsts = [i for i, j in enumerate(mate) if i < j]
    out: dict[int, set[int]] = {}
    for i in firsts:
        j = mate[i]
        inside = set()
        for k in range(i + 1, j):
            c = min(k, mate[k])
            inside ^= {c}
        out[i] = inside
    return out


def degree(D: ChordDiagram, c: ChordRef) -> int:
    i = _index(D, c)
    i = min(i, D.mate[i])
    return len(linked_masks(D.mate)[i])


def linking_table(D: ChordDiagram) -> dict[str, set[str]]:
    masks = linked_masks(D.mate)
    return {D.tokens[i]: {D.tokens[k] for k in ks} for i, ks in masks.items()}


def rotate_basepoint(D: ChordDiagram, k: int) -> ChordDiagram:
    """Move the basepoint of a closed diagram forward by ``k`` positions.

    New position i holds what was at position i + k (mod 2n).
    """
    if D.kind != CLOSED:
        raise UnsupportedOperation("rotate_basepoint needs a closed diagram")
    if D.size == 0:
        return D
    k %= D.size
    return ChordDiagram(CLOSED, D.tokens[k:] + D.tokens[:k])


def cut(D: ChordDiagram, p: int) -> ChordDiagram:
    """Break a closed diagram at gap ``p`` (gap 0 is the basepoint)."""
    if D.kind != CLOSED:
        raise UnsupportedOperation("cut needs a closed diagram")
    if not (0 <= p < max(D.size, 1)):
        raise DiagramError(f"gap {p} out of range for {D.size} positions")
    return ChordDiagram(LONG, D.tokens[p:] + D.tokens[:p])


def close(D: ChordDiagram) -> ChordDiagram:
    return ChordDiagram(CLOSED, D.tokens)


def reverse(D: ChordDiagram) -> ChordDiagram:
    return ChordDiagram(D.kind, D.tokens[::-1])


def connected_sum(D1: ChordDiagram, D2: ChordDiagram) -> ChordDiagram:
    if D1.kind != LONG or D2.kind != LONG:
        raise UnsupportedOperation("connected_sum needs two long diagrams")
    clash = set(D1.tokens) & set(D2.tokens)
    if clash:
        renamed = dict(zip(sorted(clash), fresh_labels(set(D1.tokens) | set(D2.tokens), len(clash))))
        tokens2 = tuple(renamed.get(t, t) for t in D2.tokens)
    else:
        tokens2 = D2.tokens
    return ChordDiagram(LONG, D1.tokens + tokens2)


def closed_key(D: ChordDiagram) -> tuple[int, ...]:
    """Rotation-invariant key of a closed diagram (least rotation of the relative pairing)."""
    m = D.size
    if m == 0:
        return ()
    best = None
    for k in range(m):
        rel = tuple((D.mate[(i + k) % m] - k - i) % m for i in range(m))
        if best is None or rel < best:
            best = rel
    return best


def random_diagram(rng: random.Random, n: int, kind: str = LONG) -> ChordDiagram:
    """Uniformly random fixed-point-free involution on 2n positions."""
    positions = list(range(1, 2 * n + 1))
    rng.shuffle(positions)
    pairs = [(positions[2 * i], positions[2 * i + 1]) for i in range(n)]
    return ChordDiagram.from_pairs(kind, pairs)


def random_corpus(count: int, min_chords: int, max_chords: int, seed: int, kind: str = LONG) -> list[ChordDiagram]:
    rng = random.Random(seed)
    return [random_diagram(rng, rng.randint(min_chords, max_chords), kind) for _ in range(count)]
