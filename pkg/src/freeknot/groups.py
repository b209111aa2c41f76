"""Word problem in the two target groups of the word invariants.

G  = <a, b, b' | a^2 = b^2 = b'^2 = 1, ab = b'a>   is Z2 * Z2 with b' = aba.
G' = <a, b, b' | a^2 = 1, ab = b'^-1 a>           is Z2 * Z   with b' = ab^-1 a.

Both are free products of cyclic groups on {a, b}, so after eliminating b'
the normal form is the syllable-reduced word: alternating a and b^k, with
k taken mod 2 in G.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

G = "G"
GPRIME = "Gprime"
GROUPS = (G, GPRIME)

A, B, BP = "a", "b", "b'"
GENERATORS = (A, B, BP)

Syllable = tuple[str, int]


class WordParseError(ValueError):
    pass


def _check_group(group: str) -> None:
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r} (expected 'G' or 'Gprime')")


def _fmt(syllables: tuple[Syllable, ...]) -> str:
    if not syllables:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in syllables)


@dataclass(frozen=True)
class GroupWord:
    syllables: tuple[Syllable, ...]
    group: str

    def __post_init__(self):
        _check_group(self.group)
        syl = tuple((g, int(e)) for g, e in self.syllables)
        for g, e in syl:
            if g not in GENERATORS:
                raise ValueError(f"unknown generator {g!r}")
            if e == 0:
                raise ValueError("zero exponent in syllable")
        object.__setattr__(self, "syllables", syl)

    @classmethod
    def from_letters(cls, letters: Iterable[Syllable], group: str) -> "GroupWord":
        return cls(tuple(letters), group)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if other.group != self.group:
            raise ValueError("cannot multiply words from different groups")
        return GroupWord(self.syllables + other.syllables, self.group)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.syllables)), self.group)

    def letter_count(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        return _fmt(self.syllables)


@dataclass(frozen=True)
class NormalForm(GroupWord):
    """Reduced word over {a, b}; equal elements have equal normal forms."""

    def sort_key(self) -> tuple:
        return tuple(_syllable_key(s) for s in self.syllables)


_SYL_RE = re.compile(r"^(a|b'|b)(?:\^(-?\d+))?$")


def parse_word(text: str, group: str) -> GroupWord:
    """Parse ``"a b b'^-1"``-style words; ``"1"`` is the identity."""
    _check_group(group)
    parts = text.split()
    if parts == ["1"]:
        return GroupWord((), group)
    if not parts:
        raise WordParseError("empty word (use '1' for the identity)")
    out = []
    for part in parts:
        mt = _SYL_RE.match(part)
        if not mt:
            raise WordParseError(f"bad syllable {part!r}")
        e = int(mt.group(2)) if mt.group(2) is not None else 1
        if e != 0:
            out.append((mt.group(1), e))
    return GroupWord(tuple(out), group)


def _eliminate_bprime(w: GroupWord) -> list[Syllable]:
    out: list[Syllable] = []
    sign = 1 if w.group == G else -1
    for g, e in w.syllables:
        if g == BP:
            # (a b^s a)^e = a b^(s e) a
            out.extend(((A, 1), (B, sign * e), (A, 1)))
        else:
            out.append((g, e))
    return out


def _free_reduce(syllables: Iterable[Syllable], group: str) -> tuple[Syllable, ...]:
    stack: list[Syllable] = []
    for g, e in syllables:
        if stack and stack[-1][0] == g:
            e += stack.pop()[1]
        if g == A or group == G:
            e %= 2
        if e:
            stack.append((g, e))
    return tuple(stack)


def reduce(w: GroupWord) -> NormalForm:
    return NormalForm(_free_reduce(_eliminate_bprime(w), w.group), w.group)


def equal(w1: GroupWord, w2: GroupWord) -> bool:
    if w1.group != w2.group:
        raise ValueError(f"cannot compare words of {w1.group} and {w2.group}")
    return reduce(w1) == reduce(w2)


def _syllable_key(s: Syllable) -> tuple[int, int, int]:
    g, e = s
    return (GENERATORS.index(g), 0 if e > 0 else 1, abs(e))


def cyclic_normal_form(w: GroupWord) -> NormalForm:
    """Canonical representative of the conjugacy class of ``w``.

    Cyclically reduce, then take the least syllable rotation under the
    order a < b^k (k > 0, by |k|) < b^k (k < 0, by |k|).
    """
    syl = list(reduce(w).syllables)
    group = w.group
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        first = syl.pop(0)
        syl = list(_free_reduce(syl + [first], group))
    if len(syl) <= 1:
        return NormalForm(tuple(syl), group)
    keys = [_syllable_key(s) for s in syl]
    k = len(syl)
    best = min(range(k), key=lambda r: keys[r:] + keys[:r])
    return NormalForm(tuple(syl[best:] + syl[:best]), group)


def conjugate(w1: GroupWord, w2: GroupWord) -> bool:
    return cyclic_normal_form(w1) == cyclic_normal_form(w2)


@dataclass(frozen=True)
class DihedralElement:
    """Element u^m b^r of the infinite dihedral group, u = ba.

    ``displacement`` m counts unit steps on the Cayley graph (each b or b'
    letter is one step); ``shift`` is k with the element equal to (bb')^k
    when it is a translation, so ``displacement == 2 * shift``.
    """

    displacement: int
    reflected: bool

    @property
    def shift(self) -> Fraction:
        return Fraction(self.displacement, 2)

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        sign = -1 if self.reflected else 1
        return DihedralElement(self.displacement + sign * other.displacement, self.reflected != other.reflected)


_IDENTITY = DihedralElement(0, False)
_DIHEDRAL_GEN = {A: DihedralElement(-1, True), B: DihedralElement(0, True)}


def dihedral_shift(w: GroupWord) -> DihedralElement:
    if w.group != G:
        raise ValueError("dihedral_shift is defined on words of G")
    out = _IDENTITY
    for g, e in reduce(w).syllables:
        out = out * _DIHEDRAL_GEN[g]
    return out


def quotient_to_G(w: GroupWord) -> GroupWord:
    """Image under G' -> G (adds b^2 = b'^2 = 1)."""
    if w.group != GPRIME:
        raise ValueError("quotient_to_G expects a word of Gprime")
    return GroupWord(w.syllables, G)


def invert_b(w: GroupWord) -> GroupWord:
    """Automorphism of G' fixing a and inverting b and b'."""
    return GroupWord(tuple((g, e if g == A else -e) for g, e in w.syllables), w.group)
