from collections import Counter

import pytest
from hypothesis import given, settings

from freeknot import groups
from freeknot.gauss import CLOSED, LONG, UnsupportedOperation, close, connected_sum, cut, parse_diagram, rotate_basepoint
from freeknot.groups import G, GroupWord, equal, invert_b, quotient_to_G
from freeknot.harness import shift_vs_l
from freeknot.invariants import (
    closed_invariants,
    closed_invariants_by_cutting,
    invariant_l,
    invariants,
    phi,
    psi,
    signature,
    slice_obstruction,
)
from freeknot.moves import apply_move, enumerate_moves

from .oracles import diagrams

D7_PHI = "b a b a b a b b' a b' a b' a b'"
D7_PSI = "b a b a b a b b'^-1 a b'^-1 a b'^-1 a b'^-1"
BA8 = " ".join(["b a"] * 8)


def test_l_examples(d7):
    assert invariant_l(parse_diagram("long:")) == 0
    assert invariant_l(d7) == 8
    assert invariant_l(parse_diagram("long: A B A B")) == 0
    with pytest.raises(UnsupportedOperation):
        invariant_l(close(d7))


def test_phi_examples(d7, trefoil):
    assert str(phi(parse_diagram("long: X X"))) == "a a"
    assert equal(phi(parse_diagram("long: X X")), GroupWord((), G))
    assert str(phi(d7)) == D7_PHI
    assert str(phi(trefoil)) == "a a a a a a"
    assert str(groups.reduce(phi(trefoil))) == "1"


def test_psi_examples(d7):
    assert str(psi(d7)) == D7_PSI
    D2 = parse_diagram("long: A B A B")
    assert str(psi(D2)) == "b b^-1 b b^-1"
    assert str(groups.reduce(psi(D2))) == "1"


@settings(max_examples=200)
@given(diagrams(kinds=(LONG,)))
def test_psi_of_all_even_is_phi(D):
    if invariants(D).counts["odd"] == 0:
        assert psi(D).syllables == phi(D).syllables


def test_bundle_d7(d7):
    b = invariants(d7)
    assert b.l == 8
    assert str(b.phi_nf) == str(b.psi_nf) == BA8
    assert b.shift.shift == 4 and not b.shift.reflected


@settings(max_examples=300)
@given(diagrams(kinds=(LONG,)))
def test_bundle_structure(D):
    b = invariants(D)
    assert b.l % 2 == 0
    assert b.phi.letter_count() == b.psi.letter_count() == 2 * D.n
    n_a = sum(1 for g, _ in b.phi.syllables if g == "a")
    assert n_a % 2 == 0 and n_a == 2 * b.counts["even"]
    assert equal(quotient_to_G(b.psi), b.phi)


@settings(max_examples=300)
@given(diagrams(kinds=(LONG,)))
def test_twice_shift_equals_l(D):
    # even chords fill one odd and one even position each, so odd chords split evenly
    b = invariants(D)
    assert not b.shift.reflected
    assert b.shift.displacement == b.l


def test_shift_vs_l_reports_no_findings(d7, trefoil):
    count, found = shift_vs_l([d7, trefoil, parse_diagram("long: A B A B")])
    assert count == 3 and found == []


def test_closed_examples(d7):
    b = closed_invariants(close(d7))
    assert b.abs_l == 8
    assert str(b.psi_canonical) == " ".join(["a b"] * 8)
    b2 = closed_invariants(parse_diagram("closed: A B A B"))
    assert b2.abs_l == 0 and str(b2.psi_canonical) == "1"
    b0 = closed_invariants(parse_diagram("closed:"))
    assert b0.abs_l == 0 and str(b0.psi_canonical) == "1"
    with pytest.raises(UnsupportedOperation):
        closed_invariants(d7)


@settings(max_examples=150)
@given(diagrams(kinds=(CLOSED,), max_chords=7))
def test_closed_bundle_matches_cutting(D):
    b = closed_invariants(D)
    by_cut = closed_invariants_by_cutting(D)
    assert Counter(nf for _, nf in by_cut) == Counter(dict(b.psi_classes))
    assert {abs(l) for l, _ in by_cut} == {b.abs_l}
    # at most two classes, exchanged by inverting b
    support = [nf for nf, _ in b.psi_classes]
    assert len(support) <= 2
    assert groups.cyclic_normal_form(invert_b(support[0])) in support


@settings(max_examples=200)
@given(diagrams(kinds=(CLOSED,), min_chords=1))
def test_basepoint_sign_law(D):
    ls = [invariant_l(cut(D, p)) for p in range(D.size)]
    for p in range(D.size):
        assert ls[(p + 1) % D.size] == -ls[p]
    assert closed_invariants(rotate_basepoint(D, 1)).abs_l == abs(ls[0])


def test_d7_rotation_flips_sign(d7):
    C = close(d7)
    assert invariant_l(cut(C, 0)) == 8
    assert invariant_l(cut(C, 1)) == -8
    assert invariant_l(cut(rotate_basepoint(C, 1), 0)) == -8


def test_slice_examples(d7, trefoil):
    rep = slice_obstruction(d7)
    assert rep.not_slice and (rep.sort1, rep.sort2) == (4, 0)
    assert rep.verdict == "not slice"
    assert not slice_obstruction(parse_diagram("long:")).not_slice
    assert str(slice_obstruction(trefoil)) == "no obstruction from l"
    assert slice_obstruction(close(d7)).not_slice


@settings(max_examples=120, deadline=None)
@given(diagrams(max_chords=6))
def test_single_moves_preserve_signature(D):
    sig = signature(D)
    for m in enumerate_moves(D, allow_increasing=True, max_chords=D.n + 2):
        assert signature(apply_move(D, m)) == sig, (str(D), m)


@settings(max_examples=200)
@given(diagrams(kinds=(LONG,), max_chords=6), diagrams(kinds=(LONG,), max_chords=6))
def test_connected_sum_psi_is_concatenation(D1, D2):
    S = connected_sum(D1, D2)
    assert psi(S).syllables == (psi(D1) * psi(D2)).syllables
    assert equal(psi(S), psi(D1) * psi(D2))
    assert invariant_l(S) == invariant_l(D1) + invariant_l(D2)
