import pytest

from freeknot.gauss import parse_diagram
from freeknot.moves import R1Remove, R3
from freeknot.search import BUDGET_HIT, EXHAUSTED, TRIVIALIZED, has_nontrivial_invariant, replay, search_trivialize


def test_d2_closed_one_move(d2_closed):
    res = search_trivialize(d2_closed, budget=100)
    assert res.status == TRIVIALIZED
    assert len(res.moves) == 1
    assert type(res.moves[0]).__name__ == "R2Remove"


def test_trefoil_shortest_certificate(trefoil):
    res = search_trivialize(trefoil, budget=1000)
    assert res.status == TRIVIALIZED
    # A and B already bound a bigon, so BFS beats the R3 + 3 x R1 route
    assert len(res.moves) == 2
    assert replay(trefoil, res.moves).n == 0


def test_trefoil_r3_route(trefoil):
    D = replay(trefoil, [R3((1, 3, 5))])
    assert D.n == 3
    end = replay(D, [R1Remove(2), R1Remove(2), R1Remove(1)])
    assert end.n == 0


def test_empty_is_trivial():
    res = search_trivialize(parse_diagram("long:"), budget=1)
    assert res.status == TRIVIALIZED and res.moves == []


def test_d7_not_trivialized(d7):
    assert has_nontrivial_invariant(d7)
    res = search_trivialize(d7, budget=2000, max_chords=10)
    assert res.status in (EXHAUSTED, BUDGET_HIT)
    assert res.moves == []


def test_budget_hit(d7):
    res = search_trivialize(d7, budget=50, max_chords=11)
    assert res.status == BUDGET_HIT and res.expanded == 50


def test_bad_budget(d7):
    with pytest.raises(ValueError):
        search_trivialize(d7, budget=0)


def test_closed_d7_not_trivialized(d7):
    res = search_trivialize(parse_diagram("closed: A E B F A G B C E D F D G C"), budget=500, max_chords=9)
    assert res.status != TRIVIALIZED
