"""Breadth-first search for a move sequence reducing a diagram to the unknot."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .gauss import LONG, ChordDiagram, closed_key
from .invariants import closed_invariants, invariants
from .moves import Move, apply_move, enumerate_moves

TRIVIALIZED = "trivialized"
EXHAUSTED = "exhausted"
BUDGET_HIT = "budget_hit"


class ConsistencyError(AssertionError):
    """A search claimed to trivialize a diagram with a nontrivial invariant."""


@dataclass
class SearchResult:
    status: str
    moves: list[Move] = field(default_factory=list)
    expanded: int = 0
    visited: int = 0


def _key(D: ChordDiagram):
    return D.mate if D.kind == LONG else closed_key(D)


def has_nontrivial_invariant(D: ChordDiagram) -> bool:
    if D.kind == LONG:
        b = invariants(D)
        return b.l != 0 or len(b.psi_nf) > 0
    b = closed_invariants(D)
    return b.abs_l != 0 or len(b.psi_canonical) > 0


def search_trivialize(D: ChordDiagram, budget: int, max_chords: Optional[int] = None) -> SearchResult:
    """BFS over the move graph, at most ``budget`` node expansions.

    Diagrams are deduplicated by pairing (long) or up to rotation (closed).
    ``max_chords`` defaults to the diagram's own chord count.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if max_chords is None:
        max_chords = D.n
    parent: dict = {_key(D): None}
    queue = deque([(D, _key(D))])
    expanded = 0
    found = None
    while queue:
        cur, k = queue.popleft()
        if cur.n == 0:
            found = k
            break
        if expanded >= budget:
            return SearchResult(BUDGET_HIT, expanded=expanded, visited=len(parent))
        expanded += 1
        for m in enumerate_moves(cur, allow_increasing=True, max_chords=max_chords):
            nxt = apply_move(cur, m)
            nk = _key(nxt)
            if nk in parent:
                continue
            parent[nk] = (k, m)
            if nxt.n == 0:
                found = nk
                queue.clear()
                break
            queue.append((nxt, nk))
    if found is None:
        return SearchResult(EXHAUSTED, expanded=expanded, visited=len(parent))

    path = []
    while parent[found] is not None:
        found, m = parent[found]
        path.append(m)
    path.reverse()
    if has_nontrivial_invariant(D):
        raise ConsistencyError(f"search trivialized {D} although an invariant is nontrivial")
    end = replay(D, path)
    if end.n != 0:
        raise ConsistencyError("recorded move sequence does not end at the unknot")
    return SearchResult(TRIVIALIZED, path, expanded, len(parent))


def replay(D: ChordDiagram, moves: list[Move]) -> ChordDiagram:
    for m in moves:
        D = apply_move(D, m)
    return D
