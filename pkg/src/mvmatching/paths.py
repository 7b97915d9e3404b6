"""Augmenting-path extraction and bookkeeping after a successful search.

A TwoPaths outcome certifies a minimum-length augmenting path through
the triggering bridge.  The concrete path is recovered by descending the
predecessor structure with backtracking, opening petals through their
bridges wherever a vertex must be traversed at its maxlevel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .ddfs import TwoPaths
from .graph import AlternatingPath, Graph, MatchingState, check_alternating
from .phase import PhaseState, _process_bridges

INF = math.inf


class ExtractionError(RuntimeError):
    """Engine state inconsistent with a promised path; indicates a bug."""


@dataclass
class PathRequest:
    """Ask for an alternating path from `low` up to `high` of the given
    parity, confined to high's petal and its bud chain."""

    high: int
    low: int
    parity: str  # 'even' | 'odd'
    context: Optional[int] = None  # petal id, if known


def _candidates(
    s: PhaseState,
    g: Graph,
    m: MatchingState,
    x: int,
    want: float,
    used: set[int],
    target: Optional[int],
) -> Iterator[list[int]]:
    """Yield alternating paths [x, ..., end] of exactly `want` minus
    minlevel(end) edges, descending the predecessor structure.

    `want` must be one of x's two levels.  When it is the minlevel the
    path follows props only; when it is the maxlevel the path is routed
    through x's petal bridge, recursing for inner bridge endpoints.
    While a candidate is being yielded its vertices are held in `used`,
    so nested generators automatically produce disjoint continuations.
    """
    if want == INF or x in used or s.removed[x]:
        return
    minl = s.minlevel(x)
    if want == minl:
        floor = 0 if target is None else s.minlevel(target)
        if minl == floor:
            if target is None or x == target:
                used.add(x)
                try:
                    yield [x]
                finally:
                    used.remove(x)
            return
        if minl < floor:
            return
        used.add(x)
        try:
            for p in s.preds[x]:
                if s.removed[p]:
                    continue
                # A predecessor sits at level want - 1, which may be its
                # maxlevel (petal member): the recursion dispatches.
                for sub in _candidates(s, g, m, p, want - 1, used, target):
                    yield [x] + sub
        finally:
            used.remove(x)
        return
    if want != s.maxlevel(x):
        return
    # Maxlevel side: the path must cross x's petal bridge.
    pid = s.petal_of[x]
    if pid is None:
        return
    petal = s.petals[pid]
    c0, d0 = g.edges[petal.bridge_eid]
    bridge_matched = m.partner[c0] == d0
    side = s.oddlevel if bridge_matched else s.evenlevel
    orientations = [(c0, d0), (d0, c0)]
    if x in petal.green_set:
        orientations.reverse()
    for c, d in orientations:
        for up in _candidates(s, g, m, c, side[c], used, x):
            prefix = list(reversed(up))
            for down in _candidates(s, g, m, d, side[d], used, target):
                yield prefix + down


def extract_path(
    s: PhaseState, g: Graph, m: MatchingState, outcome: TwoPaths, bridge: int
) -> AlternatingPath:
    """Recover the augmenting path certified by a TwoPaths outcome."""
    u, v = g.edges[bridge]
    side = s.oddlevel if m.partner[u] == v else s.evenlevel
    expected_len = side[u] + side[v] + 1
    used: set[int] = set()
    for left in _candidates(s, g, m, u, side[u], used, None):
        prefix = list(reversed(left))
        for right in _candidates(s, g, m, v, side[v], used, None):
            path = prefix + right
            if len(path) - 1 != expected_len:
                continue
            if check_alternating(g, m, path) is not None:
                continue
            if m.is_matched(path[0]) or m.is_matched(path[-1]):
                continue
            return AlternatingPath(path)
    raise ExtractionError(f"no augmenting path through bridge {g.edges[bridge]}")


def open_petal(
    s: PhaseState, g: Graph, m: MatchingState, req: PathRequest
) -> AlternatingPath:
    """Minimum alternating path of the requested parity from req.low up to
    req.high, confined to the petal structure."""
    want = s.evenlevel[req.high] if req.parity == "even" else s.oddlevel[req.high]
    if req.high == req.low:
        return AlternatingPath([req.high])
    used: set[int] = set()
    for p in _candidates(s, g, m, req.high, want, used, req.low):
        return AlternatingPath(list(reversed(p)))
    raise ExtractionError(
        f"no {req.parity} path from {req.low} to {req.high} in petal context"
    )


def recursive_remove(s: PhaseState, g: Graph, m: MatchingState, seed: set[int]) -> None:
    """Remove the seed vertices, then cascade: a leveled matched vertex
    loses its last live predecessor and goes too; an unmatched vertex
    goes only once isolated."""
    removed = s.removed
    succs, pred_alive, alive_deg = s.succs, s.pred_alive, s.alive_deg
    even, odd = s.evenlevel, s.oddlevel
    partner = m.partner
    stack = [v for v in seed if not removed[v]]
    for v in stack:
        removed[v] = True
    while stack:
        w = stack.pop()
        for z in succs[w]:
            if removed[z]:
                continue
            pred_alive[z] -= 1
            if (
                pred_alive[z] == 0
                and partner[z] is not None
                and (even[z] != INF or odd[z] != INF)
            ):
                removed[z] = True
                stack.append(z)
        for z, _eid in g.adj[w]:
            if removed[z]:
                continue
            alive_deg[z] -= 1
            if alive_deg[z] == 0 and partner[z] is None:
                removed[z] = True
                stack.append(z)


def collect_maximal(s: PhaseState, g: Graph, m: MatchingState) -> list[AlternatingPath]:
    """Drain the remaining bridges of tenacity l_m on the reduced graph and
    return the accumulated maximal disjoint path set."""
    if s.l_m != INF:
        _process_bridges(s, g, m, (int(s.l_m) - 1) // 2)
    return list(s.found_paths)
