"""One phase of the matching engine.

A phase runs search levels i = 0, 1, ...; MIN assigns minlevels i+1 by
scanning from level-i vertices (unmatched edges on even i, the matched
edge on odd i) and classifies edges as props or bridges; MAX processes
the bridges of tenacity 2i+1 with a double depth-first search over the
layered predecessor structure, forming petals and assigning maxlevels,
until a maximal set of minimum-length augmenting paths is found or no
work remains.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

from .ddfs import Bottleneck, EmptySupport, TwoPaths, run_ddfs
from .graph import AlternatingPath, Graph, MatchingState

INF = math.inf

UNSCANNED = 0
PROP = 1
BRIDGE = 2

TraceFn = Callable[[str], None]


@dataclass
class PetalNode:
    """Record of one formed petal: its bridge, bud, members, and the
    forming DDFS's colors and parent maps."""

    bridge_eid: int
    bud: int
    members: frozenset[int]
    red_root: int
    green_root: int
    red_set: frozenset[int]
    green_set: frozenset[int]
    red_tree: dict[int, Optional[int]]
    green_tree: dict[int, Optional[int]]


@dataclass
class PhaseState:
    n: int
    evenlevel: list[float]
    oddlevel: list[float]
    preds: list[list[int]]
    succs: list[list[int]]
    pred_alive: list[int]
    edge_state: list[int]
    bridge_filed: list[bool]
    br: dict[int, deque[int]]
    deferred_at: dict[int, list[int]]
    petal_of: list[Optional[int]]
    petals: list[PetalNode]
    jump: list[int]
    removed: list[bool]
    alive_deg: list[int]
    schedule: dict[int, list[int]]
    found_paths: list[AlternatingPath] = field(default_factory=list)
    l_m: float = INF
    bridge_processed_at: dict[int, int] = field(default_factory=dict)
    trace: Optional[TraceFn] = None

    def minlevel(self, v: int) -> float:
        return min(self.evenlevel[v], self.oddlevel[v])

    def maxlevel(self, v: int) -> float:
        return max(self.evenlevel[v], self.oddlevel[v])

    def tenacity(self, v: int) -> float:
        return self.evenlevel[v] + self.oddlevel[v]

    def emit(self, line: str) -> None:
        if self.trace is not None:
            self.trace(line)


@dataclass
class PhaseResult:
    paths: list[AlternatingPath]
    l_m: float
    state: PhaseState
    levels_run: int


def init_phase(g: Graph, m: MatchingState, trace: Optional[TraceFn] = None) -> PhaseState:
    """Fresh per-phase state: unmatched vertices at evenlevel 0, all else
    unassigned."""
    n = g.n
    evenlevel = [INF] * n
    oddlevel = [INF] * n
    schedule: dict[int, list[int]] = {}
    level0 = []
    for v, p in enumerate(m.partner):
        if p is None:
            evenlevel[v] = 0
            level0.append(v)
    if level0:
        schedule[0] = level0
    return PhaseState(
        n=n,
        evenlevel=evenlevel,
        oddlevel=oddlevel,
        preds=[[] for _ in range(n)],
        succs=[[] for _ in range(n)],
        pred_alive=[0] * n,
        edge_state=[UNSCANNED] * g.m,
        bridge_filed=[False] * g.m,
        br={},
        deferred_at={},
        petal_of=[None] * n,
        petals=[],
        jump=list(range(n)),
        removed=[False] * n,
        alive_deg=[len(a) for a in g.adj],
        schedule=schedule,
        trace=trace,
    )


def bud_star(s: PhaseState, v: int) -> int:
    """Root of v's bud chain, with path compression (roots never change)."""
    root = v
    while s.jump[root] != root:
        root = s.jump[root]
    while s.jump[v] != root:
        s.jump[v], v = root, s.jump[v]
    return root


def _try_file(s: PhaseState, g: Graph, m: MatchingState, eid: int) -> None:
    """File a classified bridge into Br(tenacity) once both relevant
    endpoint levels are known; otherwise defer on the unknown endpoints."""
    if s.bridge_filed[eid]:
        return
    u, v = g.edges[eid]
    if m.partner[u] == v:
        levels = s.oddlevel
    else:
        levels = s.evenlevel
    t = levels[u] + levels[v] + 1
    if t == INF:
        for x in (u, v):
            if levels[x] == INF:
                s.deferred_at.setdefault(x, []).append(eid)
        return
    s.bridge_filed[eid] = True
    s.br.setdefault(int(t), deque()).append(eid)
    if s.trace is not None:
        s.emit(f"bridge {u} {v} tenacity {int(t)}")


def min_step(s: PhaseState, g: Graph, m: MatchingState, i: int) -> None:
    """MIN at search level i: extend minlevel assignments to i+1 and
    classify newly scanned edges."""
    sources = s.schedule.pop(i, [])
    target_levels = s.evenlevel if (i + 1) % 2 == 0 else s.oddlevel
    even, odd = s.evenlevel, s.oddlevel
    removed, edge_state = s.removed, s.edge_state
    preds, succs, pred_alive = s.preds, s.succs, s.pred_alive
    partner = m.partner
    even_scan = i % 2 == 0
    nxt = i + 1
    next_sched: Optional[list[int]] = None
    for u in sources:
        if removed[u]:
            continue
        if even_scan:
            scan = g.adj[u]
        else:
            p = partner[u]
            if p is None:
                continue
            key = (u, p) if u < p else (p, u)
            scan = ((p, g.edge_index[key]),)
        for v, eid in scan:
            if even_scan and partner[u] == v:
                continue
            if edge_state[eid] != UNSCANNED or removed[v]:
                continue
            if even[v] >= nxt and odd[v] >= nxt:
                edge_state[eid] = PROP
                if target_levels[v] == INF:
                    target_levels[v] = nxt
                    if next_sched is None:
                        next_sched = s.schedule.setdefault(nxt, [])
                    next_sched.append(v)
                    if s.trace is not None:
                        s.emit(f"minlevel {v} {nxt}")
                preds[v].append(u)
                succs[u].append(v)
                pred_alive[v] += 1
            else:
                edge_state[eid] = BRIDGE
                _try_file(s, g, m, eid)


def _assign_maxlevels(
    s: PhaseState, g: Graph, m: MatchingState, members: list[int], t: int
) -> None:
    """Give each new petal member its maxlevel (2i+1 - minlevel) and
    resolve bridges whose tenacity becomes computable."""
    for w in members:
        maxl = t - int(s.minlevel(w))
        target = s.evenlevel if maxl % 2 == 0 else s.oddlevel
        if target[w] != INF:
            continue
        target[w] = maxl
        s.schedule.setdefault(maxl, []).append(w)
        for eid in s.deferred_at.pop(w, ()):
            _try_file(s, g, m, eid)
        if maxl % 2 == 0:
            # Newly resolved inner vertex: non-prop incident edges whose
            # bridge status is already forced can now be filed.
            for x, eid in g.adj[w]:
                if s.edge_state[eid] == PROP or s.bridge_filed[eid]:
                    continue
                if s.edge_state[eid] == BRIDGE:
                    _try_file(s, g, m, eid)
                elif m.partner[w] != x and s.minlevel(x) != INF and not s.removed[x]:
                    # Unscanned unmatched edge to an already-leveled vertex
                    # can never become a prop.
                    s.edge_state[eid] = BRIDGE
                    _try_file(s, g, m, eid)


def _form_petal(
    s: PhaseState,
    g: Graph,
    m: MatchingState,
    eid: int,
    outcome: Bottleneck,
    ru: int,
    rv: int,
    i: int,
) -> None:
    members = sorted(set(outcome.red_set) | set(outcome.green_set))
    members = [w for w in members if s.petal_of[w] is None]
    pid = len(s.petals)
    s.petals.append(
        PetalNode(
            bridge_eid=eid,
            bud=outcome.b,
            members=frozenset(members),
            red_root=ru,
            green_root=rv,
            red_set=outcome.red_set,
            green_set=outcome.green_set,
            red_tree=outcome.red_tree,
            green_tree=outcome.green_tree,
        )
    )
    for w in members:
        s.petal_of[w] = pid
        s.jump[w] = outcome.b
    if s.trace is not None:
        s.emit(f"petal bud {outcome.b} members {','.join(map(str, members))}")
    _assign_maxlevels(s, g, m, members, 2 * i + 1)


class _AdapterView:
    """Layered view of the predecessor structure with petals contracted:
    layer(v) = minlevel(v); edges go to bud*(predecessor)."""

    __slots__ = ("s", "g")

    def __init__(self, s: PhaseState, g: Graph) -> None:
        self.s = s
        self.g = g

    def layer(self, v: int) -> int:
        return int(self.s.minlevel(v))

    def out_edges(self, v: int) -> list[int]:
        s = self.s
        out: list[int] = []
        seen: set[int] = set()
        for u in s.preds[v]:
            if s.removed[u]:
                continue
            b = bud_star(s, u)
            if b == v or s.removed[b] or b in seen:
                continue
            seen.add(b)
            out.append(b)
        return out


def layered_adapter(s: PhaseState, g: Graph) -> _AdapterView:
    return _AdapterView(s, g)


def _process_bridges(s: PhaseState, g: Graph, m: MatchingState, i: int) -> None:
    """Drain Br(2i+1) in FIFO order, running DDFS per bridge."""
    from .paths import extract_path, recursive_remove

    t = 2 * i + 1
    queue = s.br.get(t)
    while queue:
        eid = queue.popleft()
        s.bridge_processed_at.setdefault(eid, i)
        u, v = g.edges[eid]
        if s.removed[u] or s.removed[v]:
            continue
        ru, rv = bud_star(s, u), bud_star(s, v)
        if s.removed[ru] or s.removed[rv]:
            continue
        ddfs_trace = None
        if s.trace is not None:
            ddfs_trace = lambda rec: s.emit(
                "ddfs {action} {tree} {vertex} {layer}".format(**rec)
            )
        outcome = run_ddfs(
            layered_adapter(s, g), ru, rv, trace=ddfs_trace, collect_stats=False
        )
        if isinstance(outcome, EmptySupport):
            continue
        if isinstance(outcome, Bottleneck):
            _form_petal(s, g, m, eid, outcome, ru, rv, i)
            continue
        assert isinstance(outcome, TwoPaths)
        if s.l_m == INF:
            s.l_m = t
        path = extract_path(s, g, m, outcome, eid)
        s.found_paths.append(path)
        if s.trace is not None:
            s.emit("path " + "-".join(map(str, path.vertices)))
        recursive_remove(s, g, m, set(path.vertices))
    s.br.pop(t, None)


def max_step(s: PhaseState, g: Graph, m: MatchingState, i: int) -> None:
    """MAX at search level i: process every tenacity-(2i+1) bridge."""
    _process_bridges(s, g, m, i)


def _pending_beyond(s: PhaseState, i: int) -> bool:
    for level, verts in s.schedule.items():
        if level > i and verts:
            return True
    for t, queue in s.br.items():
        if t > 2 * i + 1 and queue:
            return True
    return False


def run_phase(g: Graph, m: MatchingState, trace: Optional[TraceFn] = None) -> PhaseResult:
    """Run one full phase; returns a maximal set of vertex-disjoint
    minimum-length augmenting paths (possibly empty) and l_m."""
    s = init_phase(g, m, trace=trace)
    i = 0
    cap = 2 * g.n + 4
    while i <= cap:
        if s.trace is not None:
            s.emit(f"level {i}")
        min_step(s, g, m, i)
        max_step(s, g, m, i)
        if s.found_paths:
            break
        if not _pending_beyond(s, i):
            break
        i += 1
    return PhaseResult(paths=s.found_paths, l_m=s.l_m, state=s, levels_run=i + 1)
