"""Double depth-first search over an abstract layered structure.

Two coordinated DFS trees (red rooted at r, green rooted at g) descend a
layered DAG.  The search ends either at the highest bottleneck vertex --
a vertex every root-to-layer-0 path must cross -- together with a
red/green partition of the visited vertices, or with two vertex-disjoint
paths reaching distinct layer-0 vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional, Protocol

RED = 0
GREEN = 1
_NAMES = ("red", "green")

# Coordination modes: NORMAL alternates the trees by the keep-ahead rule;
# in SEEK_RED / SEEK_GREEN one tree must find a vertex at or below the
# contested vertex's layer while the other waits.
_NORMAL = 0
_SEEK_RED = 1
_SEEK_GREEN = 2


class LayeredView(Protocol):
    def layer(self, v: int) -> int: ...

    def out_edges(self, v: int) -> list[int]: ...


class LayeredViewError(ValueError):
    """The view violates layer monotonicity or the reach-layer-0 requirement."""


class DdfsInternalError(RuntimeError):
    """Coordination reached a state believed unreachable; indicates a bug."""


@dataclass
class DdfsStats:
    edge_explorations: Counter = field(default_factory=Counter)  # (vertex, out-index)
    backtracks: Counter = field(default_factory=Counter)  # (vertex, tree)


@dataclass
class Bottleneck:
    b: int
    red_set: frozenset[int]
    green_set: frozenset[int]
    red_tree: dict[int, Optional[int]]
    green_tree: dict[int, Optional[int]]
    stats: DdfsStats


@dataclass
class TwoPaths:
    r0: int
    g0: int
    red_path: list[int]
    green_path: list[int]
    stats: DdfsStats


@dataclass
class EmptySupport:
    stats: DdfsStats


DdfsOutcome = Bottleneck | TwoPaths | EmptySupport

TraceFn = Callable[[dict], None]


class _Ddfs:
    def __init__(
        self,
        view: LayeredView,
        r: int,
        g: int,
        trace: Optional[TraceFn],
        collect_stats: bool = True,
    ):
        self.view = view
        self.trace = trace
        self.collect_stats = collect_stats
        self.roots = (r, g)
        self.color: dict[int, int] = {r: RED, g: GREEN}
        self.parent: tuple[dict[int, Optional[int]], dict[int, Optional[int]]] = (
            {r: None},
            {g: None},
        )
        self.children: tuple[dict[int, list[int]], dict[int, list[int]]] = (
            {},
            {},
        )
        self.center = [r, g]
        self.barrier = [r, g]
        self.mode = _NORMAL
        self.contested: Optional[int] = None
        self.outs: dict[int, list[int]] = {}
        self.next_edge: dict[int, int] = {}
        self.stats = DdfsStats()

    # -- view access -------------------------------------------------

    def _out_edges(self, v: int) -> list[int]:
        cached = self.outs.get(v)
        if cached is None:
            cached = list(self.view.out_edges(v))
            lv = self.view.layer(v)
            for u in cached:
                if self.view.layer(u) >= lv:
                    raise LayeredViewError(
                        f"edge ({v}, {u}) does not strictly decrease layer"
                    )
            if not cached and lv > 0:
                raise LayeredViewError(f"dead end at {v} (layer {lv})")
            self.outs[v] = cached
        return cached

    def _emit(self, action: str, tree: Optional[int], vertex: int) -> None:
        if self.trace is not None:
            self.trace(
                {
                    "action": action,
                    "tree": _NAMES[tree] if tree is not None else "-",
                    "vertex": vertex,
                    "layer": self.view.layer(vertex),
                }
            )

    # -- tree maintenance ---------------------------------------------

    def _claim(self, t: int, u: int) -> None:
        c = self.center[t]
        self.color[u] = t
        self.parent[t][u] = c
        self.children[t].setdefault(c, []).append(u)
        self.center[t] = u
        self._emit("advance", t, u)
        if (
            (self.mode == _SEEK_RED and t == RED)
            or (self.mode == _SEEK_GREEN and t == GREEN)
        ) and self.view.layer(u) <= self.view.layer(self.contested):
            self._emit("terminate_seek", t, u)
            self.mode = _NORMAL
            self.contested = None

    def _transfer_subtree(self, v: int, from_t: int, to_t: int) -> None:
        """Move v's fully explored descendants into the other tree.

        Invoked when a contested vertex changes color: its dead subtree
        is only reachable through it, so it must switch sides with it.
        """
        stack = list(self.children[from_t].get(v, []))
        self.children[from_t].pop(v, None)
        while stack:
            x = stack.pop()
            self.color[x] = to_t
            self.parent[to_t][x] = self.parent[from_t].pop(x)
            kids = self.children[from_t].pop(x, [])
            self.children[to_t][x] = kids
            stack.extend(kids)

    def _backtrack(self, t: int, v: int) -> None:
        if self.collect_stats:
            self.stats.backtracks[(v, t)] += 1
        self.center[t] = self.parent[t][v]
        self._emit("backtrack", t, v)

    # -- coordination -------------------------------------------------

    def run(self) -> DdfsOutcome:
        r, g = self.roots
        if r == g:
            return EmptySupport(self.stats)
        while True:
            if self.mode == _NORMAL:
                lr = self.view.layer(self.center[RED])
                lg = self.view.layer(self.center[GREEN])
                if lr >= lg and lr > 0:
                    t = RED
                elif lg > 0:
                    t = GREEN
                else:
                    return self._two_paths()
            elif self.mode == _SEEK_RED:
                t = RED
            else:
                t = GREEN
            outcome = self._step(t)
            if outcome is not None:
                return outcome

    def _step(self, t: int) -> Optional[DdfsOutcome]:
        o = 1 - t
        c = self.center[t]
        outs = self._out_edges(c)
        while True:
            i = self.next_edge.get(c, 0)
            if i < len(outs):
                self.next_edge[c] = i + 1
                if self.collect_stats:
                    self.stats.edge_explorations[(c, i)] += 1
                u = outs[i]
                owner = self.color.get(u)
                if owner is None:
                    self._claim(t, u)
                    return None
                if u == self.contested:
                    continue
                if self.mode == _NORMAL and u == self.center[o]:
                    return self._meet(t, u)
                continue  # interior of a tree: skip
            # Out-edges exhausted: back up or resolve the contest.
            if c != self.barrier[t]:
                self._backtrack(t, c)
                return None
            if self.mode == _SEEK_RED and t == RED:
                return self._concede_red()
            if self.mode == _SEEK_GREEN and t == GREEN:
                return self._bottleneck(self.contested)
            raise DdfsInternalError(
                f"{_NAMES[t]} starved at barrier {c} outside a contest"
            )

    def _meet(self, prober: int, v: int) -> Optional[DdfsOutcome]:
        """The prober reached the other tree's center: contest v.

        v is first given to green; red must then find an equally deep
        alternative.
        """
        self.parent[prober][v] = self.center[prober]
        self.children[prober].setdefault(self.center[prober], []).append(v)
        self._emit("meet", prober, v)
        if self.barrier[RED] == v:
            # Red already won v once and may not rescind: green (the
            # prober) concedes the vertex immediately and must seek.
            self.mode = _SEEK_GREEN
            self.contested = v
            self._emit("reassign", RED, v)
            return None
        if self.color[v] == RED:
            self._backtrack(RED, v)
            self._transfer_subtree(v, RED, GREEN)
            self.color[v] = GREEN
        if prober == GREEN:
            self.center[GREEN] = v
        self.mode = _SEEK_RED
        self.contested = v
        self._emit("reassign", GREEN, v)
        return None

    def _concede_red(self) -> Optional[DdfsOutcome]:
        """Red failed to find an alternative: the contested vertex is
        reassigned to red and green must now seek below it."""
        v = self.contested
        self._transfer_subtree(v, GREEN, RED)
        self.color[v] = RED
        self.center[RED] = v
        self.barrier[RED] = v
        self._emit("reassign", RED, v)
        if self.parent[GREEN].get(v) is None or v == self.barrier[GREEN]:
            return self._bottleneck(v)
        self._backtrack(GREEN, v)
        self.mode = _SEEK_GREEN
        return None

    def _bottleneck(self, b: int) -> Bottleneck:
        self._emit("terminate", None, b)
        red_set = frozenset(v for v, c in self.color.items() if c == RED and v != b)
        green_set = frozenset(v for v, c in self.color.items() if c == GREEN and v != b)
        return Bottleneck(
            b=b,
            red_set=red_set,
            green_set=green_set,
            red_tree=dict(self.parent[RED]),
            green_tree=dict(self.parent[GREEN]),
            stats=self.stats,
        )

    def _two_paths(self) -> TwoPaths:
        def chain(t: int) -> list[int]:
            path = [self.center[t]]
            while True:
                p = self.parent[t][path[-1]]
                if p is None:
                    break
                path.append(p)
            path.reverse()
            return path

        red_path = chain(RED)
        green_path = chain(GREEN)
        self._emit("terminate", None, self.center[RED])
        return TwoPaths(
            r0=self.center[RED],
            g0=self.center[GREEN],
            red_path=red_path,
            green_path=green_path,
            stats=self.stats,
        )


def run_ddfs(
    view: LayeredView,
    r: int,
    g: int,
    trace: Optional[TraceFn] = None,
    collect_stats: bool = True,
) -> DdfsOutcome:
    """Run the double depth-first search from roots r (red) and g (green).

    `collect_stats=False` skips the per-edge and per-backtrack counters
    (used by the engine's hot path)."""
    return _Ddfs(view, r, g, trace, collect_stats).run()
