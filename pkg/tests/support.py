"""Shared fixtures and reference analyses for the test suite.

Everything here is deliberately independent of the engine's internals:
named graphs are built edge-by-edge, layered views are plain dicts, and
the DDFS reference analysis enumerates paths exhaustively.
"""

from __future__ import annotations

import math
import random
from typing import Optional

from mvmatching.graph import Graph, MatchingState

INF = math.inf


# ---------------------------------------------------------------------------
# Named graphs


def p4() -> tuple[Graph, MatchingState]:
    """Path 0-1-2-3 with the middle edge matched."""
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    return g, MatchingState(4, [(1, 2)])


def triangle() -> tuple[Graph, MatchingState]:
    """f=0 unmatched; u=1, v=2 matched to each other."""
    g = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    return g, MatchingState(3, [(1, 2)])


def k4() -> Graph:
    return Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def c5() -> Graph:
    return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def deferred_bridge_graph() -> tuple[Graph, MatchingState]:
    """A five-cycle hanging off vertex 0 plus an arm 7-5-6 reaching into it.

    Vertices 0..4 form the cycle 0-1-2-3-4-0 with (1,2) and (3,4) matched;
    the unmatched edge (6,1) is seen by the level search before vertex 1's
    evenlevel exists, so its tenacity (7) only becomes known once the
    cycle's petal forms.  The single augmenting path is 7-5-6-1-2-3-4-0.
    """
    g = Graph.from_edges(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (7, 5), (5, 6), (6, 1)],
    )
    return g, MatchingState(8, [(1, 2), (3, 4), (5, 6)])


def two_bridges_graph() -> tuple[Graph, MatchingState]:
    """Two tenacity-7 bridges; only the second yields an augmenting path.

    Vertex 0 fans out through two matched arms (1,2) and (4,5) to the
    matched pair (3,6), whose bridge bottlenecks back at 0 and forms a
    petal.  The second bridge, matched pair (7,8), escapes through
    2-1-0 on one side and the arm 10-9-11 on the other, giving the single
    augmenting path 0-1-2-7-8-10-9-11.
    """
    g = Graph.from_edges(
        12,
        [
            (0, 1), (1, 2), (2, 3),
            (0, 4), (4, 5), (5, 6),
            (3, 6),
            (2, 7), (7, 8), (8, 10), (10, 9), (9, 11),
        ],
    )
    return g, MatchingState(12, [(1, 2), (4, 5), (3, 6), (7, 8), (9, 10)])


def empty_support_graph() -> tuple[Graph, MatchingState]:
    """A tenacity-13 bridge both of whose roots contract to the same bud.

    The two-arm gadget around vertex 0 forms a petal with bud 0 from the
    tenacity-7 bridge (3,6); the extra edge (1,4) then has tenacity 13
    but its DDFS roots coincide at 0, so its support is empty and no
    augmenting path exists.
    """
    g = Graph.from_edges(
        7,
        [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (3, 6), (1, 4)],
    )
    return g, MatchingState(7, [(1, 2), (4, 5), (3, 6)])


def nested_blossom_graph() -> tuple[Graph, MatchingState]:
    """Two nested blossoms based at 0: {1,2} at tenacity 3, plus {3,4}
    at tenacity 7."""
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 1)])
    return g, MatchingState(5, [(1, 2), (3, 4)])


def greedy_matching(g: Graph, seed: int, accept: float = 0.7) -> MatchingState:
    """Seeded greedy partial matching used for corpus instances."""
    rng = random.Random(seed)
    order = list(range(g.m))
    rng.shuffle(order)
    m = MatchingState(g.n)
    for eid in order:
        u, v = g.edges[eid]
        if not m.is_matched(u) and not m.is_matched(v) and rng.random() < accept:
            m.partner[u] = v
            m.partner[v] = u
    return m


# ---------------------------------------------------------------------------
# Layered views and the exhaustive DDFS reference analysis


class DictView:
    """LayeredView backed by plain dicts; used for direct DDFS tests."""

    def __init__(self, layers: dict[int, int], outs: dict[int, list[int]]):
        self.layers = layers
        self.outs = outs

    def layer(self, v: int) -> int:
        return self.layers[v]

    def out_edges(self, v: int) -> list[int]:
        return self.outs.get(v, [])


def random_layered_view(seed: int, max_n: int = 10) -> tuple[DictView, int, int]:
    """Seeded random layered DAG satisfying the reach-layer-0 requirement,
    plus two root vertices."""
    rng = random.Random(seed)
    n = rng.randint(2, max_n)
    depth = rng.randint(1, max(1, n - 1))
    layers = {0: 0}
    for v in range(1, n):
        layers[v] = rng.randint(0, depth)
    outs: dict[int, list[int]] = {}
    for v in range(n):
        if layers[v] == 0:
            continue
        below = [u for u in range(n) if layers[u] < layers[v]]
        k = rng.randint(1, min(len(below), 3))
        outs[v] = rng.sample(below, k)
    tops = sorted(range(n), key=lambda v: -layers[v])
    r = tops[0]
    g = rng.choice([v for v in range(n) if layers[v] <= layers[r]])
    return DictView(layers, outs), r, g


def all_descents(view: DictView, start: int) -> list[list[int]]:
    """Every path from start down to a layer-0 vertex."""
    paths: list[list[int]] = []
    stack: list[int] = [start]

    def go() -> None:
        v = stack[-1]
        if view.layer(v) == 0:
            paths.append(list(stack))
            return
        for u in view.out_edges(v):
            stack.append(u)
            go()
            stack.pop()

    go()
    return paths


def expected_ddfs(view: DictView, r: int, g: int) -> tuple[str, Optional[int]]:
    """Exhaustive reference outcome: ('empty', None), ('paths', None), or
    ('bottleneck', b) with b the unique highest vertex on every descent
    from both roots."""
    if r == g:
        return ("empty", None)
    red = all_descents(view, r)
    green = all_descents(view, g)
    for pr in red:
        sr = set(pr)
        for pg in green:
            if not (sr & set(pg)):
                return ("paths", None)
    common = set(red[0])
    for p in red[1:] + green:
        common &= set(p)
    assert common, "no disjoint pair and no common vertex"
    b = max(common, key=view.layer)
    return ("bottleneck", b)


def paths_to(view: DictView, start: int, target: Optional[int]) -> list[list[int]]:
    """Every descending path from start ending at target (or at any
    layer-0 vertex when target is None)."""
    paths: list[list[int]] = []
    stack: list[int] = [start]

    def go() -> None:
        v = stack[-1]
        if v == target or (target is None and view.layer(v) == 0):
            paths.append(list(stack))
            return
        for u in view.out_edges(v):
            stack.append(u)
            go()
            stack.pop()

    go()
    return paths


def has_disjoint_pair(
    view: DictView, a: int, b: int, target_a: Optional[int], target_b: Optional[int]
) -> bool:
    """Whether vertex-disjoint descending paths exist from a to target_a
    and from b to target_b (None meaning any layer-0 vertex)."""
    for pa in paths_to(view, a, target_a):
        sa = set(pa)
        for pb in paths_to(view, b, target_b):
            if not (sa & set(pb)):
                return True
    return False
