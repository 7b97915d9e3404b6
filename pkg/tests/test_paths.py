"""Tests for path extraction, petal opening, and vertex removal."""

from __future__ import annotations

import math

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from mvmatching.graph import Graph, MatchingState, check_alternating, generate_random_graph
from mvmatching.oracle import _iter_alternating_paths, compute_profile
from mvmatching.paths import PathRequest, collect_maximal, open_petal, recursive_remove
from mvmatching.phase import init_phase, max_step, min_step, run_phase

import support

INF = math.inf

PROPERTY_SETTINGS = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

_SEED = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def _small_instance(draw: st.DrawFn) -> tuple[Graph, MatchingState]:
    n = draw(st.integers(min_value=1, max_value=10))
    m = draw(st.integers(min_value=0, max_value=n * (n - 1) // 2))
    g = generate_random_graph(n, m, draw(_SEED))
    return g, support.greedy_matching(g, draw(_SEED))


def _triangle_state():
    g, m = support.triangle()
    s = init_phase(g, m)
    for i in range(2):
        min_step(s, g, m, i)
        max_step(s, g, m, i)
    return s, g, m


class TestExtractPath:
    def test_p4_bridge_yields_unique_path(self) -> None:
        g, m = support.p4()
        result = run_phase(g, m)
        assert [sorted(p.vertices) for p in result.paths] == [[0, 1, 2, 3]]
        assert check_alternating(g, m, result.paths[0].vertices) is None

    def test_length_one_case(self) -> None:
        g = Graph.from_edges(2, [(0, 1)])
        result = run_phase(g, MatchingState(2))
        assert result.l_m == 1
        assert [p.vertices for p in result.paths] in ([[0, 1]], [[1, 0]])

    def test_two_bridges_path_jumps_through_bud(self) -> None:
        g, m = support.two_bridges_graph()
        result = run_phase(g, m)
        assert len(result.paths) == 1
        path = result.paths[0].vertices
        assert len(path) == 8
        assert check_alternating(g, m, path) is None
        assert not m.is_matched(path[0]) and not m.is_matched(path[-1])


class TestOpenPetal:
    def test_high_equals_low(self) -> None:
        s, g, m = _triangle_state()
        out = open_petal(s, g, m, PathRequest(high=0, low=0, parity="even"))
        assert out.vertices == [0]

    def test_triangle_odd_path_avoids_bridge(self) -> None:
        s, g, m = _triangle_state()
        out = open_petal(s, g, m, PathRequest(high=1, low=0, parity="odd"))
        assert out.vertices == [0, 1]

    def test_triangle_even_path_uses_bridge(self) -> None:
        s, g, m = _triangle_state()
        out = open_petal(s, g, m, PathRequest(high=1, low=0, parity="even"))
        assert out.vertices == [0, 2, 1]

    def test_confinement_to_petal_members(self) -> None:
        g, m = support.deferred_bridge_graph()
        s = init_phase(g, m)
        for i in range(3):
            min_step(s, g, m, i)
            max_step(s, g, m, i)
        petal = s.petals[0]
        allowed = set(petal.members) | {petal.bud}
        for v in sorted(petal.members):
            for parity in ("even", "odd"):
                out = open_petal(s, g, m, PathRequest(high=v, low=petal.bud, parity=parity))
                assert set(out.vertices) <= allowed
                assert out.vertices[0] == petal.bud and out.vertices[-1] == v
                want = s.evenlevel[v] if parity == "even" else s.oddlevel[v]
                assert len(out.vertices) - 1 == want


class TestRecursiveRemove:
    def test_p4_total_removal(self) -> None:
        g, m = support.p4()
        s = init_phase(g, m)
        for i in range(2):
            min_step(s, g, m, i)
        recursive_remove(s, g, m, {0, 1, 2, 3})
        assert all(s.removed)

    def test_pendant_matched_pair_cascades(self) -> None:
        # 0-1-2-3 with (2,3) matched dangling off the path via vertex 1
        # only: removing 0,1 starves 2, and 3 follows through the cascade.
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        m = MatchingState(4, [(2, 3)])
        s = init_phase(g, m)
        for i in range(4):
            min_step(s, g, m, i)
        recursive_remove(s, g, m, {0, 1})
        assert s.removed[2]

    def test_unmatched_vertex_survives_until_isolated(self) -> None:
        # Star center 0 unmatched with two leaves: removing one leaf
        # leaves 0 connected, removing both isolates it.
        g = Graph.from_edges(3, [(0, 1), (0, 2)])
        m = MatchingState(3)
        s = init_phase(g, m)
        recursive_remove(s, g, m, {1})
        assert not s.removed[0]
        recursive_remove(s, g, m, {2})
        assert s.removed[0]

    def test_remaining_leveled_matched_vertices_keep_predecessors(self) -> None:
        g, m = support.two_bridges_graph()
        result = run_phase(g, m)
        s = result.state
        for v in range(g.n):
            if s.removed[v] or not m.is_matched(v):
                continue
            if min(s.evenlevel[v], s.oddlevel[v]) == INF:
                continue
            assert s.pred_alive[v] >= 1, v


class TestCollectMaximal:
    def test_disjoint_p4_components(self) -> None:
        edges = []
        pairs = []
        for k in range(3):
            base = 4 * k
            edges += [(base, base + 1), (base + 1, base + 2), (base + 2, base + 3)]
            pairs.append((base + 1, base + 2))
        g = Graph.from_edges(12, edges)
        m = MatchingState(12, pairs)
        result = run_phase(g, m)
        assert result.l_m == 3
        assert len(result.paths) == 3
        covered = [v for p in result.paths for v in p.vertices]
        assert len(covered) == len(set(covered))

    def test_two_bridges_exactly_one_path(self) -> None:
        g, m = support.two_bridges_graph()
        result = run_phase(g, m)
        assert len(result.paths) == 1

    def test_shared_vertices_give_one_path(self) -> None:
        # Two would-be paths overlapping on the middle edge: only one fits.
        g = Graph.from_edges(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
        m = MatchingState(6, [(2, 3)])
        result = run_phase(g, m)
        assert result.l_m == 3
        assert len(result.paths) == 1

    def test_collect_maximal_is_idempotent_after_phase(self) -> None:
        g, m = support.two_bridges_graph()
        result = run_phase(g, m)
        again = collect_maximal(result.state, g, m)
        assert [p.vertices for p in again] == [p.vertices for p in result.paths]


class TestPathSetProperties:
    @PROPERTY_SETTINGS
    @given(inst=_small_instance())
    def test_paths_valid_disjoint_and_maximal(
        self, inst: tuple[Graph, MatchingState]
    ) -> None:
        g, m = inst
        result = run_phase(g, m)
        profile_lm = result.l_m
        used: set[int] = set()
        for p in result.paths:
            assert len(p.vertices) - 1 == profile_lm
            assert check_alternating(g, m, p.vertices) is None
            assert not m.is_matched(p.vertices[0])
            assert not m.is_matched(p.vertices[-1])
            assert not (set(p.vertices) & used)
            used |= set(p.vertices)
        if profile_lm == INF:
            return
        # Maximality: no equal-length augmenting path disjoint from the set.
        for f in range(g.n):
            if m.is_matched(f) or f in used:
                continue
            for p in _iter_alternating_paths(g, m, f, max_len=int(profile_lm)):
                if (
                    len(p) - 1 == profile_lm
                    and len(p) > 1
                    and not m.is_matched(p[-1])
                    and not (set(p) & used)
                ):
                    raise AssertionError(f"missed disjoint augmenting path {p}")
