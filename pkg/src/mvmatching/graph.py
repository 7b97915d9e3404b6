"""Graph and matching primitives shared by the matching engine and the oracle.

Vertices are integers 0..n-1 internally.  The DIMACS edge format (1-based)
is used only at the I/O boundary.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO


class GraphFormatError(ValueError):
    """Raised for malformed DIMACS input or out-of-range indices."""


@dataclass(frozen=True)
class Graph:
    """Static undirected simple graph.

    Attributes:
        n: number of vertices (identified by indices 0..n-1).
        edges: list of unordered vertex pairs (u, v) with u < v.
        adj: per-vertex list of (neighbor, edge_id) pairs.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[tuple[int, int], ...], ...]
    edge_index: dict[tuple[int, int], int]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable.

        Self-loops are rejected; duplicate undirected edges are merged.
        """
        seen: set[tuple[int, int]] = set()
        edge_list: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex index out of range: ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            edge_list.append(key)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        index: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(edge_list):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
            index[(u, v)] = eid
        return Graph(n, tuple(edge_list), tuple(tuple(a) for a in adj), index)

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self.edge_index

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def parse_dimacs(text: str | TextIO) -> Graph:
    """Parse a graph in DIMACS edge format.

    Comment lines start with 'c'.  One problem line 'p edge <n> <m>' must
    precede the 'e <u> <v>' edge lines (1-based endpoints).  Parallel edges
    are deduplicated; self-loops are an error.
    """
    if hasattr(text, "read"):
        text = text.read()
    n: Optional[int] = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphFormatError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed problem line {line!r}")
            if n < 0 or declared_m < 0:
                raise GraphFormatError(f"line {lineno}: negative count in problem line")
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex index out of range [1, {n}]")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph.from_edges(n, edges)


def serialize_dimacs(g: Graph) -> str:
    """Render a graph in DIMACS edge format (1-based)."""
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in g.edges:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


class MatchingState:
    """Matched partner per vertex; None for unmatched vertices."""

    __slots__ = ("partner",)

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()) -> None:
        self.partner: list[Optional[int]] = [None] * n
        for u, v in pairs:
            self.partner[u] = v
            self.partner[v] = u

    @property
    def n(self) -> int:
        return len(self.partner)

    def is_matched(self, v: int) -> bool:
        return self.partner[v] is not None

    def size(self) -> int:
        return sum(1 for p in self.partner if p is not None) // 2

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in enumerate(self.partner) if v is not None and u < v]

    def copy(self) -> "MatchingState":
        out = MatchingState(self.n)
        out.partner = list(self.partner)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MatchingState) and self.partner == other.partner

    def __repr__(self) -> str:
        return f"MatchingState({self.pairs()!r})"


def serialize_matching(m: MatchingState) -> str:
    """Render a matching: 'size <k>' then one 'matched <u> <v>' line per edge."""
    pairs = m.pairs()
    lines = [f"size {len(pairs)}"]
    for u, v in pairs:
        lines.append(f"matched {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_matching(text: str | TextIO, n: int) -> MatchingState:
    """Parse the matching serialization produced by serialize_matching."""
    if hasattr(text, "read"):
        text = text.read()
    declared: Optional[int] = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "size" and len(fields) == 2:
            declared = int(fields[1])
        elif fields[0] == "matched" and len(fields) == 3:
            u, v = int(fields[1]), int(fields[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex index out of range [1, {n}]")
            pairs.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized line {line!r}")
    if declared is not None and declared != len(pairs):
        raise GraphFormatError(f"declared size {declared} but {len(pairs)} matched lines")
    seen: set[int] = set()
    for u, v in pairs:
        if u in seen or v in seen or u == v:
            raise GraphFormatError(f"vertex repeated in matching: ({u + 1}, {v + 1})")
        seen.update((u, v))
    return MatchingState(n, pairs)


@dataclass
class AlternatingPath:
    """Ordered vertex sequence; alternation is relative to a MatchingState."""

    vertices: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return max(0, len(self.vertices) - 1)

    def __iter__(self):
        return iter(self.vertices)


def validate_matching(g: Graph, m: MatchingState) -> list[str]:
    """Return a list of violation descriptions; empty means valid."""
    violations: list[str] = []
    if m.n != g.n:
        violations.append(f"matching covers {m.n} vertices but graph has {g.n}")
        return violations
    for u, p in enumerate(m.partner):
        if p is None:
            continue
        if not (0 <= p < g.n):
            violations.append(f"partner({u}) = {p} out of range")
            continue
        if m.partner[p] != u:
            violations.append(f"asymmetry: partner({u}) = {p} but partner({p}) = {m.partner[p]}")
        if u < p and not g.has_edge(u, p):
            violations.append(f"matched pair ({u}, {p}) is not a graph edge")
    return violations


def check_alternating(g: Graph, m: MatchingState, path: list[int]) -> Optional[str]:
    """Return a defect description for a non-alternating/non-simple path, or None."""
    if len(set(path)) != len(path):
        return "path repeats a vertex"
    prev_matched: Optional[bool] = None
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return f"({a}, {b}) is not a graph edge"
        matched = m.partner[a] == b
        if prev_matched is not None and matched == prev_matched:
            return f"edges do not alternate at ({a}, {b})"
        prev_matched = matched
    return None


def augment(m: MatchingState, g: Graph, p: AlternatingPath) -> MatchingState:
    """Flip the matched/unmatched edges along an augmenting path.

    Raises ValueError unless p is a simple alternating path between two
    unmatched vertices starting and ending with unmatched edges.
    Returns a new MatchingState; see augment_in_place for the mutating
    variant.
    """
    out = m.copy()
    augment_in_place(out, g, p)
    return out


def augment_in_place(m: MatchingState, g: Graph, p: AlternatingPath) -> None:
    """Validate and apply an augmenting path directly to m."""
    path = p.vertices
    if len(path) < 2:
        raise ValueError(f"augmenting path must have at least 2 vertices, got {len(path)}")
    defect = check_alternating(g, m, path)
    if defect is not None:
        raise ValueError(defect)
    for endpoint in (path[0], path[-1]):
        if m.is_matched(endpoint):
            raise ValueError(f"endpoint {endpoint} matched")
    if len(path) % 2 != 0:
        raise ValueError(f"augmenting path must have even vertex count, got {len(path)}")
    for k, (a, b) in enumerate(zip(path, path[1:])):
        if k % 2 == 0:
            m.partner[a] = b
            m.partner[b] = a


def generate_random_graph(n: int, m: int, seed: int) -> Graph:
    """Deterministically sample a simple graph with exactly m distinct edges."""
    cap = n * (n - 1) // 2
    if m > cap:
        raise ValueError(f"m = {m} exceeds simple-graph capacity {cap} for n = {n}")
    rng = random.Random(seed)
    if cap and m > cap // 2:
        # Dense regime: sample from the explicit pair list to avoid rejection stalls.
        all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen = rng.sample(all_pairs, m)
        return Graph.from_edges(n, chosen)
    chosen_set: set[tuple[int, int]] = set()
    order: list[tuple[int, int]] = []
    while len(order) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in chosen_set:
            continue
        chosen_set.add(key)
        order.append(key)
    return Graph.from_edges(n, order)
