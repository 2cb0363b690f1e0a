"""Bipartite graph values, biregularity validation, generators, and counting.

A vertex is addressed as a ``(part, index)`` pair where ``part`` is the
string ``"x"`` or ``"y"`` and the index counts within that part, so the same
integer can name one vertex on each side. Edges are ``(x_index, y_index)``
pairs. Graph values are immutable after construction and safe to share
across concurrent readers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    DegreeEquationViolated,
    DuplicateEdge,
    EmptyGraph,
    IndexOutOfRange,
    InvalidParam,
    NotBiregular,
    PartMismatch,
    RetriesExhausted,
)
from .prng import SplitMix64

X_PART = "x"
Y_PART = "y"

Vertex = tuple[str, int]
EdgePair = tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple bipartite graph with parts X and Y.

    ``edges`` is normalized to a lexicographically sorted tuple; duplicate
    pairs and out-of-range endpoints are rejected at construction. Sorted
    adjacency lists are derived once and cached on the value.
    """

    x_count: int
    y_count: int
    edges: tuple[EdgePair, ...]
    adj_x: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )
    adj_y: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.x_count < 1 or self.y_count < 1:
            raise InvalidParam("both parts must be nonempty")
        seen = set()
        normalized = []
        for e in self.edges:
            xi, yj = int(e[0]), int(e[1])
            if not 0 <= xi < self.x_count:
                raise IndexOutOfRange(
                    f"x index {xi} outside [0, {self.x_count})"
                )
            if not 0 <= yj < self.y_count:
                raise IndexOutOfRange(
                    f"y index {yj} outside [0, {self.y_count})"
                )
            if (xi, yj) in seen:
                raise DuplicateEdge(f"edge ({xi}, {yj}) listed twice")
            seen.add((xi, yj))
            normalized.append((xi, yj))
        normalized.sort()
        object.__setattr__(self, "edges", tuple(normalized))
        ax = [[] for _ in range(self.x_count)]
        ay = [[] for _ in range(self.y_count)]
        for xi, yj in normalized:
            ax[xi].append(yj)
            ay[yj].append(xi)
        object.__setattr__(self, "adj_x", tuple(tuple(v) for v in ax))
        object.__setattr__(self, "adj_y", tuple(tuple(sorted(v)) for v in ay))
        object.__setattr__(self, "_edge_set", frozenset(normalized))

    @property
    def n(self) -> int:
        return self.x_count + self.y_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, xi: int, yj: int) -> bool:
        return (xi, yj) in self._edge_set

    def degree(self, v: Vertex) -> int:
        part, idx = _check_vertex(self, v)
        return len(self.adj_x[idx] if part == X_PART else self.adj_y[idx])

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        part, idx = _check_vertex(self, v)
        if part == X_PART:
            return tuple((Y_PART, j) for j in self.adj_x[idx])
        return tuple((X_PART, i) for i in self.adj_y[idx])

    def vertices(self) -> tuple[Vertex, ...]:
        return tuple((X_PART, i) for i in range(self.x_count)) + tuple(
            (Y_PART, j) for j in range(self.y_count)
        )

    def without_edge(self, edge: EdgePair) -> "BipartiteGraph":
        e = (int(edge[0]), int(edge[1]))
        if e not in self._edge_set:
            raise InvalidParam(f"edge {e} not present")
        return BipartiteGraph(
            self.x_count,
            self.y_count,
            tuple(f for f in self.edges if f != e),
        )


@dataclass(frozen=True)
class BiregularProfile:
    """Degrees (a, b): every X-vertex has degree a, every Y-vertex degree b."""

    a: int
    b: int


def _check_vertex(g: BipartiteGraph, v: Vertex) -> Vertex:
    part, idx = v
    if part not in (X_PART, Y_PART):
        raise InvalidParam(f"unknown part tag {part!r}")
    bound = g.x_count if part == X_PART else g.y_count
    if not 0 <= idx < bound:
        raise IndexOutOfRange(f"{part} index {idx} outside [0, {bound})")
    return (part, idx)


def validate_biregular(g: BipartiteGraph) -> BiregularProfile:
    """Check biregularity and return the (a, b) profile.

    Raises EmptyGraph for edgeless graphs and NotBiregular naming the first
    deviating vertex. The returned profile always satisfies a*|X| == b*|Y|
    because both sides count the same edges.
    """
    if g.m == 0:
        raise EmptyGraph("graph has no edges")
    a = len(g.adj_x[0])
    for i, nbrs in enumerate(g.adj_x):
        if len(nbrs) != a:
            raise NotBiregular((X_PART, i), a, len(nbrs))
    b = len(g.adj_y[0])
    for j, nbrs in enumerate(g.adj_y):
        if len(nbrs) != b:
            raise NotBiregular((Y_PART, j), b, len(nbrs))
    return BiregularProfile(a, b)


def complete_bipartite(m: int, n: int) -> BipartiteGraph:
    """K_{m,n} with X-side size m: profile (a, b) = (n, m)."""
    if m < 1 or n < 1:
        raise InvalidParam("part sizes must be positive")
    return BipartiteGraph(
        m, n, tuple((i, j) for i in range(m) for j in range(n))
    )


def even_cycle(length: int) -> BipartiteGraph:
    """Cycle on ``length`` vertices, alternating x0, y0, x1, y1, ... around it."""
    if length < 4 or length % 2 != 0:
        raise InvalidParam("cycle length must be even and at least 4")
    half = length // 2
    edges = []
    for i in range(half):
        edges.append((i, i))
        edges.append((i, (i - 1) % half))
    return BipartiteGraph(half, half, tuple(edges))


def heawood() -> BipartiteGraph:
    """Point-line incidence graph of the Fano plane: 7+7 vertices, 21 edges.

    Lines are the translates of the difference set {0, 1, 3} mod 7, the
    canonical labelling used throughout the tests.
    """
    edges = []
    for j in range(7):
        for offset in (0, 1, 3):
            edges.append(((j + offset) % 7, j))
    return BipartiteGraph(7, 7, tuple(edges))


def random_biregular(
    x: int, y: int, a: int, b: int, seed: int, max_retries: int = 10000
) -> BipartiteGraph:
    """Sample a simple (a,b)-biregular graph by the configuration model.

    The a*x degree stubs on the X side are matched against the b*y stubs on
    the Y side through a seeded Fisher-Yates shuffle of the Y stubs; any
    matching containing a repeated pair is rejected and the whole matching is
    resampled, up to ``max_retries`` attempts. The splitmix64 stream makes
    the result identical across platforms for fixed arguments. Dense
    profiles make rejection sampling hopeless: roughly exp((a-1)(b-1)/2)
    attempts are needed on average, and RetriesExhausted signals that.
    """
    if min(x, y, a, b) < 1:
        raise InvalidParam("sizes and degrees must be positive")
    if a * x != b * y:
        raise DegreeEquationViolated(
            f"a*x = {a * x} != {b * y} = b*y: no such biregular graph"
        )
    if a > y or b > x:
        raise InvalidParam(
            "degree exceeds opposite part size; simple graph impossible"
        )
    rng = SplitMix64(seed)
    x_stubs = [i for i in range(x) for _ in range(a)]
    y_base = [j for j in range(y) for _ in range(b)]
    for _ in range(max_retries):
        y_stubs = y_base.copy()
        rng.shuffle(y_stubs)
        pairs = set()
        simple = True
        for xi, yj in zip(x_stubs, y_stubs):
            if (xi, yj) in pairs:
                simple = False
                break
            pairs.add((xi, yj))
        if simple:
            return BipartiteGraph(x, y, tuple(pairs))
    raise RetriesExhausted(
        f"no simple matching in {max_retries} attempts for "
        f"(x={x}, y={y}, a={a}, b={b}, seed={seed})"
    )


def flat_index(g: BipartiteGraph, v: Vertex) -> int:
    """Flatten (part, index) to a single id: X first, then Y offset by x_count."""
    part, idx = _check_vertex(g, v)
    return idx if part == X_PART else g.x_count + idx


def flat_vertex(g: BipartiteGraph, fid: int) -> Vertex:
    if not 0 <= fid < g.n:
        raise IndexOutOfRange(f"flat id {fid} outside [0, {g.n})")
    if fid < g.x_count:
        return (X_PART, fid)
    return (Y_PART, fid - g.x_count)


def flat_adjacency(g: BipartiteGraph) -> list[list[int]]:
    """Adjacency lists over flat ids, neighbor lists sorted."""
    off = g.x_count
    adj = [[] for _ in range(g.n)]
    for xi, yj in g.edges:
        adj[xi].append(off + yj)
        adj[off + yj].append(xi)
    for lst in adj:
        lst.sort()
    return adj


def connected_components(g: BipartiteGraph) -> tuple[tuple[Vertex, ...], ...]:
    """Components as sorted vertex tuples, ordered by their smallest flat id."""
    adj = flat_adjacency(g)
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(flat_vertex(g, fid) for fid in sorted(comp)))
    return tuple(comps)


def is_connected(g: BipartiteGraph) -> bool:
    return len(connected_components(g)) == 1


def cut_size(g: BipartiteGraph, vertices: Iterable[Vertex]) -> int:
    """Number of edges with exactly one endpoint in the given set."""
    members = {_check_vertex(g, v) for v in vertices}
    total = 0
    for xi, yj in g.edges:
        if ((X_PART, xi) in members) != ((Y_PART, yj) in members):
            total += 1
    return total


def cross_edges(
    g: BipartiteGraph, a_side: Iterable[Vertex], b_side: Iterable[Vertex]
) -> int:
    """Exact count of edges between A (within X) and B (within Y)."""
    a_idx = set()
    for v in a_side:
        part, idx = _check_vertex(g, v)
        if part != X_PART:
            raise PartMismatch(f"{v} is not an X-vertex")
        a_idx.add(idx)
    b_idx = set()
    for v in b_side:
        part, idx = _check_vertex(g, v)
        if part != Y_PART:
            raise PartMismatch(f"{v} is not a Y-vertex")
        b_idx.add(idx)
    return sum(
        1 for i in a_idx for j in g.adj_x[i] if j in b_idx
    )
