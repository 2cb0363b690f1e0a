"""Planar generic rigidity oracles.

Rank of the 2-dimensional generic rigidity matroid is computed with the
(2,3) pebble game: every vertex starts with 2 pebbles, an edge is accepted
when 4 pebbles can be gathered on its endpoints (pebble searches walk the
directed graph of accepted edges and reverse the path they used), and one
pebble is consumed to orient the accepted edge. A graph on n vertices is
rigid exactly when the rank reaches 2n - 3, and the accepted edges of a
rigid graph form a spanning minimally rigid (Laman) subgraph.

An independent randomized cross-check builds the rigidity matrix at random
positions over a large prime field and row-reduces it; by Schwartz-Zippel
its rank equals the generic rank except with vanishing probability, so any
disagreement with the pebble game is treated as a bug.

Greedy packing repeatedly extracts a spanning Laman subgraph and removes
its edges. Insertion order matters only for which basis the game picks, not
for the rank, so extraction feeds edges in a deterministic "diagonal" order
that spreads the basis across vertices; lexicographic order would hand the
first basis every edge at the lowest-numbered vertices and strand them
isolated for the next round. Greedy failure never refutes, except at n <= 8
where an exhaustive search decides the question outright.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParam, InvalidPartition, TooLarge, TooSmall
from ..graphs import (
    BipartiteGraph,
    EdgePair,
    flat_adjacency,
    flat_index,
    flat_vertex,
)
from ..prng import SplitMix64
from ..properties import GraphProperty
from .flow import vertex_connectivity
from .partitions import (
    Partition,
    blocks_from_assignment,
    iter_partition_assignments,
)
from .result import LamanPacking, LamanSubgraph, OracleResult, PartitionWitness

RANK_FIELD_PRIME = 2**31 - 1
EXHAUSTIVE_PACKING_GUARD = 8
PARTITION_SUFFICIENT_GUARD = 9
Z_CAP_MAX = 3


def _pull_pebble(root, banned, peb, succ):
    # DFS along accepted-edge orientations for a pebble not on root/banned;
    # reversing the discovery path carries it back to root.
    parent = {root: None}
    stack = [root]
    while stack:
        w = stack.pop()
        if w != root and w != banned and peb[w] > 0:
            peb[w] -= 1
            peb[root] += 1
            while parent[w] is not None:
                p = parent[w]
                succ[p].remove(w)
                succ[w].add(p)
                w = p
            return True
        for nxt in succ[w]:
            if nxt not in parent:
                parent[nxt] = w
                stack.append(nxt)
    return False


def _pebble_accepted(n, flat_edges):
    """Indices of edges accepted by the (2,3) pebble game, in feed order."""
    peb = [2] * n
    succ = [set() for _ in range(n)]
    accepted = []
    for idx, (u, v) in enumerate(flat_edges):
        while peb[u] + peb[v] < 4:
            if peb[u] < 2 and _pull_pebble(u, v, peb, succ):
                continue
            if peb[v] < 2 and _pull_pebble(v, u, peb, succ):
                continue
            break
        if peb[u] + peb[v] >= 4:
            peb[u] -= 1
            succ[u].add(v)
            accepted.append(idx)
    return accepted


def _flat_edges(g: BipartiteGraph, edges=None):
    pool = g.edges if edges is None else edges
    return [(xi, g.x_count + yj) for xi, yj in pool]


def pebble_rank_edges(g: BipartiteGraph, edges) -> tuple[int, tuple[EdgePair, ...]]:
    """Rank and accepted subset of an arbitrary edge list of g, in list order."""
    edges = list(edges)
    accepted = _pebble_accepted(g.n, _flat_edges(g, edges))
    return len(accepted), tuple(edges[i] for i in accepted)


def rigidity_rank(g: BipartiteGraph) -> OracleResult:
    """Rank of the planar rigidity matroid; rigid iff rank = 2n - 3.

    Edges are fed in canonical sorted order, so the witness (a maximal
    independent edge set, a spanning Laman subgraph when rigid) is
    deterministic.
    """
    if g.n < 2:
        raise TooSmall("rigidity rank needs at least 2 vertices")
    rank, independent = pebble_rank_edges(g, g.edges)
    return OracleResult(
        GraphProperty.RIGID_PACKING, rank, LamanSubgraph(independent), True
    )


def is_rigid(g: BipartiteGraph) -> bool:
    return rigidity_rank(g).value == 2 * g.n - 3


def rigidity_matrix_rank_modular(
    g: BipartiteGraph, seed: int, prime: int = RANK_FIELD_PRIME
) -> int:
    """Rank of the rigidity matrix at seeded random positions over GF(prime).

    Row for edge (u, v): (p_u - p_v) in u's coordinate pair and the negation
    in v's. Random points land outside the degeneracy variety except with
    probability O(poly(n)/prime), so this equals the pebble-game rank for
    all practical purposes and is re-run under several seeds by the tests.
    """
    rng = SplitMix64(seed)
    pos = [(rng.below(prime), rng.below(prime)) for _ in range(g.n)]
    flat = _flat_edges(g)
    if not flat:
        return 0
    mat = np.zeros((len(flat), 2 * g.n), dtype=np.int64)
    for row, (u, v) in enumerate(flat):
        dx = (pos[u][0] - pos[v][0]) % prime
        dy = (pos[u][1] - pos[v][1]) % prime
        mat[row, 2 * u] = dx
        mat[row, 2 * u + 1] = dy
        mat[row, 2 * v] = (-dx) % prime
        mat[row, 2 * v + 1] = (-dy) % prime
    return _rank_mod_p(mat, prime)


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    # Entries stay below p and products below p**2 < 2**62, inside int64.
    a = mat % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if a[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        r += 1
        if r == rows:
            break
    return r


def is_redundantly_rigid(g: BipartiteGraph) -> OracleResult:
    """1 iff g is rigid and stays rigid after deleting any single edge.

    For a non-redundant rigid graph the witness is a critical edge whose
    removal kills rigidity.
    """
    if not is_rigid(g):
        return OracleResult(GraphProperty.GLOBAL_RIGIDITY, 0, None, True)
    target = 2 * g.n - 3
    for edge in g.edges:
        remaining = [e for e in g.edges if e != edge]
        rank, _ = pebble_rank_edges(g, remaining)
        if rank != target:
            return OracleResult(GraphProperty.GLOBAL_RIGIDITY, 0, edge, True)
    return OracleResult(GraphProperty.GLOBAL_RIGIDITY, 1, None, True)


def is_globally_rigid(g: BipartiteGraph) -> OracleResult:
    """1 iff 3-connected and redundantly rigid (the planar characterization)."""
    if g.n < 4:
        raise TooSmall("global rigidity oracle needs at least 4 vertices")
    kappa = vertex_connectivity(g).value
    if kappa < 3:
        return OracleResult(GraphProperty.GLOBAL_RIGIDITY, 0, None, True)
    redundant = is_redundantly_rigid(g)
    return OracleResult(
        GraphProperty.GLOBAL_RIGIDITY, redundant.value, redundant.witness, True
    )


def _spread_order(g: BipartiteGraph, edges):
    period = max(g.x_count, g.y_count)
    return sorted(edges, key=lambda e: ((e[0] + e[1]) % period, e[0], e[1]))


def greedy_rigid_packing(g: BipartiteGraph, k: int) -> OracleResult:
    """Try to extract k edge-disjoint spanning Laman subgraphs.

    value counts the extractions that reached full rank. ``exact`` is True
    when the answer is decisive: all k rounds succeeded, k = 1 (the rank
    test alone decides rigidity), or n <= 8 where exhaustive search settles
    it. Otherwise the result is inconclusive: greedy failure does not
    refute the packing.
    """
    if int(k) != k or k < 1:
        raise InvalidParam(f"k must be a positive integer, got {k!r}")
    if g.n < 2:
        raise TooSmall("rigid packing needs at least 2 vertices")
    target = 2 * g.n - 3
    if k == 1:
        res = rigidity_rank(g)
        rigid = res.value == target
        return OracleResult(
            GraphProperty.RIGID_PACKING,
            1 if rigid else 0,
            LamanPacking((res.witness.edges,)) if rigid else None,
            True,
        )
    remaining = list(g.edges)
    extracted = []
    for _ in range(k):
        rank, independent = pebble_rank_edges(g, _spread_order(g, remaining))
        if rank != target:
            break
        extracted.append(tuple(sorted(independent)))
        used = set(independent)
        remaining = [e for e in remaining if e not in used]
    if len(extracted) == k:
        return OracleResult(
            GraphProperty.RIGID_PACKING, k, LamanPacking(tuple(extracted)), True
        )
    if g.n <= EXHAUSTIVE_PACKING_GUARD:
        best = _exhaustive_packing(g, k)
        return OracleResult(
            GraphProperty.RIGID_PACKING,
            len(best),
            LamanPacking(tuple(best)) if best else None,
            True,
        )
    return OracleResult(
        GraphProperty.RIGID_PACKING,
        len(extracted),
        LamanPacking(tuple(extracted)) if extracted else None,
        False,
    )


def _exhaustive_packing(g: BipartiteGraph, k: int):
    """Largest packing of <= k spanning Laman subgraphs, by full search.

    Any packing of spanning rigid subgraphs can be thinned to spanning
    Laman subgraphs, so searching (2n-3)-subsets loses nothing.
    """
    target = 2 * g.n - 3

    def search(pool, depth):
        if depth == 0:
            return []
        if len(pool) < target * depth:
            best = []
        else:
            best = None
            for subset in itertools.combinations(pool, target):
                rank, _ = pebble_rank_edges(g, subset)
                if rank != target:
                    continue
                chosen = set(subset)
                rest = search([e for e in pool if e not in chosen], depth - 1)
                cand = [tuple(sorted(subset))] + rest
                if best is None or len(cand) > len(best):
                    best = cand
                if len(best) == depth:
                    return best
            if best is None:
                best = []
        if best:
            return best
        # No full subgraph at this depth; try packing fewer.
        return search(pool, depth - 1) if depth > 1 else []

    return search(list(g.edges), k)


@dataclass(frozen=True)
class PartitionBoundReport:
    """Both sides of the packing partition inequality for one (Z, pi)."""

    lhs: int
    rhs: int
    holds: bool


def rigid_packing_partition_bound(
    g: BipartiteGraph, k: int, removed, partition
) -> PartitionBoundReport:
    """Evaluate the partition inequality for k rigid-subgraph packings.

    With Z the removed set and pi a partition of the rest having n0 trivial
    and n0' nontrivial blocks:

        lhs = cross-block edges of pi in g - Z
        rhs = k (3 - |Z|) n0' + 2 k n0 - 3 k - n_Z(pi)

    where n_Z(pi) sums, over trivial blocks {v}, the number of Z-vertices
    adjacent to v. The inequality lhs >= rhs for every choice of (Z, pi) is
    sufficient for k edge-disjoint spanning rigid subgraphs.
    """
    if int(k) != k or k < 1:
        raise InvalidParam(f"k must be a positive integer, got {k!r}")
    z_flat = {flat_index(g, v) for v in removed}
    if len(z_flat) >= g.n:
        raise InvalidPartition("removed set must be a proper subset")
    blocks = (
        partition.blocks if isinstance(partition, Partition) else tuple(partition)
    )
    seen = set()
    flat_blocks = []
    for block in blocks:
        fb = [flat_index(g, v) for v in block]
        if not fb:
            raise InvalidPartition("empty block")
        for fid in fb:
            if fid in z_flat:
                raise InvalidPartition("block overlaps the removed set")
            if fid in seen:
                raise InvalidPartition("blocks are not disjoint")
            seen.add(fid)
        flat_blocks.append(fb)
    if len(seen) != g.n - len(z_flat):
        raise InvalidPartition("blocks do not cover all remaining vertices")

    label = {}
    for li, fb in enumerate(flat_blocks):
        for fid in fb:
            label[fid] = li
    adj = flat_adjacency(g)
    lhs = 0
    for xi, yj in g.edges:
        u, v = xi, g.x_count + yj
        if u in z_flat or v in z_flat:
            continue
        if label[u] != label[v]:
            lhs += 1
    n0 = sum(1 for fb in flat_blocks if len(fb) == 1)
    n0p = len(flat_blocks) - n0
    nz = sum(
        sum(1 for w in adj[fb[0]] if w in z_flat)
        for fb in flat_blocks
        if len(fb) == 1
    )
    rhs = k * (3 - len(z_flat)) * n0p + 2 * k * n0 - 3 * k - nz
    return PartitionBoundReport(lhs=lhs, rhs=rhs, holds=lhs >= rhs)


def rigid_packing_partition_sufficient(
    g: BipartiteGraph, k: int, z_cap: int = 2
) -> OracleResult:
    """Check the partition inequality over all |Z| <= z_cap and all partitions.

    value 1 (all hold): the bounded check found no violation; for graphs
    within the guard this implies k edge-disjoint spanning rigid subgraphs.
    value 0: some (Z, pi) violates the inequality and is returned as the
    witness; the condition is only sufficient, so this refutes nothing.
    """
    if int(k) != k or k < 1:
        raise InvalidParam(f"k must be a positive integer, got {k!r}")
    if not 0 <= z_cap <= Z_CAP_MAX:
        raise InvalidParam(f"z_cap must be between 0 and {Z_CAP_MAX}")
    n = g.n
    if n > PARTITION_SUFFICIENT_GUARD:
        raise TooLarge(
            f"partition check guarded at {PARTITION_SUFFICIENT_GUARD} vertices"
        )
    adj = flat_adjacency(g)
    flat_edges = _flat_edges(g)
    for z_size in range(0, min(z_cap, n - 1) + 1):
        for z_combo in itertools.combinations(range(n), z_size):
            z_set = set(z_combo)
            rest = [v for v in range(n) if v not in z_set]
            live = [
                (u, v) for u, v in flat_edges if u not in z_set and v not in z_set
            ]
            zdeg = [sum(1 for w in adj[v] if w in z_set) for v in rest]
            index_of = {v: i for i, v in enumerate(rest)}
            for assignment in iter_partition_assignments(len(rest)):
                t = max(assignment) + 1
                sizes = [0] * t
                for lab in assignment:
                    sizes[lab] += 1
                n0 = sum(1 for s in sizes if s == 1)
                n0p = t - n0
                nz = sum(
                    zdeg[i]
                    for i, lab in enumerate(assignment)
                    if sizes[lab] == 1
                )
                rhs = k * (3 - z_size) * n0p + 2 * k * n0 - 3 * k - nz
                lhs = sum(
                    1
                    for u, v in live
                    if assignment[index_of[u]] != assignment[index_of[v]]
                )
                if lhs < rhs:
                    verts = [flat_vertex(g, v) for v in rest]
                    witness = PartitionWitness(
                        removed=tuple(flat_vertex(g, v) for v in z_combo),
                        blocks=blocks_from_assignment(verts, assignment),
                    )
                    return OracleResult(
                        GraphProperty.RIGID_PACKING, 0, witness, True
                    )
    return OracleResult(GraphProperty.RIGID_PACKING, 1, None, True)
