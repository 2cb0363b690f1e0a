"""Result and witness types returned by the exact oracles."""

from __future__ import annotations

from dataclasses import dataclass

from ..graphs import EdgePair, Vertex
from ..properties import GraphProperty


@dataclass(frozen=True)
class EdgeCut:
    """Edges whose removal disconnects the graph."""

    edges: tuple[EdgePair, ...]


@dataclass(frozen=True)
class Separator:
    """Vertices whose removal disconnects the graph."""

    vertices: tuple[Vertex, ...]


@dataclass(frozen=True)
class ForestPacking:
    """Edge-disjoint spanning forests, each a tuple of edges."""

    forests: tuple[tuple[EdgePair, ...], ...]


@dataclass(frozen=True)
class LamanSubgraph:
    """An independent edge set in the planar rigidity matroid."""

    edges: tuple[EdgePair, ...]


@dataclass(frozen=True)
class LamanPacking:
    """Edge-disjoint spanning minimally rigid subgraphs."""

    subgraphs: tuple[tuple[EdgePair, ...], ...]


@dataclass(frozen=True)
class PartitionWitness:
    """A removed set and a partition of the rest violating some bound."""

    removed: tuple[Vertex, ...]
    blocks: tuple[tuple[Vertex, ...], ...]


@dataclass(frozen=True)
class OracleResult:
    """Exact combinatorial answer plus a re-checkable witness.

    ``exact`` is False only for inconclusive greedy rigid-packing outcomes;
    every other oracle decides its question outright.
    """

    property: GraphProperty
    value: int
    witness: object | None
    exact: bool = True
