"""Graph values, validation, generators, and counting primitives."""

import pytest

from biregular import (
    BipartiteGraph,
    complete_bipartite,
    connected_components,
    cross_edges,
    cut_size,
    even_cycle,
    heawood,
    is_connected,
    random_biregular,
    validate_biregular,
)
from biregular.errors import (
    DegreeEquationViolated,
    DuplicateEdge,
    EmptyGraph,
    IndexOutOfRange,
    InvalidParam,
    NotBiregular,
    PartMismatch,
    RetriesExhausted,
)
from biregular.graphs import flat_adjacency, flat_index, flat_vertex
from biregular.prng import derive_seed

from testutil import girth


def test_validate_complete_bipartite_2_3():
    g = complete_bipartite(2, 3)
    profile = validate_biregular(g)
    assert (profile.a, profile.b) == (3, 2)
    assert profile.a * g.x_count == profile.b * g.y_count


def test_validate_six_cycle():
    g = even_cycle(6)
    assert g.m == 6
    profile = validate_biregular(g)
    assert (profile.a, profile.b) == (2, 2)
    assert girth(g) == 6


def test_validate_rejects_missing_edge():
    g = complete_bipartite(2, 3)
    broken = BipartiteGraph(2, 3, g.edges[:-1])
    with pytest.raises(NotBiregular):
        validate_biregular(broken)


def test_validate_rejects_empty():
    with pytest.raises(EmptyGraph):
        validate_biregular(BipartiteGraph(2, 2, ()))


def test_construction_rejects_bad_edges():
    with pytest.raises(IndexOutOfRange):
        BipartiteGraph(3, 3, ((5, 0),))
    with pytest.raises(IndexOutOfRange):
        BipartiteGraph(3, 3, ((0, -1),))
    with pytest.raises(DuplicateEdge):
        BipartiteGraph(3, 3, ((0, 0), (0, 0)))
    with pytest.raises(InvalidParam):
        BipartiteGraph(0, 3, ())


def test_edges_are_normalized_sorted():
    g = BipartiteGraph(2, 2, ((1, 1), (0, 0), (1, 0)))
    assert g.edges == ((0, 0), (1, 0), (1, 1))
    assert g.adj_x == ((0,), (0, 1))
    assert g.adj_y == ((0, 1), (1,))


def test_builtin_complete_3_3():
    g = complete_bipartite(3, 3)
    assert g.m == 9
    profile = validate_biregular(g)
    assert (profile.a, profile.b) == (3, 3)


def test_builtin_rejects_bad_params():
    with pytest.raises(InvalidParam):
        even_cycle(5)
    with pytest.raises(InvalidParam):
        even_cycle(2)
    with pytest.raises(InvalidParam):
        complete_bipartite(0, 3)


def test_heawood_shape():
    g = heawood()
    assert (g.x_count, g.y_count, g.m) == (7, 7, 21)
    profile = validate_biregular(g)
    assert (profile.a, profile.b) == (3, 3)
    assert girth(g) == 6


def test_random_biregular_validates():
    g = random_biregular(4, 4, 2, 2, seed=1)
    profile = validate_biregular(g)
    assert (profile.a, profile.b) == (2, 2)

    g = random_biregular(3, 2, 2, 3, seed=7)
    assert g.m == 6
    profile = validate_biregular(g)
    assert (profile.a, profile.b) == (2, 3)


def test_random_biregular_degree_equation():
    with pytest.raises(DegreeEquationViolated):
        random_biregular(2, 3, 2, 1, seed=0)


def test_random_biregular_impossible_degrees():
    with pytest.raises(InvalidParam):
        random_biregular(2, 2, 3, 3, seed=0)


def test_random_biregular_deterministic():
    a = random_biregular(6, 4, 2, 3, seed=99)
    b = random_biregular(6, 4, 2, 3, seed=99)
    assert a == b
    c = random_biregular(6, 4, 2, 3, seed=100)
    # A different seed is overwhelmingly likely to give a different matching.
    assert a != c


def test_random_biregular_retries_exhausted():
    with pytest.raises(RetriesExhausted):
        random_biregular(3, 3, 3, 3, seed=0, max_retries=1)


def test_degree_sums_over_seeded_corpus():
    for ci, (x, y, a, b) in enumerate(
        [(4, 4, 2, 2), (6, 4, 2, 3), (8, 6, 3, 4), (10, 8, 4, 5)]
    ):
        for t in range(3):
            g = random_biregular(x, y, a, b, derive_seed(31337, ci, t))
            assert g.m == a * x == b * y
            assert sum(len(v) for v in g.adj_x) == g.m
            assert sum(len(v) for v in g.adj_y) == g.m


def test_cut_size_examples():
    c6 = even_cycle(6)
    assert cut_size(c6, [("x", 0)]) == 2
    k33 = complete_bipartite(3, 3)
    assert cut_size(k33, [("x", i) for i in range(3)]) == 9
    # deg(x0) + deg(y0) - 2 because x0 ~ y0
    assert cut_size(k33, [("x", 0), ("y", 0)]) == 4


def test_cut_size_complement_symmetry():
    g = random_biregular(6, 4, 2, 3, seed=5)
    verts = g.vertices()
    for mask in range(0, 2 ** len(verts), 37):
        side = [v for i, v in enumerate(verts) if (mask >> i) & 1]
        rest = [v for i, v in enumerate(verts) if not (mask >> i) & 1]
        assert cut_size(g, side) == cut_size(g, rest)


def test_cross_edges_examples():
    k33 = complete_bipartite(3, 3)
    assert cross_edges(k33, [("x", 0)], [("y", 0)]) == 1
    c6 = even_cycle(6)
    assert cross_edges(c6, [("x", 0)], [("y", j) for j in range(3)]) == 2
    assert cross_edges(c6, [], [("y", 0)]) == 0


def test_cross_edges_degree_identities():
    g = random_biregular(8, 6, 3, 4, seed=11)
    ys = [("y", j) for j in range(6)]
    xs = [("x", i) for i in range(8)]
    assert cross_edges(g, [("x", 0), ("x", 3)], ys) == 2 * 3
    assert cross_edges(g, xs, [("y", 1)]) == 4


def test_cross_edges_part_mismatch():
    g = complete_bipartite(2, 2)
    with pytest.raises(PartMismatch):
        cross_edges(g, [("y", 0)], [("y", 1)])
    with pytest.raises(PartMismatch):
        cross_edges(g, [("x", 0)], [("x", 1)])


def test_components_and_flat_round_trip():
    c6 = even_cycle(6)
    assert is_connected(c6)
    # two disjoint 4-cycles
    g = BipartiteGraph(
        4, 4,
        ((0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)),
    )
    comps = connected_components(g)
    assert len(comps) == 2
    assert not is_connected(g)
    for fid in range(g.n):
        assert flat_index(g, flat_vertex(g, fid)) == fid
    adj = flat_adjacency(g)
    assert [len(v) for v in adj] == [2] * 8


def test_without_edge():
    k33 = complete_bipartite(3, 3)
    g = k33.without_edge((0, 0))
    assert g.m == 8 and not g.has_edge(0, 0)
    with pytest.raises(InvalidParam):
        g.without_edge((0, 0))
