import math
import random
from fractions import Fraction

import pytest

from atnlab import (FamilySpec, Graph, atn_lower_bound, bipartition,
                    build_family, circulant_bipartite, complete,
                    complete_bipartite, complete_multipartite,
                    connected_components, cycle, format_edge_list, line_graph,
                    parse_edge_list, path, random_regular_bipartite,
                    read_graph, subdivision_graph, total_graph, write_graph)


def test_graph_normalizes_and_validates():
    g = Graph.from_edges(3, [(2, 1), (0, 1), (1, 2)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.m == 2
    assert g.degrees == (1, 2, 1)
    assert g.adjacency[1] == (0, 2)
    assert g.edge_index[(1, 2)] == 1
    with pytest.raises(ValueError):
        Graph(2, ((0, 0),))
    with pytest.raises(ValueError):
        Graph(2, ((0, 2),))
    with pytest.raises(ValueError):
        Graph(3, ((1, 2), (0, 1)))  # not sorted
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])  # self-loop
    assert Graph.from_edges(2, [(0, 1), (1, 0)]).m == 1  # dedup after flip


def test_families_counts():
    assert complete(5).m == 10
    assert complete_bipartite(3, 4).m == 12
    assert complete_multipartite(2, 2, 2).m == 12
    assert cycle(5).m == 5
    assert path(6).m == 5
    g = circulant_bipartite(4, 2)
    assert g.n == 8 and g.m == 8
    assert g.is_regular() and g.degrees[0] == 2
    assert bipartition(g) is not None


def test_build_family_matches_helpers():
    assert build_family(FamilySpec("complete", (4,))) == complete(4)
    assert build_family(FamilySpec("complete_bipartite", (2, 3))) == complete_bipartite(2, 3)
    assert build_family(FamilySpec("complete_multipartite", (2, 2, 2))) == complete_multipartite(2, 2, 2)
    assert build_family(FamilySpec("cycle", (7,))) == cycle(7)
    assert build_family(FamilySpec("path", (4,))) == path(4)
    assert build_family(FamilySpec("circulant_bipartite", (3, 2))) == circulant_bipartite(3, 2)
    with pytest.raises(ValueError):
        build_family(FamilySpec("hypercube", (3,)))
    with pytest.raises(ValueError):
        build_family(FamilySpec("cycle", (2,)))


def test_line_graph_of_k4_is_octahedron():
    lg = line_graph(complete(4))
    assert lg.n == 6 and lg.m == 12
    assert lg.is_regular() and lg.degrees[0] == 4
    # octahedron: complement is a perfect matching
    non_adjacent = [(u, v) for u in range(6) for v in range(u + 1, 6)
                    if (u, v) not in lg.edge_index]
    assert len(non_adjacent) == 3
    seen = [v for e in non_adjacent for v in e]
    assert sorted(seen) == list(range(6))


def test_line_graph_labels_name_base_edges():
    lg = line_graph(path(3))
    assert lg.n == 2 and lg.edges == ((0, 1),)
    assert "0" in lg.vertex_labels[0] and "1" in lg.vertex_labels[0]


def test_subdivision_and_total_graph_counts():
    # subdividing: n+m vertices, 2m edges
    s = subdivision_graph(cycle(4))
    assert s.n == 8 and s.m == 8
    assert bipartition(s) is not None
    # total graph: original + line + incidence edges
    t = total_graph(complete(3))
    assert t.n == 6 and t.m == 3 + 3 + 6
    t4 = total_graph(complete(4))
    assert t4.n == 10 and t4.m == 6 + 12 + 12
    assert t4.max_degree() == 2 * 3  # vertices of degree d get degree 2d


def test_total_graph_of_k2_is_triangle():
    t = total_graph(complete(2))
    assert t.n == 3 and t.m == 3


def test_atn_lower_bound_fraction():
    assert atn_lower_bound(cycle(5)) == Fraction(1, 1)
    assert atn_lower_bound(complete(4)) == Fraction(3, 2)
    assert math.ceil(atn_lower_bound(complete(4))) == 2
    assert atn_lower_bound(Graph.from_edges(3, [])) == 0


def test_bipartition_and_components():
    assert bipartition(complete(3)) is None
    sides = bipartition(complete_bipartite(2, 3))
    assert sides is not None
    assert sorted(len(s) for s in sides) == [2, 3]
    two = Graph.from_edges(5, [(0, 1), (2, 3)])
    comps = connected_components(two)
    assert comps == [(0, 1), (2, 3), (4,)]
    # disconnected bipartite graph still splits consistently
    sides2 = bipartition(two)
    assert sides2 is not None
    for u, v in two.edges:
        assert (u in sides2[0]) != (v in sides2[0])


def test_random_regular_bipartite_properties():
    for seed in (1, 7, 1021):
        g = random_regular_bipartite(4, 3, seed)
        assert g.n == 8 and g.m == 12
        assert g.is_regular() and g.degrees[0] == 3
        sides = bipartition(g)
        assert sides is not None and len(sides[0]) == 4
    assert random_regular_bipartite(4, 3, 5) == random_regular_bipartite(4, 3, 5)
    with pytest.raises(ValueError):
        random_regular_bipartite(3, 4, 0)  # degree exceeds side


def test_edge_list_round_trip(tmp_path):
    rng = random.Random(17)
    for _ in range(20):
        n = rng.randint(1, 8)
        pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph.from_edges(n, rng.sample(pool, rng.randint(0, len(pool))))
        assert parse_edge_list(format_edge_list(g)) == g
    p = tmp_path / "g.txt"
    write_graph(cycle(5), str(p))
    assert read_graph(str(p)) == cycle(5)


def test_parse_edge_list_accepts_comments_and_rejects_garbage():
    g = parse_edge_list("# a triangle\n3 3\n0 1\n\n0 2\n# done\n1 2\n")
    assert g == complete(3)
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n")  # header promises 2 edges
    with pytest.raises(ValueError):
        parse_edge_list("2 1\n0 2\n")  # endpoint out of range
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n0 1\n")  # duplicate edge
