"""Graph container, edge-list format, derivations, and generators."""

import pytest

from nullcore.errors import (
    DuplicateEdgeError,
    EdgeListParseError,
    MalformedHeaderError,
    SelfLoopError,
    VertexRangeError,
)
from nullcore.graphs import (
    Graph,
    add_edge,
    adjacency_matrix,
    delete_edge,
    delete_vertex,
    gen_cycle,
    gen_path,
    gen_random_bipartite,
    gen_random_graph,
    gen_random_tree,
    gen_random_unicyclic,
    gen_star,
    incidence_matrix,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_forest,
    is_tree,
    is_unicyclic,
    parse_edge_list,
    serialize_edge_list,
    subdivision,
    to_dot,
)
from nullcore.rng import SplitMix64

import oracle


def test_graph_basic_invariants():
    g = Graph(4, [(2, 3), (0, 1), (1, 2)])
    assert g.n == 4 and g.m == 3
    assert g.neighbours(1) == (0, 2)
    assert g.degree(1) == 2 and g.degree(3) == 1
    assert g.has_edge(3, 2) and not g.has_edge(0, 2)
    assert g.edges() == ((0, 1), (1, 2), (2, 3))
    assert g.vertices() == (0, 1, 2, 3)
    assert g == Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert hash(g) == hash(Graph(4, [(0, 1), (1, 2), (2, 3)]))


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_empty_and_single_vertex():
    assert Graph(0).edges() == ()
    assert is_connected(Graph(0))
    assert is_connected(Graph(1))
    assert is_tree(Graph(1))
    assert not is_tree(Graph(2))
    assert is_forest(Graph(2))


def test_parse_serialize_roundtrip():
    g = gen_random_graph(9, 1, 2, 12345)
    assert parse_edge_list(serialize_edge_list(g)) == g
    text = "# comment\n3 2\n\n0 1\n# mid comment\n1 2\n"
    g2 = parse_edge_list(text)
    assert g2 == Graph(3, [(0, 1), (1, 2)])
    assert serialize_edge_list(g2) == "3 2\n0 1\n1 2\n"


def test_parse_error_classes_and_line_numbers():
    with pytest.raises(MalformedHeaderError) as info:
        parse_edge_list("nope\n")
    assert info.value.line_no == 1
    with pytest.raises(MalformedHeaderError):
        parse_edge_list("")
    with pytest.raises(MalformedHeaderError):
        parse_edge_list("3 -1\n")
    with pytest.raises(VertexRangeError) as info:
        parse_edge_list("3 1\n0 7\n")
    assert info.value.line_no == 2
    with pytest.raises(SelfLoopError):
        parse_edge_list("3 1\n2 2\n")
    with pytest.raises(DuplicateEdgeError) as info:
        parse_edge_list("3 2\n0 1\n1 0\n")
    assert info.value.line_no == 3
    # wrong edge count and malformed body lines are base parse errors
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 1\n0 x\n")
    # every specific class is also the base class
    for exc in (MalformedHeaderError, VertexRangeError, SelfLoopError,
                DuplicateEdgeError):
        assert issubclass(exc, EdgeListParseError)


def test_add_delete_edge():
    p3 = gen_path(3)
    c3 = add_edge(p3, 0, 2)
    assert c3.has_edge(0, 2) and p3.m == 2
    with pytest.raises(ValueError):
        add_edge(c3, 0, 2)
    with pytest.raises(ValueError):
        add_edge(p3, 1, 1)
    back = delete_edge(c3, 2, 0)
    assert back == p3
    with pytest.raises(ValueError):
        delete_edge(p3, 0, 2)


def test_delete_vertex_and_induced_subgraph():
    p4 = gen_path(4)
    g, prov = induced_subgraph(p4, [0, 2, 3])
    assert g == Graph(3, [(1, 2)])
    assert prov.vertex_map() == {0: 0, 1: 2, 2: 3}
    assert prov.source_vertex(1) == 2
    h, hprov = delete_vertex(p4, 1)
    assert h == Graph(3, [(1, 2)])
    assert hprov.vertex_map() == {0: 0, 1: 2, 2: 3}
    # keep is treated as a set; duplicates collapse
    g2, _ = induced_subgraph(p4, [0, 0, 1])
    assert g2 == Graph(2, [(0, 1)])
    with pytest.raises(ValueError):
        induced_subgraph(p4, [0, 9])
    with pytest.raises(ValueError):
        delete_vertex(p4, 9)


def test_subdivision_structure():
    p4 = gen_path(4)
    s, prov = subdivision(p4)
    # originals keep labels, one new vertex per edge in lexicographic order
    assert s.n == 7 and s.m == 6
    assert s.edges() == ((0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6))
    assert prov.source_vertex(2) == 2
    assert prov.source_edge(4) == (0, 1)
    assert prov.source_edge(6) == (2, 3)
    assert is_tree(s)
    # subdividing K1 is a no-op
    s1, _ = subdivision(Graph(1))
    assert s1 == Graph(1)
    with pytest.raises(ValueError):
        subdivision(Graph(2))  # disconnected


def test_structure_predicates():
    assert is_tree(gen_path(5))
    assert not is_tree(gen_cycle(5))
    assert is_forest(Graph(5, [(0, 1), (2, 3)]))
    assert not is_forest(gen_cycle(3))
    assert is_unicyclic(gen_cycle(6)) is not None
    assert is_unicyclic(gen_path(6)) is None
    two_cycles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert is_unicyclic(two_cycles) is None


def test_cycle_extraction_is_deterministic():
    g = gen_random_unicyclic(9, 4242)
    cycle = is_unicyclic(g)
    assert cycle is not None
    assert cycle[0] == min(cycle)
    # consecutive cycle vertices are adjacent, ends close the loop
    for a, b in zip(cycle, cycle[1:]):
        assert g.has_edge(a, b)
    assert g.has_edge(cycle[-1], cycle[0])
    assert len(set(cycle)) == len(cycle)


def test_is_bipartite_fixture_and_oracle():
    decomp = is_bipartite(gen_path(4))
    assert decomp is not None
    assert decomp.v1 == (0, 2) and decomp.v2 == (1, 3)
    assert decomp.cross.rows == 2 and decomp.cross.cols == 2
    assert is_bipartite(gen_cycle(5)) is None
    rng = SplitMix64(88)
    for _ in range(120):
        n = 2 + rng.below(9)
        g = gen_random_graph(n, 1, 3, rng.next_u64())
        _, ok = oracle.bipartition(n, list(g.edges()))
        assert (is_bipartite(g) is not None) == ok


def test_bipartite_cross_block_shape():
    g = gen_random_bipartite(8, 17)
    decomp = is_bipartite(g)
    assert decomp is not None
    assert len(decomp.v1) + len(decomp.v2) == g.n
    total = sum(
        decomp.cross.entry(i, j)
        for i in range(decomp.cross.rows)
        for j in range(decomp.cross.cols)
    )
    assert total == g.m


def test_adjacency_and_incidence_matrices():
    p3 = gen_path(3)
    assert adjacency_matrix(p3).to_lists() == [
        [0, 1, 0], [1, 0, 1], [0, 1, 0]]
    b = incidence_matrix(p3)
    assert b.rows == 3 and b.cols == 2
    assert b.to_lists() == [[1, 0], [1, 1], [0, 1]]


def test_generators_fixed_shapes():
    assert gen_path(1) == Graph(1)
    assert gen_path(4).edges() == ((0, 1), (1, 2), (2, 3))
    assert gen_cycle(3).edges() == ((0, 1), (0, 2), (1, 2))
    assert gen_star(4).edges() == ((0, 1), (0, 2), (0, 3))
    with pytest.raises(ValueError):
        gen_cycle(2)
    with pytest.raises(ValueError):
        gen_path(0)


def test_random_generators_are_deterministic_and_typed():
    rng = SplitMix64(3333)
    for _ in range(60):
        n = 1 + rng.below(12)
        seed = rng.next_u64()
        t = gen_random_tree(n, seed)
        assert t == gen_random_tree(n, seed)
        assert is_tree(t)
        b = gen_random_bipartite(max(n, 2), seed)
        assert b == gen_random_bipartite(max(n, 2), seed)
        assert is_bipartite(b) is not None
        u = gen_random_unicyclic(max(n, 3), seed)
        assert u == gen_random_unicyclic(max(n, 3), seed)
        assert is_unicyclic(u) is not None
        g = gen_random_graph(n, 1, 2, seed)
        assert g == gen_random_graph(n, 1, 2, seed)


def test_random_tree_spans_labelled_shapes():
    # All three labelled trees on 3 vertices should appear.
    seen = set()
    for seed in range(40):
        seen.add(gen_random_tree(3, seed).edges())
    assert seen == {
        ((0, 1), (0, 2)), ((0, 1), (1, 2)), ((0, 2), (1, 2))}


def test_random_graph_probability_bounds():
    assert gen_random_graph(6, 0, 1, 9).m == 0
    assert gen_random_graph(6, 1, 1, 9).m == 15
    with pytest.raises(ValueError):
        gen_random_graph(6, 3, 2, 9)


def test_to_dot_output():
    p3 = gen_path(3)
    text = to_dot(p3)
    assert text.startswith("graph G {")
    assert "0 -- 1;" in text and "1 -- 2;" in text
    from nullcore.analysis import classify_vertices
    tagged = to_dot(p3, classify_vertices(p3))
    assert "[part=cv]" in tagged and "[part=ncv]" in tagged
