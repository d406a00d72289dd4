import json

import pytest
from hypothesis import given, strategies as st

from looprank.graph import (
    DisconnectedError,
    SelfLoopGraph,
    adjacency_matrix,
    cluster_decomposition,
    complete,
    contains_cycle,
    cycle,
    dist,
    empty,
    full_loops,
    induced,
    is_connected,
    is_cyclic,
    is_triangle_free,
    join,
    join_over,
    path,
    set_dist,
    with_loops,
)
from looprank.iso import are_isomorphic, canonical_form

from conftest import self_loop_graphs


def E(*pairs):
    return frozenset(tuple(p) for p in pairs)


class TestConstructors:
    def test_cycle(self):
        assert cycle(3).edges == E((0, 1), (1, 2), (0, 2))
        assert cycle(4).edges == E((0, 1), (1, 2), (2, 3), (0, 3))
        c5 = cycle(5)
        assert len(c5.edges) == 5
        assert all(c5.degree(v) == 2 for v in c5.vertices)
        assert not cycle(4).loops

    def test_path(self):
        assert path(1).order == 1 and not path(1).edges
        assert path(2).edges == E((0, 1))
        assert path(4).edges == E((0, 1), (1, 2), (2, 3))

    def test_complete(self):
        assert complete(1).order == 1 and not complete(1).edges
        assert complete(3).edges == cycle(3).edges
        assert len(complete(4).edges) == 6

    @pytest.mark.parametrize("fn, bad", [(cycle, 2), (path, 0), (complete, 0)])
    def test_rejects_small(self, fn, bad):
        with pytest.raises(ValueError):
            fn(bad)


class TestInvariants:
    def test_loop_in_edges_rejected(self):
        with pytest.raises(ValueError):
            SelfLoopGraph(3, [(1, 1)])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            SelfLoopGraph(3, [(0, 3)])
        with pytest.raises(ValueError):
            SelfLoopGraph(3, [], [5])

    def test_duplicate_edges_collapse(self):
        g = SelfLoopGraph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edges == E((0, 1))


class TestLoops:
    def test_with_loops(self):
        g = with_loops(cycle(4), {0})
        assert g.loops == {0} and g.edges == cycle(4).edges and g.sigma == 1

    def test_union_semantics(self):
        g = with_loops(with_loops(path(4), {0, 1}), {1, 2})
        assert g.loops == {0, 1, 2}
        assert with_loops(g, {1}) == g

    def test_full_loops(self):
        assert with_loops(complete(3), {0, 1, 2}) == full_loops(complete(3))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            with_loops(cycle(4), {4})


class TestAdjacency:
    def test_examples(self):
        assert adjacency_matrix(full_loops(complete(1))) == [[1]]
        assert adjacency_matrix(with_loops(cycle(4), {0})) == [
            [1, 1, 0, 1],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [1, 0, 1, 0],
        ]
        assert adjacency_matrix(path(2)) == [[0, 1], [1, 0]]

    @given(self_loop_graphs(max_order=7))
    def test_symmetric_01_trace_sigma(self, g):
        a = adjacency_matrix(g)
        n = g.order
        assert all(a[i][j] == a[j][i] and a[i][j] in (0, 1) for i in range(n) for j in range(n))
        assert sum(a[i][i] for i in range(n)) == g.sigma


class TestJoin:
    def test_fig14_graph(self):
        g = join_over(with_loops(cycle(4), {0}), {1, 3}, complete(1))
        assert g.order == 5
        assert g.edges == E((0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (3, 4))
        assert g.loops == {0}

    def test_empty_join_set_is_disjoint_union(self):
        g = join_over(cycle(4), [], complete(1))
        assert g.order == 5 and g.edges == cycle(4).edges
        assert not is_connected(g)

    def test_rank2_shape(self):
        k2 = full_loops(complete(2))
        g = join_over(join_over(k2, [0, 1], complete(1)), [0, 1], complete(1))
        assert g == join(k2, empty(2))
        assert g.order == 4 and g.sigma == 2 and len(g.edges) == 5

    def test_loops_of_both_sides_kept(self):
        g = join_over(path(2), [0], with_loops(path(2), {1}))
        assert g.loops == {3}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            join_over(cycle(4), [7], complete(1))

    @given(self_loop_graphs(max_order=4), self_loop_graphs(max_order=4), st.data())
    def test_edge_count(self, g1, g2, data):
        a = data.draw(st.sets(st.integers(0, g1.order - 1)))
        g = join_over(g1, a, g2)
        assert len(g.edges) == len(g1.edges) + len(g2.edges) + len(a) * g2.order
        assert g.sigma == g1.sigma + g2.sigma


class TestInduced:
    def test_c5_contains_p4_1(self):
        sub = induced(with_loops(cycle(5), {0}), {0, 1, 2, 3})
        assert are_isomorphic(sub, with_loops(path(4), {0}))

    def test_identity(self):
        g = with_loops(cycle(5), {1, 3})
        assert induced(g, g.vertices) == g

    def test_single_edge(self):
        assert induced(cycle(4), {0, 1}) == path(2)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            induced(cycle(4), [])

    @given(self_loop_graphs(max_order=7), st.data())
    def test_principal_submatrix(self, g, data):
        u = sorted(data.draw(st.sets(st.integers(0, g.order - 1), min_size=1)))
        a = adjacency_matrix(g)
        assert adjacency_matrix(induced(g, u)) == [[a[i][j] for j in u] for i in u]


class TestPredicates:
    def test_examples(self):
        c4 = cycle(4)
        assert is_connected(c4) and is_triangle_free(c4) and contains_cycle(c4)
        assert not is_triangle_free(complete(3))
        assert not contains_cycle(path(4))

    def test_loops_do_not_make_triangles_or_cycles(self):
        g = full_loops(path(3))
        assert is_triangle_free(g) and not contains_cycle(g)

    def test_cyclic_requires_connected(self):
        g = join_over(cycle(4), [], complete(1))
        assert contains_cycle(g) and not is_cyclic(g)
        assert is_cyclic(cycle(5))


class TestDistance:
    def test_examples(self):
        assert dist(cycle(5), 0, 2) == 2
        assert dist(cycle(5), 3, 3) == 0
        assert set_dist(cycle(6), {0}, {3}) == 3
        assert set_dist(cycle(8), {0, 1}, {4}) == 3

    def test_disconnected(self):
        g = join_over(cycle(4), [], complete(1))
        with pytest.raises(DisconnectedError):
            dist(g, 0, 4)

    def test_empty_sets(self):
        with pytest.raises(ValueError):
            set_dist(cycle(4), [], [1])


class TestClusters:
    def test_c8(self):
        cd = cluster_decomposition(with_loops(cycle(8), {0, 1, 4}))
        assert cd.clusters == ((0, 2), (4, 1))
        assert cd.gaps == (3, 4)
        assert cd.loopless_runs == (2, 3)

    def test_single_run(self):
        cd = cluster_decomposition(with_loops(cycle(5), {0, 1, 2}))
        assert cd.clusters == ((0, 3),)

    def test_three_singletons(self):
        cd = cluster_decomposition(with_loops(cycle(6), {0, 2, 4}))
        assert cd.clusters == ((0, 1), (2, 1), (4, 1))
        assert cd.gaps == (2, 2, 2)
        assert cd.counts() == {1: 3}

    def test_wrapping_run(self):
        cd = cluster_decomposition(with_loops(cycle(7), {6, 0, 1, 3}))
        assert cd.clusters == ((3, 1), (6, 3))

    def test_full(self):
        cd = cluster_decomposition(full_loops(cycle(5)))
        assert cd.clusters == ((0, 5),) and cd.gaps == ()

    def test_errors(self):
        with pytest.raises(ValueError):
            cluster_decomposition(cycle(5))
        with pytest.raises(ValueError):
            cluster_decomposition(with_loops(path(5), {0}))

    @given(st.integers(3, 12), st.data())
    def test_sums(self, n, data):
        s = data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1))
        g = with_loops(cycle(n), s)
        cd = cluster_decomposition(g)
        assert cd.sigma == len(s)
        assert cd.sigma + sum(cd.loopless_runs) == n
        assert all(gap >= 2 for gap in cd.gaps)
        for (start, length), gap in zip(cd.clusters, cd.gaps):
            assert all(((start + k) % n) in s for k in range(length))
            assert ((start + length) % n) not in s
            assert ((start - 1) % n) not in s
            last = (start + length - 1) % n
            assert dist(g, last, (last + gap) % n) == min(gap, n - gap)


def test_vertex_transitive_cycle():
    for n in (4, 5, 6):
        forms = {canonical_form(with_loops(cycle(n), {i})) for i in range(n)}
        assert len(forms) == 1


class TestSerialization:
    def test_json_roundtrip(self):
        g = with_loops(cycle(5), {3, 1})
        d = json.loads(g.to_json())
        assert d == {"order": 5, "edges": [[0, 1], [0, 4], [1, 2], [2, 3], [3, 4]], "loops": [1, 3]}
        assert SelfLoopGraph.from_json(g.to_json()) == g

    @pytest.mark.parametrize(
        "text, field",
        [
            ('{"edges": [], "loops": []}', "order"),
            ('{"order": 3, "loops": []}', "edges"),
            ('{"order": 3, "edges": [[0]], "loops": []}', "edges"),
            ('{"order": 3, "edges": [], "loops": "x"}', "loops"),
            ('{"order": 0, "edges": [], "loops": []}', "order"),
        ],
    )
    def test_malformed_names_field(self, text, field):
        with pytest.raises(ValueError, match=field):
            SelfLoopGraph.from_json(text)

    def test_dot(self):
        dot = with_loops(path(3), {2}).to_dot("P3")
        assert dot.startswith("graph G {")
        assert '  name="P3";' in dot
        assert "  2 -- 2;" in dot and "  0 -- 1;" in dot and "  1 -- 2;" in dot
        assert dot.rstrip().endswith("}")
