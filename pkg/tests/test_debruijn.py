"""De Bruijn graphs: structure, word paths, flow law, trees, DOT export."""

from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circwords import (
    AlphabetMismatchError,
    SizeLimitError,
    build_graph,
    cyclomatic_number,
    enumerate_words,
    export_dot,
    is_spanning_tree,
    occurrence_vector,
    path_of_word,
    verify_kirchhoff,
    word_string,
)
from circwords.debruijn import connected_components
from conftest import binary_circular_words, cw, scan_count, u

# Adjacency of B(2,3): every edge runs from its length-3 prefix to its
# length-3 suffix, e.g. 1101 goes 110 -> 101.
FIGURE_B23_EDGES = {
    "0000": ("000", "000"),
    "0001": ("000", "001"),
    "0010": ("001", "010"),
    "0011": ("001", "011"),
    "0100": ("010", "100"),
    "0101": ("010", "101"),
    "0110": ("011", "110"),
    "0111": ("011", "111"),
    "1000": ("100", "000"),
    "1001": ("100", "001"),
    "1010": ("101", "010"),
    "1011": ("101", "011"),
    "1100": ("110", "100"),
    "1101": ("110", "101"),
    "1110": ("111", "110"),
    "1111": ("111", "111"),
}


class TestBuildGraph:
    def test_b23_shape(self):
        g = build_graph(2, 3)
        assert len(g.vertices) == 8
        assert len(g.edges) == 16

    def test_b23_adjacency_matches_figure(self):
        g = build_graph(2, 3)
        for e in g.edges:
            src, dst = FIGURE_B23_EDGES[word_string(e)]
            assert word_string(g.source(e)) == src
            assert word_string(g.target(e)) == dst

    def test_smallest_graph(self):
        g = build_graph(2, 1)
        assert len(g.vertices) == 2
        assert len(g.edges) == 4

    def test_ternary_graph(self):
        g = build_graph(3, 2)
        assert len(g.vertices) == 9
        assert len(g.edges) == 27

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            build_graph(2, 25)
        build_graph(2, 5, edge_limit=64)
        with pytest.raises(SizeLimitError):
            build_graph(2, 5, edge_limit=63)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            build_graph(1, 3)
        with pytest.raises(ValueError):
            build_graph(2, 0)

    @pytest.mark.parametrize("d,n", [(2, 1), (2, 3), (3, 2)])
    def test_degrees_and_connectivity(self, d, n):
        g = build_graph(d, n)
        out_deg = Counter(g.source(e) for e in g.edges)
        in_deg = Counter(g.target(e) for e in g.edges)
        assert all(out_deg[v] == d for v in g.vertices)
        assert all(in_deg[v] == d for v in g.vertices)
        assert connected_components(g) == 1


class TestPathOfWord:
    def test_paper_word(self):
        path = path_of_word(build_graph(2, 3), cw("010011"))
        assert [word_string(v) for v in path.vertices] == [
            "010", "100", "001", "011", "110", "101",
        ]
        assert [word_string(e) for e in path.edges] == [
            "0100", "1001", "0011", "0110", "1101", "1010",
        ]

    def test_single_letter_loop(self):
        path = path_of_word(build_graph(2, 3), cw("0"))
        assert path.vertices == ((0, 0, 0),)
        assert path.edges == ((0, 0, 0, 0),)

    def test_edge_multiset_is_occurrence_vector(self):
        w = cw("00101")
        path = path_of_word(build_graph(2, 3), w)
        assert len(path.edges) == 5
        assert Counter(path.edges) == occurrence_vector(w, 4).counts

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            path_of_word(build_graph(3, 2), cw("0101"))

    @given(binary_circular_words(max_n=24), st.integers(1, 3))
    def test_path_is_closed(self, w, n):
        g = build_graph(2, n)
        path = path_of_word(g, w)
        m = len(path.edges)
        for i, e in enumerate(path.edges):
            assert g.source(e) == path.vertices[i]
            assert g.target(e) == path.vertices[(i + 1) % m]

    @given(binary_circular_words(max_n=24), st.integers(1, 3))
    def test_edge_multiset_property(self, w, n):
        path = path_of_word(build_graph(2, n), w)
        assert Counter(path.edges) == occurrence_vector(w, n + 1).counts


class TestKirchhoff:
    def test_paper_vertex_101(self):
        w = cw("00101")
        ov3 = occurrence_vector(w, 3)
        ov4 = occurrence_vector(w, 4)
        assert ov3["101"] == 1
        assert ov4["1011"] + ov4["1010"] == 1
        assert ov4["0101"] + ov4["1101"] == 1
        assert verify_kirchhoff(w, 3).ok

    def test_prefix_suffix_identity(self):
        # |W|_0001 = |W|_1000 falls out of the vertex-000 relation
        for w in (cw("00101"), cw("010011"), cw("1000110")):
            ov4 = occurrence_vector(w, 4)
            assert ov4["0001"] == ov4["1000"]
            assert verify_kirchhoff(w, 3).ok

    def test_constant_word(self):
        report = verify_kirchhoff(cw("1111"), 3)
        assert report.ok
        assert report.violations() == []
        assert occurrence_vector(cw("1111"), 3).nonzero() == {u("111"): 4}

    def test_residuals_match_direct_sums(self):
        w = cw("0100110")
        report = verify_kirchhoff(w, 2)
        for vertex in ((0, 0), (0, 1), (1, 0), (1, 1)):
            c = scan_count(w, vertex)
            out_sum = sum(scan_count(w, vertex + (a,)) for a in (0, 1))
            in_sum = sum(scan_count(w, (a,) + vertex) for a in (0, 1))
            assert report.out_residuals[vertex] == c - out_sum == 0
            assert report.in_residuals[vertex] == c - in_sum == 0

    @given(binary_circular_words(max_n=32), st.integers(1, 4))
    def test_always_holds(self, w, n):
        assert verify_kirchhoff(w, n).ok

    def test_exhaustive_small(self):
        for n in range(1, 11):
            for w in enumerate_words(2, n):
                for m in (1, 2, 3):
                    assert verify_kirchhoff(w, m).ok


class TestCycleSpace:
    def test_cyclomatic_numbers(self):
        assert cyclomatic_number(build_graph(2, 3)) == 9
        assert cyclomatic_number(build_graph(2, 1)) == 3
        assert cyclomatic_number(build_graph(3, 1)) == 7

    @pytest.mark.parametrize("d,n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)])
    def test_formula(self, d, n):
        assert cyclomatic_number(build_graph(d, n)) == d ** (n + 1) - d**n + 1


class TestSpanningTree:
    def test_the_seven_1v_words(self):
        g = build_graph(2, 3)
        tree = ["1000", "1001", "1010", "1011", "1100", "1101", "1110"]
        assert is_spanning_tree(g, tree)

    def test_empty_set(self):
        assert not is_spanning_tree(build_graph(2, 3), [])

    def test_all_edges(self):
        g = build_graph(2, 3)
        assert not is_spanning_tree(g, [word_string(e) for e in g.edges])

    def test_right_size_but_cyclic(self):
        g = build_graph(2, 3)
        # 7 edges, but 0000 is a loop
        assert not is_spanning_tree(
            g, ["0000", "1001", "1010", "1011", "1100", "1101", "1110"]
        )

    def test_rejects_non_edges(self):
        with pytest.raises(ValueError):
            is_spanning_tree(build_graph(2, 3), ["11111"])


class TestDotExport:
    def test_smallest_graph_statements(self):
        text = export_dot(build_graph(2, 1))
        node_lines = [l for l in text.splitlines() if l.strip().startswith('"') and "->" not in l]
        edge_lines = [l for l in text.splitlines() if "->" in l]
        assert len(node_lines) == 2
        assert len(edge_lines) == 4
        assert all("label=" in l for l in edge_lines)

    def test_doubled_vertices_match_figure_marking(self):
        text = export_dot(build_graph(2, 3), doubled_vertices=["110", "101", "010", "001"])
        doubled = [l for l in text.splitlines() if "doublecircle" in l and "node [" not in l]
        assert len(doubled) == 4
        for v in ("110", "101", "010", "001"):
            assert f'"{v}" [shape=doublecircle];' in text

    def test_deterministic(self):
        g = build_graph(2, 3)
        a = export_dot(g, highlight=["0100"], doubled_vertices=["010"])
        b = export_dot(g, highlight=["0100"], doubled_vertices=["010"])
        assert a == b

    def test_highlighting_a_path(self):
        g = build_graph(2, 3)
        path = path_of_word(g, cw("010011"))
        text = export_dot(g, highlight=path)
        assert sum("style=bold" in l for l in text.splitlines()) == 6

    def test_edges_in_label_order(self):
        text = export_dot(build_graph(2, 2))
        labels = [l.split('label="')[1][:3] for l in text.splitlines() if "->" in l]
        assert labels == sorted(labels)
