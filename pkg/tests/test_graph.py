import pytest
from hypothesis import given, settings

from resgraph import corpus
from resgraph.graph import (GraphSyntaxError, InvalidGraphError, ResolutionGraph, VertexData,
                            intersection_form, is_negative_definite, parse_graph, read_graph,
                            require_valid, serialize, validate)

from conftest import valid_trees, weighted_graphs

G1CHAIN_TEXT = """\
vertex a0 e=-1 g=1
vertex a1 e=-2
vertex a2 e=-2
edge a0 a1
edge a1 a2
"""


def kinds(g, **kw):
    return {v.kind for v in validate(g, **kw)}


class TestParse:
    def test_three_vertex_chain(self):
        g = parse_graph(G1CHAIN_TEXT)
        assert [(v.self_int, v.genus) for v in g.vertices] == [(-1, 1), (-2, 0), (-2, 0)]
        assert g.edges == (((0, 1), 1), ((1, 2), 1))

    def test_single_vertex(self):
        g = parse_graph("vertex v0 e=-2")
        assert len(g) == 1 and g.vertices[0].genus == 0 and g.vertices[0].delta == 0

    def test_comments_and_blank_lines(self):
        g = parse_graph("# header\n\nvertex v0 e=-3 cusps=1  # trailing\n")
        assert g.vertices[0].cusps == 1

    def test_repeated_edge_is_multiplicity(self):
        g = parse_graph("vertex a e=-3\nvertex b e=-3\nedge a b\nedge b a\n")
        assert g.edges == (((0, 1), 2),)
        assert intersection_form(g).matrix == ((-3, 2), (2, -3))

    @pytest.mark.parametrize("text, fragment", [
        ("vertex v0 e=-2\nedge v0 v0", "self-loop"),
        ("vertex v0 e=-2\nvertex v0 e=-3", "duplicate"),
        ("vertex v0 e=-2\nedge v0 v1", "unknown vertex"),
        ("vertex v0 g=1", "lacks e"),
        ("vertex v0 e=-2 colour=3", "unknown attribute"),
        ("vertex v0 e=x", "bad value"),
        ("vertex v0 e=-2 g=-1", "bad value"),
        ("curve v0", "unknown keyword"),
        ("", "no vertices"),
    ])
    def test_errors(self, text, fragment):
        with pytest.raises(GraphSyntaxError, match=fragment):
            parse_graph(text)

    def test_error_carries_line_number(self):
        with pytest.raises(GraphSyntaxError) as info:
            parse_graph("vertex v0 e=-2\n\nedge v0 v0\n")
        assert info.value.lineno == 3

    def test_read_graph(self, tmp_path):
        p = tmp_path / "x.graph"
        p.write_text(G1CHAIN_TEXT)
        assert read_graph(p) == corpus.genus1_chain()


class TestValidate:
    def test_valid_example(self, g1chain):
        assert validate(g1chain) == []

    def test_not_negative_definite(self):
        assert kinds(corpus.single(0)) >= {"not_negative_definite"}

    def test_contractible_curve(self):
        assert "nonminimal" in kinds(corpus.single(-1))
        assert validate(corpus.single(-1), allow_nonminimal=True) == []

    def test_positive_self_intersection(self):
        assert "self_int" in kinds(corpus.single(1))

    def test_disconnected(self):
        g = ResolutionGraph.build([VertexData("a", -2), VertexData("b", -2)])
        assert kinds(g) == {"disconnected"}

    def test_all_violations_listed(self):
        g = ResolutionGraph.build([VertexData("a", 0), VertexData("b", -1)])
        assert kinds(g) == {"self_int", "nonminimal", "disconnected", "not_negative_definite"}

    def test_require_valid(self):
        with pytest.raises(InvalidGraphError):
            require_valid(corpus.single(0))

    def test_corpus_valid(self):
        for name, g in {**corpus.acceptance_corpus(), **corpus.elliptic_extras(),
                        **corpus.negative_extras()}.items():
            assert validate(g) == [], name


class TestIntersectionForm:
    def test_example(self, g1chain):
        f = intersection_form(g1chain)
        assert f.matrix == ((-1, 1, 0), (1, -2, 1), (0, 1, -2))
        assert f.k_degrees == (1, 0, 0)

    def test_a1(self):
        f = intersection_form(corpus.single(-2))
        assert f.matrix == ((-2,),) and f.k_degrees == (0,)

    def test_cuspidal(self):
        assert intersection_form(corpus.single(-1, cusps=1)).k_degrees == (1,)

    @pytest.mark.parametrize("m, expected", [
        ([[-1, 1, 0], [1, -2, 1], [0, 1, -2]], True),
        ([[0]], False),
        ([[-2, 2], [2, -2]], False),
        ([[-2, 1], [1, -1]], True),
        ([[-1, 2], [2, -1]], False),
    ])
    def test_negative_definite(self, m, expected):
        assert is_negative_definite(m) is expected


@settings(max_examples=150, deadline=None)
@given(weighted_graphs())
def test_serialize_roundtrip(g):
    assert parse_graph(serialize(g)) == g


@settings(max_examples=150, deadline=None)
@given(weighted_graphs())
def test_adjunction_parity(g):
    f = intersection_form(g)
    for i in range(len(g)):
        assert (f.matrix[i][i] + f.k_degrees[i]) % 2 == 0


@settings(max_examples=100, deadline=None)
@given(valid_trees())
def test_random_trees_are_valid(g):
    assert validate(g) == []
    assert g.edge_count() == len(g) - 1
