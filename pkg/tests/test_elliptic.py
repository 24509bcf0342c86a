import pytest
from hypothesis import assume, given, settings

from resgraph import corpus
from resgraph import cycles as cy
from resgraph import elliptic as el
from resgraph.cycles import PreconditionError
from resgraph.oracle import minimally_elliptic_bruteforce

from conftest import gorenstein_elliptic_trees, valid_trees

EXTRAS = corpus.elliptic_extras()


class TestSequence:
    def test_example(self, g1chain):
        seq = el.elliptic_sequence(g1chain)
        assert seq.members == ((1, 1, 1), (1, 1, 0), (1, 0, 0))
        assert seq.supports == (frozenset({0, 1, 2}), frozenset({0, 1}), frozenset({0}))
        assert seq.m == 2 and seq.canonical == (3, 2, 1)
        assert seq.partial_sums == ((1, 1, 1), (2, 2, 1), (3, 2, 1))
        assert seq.tail_sums == ((3, 2, 1), (2, 1, 0), (1, 0, 0))

    def test_single_cusp(self):
        seq = el.elliptic_sequence(corpus.single(-1, cusps=1))
        assert seq.members == ((1,),) and seq.m == 0

    def test_cusp_chain(self, cuspchain):
        seq = el.elliptic_sequence(cuspchain)
        assert seq.members == ((1, 1), (1, 0)) and seq.canonical == (2, 1) and seq.m == 1

    @pytest.mark.parametrize("m", range(5))
    def test_cusp_chain_family(self, m):
        seq = el.elliptic_sequence(corpus.cusp_chain(m))
        assert seq.m == m
        assert seq.canonical == tuple([m + 1] + list(range(m, 0, -1)))

    def test_preconditions(self):
        with pytest.raises(PreconditionError, match="Du Val"):
            el.elliptic_sequence(corpus.single(-2))
        with pytest.raises(PreconditionError, match="numerically Gorenstein"):
            el.elliptic_sequence(EXTRAS["g1_e-2_leaf"])
        with pytest.raises(PreconditionError, match="not elliptic"):
            el.elliptic_sequence(corpus.single(-1, genus=2))

    def test_check_sequence_catches_tampering(self, g1chain):
        seq = el.elliptic_sequence(g1chain)
        bad = el.EllipticSequence(seq.supports, ((1, 1, 1), (1, 1, 0), (1, 0, 1)), seq.canonical)
        with pytest.raises(AssertionError):
            el.check_sequence(g1chain, bad)


class TestMinimallyElliptic:
    def test_example(self, g1chain):
        assert el.minimally_elliptic_cycle(g1chain) == (1, 0, 0)

    def test_m_zero(self):
        g = EXTRAS["star_min_elliptic"]
        e = el.minimally_elliptic_cycle(g)
        assert e == cy.fundamental_cycle(g)[0] == cy.as_int(cy.canonical_cycle(g)[0])

    def test_cusp_chain(self, cuspchain):
        assert el.minimally_elliptic_cycle(cuspchain) == (1, 0)


class TestStructure:
    def test_example_case_a(self, g1chain):
        v = el.structure_dichotomy(g1chain)
        assert v.case == "a" and v.distinguished == 0 and v.e_cycle == (1, 0, 0)
        assert v.rational_components == ((1, 2),)

    def test_cusp_case_a(self):
        v = el.structure_dichotomy(corpus.single(-1, cusps=1))
        assert v.case == "a" and v.distinguished == 0

    @pytest.mark.parametrize("name", ["star_min_elliptic", "star_kodaira_m1", "star_kodaira_m2",
                                      "cusp_cycle_333", "star_not_gorenstein"])
    def test_smooth_rational_case_b(self, name):
        v = el.structure_dichotomy(EXTRAS[name])
        assert v.case == "b" and v.distinguished is None

    def test_rational_graph_refused(self):
        with pytest.raises(PreconditionError):
            el.structure_dichotomy(corpus.single(-2))


class TestChain:
    def test_example(self, g1chain):
        seq = el.elliptic_sequence(g1chain)
        ch = el.check_structure_zn_minus_one(g1chain, seq)
        assert ch.chain == (2, 1) and ch.basepoint_vertex == 2
        assert ch.attach_vertex == 0 and ch.e_cycle == (1, 0, 0)

    def test_cusp_chain(self, cuspchain):
        ch = el.check_structure_zn_minus_one(cuspchain, el.elliptic_sequence(cuspchain))
        assert ch.chain == (1,) and ch.basepoint_vertex == 1
        assert cy.self_intersection(cuspchain, ch.e_cycle) == -1

    def test_m_zero_refused(self):
        g = corpus.single(-1, cusps=1)
        with pytest.raises(PreconditionError):
            el.check_structure_zn_minus_one(g, el.elliptic_sequence(g))

    def test_kodaira_star(self):
        g = EXTRAS["star_kodaira_m2"]
        seq = el.elliptic_sequence(g)
        ch = el.check_structure_zn_minus_one(g, seq)
        assert [g.ids[i] for i in ch.chain] == ["a2_3", "a2_2"]


@settings(max_examples=120, deadline=None)
@given(gorenstein_elliptic_trees())
def test_sequence_properties_on_random_trees(g):
    seq = el.elliptic_sequence(g)  # runs check_sequence internally
    assert el.check_sequence(g, seq)
    zn = cy.fundamental_cycle(g)[0]
    assert cy.leq(seq.minimally_elliptic, zn) and cy.leq(zn, seq.canonical)


@settings(max_examples=60, deadline=None)
@given(gorenstein_elliptic_trees(max_vertices=6))
def test_e_matches_bruteforce(g):
    assert minimally_elliptic_bruteforce(g) == [el.minimally_elliptic_cycle(g)]


@settings(max_examples=60, deadline=None)
@given(valid_trees())
def test_structure_dichotomy_holds(g):
    assume(cy.euler_char(g, cy.fundamental_cycle(g)[0]) == 0)
    v = el.structure_dichotomy(g)
    assert v.case in ("a", "b")
