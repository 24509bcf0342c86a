import random

import pytest
from hypothesis import strategies as st

from resgraph import corpus
from resgraph import cycles as cy
from resgraph.graph import ResolutionGraph, VertexData, validate


@pytest.fixture
def g1chain():
    return corpus.genus1_chain()


@pytest.fixture
def cuspchain():
    return corpus.cusp_chain(1)


@st.composite
def valid_trees(draw, max_vertices=7):
    """Random valid trees, biased towards elliptic ones."""
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return corpus.random_tree(random.Random(seed), max_vertices=max_vertices)


def numerically_gorenstein_elliptic(g):
    zk, integral = cy.canonical_cycle(g)
    return integral and cy.euler_char(g, cy.fundamental_cycle(g)[0]) == 0


@st.composite
def gorenstein_elliptic_trees(draw, max_vertices=7):
    """Random valid trees that are elliptic with integral Z_K (redrawn until they are)."""
    rng = random.Random(draw(st.integers(0, 2 ** 32 - 1)))
    while True:
        g = corpus.random_tree(rng, max_vertices=max_vertices, special_prob=0.9)
        if numerically_gorenstein_elliptic(g):
            return g


@st.composite
def weighted_graphs(draw, max_vertices=6):
    """Arbitrary small graphs (possibly invalid) with non-negative attributes."""
    n = draw(st.integers(1, max_vertices))
    vs = [VertexData(f"v{i}", draw(st.integers(-6, 1)), draw(st.integers(0, 2)),
                     draw(st.integers(0, 1)), draw(st.integers(0, 1))) for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=8)) if pairs else []
    return ResolutionGraph.build(vs, [(vs[i].id, vs[j].id) for i, j in chosen])


def is_valid(g):
    return not validate(g)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
