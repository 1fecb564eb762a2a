"""Tests for bounded enumerations of ordered graphs."""

import pytest
from ordconflict.enumeration import EnumerationSpec, complete_embeddings
from ordconflict.exceptions import PreconditionError


def test_exhaustive_skips_isolated_vertices():
    graphs = list(EnumerationSpec.exhaustive(3, 1, 3))

    assert len(graphs) == 7
    assert all(graph.edges for graph in graphs)
    assert len(set(graphs)) == 7


def test_exhaustive_with_isolated_vertices():
    spec = EnumerationSpec.exhaustive(3, 1, 3, skip_isolated=False)

    assert len(list(spec)) == 10


def test_exhaustive_edge_bounds():
    spec = EnumerationSpec.exhaustive(4, 1, 4, min_edges=2, max_edges=2)

    assert all(len(graph.edges) == 2 for graph in spec)


def test_random_corpus_is_deterministic():
    first = list(EnumerationSpec.random_corpus(25, seed=7))
    second = list(EnumerationSpec.random_corpus(25, seed=7))

    assert first == second
    assert len(first) == 25


def test_random_corpus_shape():
    for graph in EnumerationSpec.random_corpus(50, seed=3, lo=-4):
        n = len(graph.vertices)

        assert 3 <= n <= 8
        assert graph.edges
        assert -4 <= graph.vertices[0]
        assert graph.vertices[-1] <= -4 + 2 * n - 1


def test_random_corpus_respects_max_vertices():
    corpus = EnumerationSpec.random_corpus(20, seed=1, max_vertices=4)

    assert all(len(graph.vertices) <= 4 for graph in corpus)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"max_vertices": 3, "mode": "bogus"},
        {"max_vertices": 1},
        {"max_vertices": 3, "min_edges": 0},
        {"max_vertices": 3, "min_edges": 3, "max_edges": 2},
        {"max_vertices": 3, "count": -1},
        {"max_vertices": 4, "lo": 1, "hi": 3},
        {"max_vertices": 4, "lo": 1, "hi": 20},
    ],
)
def test_malformed_enumerations(kwargs):
    with pytest.raises(PreconditionError):
        EnumerationSpec(**kwargs)


def test_describe():
    assert (
        EnumerationSpec.exhaustive(5, 1, 7).describe()
        == "exhaustive, window [1,7], n <= 5"
    )
    assert (
        EnumerationSpec.random_corpus(5, seed=7).describe()
        == "random, 5 graphs, seed 7, n <= 8"
    )


def test_complete_embeddings():
    graphs = list(complete_embeddings(3, 1, 5))

    assert len(graphs) == 10
    assert graphs[0].vertices == (1, 2, 3)
    assert graphs[-1].vertices == (3, 4, 5)
    assert all(graph.is_complete() for graph in graphs)
