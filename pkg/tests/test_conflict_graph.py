"""Tests for building conflict graphs."""

import pytest
from hypothesis import given, settings
from ordconflict.constants import NEST_MATRIX
from ordconflict.exceptions import (
    ArithmeticOverflowError,
    EmptyEdgeSetError,
    InvalidGraphError,
)
from ordconflict.models.conflict_graph import (
    ConflictGraph,
    build_conflict_graph,
    evaluate_row,
    is_conflicting,
    ovfcheck,
)
from ordconflict.models.conflict_spec import ConflictSpec
from ordconflict.models.ordered_graph import OrderedGraph
from ordconflict.transforms import is_translation_invariant
from tests.helpers import k
from tests.strategies import matrices, ordered_graphs, thresholds

ROW3 = [[1, 0, -1, 0]]


@pytest.mark.parametrize(
    "e1, e2, matrix, expected",
    [
        ((1, 2), (2, 3), ROW3, True),
        ((1, 2), (1, 3), ROW3, False),
        ((2, 3), (1, 4), NEST_MATRIX, True),
        ((1, 4), (2, 3), NEST_MATRIX, True),
        ((1, 3), (2, 3), NEST_MATRIX, False),
    ],
)
def test_is_conflicting(e1, e2, matrix, expected):
    assert is_conflicting(e1, e2, ConflictSpec(matrix, 1)) is expected


def test_k3_left_endpoints():
    conflicts = build_conflict_graph(k(3), ConflictSpec(ROW3, 1))

    assert conflicts.nodes == ((1, 2), (1, 3), (2, 3))
    assert conflicts.conflict_pairs() == [(0, 2), (1, 2)]
    assert conflicts.conflict_count == 2


def test_k4_nest_has_one_conflict():
    conflicts = build_conflict_graph(k(4), ConflictSpec(NEST_MATRIX, 1))

    assert [
        (conflicts.nodes[i], conflicts.nodes[j])
        for i, j in conflicts.conflict_pairs()
    ] == [((1, 4), (2, 3))]


def test_zero_matrix_never_conflicts():
    conflicts = build_conflict_graph(k(5), ConflictSpec([[0, 0, 0, 0]], 1))

    assert conflicts.node_count == 10
    assert conflicts.conflict_count == 0


def test_no_edges():
    with pytest.raises(EmptyEdgeSetError):
        build_conflict_graph(OrderedGraph([1, 2], []), ConflictSpec(ROW3, 1))


def test_overflow_is_detected():
    assert ovfcheck(2 ** 63 - 1) == 2 ** 63 - 1

    with pytest.raises(ArithmeticOverflowError):
        ovfcheck(2 ** 63)

    big = 2 ** 31

    with pytest.raises(ArithmeticOverflowError):
        evaluate_row((big, big, big, big), (big, big, big, big))

    assert evaluate_row((1, 0, -1, 0), (5, 9, 2, 3)) == 3


def test_complement_and_induced():
    conflicts = build_conflict_graph(k(3), ConflictSpec(ROW3, 1))
    complement = conflicts.complement()

    assert complement.conflict_pairs() == [(0, 1)]
    assert complement.complement() == conflicts

    induced = conflicts.induced([2, 0])

    assert induced.nodes == ((2, 3), (1, 2))
    assert induced.conflict_pairs() == [(0, 1)]


def test_adjacency_is_checked():
    with pytest.raises(InvalidGraphError):
        ConflictGraph([(1, 2), (1, 3)], [0b10, 0])

    with pytest.raises(InvalidGraphError):
        ConflictGraph([(1, 2)], [0b1])


def test_manager_reads_its_own_documents(client):
    nest = client.specs.named("nest", 1)
    conflicts = client.conflict_graphs.build(k(4), nest)
    document = conflicts.to_dict()

    assert client.conflict_graphs.data_to_model_instance(document) == conflicts
    assert conflicts.to_networkx().number_of_edges() == 1


@settings(max_examples=50, deadline=None)
@given(ordered_graphs(), matrices, thresholds)
def test_conflicts_are_symmetric_in_the_edges(graph, matrix, p):
    spec = ConflictSpec(matrix, p)

    for e1 in graph.edges:
        for e2 in graph.edges:
            assert is_conflicting(e1, e2, spec) == is_conflicting(e2, e1, spec)


@settings(max_examples=50, deadline=None)
@given(ordered_graphs(), matrices, thresholds)
def test_translation_invariant_matrices_ignore_shifts(graph, matrix, p):
    if not is_translation_invariant(matrix):
        return

    spec = ConflictSpec(matrix, p)

    assert (
        build_conflict_graph(graph, spec).adjacency
        == build_conflict_graph(graph.shifted(37), spec).adjacency
    )
