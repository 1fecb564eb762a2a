"""Tests for graph parameters searched over vertex orderings."""

import networkx as nx
import pytest
from ordconflict.constants import (
    ARCH_MATRIX,
    BAND_WIDTH_MATRIX,
    CROSS_MATRIX,
    NEST_MATRIX,
)
from ordconflict.enumeration import EnumerationSpec
from ordconflict.exceptions import EmptyEdgeSetError, PreconditionError
from ordconflict.models.conflict_graph import build_conflict_graph
from ordconflict.models.conflict_spec import ConflictSpec
from ordconflict.models.ordered_graph import OrderedGraph
from ordconflict.params import (
    arch_number,
    band_width,
    band_width_framework,
    degeneracy,
    degeneracy_peel,
    interval_chromatic,
    page_number,
    queue_number,
)
from ordconflict.solvers import chromatic_number, clique_number
from tests.helpers import k, path


@pytest.mark.parametrize(
    "parameter, expected",
    [
        (queue_number, 2),
        (arch_number, 2),
        (page_number, 2),
        (degeneracy, 3),
        (band_width, 3),
        (band_width_framework, 3),
    ],
)
def test_k4_parameters(parameter, expected, budget):
    assert parameter(nx.complete_graph(4), budget) == expected


def test_band_width_of_paths_and_cycles(budget):
    assert band_width(nx.path_graph(4), budget) == 1
    assert band_width_framework(nx.path_graph(4), budget) == 1
    assert band_width(nx.cycle_graph(5), budget) == 2
    assert band_width_framework(nx.cycle_graph(5), budget) == 2


def test_small_graphs_have_small_parameters(budget):
    assert queue_number(nx.path_graph(5), budget) == 1
    assert page_number(nx.cycle_graph(6), budget) == 1
    assert degeneracy(nx.cycle_graph(5), budget) == 2


def test_degeneracy_peel():
    assert degeneracy_peel(nx.petersen_graph()) == 3
    assert degeneracy_peel(nx.balanced_tree(2, 3)) == 1

    value, ordering = degeneracy_peel(nx.complete_graph(3), with_ordering=True)

    assert value == 2
    assert sorted(ordering) == [0, 1, 2]


def test_interval_chromatic():
    assert interval_chromatic(k(3)) == 3
    assert interval_chromatic(path((1, 2), (3, 4))) == 3
    assert interval_chromatic(path((1, 4), (2, 3))) == 2

    with pytest.raises(EmptyEdgeSetError):
        interval_chromatic(OrderedGraph([1, 2], []))


def test_optimal_orderings_are_returned(budget):
    value, ordering = queue_number(
        nx.complete_graph(4), budget, with_ordering=True
    )

    assert value == 2
    assert sorted(ordering) == [0, 1, 2, 3]


def test_ordered_graphs_are_read_as_unordered(budget):
    assert queue_number(k(4, start=10, step=7), budget) == 2
    assert band_width(path((1, 9), (9, 20)), budget) == 1


def test_ordering_search_limits(budget):
    with pytest.raises(PreconditionError):
        page_number(nx.path_graph(10), budget)

    with pytest.raises(EmptyEdgeSetError):
        queue_number(nx.empty_graph(3), budget)


def test_worker_processes_agree(budget):
    assert queue_number(nx.complete_graph(4), budget, workers=2) == 2


def test_peel_matches_core_numbers():
    for seed in range(20):
        graph = nx.gnp_random_graph(9, 0.4, seed=seed)

        assert degeneracy_peel(graph) == max(nx.core_number(graph).values())


@pytest.mark.parametrize("n", range(3, 8))
def test_complete_graph_band_width(n, budget):
    assert band_width(nx.complete_graph(n), budget) == n - 1


def test_interval_chromatic_is_one_more_than_chain_length():
    spec = ConflictSpec(ARCH_MATRIX, 0)

    for graph in EnumerationSpec.random_corpus(200, seed=11):
        conflicts = build_conflict_graph(graph, spec)

        assert interval_chromatic(graph) == clique_number(conflicts) + 1


def test_degeneracy_search_matches_peel(budget):
    checked = 0

    for seed in range(200):
        graph = nx.gnp_random_graph(3 + seed % 5, 0.5, seed=seed)

        if not graph.number_of_edges():
            continue

        assert degeneracy(graph, budget) == degeneracy_peel(graph)
        checked += 1

    assert checked > 150


@pytest.mark.parametrize(
    "matrix, p, solve",
    [
        (ARCH_MATRIX, 1, clique_number),
        (CROSS_MATRIX, 1, chromatic_number),
        (NEST_MATRIX, 1, clique_number),
        (BAND_WIDTH_MATRIX, 2, clique_number),
    ],
)
def test_compaction_never_increases_parameters(matrix, p, solve, budget):
    spec = ConflictSpec(matrix, p)

    for graph in EnumerationSpec.random_corpus(1000, seed=5):
        spread = solve(build_conflict_graph(graph, spec), budget)
        compact = solve(build_conflict_graph(graph.compacted(), spec), budget)

        assert compact <= spread, graph
