"""Tests for the exact solvers and the comparability fast path."""

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from ordconflict.constants import ARCH_MATRIX, NEST_MATRIX
from ordconflict.exceptions import (
    BudgetExceededError,
    EmptyEdgeSetError,
    PreconditionError,
)
from ordconflict.models.conflict_graph import build_conflict_graph
from ordconflict.models.conflict_spec import ConflictSpec
from ordconflict.solvers import (
    BitsetGraph,
    SolveBudget,
    chain_levels,
    chromatic_number,
    clique_number,
    independence_number,
    is_comparability_orientation,
    omega_leftof_fast,
    optimal_coloring,
)
from tests.helpers import k, path
from tests.strategies import matrices, ordered_graphs, thresholds


def conflicts_of(graph, matrix, p):
    return build_conflict_graph(graph, ConflictSpec(matrix, p))


def test_k3_left_endpoints(budget):
    conflicts = conflicts_of(k(3), [[1, 0, -1, 0]], 1)

    assert independence_number(conflicts, budget) == 2
    assert clique_number(conflicts, budget) == 2
    assert chromatic_number(conflicts, budget) == 2


def test_k4_nest_independence(budget):
    assert independence_number(conflicts_of(k(4), NEST_MATRIX, 1), budget) == 5


def test_k5_arch_independence(budget):
    assert independence_number(conflicts_of(k(5), ARCH_MATRIX, 1), budget) == 8


@pytest.mark.parametrize(
    "graph, p, expected",
    [
        (k(4), 1, 2),
        (path((1, 2), (4, 5), (7, 8)), 1, 3),
        (k(7), 0, 6),
        (k(5, start=3, step=3), -2, 4),
    ],
)
def test_arch_clique_numbers(budget, graph, p, expected):
    assert clique_number(conflicts_of(graph, ARCH_MATRIX, p), budget) == (
        expected
    )


@pytest.mark.parametrize(
    "graph, expected",
    [
        (nx.cycle_graph(5), 3),
        (nx.complete_graph(5), 5),
        (nx.petersen_graph(), 3),
        (nx.complete_bipartite_graph(3, 3), 2),
        (nx.empty_graph(3), 1),
    ],
)
def test_chromatic_numbers(budget, graph, expected):
    colors = optimal_coloring(graph, budget)

    assert max(colors) + 1 == expected
    assert all(colors[a] != colors[b] for a, b in graph.edges())


def test_graph_without_nodes():
    assert chromatic_number(nx.Graph()) == 0

    with pytest.raises(EmptyEdgeSetError):
        clique_number(nx.Graph())


def test_ordered_graphs_are_solved_directly(budget):
    assert chromatic_number(k(4), budget) == 4
    assert clique_number(k(4), budget) == 4
    assert independence_number(k(4), budget) == 1


def test_bitset_graph_from_edges():
    graph = BitsetGraph.from_edges(["a", "b", "c"], [("a", "b"), ("b", "c")])

    assert graph.adjacency == (0b010, 0b101, 0b010)
    assert graph.node_count == 3
    assert clique_number(graph) == 2


def test_budget_exceeded_carries_bounds():
    with pytest.raises(BudgetExceededError) as error:
        clique_number(nx.complete_graph(4), SolveBudget(node_limit=1))

    assert error.value.lower == 1
    assert error.value.upper == 4


def test_budget_limits_are_positive():
    with pytest.raises(ValueError):
        SolveBudget(node_limit=0)

    with pytest.raises(ValueError):
        SolveBudget(time_limit_ms=-5)


def test_chain_levels():
    levels = chain_levels(path((1, 2), (4, 5), (7, 8), (1, 8)), 1)

    assert levels == {(1, 2): 1, (4, 5): 2, (7, 8): 3, (1, 8): 1}

    with pytest.raises(PreconditionError):
        chain_levels(k(3), -1)


def test_fast_path_needs_edges():
    with pytest.raises(EmptyEdgeSetError):
        omega_leftof_fast(path(), 0)


@settings(max_examples=40, deadline=None)
@given(ordered_graphs(max_vertices=7))
def test_fast_path_matches_the_clique_solver(graph):
    for p in (0, 1, 2):
        conflicts = conflicts_of(graph, ARCH_MATRIX, p)
        fast = omega_leftof_fast(graph, p)

        assert is_comparability_orientation(graph, p)
        assert clique_number(conflicts) == fast
        assert chromatic_number(conflicts) == fast


@settings(max_examples=40, deadline=None)
@given(ordered_graphs(max_vertices=6))
def test_independence_is_complement_clique(graph):
    conflicts = conflicts_of(graph, NEST_MATRIX, 1)

    assert independence_number(conflicts) == clique_number(
        conflicts.complement()
    )


@settings(max_examples=60, deadline=None)
@given(ordered_graphs(max_vertices=6), matrices, thresholds)
def test_dropping_a_node_never_raises_alpha_or_omega(graph, matrix, p):
    conflicts = conflicts_of(graph, matrix, p)

    assume(conflicts.node_count >= 2)

    alpha = independence_number(conflicts)
    omega = clique_number(conflicts)

    for dropped in range(conflicts.node_count):
        rest = conflicts.induced(
            i for i in range(conflicts.node_count) if i != dropped
        )

        assert alpha - 1 <= independence_number(rest) <= alpha
        assert omega - 1 <= clique_number(rest) <= omega
