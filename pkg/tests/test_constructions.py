"""Tests for extremal embeddings, witnesses and colorings."""

import networkx as nx
import pytest
from ordconflict.constants import (
    ARCH_MATRIX,
    CONTAINED_IN_ALL_SPANS,
    MEETS_ALL_SPANS,
    NEST_MATRIX,
    SHORT_EDGE_EXCEPTION,
)
from ordconflict.constructions import (
    coloring_to_embedding,
    embedding_to_coloring,
    extremal_complete_graph,
    independent_set_witness,
    is_p_almost_colorable,
    k_critical_subgraph,
    long_edge_set,
    theorem1_witness,
    verify_interval_witness,
)
from ordconflict.enumeration import EnumerationSpec
from ordconflict.exceptions import (
    CaseMismatchError,
    NotIndependentError,
    PreconditionError,
    UnclassifiableSpecError,
)
from ordconflict.models.conflict_graph import build_conflict_graph
from ordconflict.models.conflict_spec import ConflictSpec
from ordconflict.models.ordered_graph import OrderedGraph
from ordconflict.models.p_almost_coloring import PAlmostColoring
from ordconflict.params import arch_number
from ordconflict.solvers import (
    chromatic_number,
    clique_number,
    independence_number,
    omega_leftof_fast,
)
from tests.helpers import k, path


def solve(solver, graph, matrix, p, budget):
    return solver(build_conflict_graph(graph, ConflictSpec(matrix, p)), budget)


def test_row3_independence_side(budget):
    graph = extremal_complete_graph([(1, 0, -1, 0)], 2, 4).a_side

    assert graph.vertices == (2, 4, 6, 8)
    assert solve(independence_number, graph, [(1, 0, -1, 0)], 2, budget) == 3


def test_row10_clique_side(budget):
    graph = extremal_complete_graph(ARCH_MATRIX, -2, 5).side("W")

    assert graph.vertices == (3, 6, 9, 12, 15)
    assert solve(clique_number, graph, ARCH_MATRIX, -2, budget) == 4


def test_row6_clique_side(budget):
    graph = extremal_complete_graph([(-1, 1, -1, 1)], 4, 5).w_side

    assert graph.vertices == (1, 2, 3, 4, 5)
    assert solve(clique_number, graph, [(-1, 1, -1, 1)], 4, budget) == 6


def test_mirrored_rows_use_mirrored_embeddings(budget):
    pair = extremal_complete_graph([(0, 1, 0, -1)], 2, 4)

    assert pair.a_side.vertices == (-8, -6, -4, -2)
    alpha = solve(independence_number, pair.a_side, [(0, 1, 0, -1)], 2, budget)

    assert alpha == 3


def test_complement_exchange_swaps_sides():
    matrix = [(-1, 0, 0, 1), (0, 1, -1, 0)]
    pair = extremal_complete_graph(matrix, 1, 4)
    partner = extremal_complete_graph(ARCH_MATRIX, 0, 4)

    assert pair.a_side == partner.w_side
    assert pair.w_side == partner.a_side


def test_extremal_errors():
    with pytest.raises(UnclassifiableSpecError):
        extremal_complete_graph([(2, 0, -2, 0)], 1, 4)

    with pytest.raises(ValueError):
        extremal_complete_graph(ARCH_MATRIX, 1, 1)

    with pytest.raises(ValueError):
        extremal_complete_graph(ARCH_MATRIX, 1, 3).side("X")


def test_shift_witnesses_for_positive_sums(budget):
    matrix = [(1, 1, 1, 1)]
    empty = theorem1_witness(matrix, 0, k(3), "W")
    full = theorem1_witness(matrix, 0, k(3), "A")

    conflicts = build_conflict_graph(empty, ConflictSpec(matrix, 0))

    assert conflicts.conflict_count == 0
    assert solve(independence_number, full, matrix, 0, budget) == 1


def test_shift_witness_fills_for_unit_sum(budget):
    matrix = [(1, 1, -1, 0)]
    graph = theorem1_witness(matrix, 2, k(4), "A")

    assert solve(independence_number, graph, matrix, 2, budget) == 1


def test_power_witnesses(budget):
    graph = theorem1_witness([(-1, 1, -1, 1)], 3, k(3), "A")

    assert graph.vertices == (3, 9, 27)
    assert solve(independence_number, graph, [(-1, 1, -1, 1)], 3, budget) == 1

    graph = theorem1_witness([(2, -1, 0, -1)], 0, k(3), "W")

    assert graph.vertices == (3, 9, 27)
    assert solve(clique_number, graph, [(2, -1, 0, -1)], 0, budget) == 1


def test_witness_case_mismatches():
    with pytest.raises(CaseMismatchError):
        theorem1_witness([(1, 0, 0, 0), (-1, 0, 0, 0)], 0, k(3), "A")

    with pytest.raises(CaseMismatchError):
        theorem1_witness(NEST_MATRIX, 1, k(3), "W")

    with pytest.raises(CaseMismatchError):
        theorem1_witness([(2, 0, -2, 0)], 1, k(3), "A")


def test_k_critical_subgraphs(budget):
    pendant = OrderedGraph(
        [1, 2, 3, 4, 5], list(k(4).edges) + [(4, 5)]
    )

    assert k_critical_subgraph(pendant, 4, budget) == k(4)

    cycle = path((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))

    assert k_critical_subgraph(cycle, 3, budget) == cycle

    almost = k(5).subgraph(edges=[e for e in k(5).edges if e != (1, 2)])
    critical = k_critical_subgraph(almost, 4, budget)

    assert chromatic_number(critical, budget) == 4
    assert min(len(n) for n in critical.neighbors().values()) >= 3

    with pytest.raises(PreconditionError):
        k_critical_subgraph(cycle, 4, budget)


def test_long_edges_of_k5(budget):
    chosen, extra = long_edge_set(k(5), 5, 2, budget)

    assert sorted(chosen) == [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]
    assert extra == (1, 2)


def test_long_edges_of_k3(budget):
    chosen, _ = long_edge_set(k(3), 3, 1, budget)

    assert len(chosen) == 3

    with pytest.raises(PreconditionError):
        long_edge_set(k(3), 3, 3, budget)


def test_long_edges_on_random_graphs(budget):
    corpus = EnumerationSpec.random_corpus(40, seed=11)

    for graph in corpus:
        chi = chromatic_number(graph, budget)

        if chi < 4:
            continue

        chosen, extra = long_edge_set(graph, 4, 2, budget)

        assert len(set(chosen)) == 3
        assert all(v - u >= 2 for u, v in chosen)
        assert extra is not None and extra not in chosen


def test_meets_all_spans_witness():
    star = OrderedGraph([1, 2, 5, 7, 9], [(1, 5), (2, 5), (5, 7), (5, 9)])
    witness = independent_set_witness(star, 1, star.edges)

    assert witness.kind == MEETS_ALL_SPANS
    assert witness.interval == (5, 5)
    assert verify_interval_witness(star, 1, star.edges, witness)


def test_contained_in_all_spans_witness():
    graph = OrderedGraph([1, 2, 4, 5], [(1, 5), (2, 4)])
    witness = independent_set_witness(graph, -1, graph.edges)

    assert witness.kind == CONTAINED_IN_ALL_SPANS
    assert witness.interval == (2, 4)
    assert verify_interval_witness(graph, -1, graph.edges, witness)
    assert not verify_interval_witness(graph, 0, graph.edges, witness)


def test_short_edge_exception_witness():
    graph = OrderedGraph([0, 3, 5, 8], [(0, 8), (3, 5)])
    witness = independent_set_witness(graph, -2, graph.edges)

    assert witness.kind == SHORT_EDGE_EXCEPTION
    assert witness.exceptional_edge == (3, 5)
    assert witness.interval == (2, 6)
    assert verify_interval_witness(graph, -2, graph.edges, witness)


def test_dependent_sets_have_no_witness():
    with pytest.raises(NotIndependentError) as error:
        independent_set_witness(k(4), 1, [(1, 2), (3, 4)])

    assert error.value.pair == ((1, 2), (3, 4))

    with pytest.raises(PreconditionError):
        independent_set_witness(k(4), 1, [(1, 9)])


def test_bipartite_layout():
    graph = nx.path_graph(4)
    coloring = PAlmostColoring(0, 2, (), {0: 0, 1: 1, 2: 0, 3: 1})
    embedded = coloring_to_embedding(graph, coloring, 0)

    assert omega_leftof_fast(embedded, 0) <= 1


def test_cycle_layout():
    graph = nx.cycle_graph(5)
    coloring = PAlmostColoring(0, 3, (), {0: 0, 1: 1, 2: 0, 3: 1, 4: 2})

    assert omega_leftof_fast(coloring_to_embedding(graph, coloring, 0), 0) <= 2


def test_k4_layout_with_one_removed_vertex():
    graph = nx.complete_graph(4)
    coloring = PAlmostColoring(1, 3, (0,), {1: 0, 2: 1, 3: 2})

    assert omega_leftof_fast(coloring_to_embedding(graph, coloring, 1), 1) <= 2


def test_layout_rejects_bad_colorings():
    coloring = PAlmostColoring(0, 2, (), {0: 0, 1: 0, 2: 1})

    with pytest.raises(PreconditionError):
        coloring_to_embedding(nx.path_graph(3), coloring, 0)


def test_two_unit_edges_coloring():
    graph = path((1, 2), (5, 6))
    coloring = embedding_to_coloring(graph, 1)

    assert coloring.colors == 3
    assert len(coloring.removed) <= 2
    assert coloring.is_valid_for(graph.to_networkx())


def test_k4_coloring():
    coloring = embedding_to_coloring(k(4), 1)

    assert coloring.colors == 3
    assert sorted(coloring.removed) == [2, 3]
    assert coloring.is_valid_for(k(4).to_networkx())


@pytest.mark.parametrize("p", [0, 1, 2])
def test_colorings_read_off_random_embeddings(p):
    for graph in EnumerationSpec.random_corpus(60, seed=5):
        t = omega_leftof_fast(graph, p)
        coloring = embedding_to_coloring(graph, p)

        assert coloring.colors == t + 1
        assert len(coloring.removed) <= p * t
        assert coloring.is_valid_for(graph.to_networkx())


def test_brute_force_p_almost_coloring(budget):
    found = is_p_almost_colorable(nx.complete_graph(4), 1, 3, budget)

    assert found is not None
    assert found.is_valid_for(nx.complete_graph(4))
    assert is_p_almost_colorable(nx.complete_graph(4), 0, 3, budget) is None


def test_one_almost_colorings_match_arch_number(budget):
    checked = 0

    for graph in nx.graph_atlas_g():
        if graph.number_of_nodes() > 6 or graph.number_of_edges() > 9:
            continue

        if not graph.number_of_edges() or nx.number_of_isolates(graph):
            continue

        arch = arch_number(graph, budget)

        assert is_p_almost_colorable(graph, 1, arch + 1, budget) is not None
        assert is_p_almost_colorable(graph, 1, arch, budget) is None
        checked += 1

    assert checked > 50
