"""Graph parameters computed through conflict graphs.

Each parameter of an unordered graph F is a minimum over vertex
orderings of F, embedded on [n], of a solver value of one conflict
graph. Orderings are searched exhaustively with pruning by the value
of the partial embedding; placing further vertices to the right never
lowers that value, so prefixes can be cut as soon as they reach the
best complete value.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import concurrent.futures
import functools
import logging
from ordconflict.constants import (
    ARCH_MATRIX,
    BAND_WIDTH_MATRIX,
    CROSS_MATRIX,
    DEGENERACY_MATRIX,
    MAX_ORDERING_VERTICES,
    NEST_MATRIX,
)
from ordconflict.exceptions import (
    EmptyEdgeSetError,
    OrdConflictError,
    PreconditionError,
)
from ordconflict.models.conflict_graph import build_conflict_graph
from ordconflict.models.conflict_spec import ConflictSpec
from ordconflict.models.ordered_graph import OrderedGraph
from ordconflict.solvers import (
    NodeCounter,
    chromatic_number,
    clique_number,
    omega_leftof_fast,
)

logger = logging.getLogger(__name__)


def _page_value(graph, budget):
    spec = ConflictSpec(CROSS_MATRIX, 1)

    return chromatic_number(build_conflict_graph(graph, spec), budget)


def _queue_value(graph, budget):
    # Nest conflict graphs are comparability graphs, so chi = omega
    spec = ConflictSpec(NEST_MATRIX, 1)

    return clique_number(build_conflict_graph(graph, spec), budget)


def _degeneracy_value(graph, budget):
    spec = ConflictSpec(DEGENERACY_MATRIX, 0)

    return clique_number(build_conflict_graph(graph, spec), budget)


def _band_width_value(graph, budget):
    return max(v - u for u, v in graph.edges)


def _arch_value(graph, budget):
    return omega_leftof_fast(graph, 1)


def _long_edge_value(p, graph, budget):
    spec = ConflictSpec(BAND_WIDTH_MATRIX, p + 1)

    return clique_number(build_conflict_graph(graph, spec), budget)


def _as_networkx(graph):
    """The unordered graph behind an ordered graph or networkx graph."""
    if isinstance(graph, OrderedGraph):
        return graph.to_networkx()

    return graph


def _check_searchable(graph):
    try:
        assert graph.number_of_nodes() <= MAX_ORDERING_VERTICES
    except AssertionError:
        raise PreconditionError(
            "ordering search supports at most {} vertices, got {}".format(
                MAX_ORDERING_VERTICES, graph.number_of_nodes()
            )
        )

    if graph.number_of_edges() == 0:
        raise EmptyEdgeSetError("graph has no edges")


def _embed(graph, prefix):
    """The subgraph induced by a prefix, placed on 1, ..., len(prefix)."""
    position = {node: index + 1 for index, node in enumerate(prefix)}

    return OrderedGraph(
        range(1, len(prefix) + 1),
        [
            (position[a], position[b])
            for a, b in graph.edges()
            if a in position and b in position
        ],
    )


class _OrderingSearch(object):
    """Depth-first search over orderings, keeping the first best one."""

    def __init__(self, graph, evaluate, budget, best, best_ordering):
        self.graph = graph
        self.nodes = list(graph.nodes())
        self.evaluate = evaluate
        self.budget = budget
        self.counter = NodeCounter(budget, "ordering")
        self.best = best
        self.best_ordering = best_ordering
        self.improved = False

    def value(self, prefix):
        embedded = _embed(self.graph, prefix)

        if not embedded.edges:
            return 0

        return self.evaluate(embedded, self.budget)

    def expand(self, prefix, placed):
        """Return True once the value 1 is reached."""
        self.counter.tick(1, self.best)

        # Prune
        if self.value(prefix) >= self.best:
            return False

        if len(prefix) == len(self.nodes):
            self.best = self.value(prefix)
            self.best_ordering = list(prefix)
            self.improved = True

            return self.best <= 1

        for node in self.nodes:
            if node in placed:
                continue

            prefix.append(node)
            placed.add(node)

            done = self.expand(prefix, placed)

            prefix.pop()
            placed.discard(node)

            if done:
                return True

        return False


def _search_subtree(graph, evaluate, budget, first, best, best_ordering):
    """Best ordering starting with one vertex, or None if not better."""
    search = _OrderingSearch(graph, evaluate, budget, best, best_ordering)
    search.expand([first], {first})

    if not search.improved:
        return None

    return search.best, search.best_ordering


def search_orderings(graph, evaluate, budget=None, initial=None, workers=1):
    """Minimize a value over the orderings of an unordered graph.

    Args:
        graph (:class:`networkx.Graph`): The unordered graph, with at
            most 9 nodes and at least one edge.
        evaluate (callable): Maps (ordered graph, budget) to an int,
            nondecreasing as vertices are appended on the right.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for the search and for every solver call.
        initial (list, optional): An ordering whose value seeds the
            upper bound. Defaults to the node order of the graph.
        workers (int, optional): Worker processes; the search splits
            over the first vertex when more than one.

    Returns:
        tuple: (value, ordering) with the first optimal ordering in
            depth-first order, or the initial ordering if nothing beats
            it.

    Raises:
        :class:`ordconflict.exceptions.BudgetExceededError`: The search
            ran out of budget.
    """
    nodes = list(graph.nodes())
    initial = list(initial) if initial is not None else nodes
    best = evaluate(_embed(graph, initial), budget)

    if best <= 1:
        return best, initial

    results = []

    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(workers) as executor:
            futures = [
                executor.submit(
                    _search_subtree, graph, evaluate, budget, n, best, initial
                )
                for n in nodes
            ]
            results = [future.result() for future in futures]
    else:
        for first in nodes:
            result = _search_subtree(
                graph, evaluate, budget, first, best, initial
            )
            results.append(result)

            if result is not None:
                best = result[0]

                if best <= 1:
                    break

    found = [result for result in results if result is not None]

    if not found:
        return best, initial

    # The earliest first vertex wins ties
    value, ordering = min(found, key=lambda result: result[0])

    logger.debug("Best ordering %s has value %d", ordering, value)

    return value, ordering


def _parameter(graph, evaluate, budget, workers, with_ordering, initial=None):
    graph = _as_networkx(graph)
    _check_searchable(graph)

    value, ordering = search_orderings(
        graph, evaluate, budget, initial=initial, workers=workers
    )

    if with_ordering:
        return value, ordering

    return value


def page_number(graph, budget=None, workers=1, with_ordering=False):
    """Page number: min over orderings of chi of the crossing conflicts.

    Crossing depends only on the relative order of endpoints, so
    orderings on [n] cover every embedding.

    Args:
        graph: A :class:`networkx.Graph` or an ordered graph, whose
            vertex positions are then ignored.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Search limits.
        workers (int, optional): Worker processes for the search.
        with_ordering (bool, optional): Also return an optimal ordering.

    Returns:
        int: The page number, or (value, ordering).
    """
    return _parameter(graph, _page_value, budget, workers, with_ordering)


def queue_number(graph, budget=None, workers=1, with_ordering=False):
    """Queue number: min over orderings of omega of the nesting conflicts.

    Args:
        graph: A :class:`networkx.Graph` or an ordered graph.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Search limits.
        workers (int, optional): Worker processes for the search.
        with_ordering (bool, optional): Also return an optimal ordering.

    Returns:
        int: The queue number, or (value, ordering).
    """
    return _parameter(graph, _queue_value, budget, workers, with_ordering)


def degeneracy_peel(graph, with_ordering=False):
    """Degeneracy by repeatedly removing a vertex of minimum degree.

    Args:
        graph: A :class:`networkx.Graph` or an ordered graph.
        with_ordering (bool, optional): Also return the smallest-last
            ordering, in which every vertex has at most d neighbors to
            its left.

    Returns:
        int: The degeneracy d, or (d, ordering).
    """
    graph = _as_networkx(graph)
    degrees = dict(graph.degree())
    remaining = list(graph.nodes())
    removal = []
    value = 0

    while remaining:
        node = min(remaining, key=degrees.get)
        value = max(value, degrees[node])
        remaining.remove(node)
        removal.append(node)

        for neighbor in graph.neighbors(node):
            if neighbor in degrees and neighbor not in removal:
                degrees[neighbor] -= 1

    ordering = removal[::-1]

    if with_ordering:
        return value, ordering

    return value


def degeneracy(graph, budget=None, workers=1, with_ordering=False):
    """Degeneracy: min over orderings of the most edges sharing a right end.

    The search starts from the smallest-last ordering, and the result
    is checked against :func:`degeneracy_peel`.

    Args:
        graph: A :class:`networkx.Graph` or an ordered graph.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Search limits.
        workers (int, optional): Worker processes for the search.
        with_ordering (bool, optional): Also return an optimal ordering.

    Returns:
        int: The degeneracy, or (value, ordering).

    Raises:
        :class:`ordconflict.exceptions.OrdConflictError`: The two
            computations disagree.
    """
    peel, order = degeneracy_peel(graph, with_ordering=True)
    value, ordering = _parameter(
        graph, _degeneracy_value, budget, workers, True, initial=order
    )

    try:
        assert value == peel
    except AssertionError:
        raise OrdConflictError(
            "degeneracy {} disagrees with the peel value {}".format(
                value, peel
            )
        )

    if with_ordering:
        return value, ordering

    return value


def band_width(graph, budget=None, workers=1, with_ordering=False):
    """Band-width: min over orderings on [n] of the longest edge.

    Args:
        graph: A :class:`networkx.Graph` or an ordered graph.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Search limits.
        workers (int, optional): Worker processes for the search.
        with_ordering (bool, optional): Also return an optimal ordering.

    Returns:
        int: The band-width, or (value, ordering).
    """
    return _parameter(graph, _band_width_value, budget, workers, with_ordering)


def band_width_framework(graph, budget=None, workers=1):
    """Band-width as the least p >= 1 with omega(M_{p+1}(G)) = 1.

    Here M = (-,+,0,0), so an edge of length at least p + 1 conflicts
    with every other edge.

    Args:
        graph: A :class:`networkx.Graph` or an ordered graph.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Search limits.
        workers (int, optional): Worker processes for the search.

    Returns:
        int: The band-width.
    """
    graph = _as_networkx(graph)
    _check_searchable(graph)

    for p in range(1, graph.number_of_nodes()):
        value, _ = search_orderings(
            graph,
            functools.partial(_long_edge_value, p),
            budget,
            workers=workers,
        )

        if value == 1:
            return p

    return graph.number_of_nodes() - 1


def interval_chromatic(graph):
    """Fewest intervals partitioning the line with no edge inside one.

    Vertices are scanned left to right and a new interval starts at
    the first vertex with a neighbor in the current interval. The
    count is checked against omega(M_0(G)) + 1 for M = (+,0,0,-).

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            The ordered graph, with at least one edge.

    Returns:
        int: The interval chromatic number.

    Raises:
        :class:`ordconflict.exceptions.EmptyEdgeSetError`: G has no
            edges.
        :class:`ordconflict.exceptions.OrdConflictError`: The scan and
            the chain length disagree.
    """
    if not graph.edges:
        raise EmptyEdgeSetError("graph has no edges")

    left_neighbors = {v: [] for v in graph.vertices}

    for u, v in graph.edges:
        left_neighbors[v].append(u)

    count = 1
    start = graph.vertices[0]

    for vertex in graph.vertices:
        if any(u >= start for u in left_neighbors[vertex]):
            count += 1
            start = vertex

    expected = omega_leftof_fast(graph, 0) + 1

    try:
        assert count == expected
    except AssertionError:
        raise OrdConflictError(
            "interval scan gives {}, chain length gives {}".format(
                count, expected
            )
        )

    return count


def arch_number(graph, budget=None, workers=1, with_ordering=False):
    """Arch-number: min over orderings of omega(M_1(G)) for M = (+,0,0,-).

    Args:
        graph: A :class:`networkx.Graph` or an ordered graph.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Search limits.
        workers (int, optional): Worker processes for the search.
        with_ordering (bool, optional): Also return an optimal ordering.

    Returns:
        int: The arch-number, or (value, ordering).
    """
    return _parameter(graph, _arch_value, budget, workers, with_ordering)

