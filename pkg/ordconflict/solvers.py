"""Exact clique, independence and chromatic numbers.

Graphs are handled as integer bitsets: bit j of ``adjacency[i]`` is set
iff i and j are adjacent. :class:`ordconflict.models.conflict_graph.ConflictGraph`
already has that shape; ordered graphs and networkx graphs are converted
by :func:`as_bitset_graph`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import bisect
import logging
import time
import networkx as nx
from ordconflict.constants import DEFAULT_BUDGET_MS, DEFAULT_BUDGET_NODES
from ordconflict.exceptions import (
    BudgetExceededError,
    EmptyEdgeSetError,
    PreconditionError,
)
from ordconflict.models.conflict_graph import iter_bits
from ordconflict.models.ordered_graph import OrderedGraph

logger = logging.getLogger(__name__)


class SolveBudget(object):
    """Limits for one exact search.

    Attributes:
        node_limit (int): The most search nodes to expand, or None.
        time_limit_ms (int): The most milliseconds to spend, or None.
    """

    def __init__(self, node_limit=None, time_limit_ms=None):
        """Initialize and check a budget.

        Args:
            node_limit (int, optional): The most search nodes to expand.
            time_limit_ms (int, optional): The most milliseconds to
                spend.

        Raises:
            ValueError: A limit is present but not positive.
        """
        if node_limit is not None and node_limit < 1:
            raise ValueError("node limit must be positive")

        if time_limit_ms is not None and time_limit_ms < 1:
            raise ValueError("time limit must be positive")

        self.node_limit = node_limit
        self.time_limit_ms = time_limit_ms

    def __repr__(self):
        """Unambiguous representation of the budget."""
        return "SolveBudget(node_limit=%r, time_limit_ms=%r)" % (
            self.node_limit,
            self.time_limit_ms,
        )

    @classmethod
    def default(cls):
        """Return the default budget of 10^7 nodes and 60 seconds."""
        return cls(DEFAULT_BUDGET_NODES, DEFAULT_BUDGET_MS)


class NodeCounter(object):
    """Counts search nodes against a budget."""

    # Check the clock once per this many nodes
    CLOCK_PERIOD = 256

    def __init__(self, budget, what):
        self.budget = budget if budget is not None else SolveBudget.default()
        self.what = what
        self.nodes = 0
        self.started = time.monotonic()

    def tick(self, lower, upper):
        self.nodes += 1

        if (
            self.budget.node_limit is not None
            and self.nodes > self.budget.node_limit
        ):
            raise BudgetExceededError(
                "{} search exceeded {} nodes".format(
                    self.what, self.budget.node_limit
                ),
                lower,
                upper,
            )

        if (
            self.budget.time_limit_ms is not None
            and self.nodes % self.CLOCK_PERIOD == 0
        ):
            elapsed_ms = (time.monotonic() - self.started) * 1000

            if elapsed_ms > self.budget.time_limit_ms:
                raise BudgetExceededError(
                    "{} search exceeded {} ms".format(
                        self.what, self.budget.time_limit_ms
                    ),
                    lower,
                    upper,
                )


class BitsetGraph(object):
    """A plain undirected graph on nodes 0..n-1 as adjacency bitsets.

    Attributes:
        adjacency (tuple): One bitset per node.
        labels (tuple): The original name of each node.
    """

    def __init__(self, adjacency, labels=None):
        """Initialize the graph.

        Args:
            adjacency (iterable): One bitset per node.
            labels (iterable, optional): The original node names.
                Defaults to 0..n-1.
        """
        self.adjacency = tuple(adjacency)
        self.labels = (
            tuple(labels)
            if labels is not None
            else tuple(range(len(self.adjacency)))
        )

    @property
    def node_count(self):
        """int: The number of nodes."""
        return len(self.adjacency)

    @classmethod
    def from_edges(cls, labels, edges):
        """Build a bitset graph from labeled nodes and edges.

        Args:
            labels (iterable): The node names.
            edges (iterable): Pairs of node names.

        Returns:
            :class:`BitsetGraph`: The graph.
        """
        labels = list(labels)
        position = {label: index for index, label in enumerate(labels)}
        adjacency = [0] * len(labels)

        for a, b in edges:
            i, j = position[a], position[b]
            adjacency[i] |= 1 << j
            adjacency[j] |= 1 << i

        return cls(adjacency, labels)


def as_bitset_graph(graph):
    """Convert a graph to something with ``adjacency`` bitsets.

    Args:
        graph: A conflict graph or bitset graph (used as is), an ordered
            graph, or a :class:`networkx.Graph`.

    Returns:
        An object with ``adjacency`` and ``node_count``.
    """
    if isinstance(graph, OrderedGraph):
        return BitsetGraph.from_edges(graph.vertices, graph.edges)

    if isinstance(graph, nx.Graph):
        return BitsetGraph.from_edges(list(graph.nodes()), graph.edges())

    return graph


def _complement(adjacency):
    """The complement adjacency, irreflexive."""
    full = (1 << len(adjacency)) - 1

    return [full & ~row & ~(1 << i) for i, row in enumerate(adjacency)]


def _degree_order(adjacency):
    """Nodes by degree descending, ties by index."""
    return sorted(
        range(len(adjacency)), key=lambda i: (-bin(adjacency[i]).count("1"), i)
    )


def _relabel(adjacency, order):
    """Renumber nodes so that order[i] becomes i."""
    position = {old: new for new, old in enumerate(order)}
    relabeled = []

    for old in order:
        row = 0

        for j in iter_bits(adjacency[old]):
            row |= 1 << position[j]

        relabeled.append(row)

    return relabeled


def _color_sort(adjacency, candidates):
    """Greedily color candidates, lowest index first.

    Returns the candidates in color order together with the color of
    each; the color of the i-th node bounds the clique size among the
    first i + 1 nodes.
    """
    order = []
    bounds = []
    uncolored = candidates
    color = 0

    while uncolored:
        color += 1
        available = uncolored

        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~adjacency[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)

    return order, bounds


class _CliqueSearch(object):
    """Branch and bound for a maximum clique with coloring bounds."""

    def __init__(self, adjacency, counter):
        self.adjacency = adjacency
        self.counter = counter
        self.best = 1
        self.upper = max(_color_sort(adjacency, (1 << len(adjacency)) - 1)[1])

    def expand(self, size, candidates):
        self.counter.tick(self.best, self.upper)

        order, bounds = _color_sort(self.adjacency, candidates)

        for i in range(len(order) - 1, -1, -1):
            # Prune
            if size + bounds[i] <= self.best:
                return

            v = order[i]
            remaining = candidates & self.adjacency[v]

            if remaining:
                self.expand(size + 1, remaining)
            elif size + 1 > self.best:
                self.best = size + 1

            candidates &= ~(1 << v)


def _max_clique(adjacency, budget, what):
    """Exact clique number of a nonempty bitset graph."""
    if not adjacency:
        raise EmptyEdgeSetError(
            "{} of a graph without nodes is undefined".format(what)
        )

    order = _degree_order(adjacency)
    relabeled = _relabel(adjacency, order)

    search = _CliqueSearch(relabeled, NodeCounter(budget, what))
    search.expand(0, (1 << len(relabeled)) - 1)

    logger.debug(
        "%s = %d after %d nodes", what, search.best, search.counter.nodes
    )

    return search.best


def clique_number(graph, budget=None):
    """Exact clique number.

    Args:
        graph: A conflict graph, bitset graph, ordered graph or
            :class:`networkx.Graph` with at least one node.
        budget (:class:`SolveBudget`, optional): Search limits.
            Defaults to :meth:`SolveBudget.default`.

    Returns:
        int: The clique number.

    Raises:
        :class:`ordconflict.exceptions.EmptyEdgeSetError`: The graph has
            no nodes.
        :class:`ordconflict.exceptions.BudgetExceededError`: The search
            ran out of budget; the error carries the bounds found.
    """
    graph = as_bitset_graph(graph)

    return _max_clique(list(graph.adjacency), budget, "clique number")


def independence_number(graph, budget=None):
    """Exact independence number, as the clique number of the complement.

    Args:
        graph: A conflict graph, bitset graph, ordered graph or
            :class:`networkx.Graph` with at least one node.
        budget (:class:`SolveBudget`, optional): Search limits.

    Returns:
        int: The independence number.

    Raises:
        :class:`ordconflict.exceptions.EmptyEdgeSetError`: The graph has
            no nodes.
        :class:`ordconflict.exceptions.BudgetExceededError`: The search
            ran out of budget.
    """
    graph = as_bitset_graph(graph)

    return _max_clique(
        _complement(graph.adjacency), budget, "independence number"
    )


def _greedy_clique_size(adjacency):
    """Size of a clique grown greedily in degree order."""
    clique = 0
    candidates = (1 << len(adjacency)) - 1

    for v in _degree_order(adjacency):
        if candidates >> v & 1:
            clique += 1
            candidates &= adjacency[v]

    return clique


def _saturation(adjacency, colors, v):
    """Bitmask of the colors used by the neighbors of v."""
    mask = 0

    for u in iter_bits(adjacency[v]):
        if colors[u] >= 0:
            mask |= 1 << colors[u]

    return mask


def _dsatur_pick(adjacency, colors, degrees):
    """Uncolored node of maximum saturation, then degree, then lowest index."""
    best = None
    best_key = None

    for v, color in enumerate(colors):
        if color >= 0:
            continue

        key = (-bin(_saturation(adjacency, colors, v)).count("1"), -degrees[v])

        if best is None or key < best_key:
            best = v
            best_key = key

    return best


def _dsatur_greedy(adjacency, degrees):
    """A DSATUR coloring; returns the color list."""
    colors = [-1] * len(adjacency)

    for _ in range(len(adjacency)):
        v = _dsatur_pick(adjacency, colors, degrees)
        forbidden = _saturation(adjacency, colors, v)
        color = 0

        while forbidden >> color & 1:
            color += 1

        colors[v] = color

    return colors


class _ColoringSearch(object):
    """DSATUR branch and bound for an optimal coloring."""

    def __init__(self, adjacency, lower, incumbent, counter):
        self.adjacency = adjacency
        self.degrees = [bin(row).count("1") for row in adjacency]
        self.lower = lower
        self.best = max(incumbent) + 1
        self.best_colors = list(incumbent)
        self.counter = counter
        self.colors = [-1] * len(adjacency)

    def search(self, colored, used):
        """Return True once a coloring with ``lower`` colors is found."""
        self.counter.tick(self.lower, self.best)

        if colored == len(self.adjacency):
            self.best = used
            self.best_colors = list(self.colors)

            return used <= self.lower

        v = _dsatur_pick(self.adjacency, self.colors, self.degrees)
        forbidden = _saturation(self.adjacency, self.colors, v)
        color = 0

        # Existing colors, then one new color, never reaching the incumbent
        while color <= used and color < self.best - 1:
            if not forbidden >> color & 1:
                self.colors[v] = color

                if self.search(colored + 1, max(used, color + 1)):
                    return True

            color += 1

        self.colors[v] = -1

        return False


def optimal_coloring(graph, budget=None):
    """An optimal proper coloring.

    Args:
        graph: A conflict graph, bitset graph, ordered graph or
            :class:`networkx.Graph`.
        budget (:class:`SolveBudget`, optional): Search limits.

    Returns:
        list: The color (0, 1, ...) of each node in node order; empty
            for a graph without nodes.

    Raises:
        :class:`ordconflict.exceptions.BudgetExceededError`: The search
            ran out of budget.
    """
    graph = as_bitset_graph(graph)
    adjacency = list(graph.adjacency)

    if not adjacency:
        return []

    degrees = [bin(row).count("1") for row in adjacency]
    incumbent = _dsatur_greedy(adjacency, degrees)
    lower = _greedy_clique_size(adjacency)

    # The greedy coloring is optimal when it meets the clique bound
    if max(incumbent) + 1 == lower:
        return incumbent

    search = _ColoringSearch(
        adjacency, lower, incumbent, NodeCounter(budget, "chromatic number")
    )
    search.search(0, 0)

    logger.debug(
        "chromatic number = %d after %d nodes",
        search.best,
        search.counter.nodes,
    )

    return search.best_colors


def chromatic_number(graph, budget=None):
    """Exact chromatic number.

    Args:
        graph: A conflict graph, bitset graph, ordered graph or
            :class:`networkx.Graph`.
        budget (:class:`SolveBudget`, optional): Search limits.

    Returns:
        int: The chromatic number; 0 without nodes, 1 without edges.

    Raises:
        :class:`ordconflict.exceptions.BudgetExceededError`: The search
            ran out of budget.
    """
    colors = optimal_coloring(graph, budget)

    return max(colors) + 1 if colors else 0


def chain_levels(graph, p):
    """Longest-chain level of every edge in M_p(G) for M = (+,0,0,-).

    For p >= 0 orient e' -> e whenever v' <= u - p. This is transitive,
    so each level is an independent set and the top level is the
    clique number.

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            The ordered graph.
        p (int): The threshold, at least 0.

    Returns:
        dict: Maps each edge to the number of edges on the longest chain
            ending at it (itself included).

    Raises:
        :class:`ordconflict.exceptions.PreconditionError`: p is negative.
    """
    try:
        assert p >= 0
    except AssertionError:
        raise PreconditionError("the comparability path needs p >= 0")

    # Process edges by right endpoint; prefix maxima give the best chain
    # ending left of any coordinate
    edges = sorted(graph.edges, key=lambda edge: (edge[1], edge[0]))
    rights = [v for _, v in edges]
    prefix_best = []
    levels = {}

    for u, v in edges:
        reachable = bisect.bisect_right(rights, u - p)
        level = 1 + (prefix_best[reachable - 1] if reachable else 0)
        levels[(u, v)] = level
        prefix_best.append(max(level, prefix_best[-1] if prefix_best else 0))

    return levels


def omega_leftof_fast(graph, p):
    """Clique number of M_p(G) for M = (+,0,0,-) by the longest chain.

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            The ordered graph, with at least one edge.
        p (int): The threshold, at least 0.

    Returns:
        int: The clique number.

    Raises:
        :class:`ordconflict.exceptions.EmptyEdgeSetError`: G has no
            edges.
        :class:`ordconflict.exceptions.PreconditionError`: p is negative.
    """
    if not graph.edges:
        raise EmptyEdgeSetError("graph has no edges")

    return max(chain_levels(graph, p).values())


def is_comparability_orientation(graph, p):
    """Whether orienting M_p(G) conflicts left to right is transitive.

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            The ordered graph.
        p (int): The threshold, at least 0.

    Returns:
        bool: True iff the orientation e' -> e for v' <= u - p, with
            M = (+,0,0,-), is acyclic and transitively closed.
    """
    digraph = nx.DiGraph()
    digraph.add_nodes_from(graph.edges)

    for a in graph.edges:
        for b in graph.edges:
            if a[1] <= b[0] - p:
                digraph.add_edge(a, b)

    if not nx.is_directed_acyclic_graph(digraph):
        return False

    closure = nx.transitive_closure_dag(digraph)

    return closure.number_of_edges() == digraph.number_of_edges()
