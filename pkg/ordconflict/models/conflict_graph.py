"""Classes for conflict graph model and manager."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import logging
import networkx as nx
from ordconflict.constants import INT64_MAX, INT64_MIN
from ordconflict.exceptions import (
    ArithmeticOverflowError,
    EmptyEdgeSetError,
    InvalidGraphError,
)
from .resource import Model, ModelManager

logger = logging.getLogger(__name__)


def ovfcheck(value):
    """Raise if an intermediate value left the signed 64-bit range.

    Args:
        value (int): The value to check.

    Returns:
        int: The value, unchanged.

    Raises:
        :class:`ordconflict.exceptions.ArithmeticOverflowError`: The
            value does not fit in a signed 64-bit integer.
    """
    if not INT64_MIN <= value <= INT64_MAX:
        raise ArithmeticOverflowError(
            "linear form value {} overflows 64 bits".format(value)
        )

    return value


def evaluate_row(row, quadruple):
    """Evaluate one row of M on an endpoint 4-tuple with checked sums.

    Args:
        row (tuple): Four integers.
        quadruple (tuple): (u1, v1, u2, v2).

    Returns:
        int: The value of the linear form.
    """
    total = 0

    for entry, coordinate in zip(row, quadruple):
        total = ovfcheck(total + ovfcheck(entry * coordinate))

    return total


def _dominates(matrix, p, quadruple):
    """Whether every row of M applied to the 4-tuple is at least p."""
    return all(evaluate_row(row, quadruple) >= p for row in matrix)


def is_conflicting(e1, e2, spec):
    """Decide whether two edges conflict under a spec.

    Args:
        e1 (tuple): An edge (u1, v1) with u1 < v1.
        e2 (tuple): Another edge (u2, v2) with u2 < v2.
        spec (:class:`ordconflict.models.conflict_spec.ConflictSpec`):
            The matrix and threshold.

    Returns:
        bool: True iff M (u1, v1, u2, v2) >= p componentwise or
            M (u2, v2, u1, v1) >= p componentwise.
    """
    return _dominates(
        spec.matrix, spec.p, (e1[0], e1[1], e2[0], e2[1])
    ) or _dominates(spec.matrix, spec.p, (e2[0], e2[1], e1[0], e1[1]))


class ConflictGraph(Model):
    """The conflict graph M_p(G): one node per edge of G.

    Node i is the i-th edge of the source graph in lexicographic order.
    Adjacency is stored as one integer bitset per node.

    Attributes:
        nodes (tuple): The edges of the source graph.
        adjacency (tuple): Bit j of adjacency[i] is set iff edges i and
            j conflict.
        manager (:class:`ordconflict.models.conflict_graph.ConflictGraphManager`):
            The manager which spawned this conflict graph, if any.
    """

    def __init__(self, nodes, adjacency, manager=None):
        """Initialize a conflict graph.

        Args:
            nodes (iterable): The edges of the source graph.
            adjacency (iterable): One bitset per node.
            manager (:class:`ordconflict.models.conflict_graph.ConflictGraphManager`, optional):
                The manager which spawned this conflict graph.

        Raises:
            :class:`ordconflict.exceptions.InvalidGraphError`: The
                adjacency is not symmetric and irreflexive or does not
                have one row per node.
        """
        # Call the parent constructor
        super(ConflictGraph, self).__init__(manager)

        self.nodes = tuple(tuple(node) for node in nodes)
        self.adjacency = tuple(adjacency)

        try:
            assert len(self.adjacency) == len(self.nodes)
        except AssertionError:
            raise InvalidGraphError("adjacency needs one row per node")

        for i, row in enumerate(self.adjacency):
            try:
                assert not row >> i & 1
                assert row >> len(self.nodes) == 0
            except AssertionError:
                raise InvalidGraphError(
                    "adjacency row {} is out of range or reflexive".format(i)
                )

            for j in iter_bits(row):
                try:
                    assert self.adjacency[j] >> i & 1
                except AssertionError:
                    raise InvalidGraphError(
                        "adjacency is not symmetric at ({}, {})".format(i, j)
                    )

    def __str__(self):
        """String representation of the conflict graph."""
        return "ConflictGraph(%d nodes, %d conflicts)" % (
            self.node_count,
            self.conflict_count,
        )

    @property
    def node_count(self):
        """int: The number of nodes, i.e. edges of the source graph."""
        return len(self.nodes)

    @property
    def conflict_count(self):
        """int: The number of conflicting pairs."""
        return sum(bin(row).count("1") for row in self.adjacency) // 2

    def has_conflict(self, i, j):
        """Whether nodes i and j conflict.

        Args:
            i (int): A node index.
            j (int): Another node index.

        Returns:
            bool: True iff the edges conflict.
        """
        return bool(self.adjacency[i] >> j & 1)

    def conflict_pairs(self):
        """List the conflicting pairs as node index pairs.

        Returns:
            list: Pairs (i, j) with i < j in increasing order.
        """
        return [
            (i, j)
            for i, row in enumerate(self.adjacency)
            for j in iter_bits(row)
            if i < j
        ]

    def complement(self):
        """Return the complement on the same nodes.

        Returns:
            :class:`ordconflict.models.conflict_graph.ConflictGraph`:
                The complement.
        """
        full = (1 << self.node_count) - 1

        return ConflictGraph(
            self.nodes,
            [full & ~row & ~(1 << i) for i, row in enumerate(self.adjacency)],
            manager=self.manager,
        )

    def induced(self, indices):
        """Return the subgraph induced by some nodes.

        Args:
            indices (iterable): Node indices to keep.

        Returns:
            :class:`ordconflict.models.conflict_graph.ConflictGraph`:
                The induced subgraph, renumbered in the given order.
        """
        indices = list(indices)
        position = {index: new for new, index in enumerate(indices)}

        adjacency = []

        for index in indices:
            row = 0

            for j in iter_bits(self.adjacency[index]):
                if j in position:
                    row |= 1 << position[j]

            adjacency.append(row)

        return ConflictGraph(
            [self.nodes[index] for index in indices],
            adjacency,
            manager=self.manager,
        )

    def to_networkx(self):
        """Return the conflict graph with edge tuples as nodes.

        Returns:
            :class:`networkx.Graph`: The conflict graph.
        """
        graph = nx.Graph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(
            (self.nodes[i], self.nodes[j]) for i, j in self.conflict_pairs()
        )

        return graph

    def to_dict(self):
        """Return the JSON document of the conflict graph.

        Returns:
            dict: {"nodes": [[u, v], ...], "conflicts": [[i, j], ...]}.
        """
        return {
            "nodes": [list(node) for node in self.nodes],
            "conflicts": [list(pair) for pair in self.conflict_pairs()],
        }


def iter_bits(row):
    """Yield the indices of the set bits of a bitset, lowest first."""
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


def build_conflict_graph(graph, spec, manager=None):
    """Build M_p(G).

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            The ordered graph G.
        spec (:class:`ordconflict.models.conflict_spec.ConflictSpec`):
            The matrix and threshold.
        manager (:class:`ordconflict.models.conflict_graph.ConflictGraphManager`, optional):
            The manager to attach to the conflict graph.

    Returns:
        :class:`ordconflict.models.conflict_graph.ConflictGraph`:
            The conflict graph, nodes in the edge order of G.

    Raises:
        :class:`ordconflict.exceptions.EmptyEdgeSetError`: G has no
            edges.
    """
    edges = graph.edges

    if not edges:
        raise EmptyEdgeSetError("graph has no edges")

    adjacency = [0] * len(edges)

    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if is_conflicting(edges[i], edges[j], spec):
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i

    logger.debug(
        "Built conflict graph with %d nodes for %s", len(edges), spec
    )

    return ConflictGraph(edges, adjacency, manager=manager)


class ConflictGraphManager(ModelManager):
    """Manager for conflict graphs.

    Attributes:
        _client (:class:`ordconflict.client.Client`): The client whose
            configuration this manager uses.
        model (:class:`ordconflict.models.resource.Model`): The model of
            the conflict graph being used.
    """

    model = ConflictGraph
    error_class = InvalidGraphError

    def build(self, graph, spec):
        """Build M_p(G).

        Args:
            graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
                The ordered graph G.
            spec (:class:`ordconflict.models.conflict_spec.ConflictSpec`):
                The matrix and threshold.

        Returns:
            :class:`ordconflict.models.conflict_graph.ConflictGraph`:
                The conflict graph.
        """
        return build_conflict_graph(graph, spec, manager=self)

    def data_to_model_instance(self, data):
        """Convert a conflict graph document to a conflict graph.

        Args:
            data (dict): {"nodes": [[u, v], ...], "conflicts": [[i, j], ...]}.

        Returns:
            :class:`ordconflict.models.conflict_graph.ConflictGraph`:
                The conflict graph.
        """
        self.validate_document_keys(
            data, ("nodes", "conflicts"), "conflict graph"
        )

        adjacency = [0] * len(data["nodes"])

        try:
            for i, j in data["conflicts"]:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
        except (TypeError, ValueError, IndexError):
            raise InvalidGraphError("conflicts must be pairs of node indices")

        return self.model(data["nodes"], adjacency, manager=self)
