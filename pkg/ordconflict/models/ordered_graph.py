"""Classes for ordered graph model and manager."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import itertools
import logging
import networkx as nx
from ordconflict.constants import COORDINATE_BOUND
from ordconflict.exceptions import InvalidGraphError
from .resource import Model, ModelManager

logger = logging.getLogger(__name__)


def _is_integer(value):
    """Whether a JSON value is an integer (booleans excluded)."""
    return isinstance(value, int) and not isinstance(value, bool)


class OrderedGraph(Model):
    """A finite simple graph whose vertices are distinct integers.

    Vertices are stored in increasing order and edges as pairs (u, v)
    with u < v, sorted lexicographically. The position of an edge in
    :attr:`edges` is its index in every conflict graph built from this
    graph.

    Attributes:
        vertices (tuple): The vertices, strictly increasing.
        edges (tuple): The edges as (u, v) pairs with u < v, sorted.
        manager (:class:`ordconflict.models.ordered_graph.OrderedGraphManager`):
            The manager which spawned this graph, if any.
    """

    def __init__(self, vertices, edges, manager=None):
        """Validate and canonicalize an ordered graph.

        Args:
            vertices (iterable): The vertices, in any order.
            edges (iterable): The edges as pairs, in any orientation.
            manager (:class:`ordconflict.models.ordered_graph.OrderedGraphManager`, optional):
                The manager which spawned this graph.

        Raises:
            :class:`ordconflict.exceptions.InvalidGraphError`: A vertex
                is repeated, not an integer or out of bounds, or an edge
                is malformed, a self-loop, a duplicate or uses a
                non-vertex.
        """
        # Call the parent constructor
        super(OrderedGraph, self).__init__(manager)

        # Check the vertices
        vertices = list(vertices)
        vertex_set = set()

        for vertex in vertices:
            try:
                assert _is_integer(vertex)
            except AssertionError:
                raise InvalidGraphError(
                    "vertex {!r} is not an integer".format(vertex)
                )

            try:
                assert abs(vertex) <= COORDINATE_BOUND
            except AssertionError:
                raise InvalidGraphError(
                    "vertex {} exceeds the coordinate bound 2^31".format(
                        vertex
                    )
                )

            try:
                assert vertex not in vertex_set
            except AssertionError:
                raise InvalidGraphError("duplicate vertex {}".format(vertex))

            vertex_set.add(vertex)

        # Check and orient the edges
        edge_set = set()

        for edge in edges:
            try:
                assert len(edge) == 2
                assert _is_integer(edge[0]) and _is_integer(edge[1])
            except (AssertionError, TypeError):
                raise InvalidGraphError(
                    "edge {!r} is not a pair of integers".format(edge)
                )

            u, v = min(edge), max(edge)

            try:
                assert u != v
            except AssertionError:
                raise InvalidGraphError("self-loop at vertex {}".format(u))

            try:
                assert u in vertex_set and v in vertex_set
            except AssertionError:
                raise InvalidGraphError(
                    "edge ({}, {}) has an endpoint that is not a "
                    "vertex".format(u, v)
                )

            try:
                assert (u, v) not in edge_set
            except AssertionError:
                raise InvalidGraphError(
                    "duplicate edge ({}, {})".format(u, v)
                )

            edge_set.add((u, v))

        self.vertices = tuple(sorted(vertex_set))
        self.edges = tuple(sorted(edge_set))

    def __str__(self):
        """String representation of the ordered graph."""
        return "OrderedGraph(%d vertices, %d edges)" % (
            len(self.vertices),
            len(self.edges),
        )

    def __repr__(self):
        """Unambiguous representation of the ordered graph."""
        return "OrderedGraph(vertices=%r, edges=%r)" % (
            list(self.vertices),
            [list(edge) for edge in self.edges],
        )

    @property
    def vertex_count(self):
        """int: The number of vertices."""
        return len(self.vertices)

    @property
    def edge_count(self):
        """int: The number of edges."""
        return len(self.edges)

    @property
    def edge_index(self):
        """dict: Maps each edge to its index in :attr:`edges`."""
        return {edge: index for index, edge in enumerate(self.edges)}

    @staticmethod
    def length(edge):
        """Return the length v - u of an edge.

        Args:
            edge (tuple): An edge (u, v) with u < v.

        Returns:
            int: The length of the edge.
        """
        return edge[1] - edge[0]

    def neighbors(self):
        """Return the neighborhood of every vertex.

        Returns:
            dict: Maps each vertex to the set of its neighbors.
        """
        neighborhoods = {vertex: set() for vertex in self.vertices}

        for u, v in self.edges:
            neighborhoods[u].add(v)
            neighborhoods[v].add(u)

        return neighborhoods

    def is_complete(self):
        """Whether every pair of vertices is an edge.

        Returns:
            bool: True for complete graphs.
        """
        n = len(self.vertices)

        return len(self.edges) == n * (n - 1) // 2

    def shifted(self, t):
        """Return G_t, the graph with t added to every vertex.

        Args:
            t (int): The shift.

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The shifted graph.
        """
        return OrderedGraph(
            [vertex + t for vertex in self.vertices],
            [(u + t, v + t) for u, v in self.edges],
            manager=self.manager,
        )

    def negated(self):
        """Return -G: vertex v becomes -v and edge (u, v) becomes (-v, -u).

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The mirrored graph.
        """
        return OrderedGraph(
            [-vertex for vertex in self.vertices],
            [(-v, -u) for u, v in self.edges],
            manager=self.manager,
        )

    def scaled(self, factor):
        """Return the graph with every vertex multiplied by a factor.

        Args:
            factor (int): A positive integer.

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The scaled graph.

        Raises:
            ValueError: The factor is not positive.
        """
        if factor < 1:
            raise ValueError("scale factor must be positive")

        return self.remapped([factor * vertex for vertex in self.vertices])

    def remapped(self, positions):
        """Move the i-th smallest vertex onto the i-th position.

        Args:
            positions (list): Strictly increasing integers, one per
                vertex.

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The re-embedded graph.

        Raises:
            ValueError: The positions are not strictly increasing or
                there are not exactly as many as there are vertices.
        """
        positions = list(positions)

        if len(positions) != len(self.vertices):
            raise ValueError("need exactly one position per vertex")

        if any(a >= b for a, b in zip(positions, positions[1:])):
            raise ValueError("positions must be strictly increasing")

        mapping = dict(zip(self.vertices, positions))

        return OrderedGraph(
            positions,
            [(mapping[u], mapping[v]) for u, v in self.edges],
            manager=self.manager,
        )

    def compacted(self):
        """Return the order-isomorphic copy on [n].

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The graph re-embedded onto 1, ..., n.
        """
        return self.remapped(range(1, len(self.vertices) + 1))

    def subgraph(self, vertices=None, edges=None):
        """Return a subgraph.

        Args:
            vertices (iterable, optional): The vertices to keep. Defaults
                to all vertices.
            edges (iterable, optional): The edges to keep. Defaults to
                every edge between kept vertices.

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The subgraph.
        """
        if vertices is None:
            vertices = self.vertices

        vertices = set(vertices)

        if edges is None:
            edges = self.edges

        return OrderedGraph(
            vertices,
            [(u, v) for u, v in edges if u in vertices and v in vertices],
            manager=self.manager,
        )

    def to_networkx(self):
        """Return the underlying unordered graph.

        Returns:
            :class:`networkx.Graph`: The graph, with the integer
                vertices as nodes.
        """
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)

        return graph

    def to_dict(self):
        """Return the graph file document.

        Returns:
            dict: {"vertices": [...], "edges": [[u, v], ...]}.
        """
        return {
            "vertices": list(self.vertices),
            "edges": [list(edge) for edge in self.edges],
        }


def validate_ordered_graph(vertices, edges, manager=None):
    """Validate raw vertex and edge lists into an ordered graph.

    An empty edge set is accepted, but logged, since conflict graphs
    and the independence and clique numbers are undefined for it.

    Args:
        vertices (list): The raw vertex list.
        edges (list): The raw edge list.
        manager (:class:`ordconflict.models.ordered_graph.OrderedGraphManager`, optional):
            The manager to attach to the graph.

    Returns:
        :class:`ordconflict.models.ordered_graph.OrderedGraph`:
            The canonical graph.

    Raises:
        :class:`ordconflict.exceptions.InvalidGraphError`: The lists do
            not describe a simple ordered graph.
    """
    graph = OrderedGraph(vertices, edges, manager=manager)

    if not graph.edges:
        logger.warning("graph has no edges; conflict graphs are undefined")

    return graph


def complete_graph(vertices, manager=None):
    """Return the complete graph on the given vertices.

    Args:
        vertices (iterable): Distinct integers.
        manager (:class:`ordconflict.models.ordered_graph.OrderedGraphManager`, optional):
            The manager to attach to the graph.

    Returns:
        :class:`ordconflict.models.ordered_graph.OrderedGraph`:
            The complete graph.
    """
    vertices = sorted(vertices)

    return OrderedGraph(
        vertices, itertools.combinations(vertices, 2), manager=manager
    )


def from_networkx(graph, ordering=None, manager=None):
    """Embed an unordered graph onto [n] by a vertex ordering.

    Args:
        graph (:class:`networkx.Graph`): The unordered graph.
        ordering (list, optional): The nodes of the graph, leftmost
            first. Defaults to the sorted nodes.
        manager (:class:`ordconflict.models.ordered_graph.OrderedGraphManager`, optional):
            The manager to attach to the graph.

    Returns:
        :class:`ordconflict.models.ordered_graph.OrderedGraph`:
            The embedding, with the i-th node of the ordering at i.

    Raises:
        :class:`ordconflict.exceptions.InvalidGraphError`: The ordering
            is not a permutation of the nodes.
    """
    if ordering is None:
        ordering = sorted(graph.nodes())

    ordering = list(ordering)

    try:
        assert len(ordering) == graph.number_of_nodes()
        assert set(ordering) == set(graph.nodes())
    except AssertionError:
        raise InvalidGraphError("ordering must list every node exactly once")

    position = {node: index + 1 for index, node in enumerate(ordering)}

    return OrderedGraph(
        range(1, len(ordering) + 1),
        [(position[a], position[b]) for a, b in graph.edges()],
        manager=manager,
    )


class OrderedGraphManager(ModelManager):
    """Manager for ordered graphs.

    Attributes:
        _client (:class:`ordconflict.client.Client`): The client whose
            configuration this manager uses.
        model (:class:`ordconflict.models.resource.Model`): The model of
            the ordered graph being used.
    """

    model = OrderedGraph
    error_class = InvalidGraphError

    def create(self, vertices, edges):
        """Create an ordered graph from raw lists.

        Args:
            vertices (list): The raw vertex list.
            edges (list): The raw edge list.

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The canonical graph.
        """
        return validate_ordered_graph(vertices, edges, manager=self)

    def complete(self, vertices):
        """Create the complete graph on some vertices.

        Args:
            vertices (iterable): Distinct integers.

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The complete graph.
        """
        return complete_graph(vertices, manager=self)

    def from_networkx(self, graph, ordering=None):
        """Embed an unordered graph onto [n].

        Args:
            graph (:class:`networkx.Graph`): The unordered graph.
            ordering (list, optional): The nodes, leftmost first.

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The embedding.
        """
        return from_networkx(graph, ordering=ordering, manager=self)

    def data_to_model_instance(self, data):
        """Convert a graph file document to an ordered graph.

        Args:
            data (dict): {"vertices": [...], "edges": [[u, v], ...]}.
                Any "name" key is ignored.

        Returns:
            :class:`ordconflict.models.ordered_graph.OrderedGraph`:
                The canonical graph.
        """
        self.validate_document_keys(data, ("vertices", "edges"), "graph")

        try:
            assert isinstance(data["vertices"], list)
            assert isinstance(data["edges"], list)
        except AssertionError:
            raise InvalidGraphError("vertices and edges must be lists")

        return self.create(data["vertices"], data["edges"])
