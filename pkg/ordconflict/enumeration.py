"""Bounded generation of ordered graphs for the verification harness."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import itertools
import logging
import random
import networkx as nx
from ordconflict.constants import (
    DEFAULT_CORPUS_COUNT,
    DEFAULT_SEED,
    EXHAUSTIVE,
    MAX_EXHAUSTIVE_WINDOW,
    RANDOM,
    RANDOM_EDGE_PROBABILITY,
    RANDOM_MAX_VERTICES,
    RANDOM_MIN_VERTICES,
)
from ordconflict.exceptions import PreconditionError
from ordconflict.models.ordered_graph import OrderedGraph, from_networkx

logger = logging.getLogger(__name__)


class EnumerationSpec(object):
    """Which ordered graphs a bounded search visits.

    In exhaustive mode every vertex subset of the window with at most
    ``max_vertices`` vertices is taken, then every edge subset on it,
    so each ordered graph is visited exactly once. In random mode
    ``count`` graphs are drawn: n uniform in [3, 8] (capped by
    ``max_vertices``), coordinates sampled from [lo, lo + 2n - 1] and
    edges from G(n, 1/2).

    Attributes:
        max_vertices (int): The most vertices of a graph.
        lo (int): The left end of the coordinate window.
        hi (int): The right end of the coordinate window (exhaustive
            mode only).
        min_edges (int): The fewest edges of a graph, at least 1.
        max_edges (int): The most edges of a graph, or None.
        mode (str): "exhaustive" or "random".
        seed (int): The seed of a random corpus.
        count (int): The size of a random corpus.
        skip_isolated (bool): Whether exhaustive mode skips graphs with
            an isolated vertex. Their conflict graphs repeat those of
            the graph without it.
    """

    def __init__(
        self,
        max_vertices,
        lo=1,
        hi=None,
        min_edges=1,
        max_edges=None,
        mode=EXHAUSTIVE,
        seed=DEFAULT_SEED,
        count=DEFAULT_CORPUS_COUNT,
        skip_isolated=True,
    ):
        """Initialize and check an enumeration.

        Raises:
            :class:`ordconflict.exceptions.PreconditionError`: The mode
                is unknown, the window cannot hold ``max_vertices``
                vertices or is too wide to search, or a count is
                negative.
        """
        if hi is None:
            hi = lo + max_vertices - 1

        try:
            assert mode in (EXHAUSTIVE, RANDOM)
        except AssertionError:
            raise PreconditionError(
                "unknown enumeration mode {!r}".format(mode)
            )

        try:
            assert max_vertices >= 2
            assert min_edges >= 1
            assert max_edges is None or max_edges >= min_edges
            assert count >= 0
        except AssertionError:
            raise PreconditionError(
                "enumeration needs n >= 2, at least one edge and a "
                "nonnegative count"
            )

        if mode == EXHAUSTIVE:
            try:
                assert hi - lo + 1 >= max_vertices
                assert hi - lo + 1 <= MAX_EXHAUSTIVE_WINDOW
            except AssertionError:
                raise PreconditionError(
                    "window [{}, {}] must hold {} vertices and be at most "
                    "{} wide".format(
                        lo, hi, max_vertices, MAX_EXHAUSTIVE_WINDOW
                    )
                )

        self.max_vertices = max_vertices
        self.lo = lo
        self.hi = hi
        self.min_edges = min_edges
        self.max_edges = max_edges
        self.mode = mode
        self.seed = seed
        self.count = count
        self.skip_isolated = skip_isolated

    @classmethod
    def exhaustive(cls, max_vertices, lo, hi, **kwargs):
        """Every ordered graph with at most n vertices in [lo, hi]."""
        return cls(max_vertices, lo=lo, hi=hi, mode=EXHAUSTIVE, **kwargs)

    @classmethod
    def random_corpus(cls, count, seed=DEFAULT_SEED, lo=1, **kwargs):
        """A seeded random corpus of ``count`` graphs."""
        kwargs.setdefault("max_vertices", RANDOM_MAX_VERTICES)

        return cls(lo=lo, mode=RANDOM, seed=seed, count=count, **kwargs)

    def __repr__(self):
        """Unambiguous representation of the enumeration."""
        return "EnumerationSpec(%s)" % self.describe()

    def describe(self):
        """Return the scope string recorded in reports.

        Returns:
            str: For example "exhaustive, window [1,7], n <= 5".
        """
        if self.mode == EXHAUSTIVE:
            return "exhaustive, window [%d,%d], n <= %d" % (
                self.lo,
                self.hi,
                self.max_vertices,
            )

        return "random, %d graphs, seed %d, n <= %d" % (
            self.count,
            self.seed,
            self.max_vertices,
        )

    def _edge_count_fits(self, count):
        return count >= self.min_edges and (
            self.max_edges is None or count <= self.max_edges
        )

    def _iter_exhaustive(self):
        window = range(self.lo, self.hi + 1)

        for n in range(2, self.max_vertices + 1):
            for vertices in itertools.combinations(window, n):
                pairs = list(itertools.combinations(vertices, 2))
                top = len(pairs)

                if self.max_edges is not None:
                    top = min(top, self.max_edges)

                for size in range(self.min_edges, top + 1):
                    for edges in itertools.combinations(pairs, size):
                        if self.skip_isolated:
                            touched = set(
                                itertools.chain.from_iterable(edges)
                            )

                            if len(touched) < n:
                                continue

                        yield OrderedGraph(vertices, edges)

    def _iter_random(self):
        rng = random.Random(self.seed)
        top = min(RANDOM_MAX_VERTICES, self.max_vertices)
        bottom = min(RANDOM_MIN_VERTICES, top)
        produced = 0

        while produced < self.count:
            n = rng.randint(bottom, top)
            window = range(self.lo, self.lo + 2 * n)
            coordinates = sorted(rng.sample(window, n))
            graph = nx.gnp_random_graph(n, RANDOM_EDGE_PROBABILITY, seed=rng)

            if not self._edge_count_fits(graph.number_of_edges()):
                continue

            produced += 1

            yield from_networkx(graph).remapped(coordinates)

    def __iter__(self):
        """Yield the ordered graphs, deterministically."""
        logger.debug("Enumerating %s", self.describe())

        if self.mode == EXHAUSTIVE:
            return self._iter_exhaustive()

        return self._iter_random()


def complete_embeddings(k, lo, hi):
    """Yield K_k on every k-subset of the window [lo, hi].

    Args:
        k (int): The number of vertices.
        lo (int): The left end of the window.
        hi (int): The right end of the window.

    Yields:
        :class:`ordconflict.models.ordered_graph.OrderedGraph`: The
            complete graphs, in lexicographic order of their vertices.
    """
    for vertices in itertools.combinations(range(lo, hi + 1), k):
        yield OrderedGraph(vertices, itertools.combinations(vertices, 2))
