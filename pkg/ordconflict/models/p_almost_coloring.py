"""Class for the p-almost coloring model."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from ordconflict.exceptions import PreconditionError
from .resource import Model


class PAlmostColoring(Model):
    """A removal set S together with a proper coloring of F - S.

    F is p-almost t-colorable when some S with |S| <= p (t - 1) leaves
    a t-colorable graph.

    Attributes:
        p (int): The removal rate, at least 0.
        colors (int): t, the number of colors available.
        removed (tuple): The removed vertices S.
        coloring (dict): Maps every vertex outside S to a color in
            0, ..., t - 1.
    """

    def __init__(self, p, colors, removed, coloring, manager=None):
        """Initialize and check the size constraint.

        Args:
            p (int): The removal rate.
            colors (int): The number of colors.
            removed (iterable): The removed vertices.
            coloring (dict): Vertex to color.
            manager (:class:`ordconflict.models.resource.ModelManager`, optional):
                The manager which spawned this coloring.

        Raises:
            :class:`ordconflict.exceptions.PreconditionError`: p is
                negative, S is too large or a color is out of range.
        """
        # Call the parent constructor
        super(PAlmostColoring, self).__init__(manager)

        removed = tuple(removed)

        try:
            assert p >= 0 and colors >= 1
            assert len(removed) <= p * (colors - 1)
            assert all(0 <= c < colors for c in coloring.values())
            assert not set(removed) & set(coloring)
        except AssertionError:
            raise PreconditionError(
                "not a {}-almost {}-coloring: |S| = {}".format(
                    p, colors, len(removed)
                )
            )

        self.p = p
        self.colors = colors
        self.removed = removed
        self.coloring = dict(coloring)

    def __str__(self):
        """String representation of the coloring."""
        return "%d-almost %d-coloring removing %d vertices" % (
            self.p,
            self.colors,
            len(self.removed),
        )

    def is_valid_for(self, graph):
        """Whether this is a p-almost coloring of an unordered graph.

        Args:
            graph (:class:`networkx.Graph`): The graph F.

        Returns:
            bool: True iff S and the colored vertices partition the
                nodes of F and no edge of F - S is monochromatic.
        """
        nodes = set(graph.nodes())
        removed = set(self.removed)

        if removed | set(self.coloring) != nodes:
            return False

        if len(removed) + len(self.coloring) != len(nodes):
            return False

        return all(
            self.coloring[a] != self.coloring[b]
            for a, b in graph.edges()
            if a not in removed and b not in removed
        )

    def to_dict(self):
        """Return the JSON document of the coloring.

        Returns:
            dict: The coloring document; colored vertices are listed as
                [vertex, color] pairs in sorted order.
        """
        return {
            "p": self.p,
            "colors": self.colors,
            "removed": sorted(self.removed),
            "coloring": sorted([v, c] for v, c in self.coloring.items()),
        }
