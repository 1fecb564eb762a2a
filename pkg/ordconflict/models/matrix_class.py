"""Class for the matrix classification model."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from ordconflict.constants import REVERSE_NEGATE
from .resource import Model


class MatrixClass(Model):
    """Where a conflict matrix falls in the catalog of closed forms.

    Attributes:
        matrix (tuple): The classified matrix, as given.
        p (int): The threshold the classification was made for.
        tag (str): One of the tags in :mod:`ordconflict.constants`
            (non-invariant-positive, zero, table-row, nest-like, ...).
        row (int): The catalog row for zero, table-row and nest-like
            tags (2 to 13), else None.
        representative (tuple): The normal form reached by the trace.
        trace (tuple): The transform names applied, in order.
        partner (tuple): For complement-exchange matrices, the 1x4
            matrix whose complement this is, else None.
        conditions (tuple): For single-row translation-invariant
            matrices, which of the general cases "i" to "iv" hold at p.
    """

    def __init__(
        self,
        matrix,
        p,
        tag,
        representative,
        trace=(),
        row=None,
        partner=None,
        conditions=(),
        manager=None,
    ):
        """Initialize a classification.

        Args:
            matrix (tuple): The classified matrix.
            p (int): The threshold.
            tag (str): The classification tag.
            representative (tuple): The normal form.
            trace (tuple, optional): The transform names applied.
            row (int, optional): The catalog row.
            partner (tuple, optional): The complement partner.
            conditions (tuple, optional): The general cases that hold.
            manager (:class:`ordconflict.models.resource.ModelManager`, optional):
                The manager which spawned this classification.
        """
        # Call the parent constructor
        super(MatrixClass, self).__init__(manager)

        self.matrix = tuple(tuple(r) for r in matrix)
        self.p = p
        self.tag = tag
        self.representative = tuple(tuple(r) for r in representative)
        self.trace = tuple(trace)
        self.row = row
        self.partner = (
            None if partner is None else tuple(tuple(r) for r in partner)
        )
        self.conditions = tuple(conditions)

    def __str__(self):
        """String representation of the classification."""
        if self.row is not None:
            return "%s (row %d)" % (self.tag, self.row)

        return self.tag

    @property
    def mirrored(self):
        """bool: Whether the trace mirrors graphs (odd reverse_negate count)."""
        return self.trace.count(REVERSE_NEGATE) % 2 == 1

    def to_dict(self):
        """Return the JSON document of the classification.

        Returns:
            dict: The classification document.
        """
        return {
            "matrix": [list(r) for r in self.matrix],
            "p": self.p,
            "tag": self.tag,
            "row": self.row,
            "representative": [list(r) for r in self.representative],
            "trace": list(self.trace),
            "partner": (
                None
                if self.partner is None
                else [list(r) for r in self.partner]
            ),
            "conditions": list(self.conditions),
        }
