"""Class for the interval witness model."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from ordconflict.constants import (
    CONTAINED_IN_ALL_SPANS,
    MEETS_ALL_SPANS,
    SHORT_EDGE_EXCEPTION,
)
from ordconflict.exceptions import PreconditionError
from .resource import Model

WITNESS_KINDS = (MEETS_ALL_SPANS, CONTAINED_IN_ALL_SPANS, SHORT_EDGE_EXCEPTION)


class IntervalWitness(Model):
    """Why an edge set is independent in M_p(G) for M = (+,0,0,-).

    Three shapes exist:

    * meets-all-spans (p >= 1): an interval of length at most p - 1
      meeting the span of every edge.
    * contained-in-all-spans (p <= 0): an interval of length at least
      |p| + 1 inside the span of every edge.
    * short-edge-exception (p <= -1): one edge of length at most |p|,
      plus an interval inside the span of every other edge.

    Attributes:
        kind (str): One of the three kinds above.
        p (int): The threshold the witness is for.
        interval (tuple): (low, high) with low <= high.
        exceptional_edge (tuple): The short edge of a
            short-edge-exception witness, else None.
    """

    def __init__(self, kind, p, interval, exceptional_edge=None, manager=None):
        """Initialize and check a witness.

        Args:
            kind (str): The witness kind.
            p (int): The threshold.
            interval (tuple): (low, high).
            exceptional_edge (tuple, optional): The short edge.
            manager (:class:`ordconflict.models.resource.ModelManager`, optional):
                The manager which spawned this witness.

        Raises:
            :class:`ordconflict.exceptions.PreconditionError`: The kind
                is unknown or the interval breaks its length constraint.
        """
        # Call the parent constructor
        super(IntervalWitness, self).__init__(manager)

        low, high = interval

        try:
            assert kind in WITNESS_KINDS
        except AssertionError:
            raise PreconditionError("unknown witness kind {!r}".format(kind))

        try:
            assert low <= high
            if kind == MEETS_ALL_SPANS:
                assert high - low <= p - 1
            elif kind == CONTAINED_IN_ALL_SPANS:
                assert high - low >= abs(p) + 1
            else:
                assert exceptional_edge is not None
        except AssertionError:
            raise PreconditionError(
                "interval [{}, {}] does not fit a {} witness at p = {}".format(
                    low, high, kind, p
                )
            )

        self.kind = kind
        self.p = p
        self.interval = (low, high)
        self.exceptional_edge = (
            tuple(exceptional_edge) if exceptional_edge is not None else None
        )

    def __str__(self):
        """String representation of the witness."""
        return "%s [%d, %d]" % ((self.kind,) + self.interval)

    def to_dict(self):
        """Return the JSON document of the witness.

        Returns:
            dict: The witness document.
        """
        return {
            "kind": self.kind,
            "p": self.p,
            "interval": list(self.interval),
            "exceptional_edge": (
                list(self.exceptional_edge)
                if self.exceptional_edge is not None
                else None
            ),
        }
