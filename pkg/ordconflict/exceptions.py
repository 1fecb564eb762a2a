"""Contains exceptions used throughout the program."""


class OrdConflictError(Exception):
    """Base class for all errors raised by ordconflict."""

    pass


class BadEnvironmentError(OrdConflictError):
    """The user has an improperly configured environment."""

    pass


class InvalidGraphError(OrdConflictError):
    """An ordered graph or graph file failed validation."""

    pass


class EmptyEdgeSetError(InvalidGraphError):
    """The graph has no edges but the operation needs at least one."""

    pass


class InvalidSpecError(OrdConflictError):
    """A conflict specification or spec file failed validation."""

    pass


class ArithmeticOverflowError(OrdConflictError):
    """A linear form left the signed 64-bit range."""

    pass


class BudgetExceededError(OrdConflictError):
    """An exact search ran out of nodes or time.

    Attributes:
        lower (int): The best lower bound found before stopping.
        upper (int): The best upper bound found before stopping.
    """

    def __init__(self, message, lower, upper):
        """Save the bounds along with the message.

        Args:
            message (str): A description of the exhausted budget.
            lower (int): The best lower bound found before stopping.
            upper (int): The best upper bound found before stopping.
        """
        super(BudgetExceededError, self).__init__(message)

        self.lower = lower
        self.upper = upper


class PreconditionError(OrdConflictError):
    """An operation was called outside of its domain."""

    pass


class CaseMismatchError(PreconditionError):
    """The matrix does not match the requested witness construction."""

    pass


class UnclassifiableSpecError(PreconditionError):
    """No proven closed form or construction covers the spec."""

    pass


class NotIndependentError(PreconditionError):
    """An edge set claimed to be independent contains a conflict.

    Attributes:
        pair (tuple): The first conflicting pair of edges found.
    """

    def __init__(self, message, pair):
        """Save the conflicting pair along with the message.

        Args:
            message (str): A description of the conflict.
            pair (tuple): The first conflicting pair of edges found.
        """
        super(NotIndependentError, self).__init__(message)

        self.pair = pair


class UnknownClaimError(OrdConflictError):
    """A lemma id or verification suite name is not known."""

    pass
