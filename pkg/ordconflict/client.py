"""Contains the ordconflict client."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import os
from ordconflict import harness, params, solvers
from ordconflict.constants import (
    ARCH_NUMBER,
    BAND_WIDTH,
    DEFAULT_BUDGET_MS,
    DEFAULT_BUDGET_NODES,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    DEGENERACY,
    INTERVAL_CHROMATIC,
    PAGE_NUMBER,
    QUEUE_NUMBER,
)
from ordconflict.exceptions import BadEnvironmentError
from ordconflict.models.conflict_graph import ConflictGraphManager
from ordconflict.models.conflict_spec import ConflictSpecManager
from ordconflict.models.formula_result import FormulaResultManager
from ordconflict.models.ordered_graph import OrderedGraphManager
from ordconflict.models.verify_report import VerifyReportManager
from ordconflict.solvers import SolveBudget

# Quantities the solve command computes, by name
SOLVE_QUANTITIES = ("alpha", "omega", "chi", "chi-underlying")


class Client:
    """Entry point holding the configuration of a session.

    Example:

        >>> from ordconflict.client import Client
        >>> client = Client(budget_nodes=10 ** 5, seed=7)
        >>> graph = client.graphs.complete([1, 2, 3])
        >>> spec = client.specs.create([[1, 0, -1, 0]], 1)
        >>> client.solve(graph, spec, "alpha")
        2

    Attributes:
        budget (:class:`ordconflict.solvers.SolveBudget`): The limits
            of every exact search started through this client.
        seed (int): The seed of every random corpus.
        workers (int): The number of worker processes for verification
            suites.
        graphs (:class:`ordconflict.models.ordered_graph.OrderedGraphManager`):
            A manager for loading and building ordered graphs.
        specs (:class:`ordconflict.models.conflict_spec.ConflictSpecManager`):
            A manager for loading and building conflict specs.
        conflict_graphs (:class:`ordconflict.models.conflict_graph.ConflictGraphManager`):
            A manager for building conflict graphs.
        formulas (:class:`ordconflict.models.formula_result.FormulaResultManager`):
            A manager for evaluating closed forms.
        reports (:class:`ordconflict.models.verify_report.VerifyReportManager`):
            A manager for reading and writing verification reports.
    """

    def __init__(
        self,
        budget_nodes=DEFAULT_BUDGET_NODES,
        budget_ms=DEFAULT_BUDGET_MS,
        seed=DEFAULT_SEED,
        workers=DEFAULT_WORKERS,
    ):
        """Initialize the client.

        Args:
            budget_nodes (int, optional): The most search nodes per
                exact search. Defaults to 10^7.
            budget_ms (int, optional): The most milliseconds per exact
                search. Defaults to 60000.
            seed (int, optional): The seed of every random corpus.
                Defaults to 42.
            workers (int, optional): The number of worker processes for
                verification suites. Defaults to 1.

        Raises:
            ValueError: A budget or the worker count is not positive.
        """
        # Limits for the exact searches
        self.budget = SolveBudget(budget_nodes, budget_ms)

        if workers < 1:
            raise ValueError("workers must be positive")

        self.seed = seed
        self.workers = workers

        # Add in model managers
        self.graphs = OrderedGraphManager(_client=self)
        self.specs = ConflictSpecManager(_client=self)
        self.conflict_graphs = ConflictGraphManager(_client=self)
        self.formulas = FormulaResultManager(_client=self)
        self.reports = VerifyReportManager(_client=self)

    def solve(self, graph, spec, what):
        """Compute alpha, omega or chi of M_p(G), or chi of G itself.

        Args:
            graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
                The ordered graph G.
            spec (:class:`ordconflict.models.conflict_spec.ConflictSpec`):
                The matrix and threshold.
            what (str): One of alpha, omega, chi or chi-underlying.

        Returns:
            int: The requested number.

        Raises:
            ValueError: ``what`` is unknown.
            :class:`ordconflict.exceptions.EmptyEdgeSetError`: G has no
                edges.
            :class:`ordconflict.exceptions.BudgetExceededError`: The
                search ran out of budget.
        """
        if what not in SOLVE_QUANTITIES:
            raise ValueError(
                "what must be one of {}, not {!r}".format(
                    ", ".join(SOLVE_QUANTITIES), what
                )
            )

        if what == "chi-underlying":
            return solvers.chromatic_number(graph, self.budget)

        conflicts = self.conflict_graphs.build(graph, spec)
        solver = {
            "alpha": solvers.independence_number,
            "omega": solvers.clique_number,
            "chi": solvers.chromatic_number,
        }[what]

        return solver(conflicts, self.budget)

    def parameter(self, name, graph, with_ordering=False):
        """Compute a graph parameter through the conflict framework.

        Args:
            name (str): One of :data:`ordconflict.constants.GRAPH_PARAMETERS`.
            graph: An ordered graph or :class:`networkx.Graph`. Vertex
                positions are ignored except for interval-chromatic,
                which uses the ordering given.
            with_ordering (bool, optional): Whether to also return an
                optimal vertex ordering. Defaults to False.

        Returns:
            int or tuple: The value, or (value, ordering).

        Raises:
            ValueError: The parameter name is unknown.
        """
        if name == INTERVAL_CHROMATIC:
            value = params.interval_chromatic(graph)

            return (value, list(graph.vertices)) if with_ordering else value

        try:
            function = {
                PAGE_NUMBER: params.page_number,
                QUEUE_NUMBER: params.queue_number,
                DEGENERACY: params.degeneracy,
                BAND_WIDTH: params.band_width,
                ARCH_NUMBER: params.arch_number,
            }[name]
        except KeyError:
            raise ValueError("unknown graph parameter {!r}".format(name))

        return function(
            graph,
            budget=self.budget,
            workers=self.workers,
            with_ordering=with_ordering,
        )

    def run_suite(self, name, p_range=None, k_range=None, count=None):
        """Run a verification suite with this client's configuration.

        Args:
            name (str): One of :data:`ordconflict.constants.VERIFY_SUITES`.
            p_range (tuple, optional): Inclusive (low, high) thresholds.
            k_range (tuple, optional): Inclusive (low, high) values of k.
            count (int, optional): The random corpus size.

        Returns:
            list: The reports, sorted by claim id, each attached to
                :attr:`reports`.
        """
        reports = harness.run_suite(
            name,
            p_range=p_range or harness.DEFAULT_P_RANGE,
            k_range=k_range or harness.DEFAULT_K_RANGE,
            seed=self.seed,
            count=count,
            budget=self.budget,
            workers=self.workers,
        )

        for report in reports:
            report.manager = self.reports

        return reports

    @classmethod
    def from_env(cls):
        """Return a client configured from environment variables.

        The environment variables looked for are the following; unset
        variables keep their defaults:

        .. envvar:: ORDCONFLICT_BUDGET_NODES

            The most search nodes per exact search.

        .. envvar:: ORDCONFLICT_BUDGET_MS

            The most milliseconds per exact search.

        .. envvar:: ORDCONFLICT_SEED

            The seed of every random corpus.

        .. envvar:: ORDCONFLICT_WORKERS

            The number of worker processes for verification suites.

        Example:

            >>> from ordconflict.client import from_env
            >>> client = from_env()

        Returns:
            :class:`Client`: A configured client.

        Raises:
            :class:`ordconflict.exceptions.BadEnvironmentError`: A
                variable is not an integer, or a budget or the worker
                count is not positive.
        """
        defaults = {
            "ORDCONFLICT_BUDGET_NODES": ("budget_nodes", DEFAULT_BUDGET_NODES),
            "ORDCONFLICT_BUDGET_MS": ("budget_ms", DEFAULT_BUDGET_MS),
            "ORDCONFLICT_SEED": ("seed", DEFAULT_SEED),
            "ORDCONFLICT_WORKERS": ("workers", DEFAULT_WORKERS),
        }
        kwargs = {}

        # Get variables from environment
        for variable, (keyword, default) in defaults.items():
            raw = os.environ.get(variable)

            if raw is None:
                kwargs[keyword] = default
                continue

            try:
                kwargs[keyword] = int(raw)
            except ValueError:
                raise BadEnvironmentError(
                    "{} must be an integer, got {!r}".format(variable, raw)
                )

            try:
                assert keyword == "seed" or kwargs[keyword] >= 1
            except AssertionError:
                raise BadEnvironmentError(
                    "{} must be positive, got {}".format(variable, raw)
                )

        # Return the configured client
        return cls(**kwargs)


# Allow convenient import access to environment-configured client
from_env = Client.from_env
