"""Command line interface for ordconflict."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import argparse
import json
import logging
import sys
from ordconflict.client import SOLVE_QUANTITIES, from_env
from ordconflict.constants import (
    A_SIDE,
    FAIL,
    GRAPH_PARAMETERS,
    PARTIAL,
    PASS,
    VERIFY_SUITES,
    W_SIDE,
)
from ordconflict.constructions import extremal_complete_graph
from ordconflict.exceptions import BudgetExceededError, OrdConflictError
from ordconflict.transforms import classify_matrix
from ordconflict.version import DESCRIPTION, NAME, VERSION

logger = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Which bound flag each closed form takes
FORMULA_BOUNDS = {"A": "k", "W": "k", "Xind": "a", "Xcli": "w"}


def parse_range(text):
    """Parse an inclusive integer range written "a..b".

    Args:
        text (str): The range, for example "-4..4".

    Returns:
        tuple: (a, b) with a <= b.

    Raises:
        :class:`argparse.ArgumentTypeError`: The text is not a range.
    """
    try:
        low, high = (int(part) for part in text.split(".."))
        assert low <= high
    except (ValueError, AssertionError):
        raise argparse.ArgumentTypeError(
            "expected a range a..b with a <= b, got {!r}".format(text)
        )

    return low, high


def positive_int(text):
    """Parse a positive integer flag."""
    try:
        value = int(text)
        assert value >= 1
    except (ValueError, AssertionError):
        raise argparse.ArgumentTypeError(
            "expected a positive integer, got {!r}".format(text)
        )

    return value


def build_parser():
    """Build the argument parser.

    Returns:
        :class:`argparse.ArgumentParser`: The parser, one subcommand per
            operation.
    """
    parser = argparse.ArgumentParser(prog=NAME, description=DESCRIPTION)
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + VERSION
    )
    parser.add_argument(
        "--output",
        choices=("json", "text"),
        default="json",
        help="output format (default: json)",
    )
    parser.add_argument("--seed", type=int, help="seed (default: 42)")
    parser.add_argument(
        "--budget-nodes", type=positive_int, help="search nodes per solve"
    )
    parser.add_argument(
        "--budget-ms", type=positive_int, help="milliseconds per solve"
    )
    parser.add_argument(
        "--workers", type=positive_int, help="verification processes"
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log INFO (-v) or DEBUG (-vv) to stderr",
    )

    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    conflict = subparsers.add_parser("conflict", help="build M_p(G)")
    conflict.add_argument("--graph", required=True)
    conflict.add_argument("--spec", required=True)

    solve = subparsers.add_parser("solve", help="solve alpha, omega or chi")
    solve.add_argument("--graph", required=True)
    solve.add_argument("--spec")
    solve.add_argument("--what", required=True, choices=SOLVE_QUANTITIES)

    formula = subparsers.add_parser("formula", help="evaluate a closed form")
    formula.add_argument("--spec", required=True)
    formula.add_argument("--what", required=True, choices=FORMULA_BOUNDS)
    bounds = formula.add_mutually_exclusive_group(required=True)
    bounds.add_argument("--k", type=int)
    bounds.add_argument("--a", type=int)
    bounds.add_argument("--w", type=int)

    classify = subparsers.add_parser("classify", help="classify a matrix")
    classify.add_argument("--spec", required=True)

    construct = subparsers.add_parser(
        "construct", help="write an extremal complete graph"
    )
    construct.add_argument("--spec", required=True)
    construct.add_argument("--k", type=int, required=True)
    construct.add_argument("--side", choices=(A_SIDE, W_SIDE), required=True)
    construct.add_argument("--out", help="graph file to write")

    param = subparsers.add_parser("param", help="compute a graph parameter")
    param.add_argument("--graph", required=True)
    param.add_argument("--what", required=True, choices=GRAPH_PARAMETERS)
    param.add_argument(
        "--with-ordering",
        action="store_true",
        help="also print an optimal vertex ordering",
    )

    verify = subparsers.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", required=True, choices=VERIFY_SUITES)
    verify.add_argument("--p-range", type=parse_range)
    verify.add_argument("--k-range", type=parse_range)
    verify.add_argument(
        "--count",
        type=positive_int,
        help="random corpus size (default: per suite, 20 to 5000)",
    )
    verify.add_argument("--out", help="JSON-lines report file to write")
    verify.add_argument(
        "--timings", action="store_true", help="add runtime_ms to reports"
    )

    return parser


def configure_logging(verbosity):
    """Send package logs to stderr at a level set by -v flags."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter("%(levelname)s %(name)s: %(message)s")
    )

    package_logger = logging.getLogger("ordconflict")
    package_logger.handlers = [handler]
    package_logger.setLevel(level)
    package_logger.propagate = False


def make_client(args):
    """Build a client from the environment, overridden by flags."""
    client = from_env()

    if args.seed is not None:
        client.seed = args.seed

    if args.budget_nodes is not None:
        client.budget.node_limit = args.budget_nodes

    if args.budget_ms is not None:
        client.budget.time_limit_ms = args.budget_ms

    if args.workers is not None:
        client.workers = args.workers

    return client


def emit(document, text, args, stream=None):
    """Write one result as JSON or as text."""
    stream = stream or sys.stdout

    if args.output == "json":
        stream.write(json.dumps(document, sort_keys=True))
    else:
        stream.write(text)

    stream.write("\n")


def run_conflict(client, args):
    graph = client.graphs.load(args.graph)
    spec = client.specs.load(args.spec)
    conflicts = client.conflict_graphs.build(graph, spec)
    lines = [
        "%s: %d nodes, %d conflicts"
        % (spec, conflicts.node_count, conflicts.conflict_count)
    ]
    lines.extend(
        "%s -- %s" % (conflicts.nodes[i], conflicts.nodes[j])
        for i, j in conflicts.conflict_pairs()
    )

    emit(conflicts.to_dict(), "\n".join(lines), args)

    return EXIT_OK


def run_solve(client, args):
    graph = client.graphs.load(args.graph)

    if args.spec is None and args.what != "chi-underlying":
        raise ValueError("--spec is required for {}".format(args.what))

    spec = client.specs.load(args.spec) if args.spec is not None else None
    value = client.solve(graph, spec, args.what)

    emit({"what": args.what, "value": value}, str(value), args)

    return EXIT_OK


def run_formula(client, args):
    spec = client.specs.load(args.spec)
    expected = FORMULA_BOUNDS[args.what]
    bound = getattr(args, expected)

    if bound is None:
        raise ValueError("--{} is required for {}".format(expected, args.what))

    result = client.formulas.evaluate(spec, args.what, bound)

    emit(result.to_dict(), str(result), args)

    return EXIT_OK


def run_classify(client, args):
    spec = client.specs.load(args.spec)
    matrix_class = classify_matrix(spec.matrix, spec.p)

    emit(matrix_class.to_dict(), str(matrix_class), args)

    return EXIT_OK


def run_construct(client, args):
    spec = client.specs.load(args.spec)
    graph = extremal_complete_graph(spec.matrix, spec.p, args.k).side(
        args.side
    )

    if args.out:
        client.graphs.dump(graph, args.out)
        logger.info("Wrote %s to %s", graph, args.out)

    emit(graph.to_dict(), " ".join(str(v) for v in graph.vertices), args)

    return EXIT_OK


def run_param(client, args):
    graph = client.graphs.load(args.graph)
    result = client.parameter(
        args.what, graph, with_ordering=args.with_ordering
    )

    if args.with_ordering:
        value, ordering = result
        document = {"what": args.what, "value": value, "ordering": ordering}
        text = "%d (ordering %s)" % (value, " ".join(map(str, ordering)))
    else:
        document = {"what": args.what, "value": result}
        text = str(result)

    emit(document, text, args)

    return EXIT_OK


def run_verify(client, args):
    reports = client.run_suite(
        args.suite,
        p_range=args.p_range,
        k_range=args.k_range,
        count=args.count,
    )
    tally = {
        status: sum(1 for r in reports if r.status == status)
        for status in (PASS, PARTIAL, FAIL)
    }

    if args.out:
        with open(args.out, "w") as f:
            client.reports.write_lines(
                reports, f, include_runtime=args.timings
            )

    for report in reports:
        if report.failed:
            logger.error(
                "%s failed; witness %s",
                report.claim_id,
                json.dumps(report.witness, sort_keys=True),
            )

    document = {"suite": args.suite, "counts": tally}

    if not args.out:
        document["reports"] = [
            report.to_dict(include_runtime=args.timings) for report in reports
        ]

    lines = [str(report) for report in reports] if not args.out else []
    lines.append(
        "%s: %d pass, %d partial, %d fail"
        % (args.suite, tally[PASS], tally[PARTIAL], tally[FAIL])
    )

    emit(document, "\n".join(lines), args)

    return EXIT_FAILURE if tally[FAIL] else EXIT_OK


COMMANDS = {
    "conflict": run_conflict,
    "solve": run_solve,
    "formula": run_formula,
    "classify": run_classify,
    "construct": run_construct,
    "param": run_param,
    "verify": run_verify,
}


def main(argv=None):
    """Run the command line interface.

    Args:
        argv (list, optional): The arguments, without the program name.
            Defaults to ``sys.argv[1:]``.

    Returns:
        int: 0 on success, 1 when a verification fails or a search runs
            out of budget, 2 on a usage or validation error.
    """
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code

    configure_logging(args.verbose)

    try:
        client = make_client(args)

        return COMMANDS[args.command](client, args)
    except BudgetExceededError as error:
        emit(
            {"error": str(error), "lower": error.lower, "upper": error.upper},
            "%s (bounds %s..%s)" % (error, error.lower, error.upper),
            args,
        )

        return EXIT_FAILURE
    except (OrdConflictError, ValueError, OSError) as error:
        sys.stderr.write("error: {}\n".format(error))

        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
