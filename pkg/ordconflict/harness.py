"""Batch verification of the closed forms and their supporting facts.

Every check produces a :class:`ordconflict.models.verify_report.VerifyReport`.
Upper checks solve the extremal embeddings exactly; lower checks and
property suites run over a bounded
:class:`ordconflict.enumeration.EnumerationSpec`, so their reports are
scoped to the window they searched.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import concurrent.futures
import itertools
import logging
import random
import time
from ordconflict.closed_forms import (
    binomial2,
    closed_form_A,
    closed_form_W,
    closed_form_X_cli,
    closed_form_X_ind,
    table2_X_cli,
    table2_X_ind,
)
from ordconflict.constants import (
    A_SIDE,
    ARCH_MATRIX,
    DENSITY_CORPUS_COUNT,
    DEFAULT_SEED,
    EXACT,
    FAIL,
    LEMMA_CORPUS_COUNT,
    LEMMA_IDS,
    LONG_EDGE_CORPUS_COUNT,
    LONG_EDGE_TARGET,
    NEST_MATRIX,
    PARTIAL,
    PASS,
    SHIFT_MATRIX,
    TABLE2_MAX_BOUND,
    THEOREM1_CORPUS_COUNT,
    THEOREM1_RANDOM_MATRICES,
    UNKNOWN,
    VERIFY_SUITES,
    W_SIDE,
)
from ordconflict.constructions import (
    extremal_complete_graph,
    independent_set_witness,
    long_edge_set,
    theorem1_witness,
    verify_interval_witness,
)
from ordconflict.enumeration import EnumerationSpec, complete_embeddings
from ordconflict.exceptions import (
    CaseMismatchError,
    NotIndependentError,
    PreconditionError,
    UnknownClaimError,
)
from ordconflict.models.conflict_graph import build_conflict_graph
from ordconflict.models.conflict_spec import ConflictSpec, normalize_matrix
from ordconflict.models.verify_report import VerifyReport
from ordconflict.solvers import (
    chromatic_number,
    clique_number,
    independence_number,
    is_comparability_orientation,
    omega_leftof_fast,
)
from ordconflict.transforms import (
    ROW_REPRESENTATIVES,
    complement_spec,
    nest_shift_pair,
    reverse_negate,
    swap_edge_roles,
)

logger = logging.getLogger(__name__)


# Every single-row sign matrix, and the translation-invariant ones
SIGN_ROWS = tuple(
    (row,) for row in itertools.product((-1, 0, 1), repeat=4)
)
INVARIANT_SIGN_ROWS = tuple(
    matrix for matrix in SIGN_ROWS if sum(matrix[0]) == 0
)

# The catalog checked by the table1 suite: the 19 invariant sign rows
# plus the shift and nest matrices
TABLE1_MATRICES = INVARIANT_SIGN_ROWS + (SHIFT_MATRIX, NEST_MATRIX)

# (representative row, p) cells of the lower suite
LOWER_CELLS = (
    (ROW_REPRESENTATIVES[3], 1),
    (ROW_REPRESENTATIVES[4], 2),
    (ROW_REPRESENTATIVES[6], 3),
    (ROW_REPRESENTATIVES[9], 2),
    (ROW_REPRESENTATIVES[10], 0),
)
# Rows whose enumerated minimum must equal the exact closed form
LOWER_EXACT_ROWS = (ROW_REPRESENTATIVES[3], ROW_REPRESENTATIVES[10])
LOWER_KS = (3, 4)

# Default threshold and size ranges of the suites
DEFAULT_P_RANGE = (-4, 4)
DEFAULT_K_RANGE = (2, 9)
LEMMA_P_RANGE = (-2, 3)
COMPARABILITY_P_VALUES = (0, 1, 2)

# k at which the theorem1 suite cross-checks the closed forms
THEOREM1_CHECK_K = 4


def matrix_label(matrix):
    """A compact name for a matrix inside claim ids.

    Sign matrices are written with "+", "0" and "-" ("+0-0"); other
    matrices list their entries. Rows are joined by "/".

    Args:
        matrix (iterable): The rows of M.

    Returns:
        str: The label.
    """
    signs = {1: "+", 0: "0", -1: "-"}
    rows = normalize_matrix(matrix)

    if all(entry in signs for row in rows for entry in row):
        return "/".join("".join(signs[entry] for entry in row) for row in rows)

    return "/".join(
        "[" + ",".join(str(entry) for entry in row) + "]" for row in rows
    )


def _graph_witness(graph, matrix, p, **extra):
    witness = {
        "graph": graph.to_dict(),
        "matrix": [list(row) for row in normalize_matrix(matrix)],
        "p": p,
    }
    witness.update(extra)

    return witness


def _side_status(formula, observed):
    """pass, partial or fail for one solver value against one formula."""
    if formula.kind == UNKNOWN:
        return PARTIAL

    if not formula.admits(observed):
        return FAIL

    return PASS if formula.kind == EXACT else PARTIAL


def _combine(statuses):
    if FAIL in statuses:
        return FAIL

    if PARTIAL in statuses:
        return PARTIAL

    return PASS


def verify_upper(matrix, p, k, budget=None):
    """Solve the extremal embeddings and compare with the closed forms.

    Exact closed forms must be met exactly; bounds only have to contain
    the solver value, which makes the claim partial.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        k (int): The number of vertices, at least 2.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for the exact searches.

    Returns:
        :class:`ordconflict.models.verify_report.VerifyReport`: The
            report; a failure carries the offending embedding.

    Raises:
        :class:`ordconflict.exceptions.UnclassifiableSpecError`: M has
            no extremal embedding.
    """
    pair = extremal_complete_graph(matrix, p, k)
    spec = ConflictSpec(matrix, p)
    formulas = {
        A_SIDE: closed_form_A(matrix, p, k),
        W_SIDE: closed_form_W(matrix, p, k),
    }
    solvers = {A_SIDE: independence_number, W_SIDE: clique_number}
    statuses = []
    details = {}
    witness = None

    for side in (A_SIDE, W_SIDE):
        graph = pair.side(side)
        observed = solvers[side](build_conflict_graph(graph, spec), budget)
        status = _side_status(formulas[side], observed)

        statuses.append(status)
        details[side] = {
            "observed": observed,
            "formula": formulas[side].to_dict(),
            "embedding": list(graph.vertices),
        }

        if status == FAIL and witness is None:
            witness = _graph_witness(graph, matrix, p, side=side)

    return VerifyReport(
        "{}.{}.p={}.k={}".format(
            formulas[A_SIDE].provenance, matrix_label(matrix), p, k
        ),
        _combine(statuses),
        witness=witness,
        counts=2,
        scope="extremal K_{}".format(k),
        details=details,
    )


def verify_lower(matrix, p, k, enum, budget=None, exact_minimum=False):
    """Look for a graph with chi >= k that beats the closed forms.

    With ``exact_minimum`` the smallest value seen in the window must
    also equal every exact closed form, so a window that never attains
    the formula fails with its best graph.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        k (int): The chromatic bound, at least 2.
        enum (:class:`ordconflict.enumeration.EnumerationSpec`): The
            graphs to search.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for the exact searches.
        exact_minimum (bool, optional): Whether the window minimum must
            attain the exact closed forms.

    Returns:
        :class:`ordconflict.models.verify_report.VerifyReport`: A pass
            scoped to the window, a fail with the beating graph, or a
            partial when no graph with chi >= k was found.
    """
    spec = ConflictSpec(matrix, p)
    formulas = {
        A_SIDE: closed_form_A(matrix, p, k),
        W_SIDE: closed_form_W(matrix, p, k),
    }
    solvers = {A_SIDE: independence_number, W_SIDE: clique_number}
    minima = {A_SIDE: None, W_SIDE: None}
    best = {A_SIDE: None, W_SIDE: None}
    claim_id = "lower.{}.{}.p={}.k={}".format(
        formulas[A_SIDE].provenance, matrix_label(matrix), p, k
    )
    checked = 0

    for graph in enum:
        if graph.edge_count < binomial2(k):
            continue

        if chromatic_number(graph, budget) < k:
            continue

        checked += 1
        conflicts = build_conflict_graph(graph, spec)

        for side in (A_SIDE, W_SIDE):
            observed = solvers[side](conflicts, budget)

            if minima[side] is None or observed < minima[side]:
                minima[side] = observed
                best[side] = graph

            lowest = formulas[side].lowest()

            if lowest is not None and observed < lowest:
                return VerifyReport(
                    claim_id,
                    FAIL,
                    witness=_graph_witness(
                        graph, matrix, p, side=side, observed=observed
                    ),
                    counts=checked,
                    scope=enum.describe(),
                    details={"formula": formulas[side].to_dict()},
                )

    details = {}

    for side in (A_SIDE, W_SIDE):
        details[side] = {
            "minimum": minima[side],
            "formula": formulas[side].to_dict(),
            "minimum_matches": (
                formulas[side].kind == EXACT
                and minima[side] == formulas[side].value
            ),
        }

        if (
            exact_minimum
            and checked
            and formulas[side].kind == EXACT
            and not details[side]["minimum_matches"]
        ):
            return VerifyReport(
                claim_id,
                FAIL,
                witness=_graph_witness(
                    best[side],
                    matrix,
                    p,
                    side=side,
                    observed=minima[side],
                ),
                counts=checked,
                scope=enum.describe(),
                details={"formula": formulas[side].to_dict()},
            )

    return VerifyReport(
        claim_id,
        PASS if checked else PARTIAL,
        counts=checked,
        scope="verified within " + enum.describe(),
        details=details,
    )


def verify_density(p, enum, budget=None):
    """Check |E| <= (2n - 3) alpha (|p| + 1) for the shift matrix.

    Args:
        p (int): The threshold, at most 0.
        enum (:class:`ordconflict.enumeration.EnumerationSpec`): The
            graphs to check.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for the exact searches.

    Returns:
        :class:`ordconflict.models.verify_report.VerifyReport`: The
            report.

    Raises:
        :class:`ordconflict.exceptions.PreconditionError`: p > 0.
    """
    try:
        assert p <= 0
    except AssertionError:
        raise PreconditionError("the density bound needs p <= 0")

    spec = ConflictSpec(SHIFT_MATRIX, p)
    claim_id = "density.p={}".format(p)
    checked = 0
    tightest = None

    for graph in enum:
        alpha = independence_number(build_conflict_graph(graph, spec), budget)
        bound = (2 * graph.vertex_count - 3) * alpha * (abs(p) + 1)
        checked += 1

        if graph.edge_count > bound:
            return VerifyReport(
                claim_id,
                FAIL,
                witness=_graph_witness(
                    graph, SHIFT_MATRIX, p, alpha=alpha, bound=bound
                ),
                counts=checked,
                scope=enum.describe(),
            )

        slack = bound - graph.edge_count

        if tightest is None or slack < tightest:
            tightest = slack

    return VerifyReport(
        claim_id,
        PASS,
        counts=checked,
        scope="verified within " + enum.describe(),
        details={"smallest_slack": tightest},
    )


def _check_swap(graph, matrix, p):
    spec = ConflictSpec(matrix, p)
    swapped = ConflictSpec(swap_edge_roles(matrix), p)

    return (
        build_conflict_graph(graph, spec).adjacency
        == build_conflict_graph(graph, swapped).adjacency
    )


def _check_reverse_negate(graph, matrix, p):
    mirror = graph.negated()
    index = mirror.edge_index
    original = build_conflict_graph(graph, ConflictSpec(matrix, p))
    mirrored = build_conflict_graph(
        mirror, ConflictSpec(reverse_negate(matrix), p)
    )
    position = [index[(-v, -u)] for u, v in graph.edges]

    return all(
        original.has_conflict(i, j)
        == mirrored.has_conflict(position[i], position[j])
        for i, j in itertools.combinations(range(graph.edge_count), 2)
    )


def _check_complement(graph, matrix, p):
    partner, partner_p = complement_spec(matrix, p)
    original = build_conflict_graph(graph, ConflictSpec(matrix, p))
    complement = build_conflict_graph(graph, ConflictSpec(partner, partner_p))

    return complement.adjacency == original.complement().adjacency


def _check_nest_shift(graph, p):
    pair = nest_shift_pair(p)
    nest = build_conflict_graph(graph, pair.nest)
    shift = build_conflict_graph(graph, pair.shift)

    return nest.adjacency == shift.complement().adjacency


def _check_long_edges(graph, k, budget):
    """Failures of long_edge_set on G with chi = k for every q, or None."""
    for q in range(1, k):
        chosen, extra = long_edge_set(graph, k, q, budget)
        edges = set(graph.edges)

        if (
            len(chosen) != binomial2(k - q + 1)
            or len(set(chosen)) != len(chosen)
            or any(e not in edges or e[1] - e[0] < q for e in chosen)
        ):
            return {"k": k, "q": q, "edges": [list(e) for e in chosen]}

        if q >= 2 and (
            extra is None or extra in chosen or extra[1] - extra[0] < q - 1
        ):
            return {"k": k, "q": q, "extra": extra}

    return None


def _check_comparability(graph, p, budget):
    conflicts = build_conflict_graph(graph, ConflictSpec(ARCH_MATRIX, p))
    fast = omega_leftof_fast(graph, p)

    return (
        is_comparability_orientation(graph, p)
        and clique_number(conflicts, budget) == fast
        and chromatic_number(conflicts, budget) == fast
    )


def _greedy_independent(conflicts, rng):
    order = list(range(conflicts.node_count))
    rng.shuffle(order)
    chosen = []

    for i in order:
        if not any(conflicts.has_conflict(i, j) for j in chosen):
            chosen.append(i)

    return [conflicts.nodes[i] for i in chosen]


def _check_interval_witness(graph, p, rng):
    conflicts = build_conflict_graph(graph, ConflictSpec(ARCH_MATRIX, p))
    index = graph.edge_index

    # A greedy independent set always has a witness
    independent = _greedy_independent(conflicts, rng)
    witness = independent_set_witness(graph, p, independent)

    if not verify_interval_witness(graph, p, independent, witness):
        return {"edges": [list(e) for e in independent]}

    # A random subset has one exactly when it is independent
    subset = rng.sample(graph.edges, rng.randint(1, graph.edge_count))
    dependent = any(
        conflicts.has_conflict(index[a], index[b])
        for a, b in itertools.combinations(subset, 2)
    )

    try:
        witness = independent_set_witness(graph, p, subset)
    except NotIndependentError as error:
        a, b = error.pair

        if dependent and conflicts.has_conflict(index[a], index[b]):
            return None

        return {"edges": [list(e) for e in subset], "pair": error.pair}

    if dependent or not verify_interval_witness(graph, p, subset, witness):
        return {"edges": [list(e) for e in subset]}

    return None


def verify_lemma_suite(
    lemma_id,
    corpus,
    budget=None,
    p_range=LEMMA_P_RANGE,
    seed=DEFAULT_SEED,
    chromatic_target=None,
):
    """Run one structural property over a corpus of ordered graphs.

    The properties are:

    * swap: swapping edge roles keeps M_p(G).
    * reverse-negate: M_p(G) is isomorphic to the reversed and negated
      matrix on -G.
    * complement: the complement spec gives the complement graph.
    * long-edges: long_edge_set delivers C(k - q + 1, 2) edges of
      length at least q on every graph with chi = k >= 3.
      Graphs with chi >= 4, where q also reaches 2 and 3, are counted
      in the details; with ``chromatic_target`` the scan stops once
      that many were checked and is partial if the corpus runs out
      first.
    * comparability: for (+,0,0,-) and p in {0, 1, 2} the left-to-right
      orientation is transitive and chi = omega = the chain length.
    * interval-witness: independent edge sets of (+,0,0,-) have a valid
      interval witness and dependent ones are rejected.
    * nest-shift: nest at p and shift at 1 - p are complementary.

    Graph i of the corpus is checked with the i-th sign row and the
    i-th threshold of ``p_range``, cyclically.

    Args:
        lemma_id (str): One of :data:`ordconflict.constants.LEMMA_IDS`.
        corpus (:class:`ordconflict.enumeration.EnumerationSpec`): The
            graphs.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for the exact searches.
        p_range (tuple, optional): Inclusive (low, high) thresholds.
        seed (int, optional): The seed for random edge subsets.
        chromatic_target (int, optional): For long-edges, how many
            graphs with chi >= 4 to check.

    Returns:
        :class:`ordconflict.models.verify_report.VerifyReport`: The
            report; a failure carries the first offending graph.

    Raises:
        :class:`ordconflict.exceptions.UnknownClaimError`: The lemma id
            is unknown.
    """
    if lemma_id not in LEMMA_IDS:
        raise UnknownClaimError(
            "unknown lemma {!r}; choose from {}".format(
                lemma_id, ", ".join(LEMMA_IDS)
            )
        )

    p_values = list(range(p_range[0], p_range[1] + 1))

    if lemma_id == "comparability":
        p_values = list(COMPARABILITY_P_VALUES)

    rng = random.Random(seed)
    checked = 0
    dense = 0

    for index, graph in enumerate(corpus):
        matrix = SIGN_ROWS[index % len(SIGN_ROWS)]
        p = p_values[index % len(p_values)]
        failure = None

        if lemma_id == "swap":
            failure = not _check_swap(graph, matrix, p)
        elif lemma_id == "reverse-negate":
            failure = not _check_reverse_negate(graph, matrix, p)
        elif lemma_id == "complement":
            failure = not _check_complement(graph, matrix, p)
        elif lemma_id == "nest-shift":
            matrix = NEST_MATRIX
            failure = not _check_nest_shift(graph, p)
        elif lemma_id == "comparability":
            matrix = ARCH_MATRIX
            failure = not _check_comparability(graph, p, budget)
        elif lemma_id == "interval-witness":
            matrix = ARCH_MATRIX
            failure = _check_interval_witness(graph, p, rng)
        else:
            matrix, p = ARCH_MATRIX, None

            chromatic = chromatic_number(graph, budget)

            if chromatic < 3:
                continue

            dense += chromatic >= 4
            failure = _check_long_edges(graph, chromatic, budget)

        checked += 1

        if failure:
            extra = failure if isinstance(failure, dict) else {}

            return VerifyReport(
                "lemma." + lemma_id,
                FAIL,
                witness=_graph_witness(graph, matrix, p, **extra),
                counts=checked,
                scope=corpus.describe(),
            )

        if chromatic_target is not None and dense >= chromatic_target:
            break

    details = {"p_values": p_values}
    status = PASS

    if lemma_id == "long-edges":
        details["chi_at_least_4"] = dense

        if chromatic_target is not None and dense < chromatic_target:
            status = PARTIAL

    return VerifyReport(
        "lemma." + lemma_id,
        status,
        counts=checked,
        scope="verified within " + corpus.describe(),
        details=details,
    )


def verify_theorem1(matrix, p, corpus, budget=None):
    """Check the re-embeddings that empty or fill M_p(G).

    For each side with a witness construction, every corpus graph is
    re-embedded and its conflict graph must be empty (W) or complete
    (A); the closed form must then admit the value 1 at k = 4.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        corpus (:class:`ordconflict.enumeration.EnumerationSpec`): The
            graphs to re-embed.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for the exact searches.

    Returns:
        :class:`ordconflict.models.verify_report.VerifyReport`: The
            report, partial when neither side has a construction.
    """
    spec = ConflictSpec(matrix, p)
    claim_id = "theorem1.{}.p={}".format(matrix_label(matrix), p)
    formulas = {
        A_SIDE: closed_form_A(matrix, p, THEOREM1_CHECK_K),
        W_SIDE: closed_form_W(matrix, p, THEOREM1_CHECK_K),
    }
    solvers = {A_SIDE: independence_number, W_SIDE: clique_number}
    sides = []
    checked = 0

    for graph in corpus:
        for side in (A_SIDE, W_SIDE):
            try:
                embedded = theorem1_witness(matrix, p, graph, side)
            except CaseMismatchError:
                continue

            if side not in sides:
                sides.append(side)

            conflicts = build_conflict_graph(embedded, spec)
            observed = solvers[side](conflicts, budget)
            checked += 1

            if observed != 1 or not formulas[side].admits(1):
                return VerifyReport(
                    claim_id,
                    FAIL,
                    witness=_graph_witness(
                        embedded, matrix, p, side=side, observed=observed
                    ),
                    counts=checked,
                    scope=corpus.describe(),
                    details={"formula": formulas[side].to_dict()},
                )

    return VerifyReport(
        claim_id,
        PASS if sides else PARTIAL,
        counts=checked,
        scope=corpus.describe(),
        details={"sides": sides},
    )


def verify_inversion(matrix, p, what, max_bound=TABLE2_MAX_BOUND):
    """Compare the sup inversion with the coded table expressions.

    Args:
        matrix (iterable): A catalog matrix.
        p (int): The threshold.
        what (str): "Xind" or "Xcli".
        max_bound (int, optional): Bounds 1..max_bound are compared.

    Returns:
        :class:`ordconflict.models.verify_report.VerifyReport`: The
            report; a failure carries the first differing bound.
    """
    if what == "Xind":
        inverted, table = closed_form_X_ind, table2_X_ind
    else:
        inverted, table = closed_form_X_cli, table2_X_cli

    label = matrix_label(matrix)
    checked = 0

    for bound in range(1, max_bound + 1):
        expected = table(matrix, p, bound)

        if expected is None:
            break

        result = inverted(matrix, p, bound)
        checked += 1

        if (result.kind, result.value, result.lower, result.upper) != (
            expected.kind,
            expected.value,
            expected.lower,
            expected.upper,
        ):
            return VerifyReport(
                "{}.{}.{}.p={}".format(expected.provenance, label, what, p),
                FAIL,
                witness={
                    "bound": bound,
                    "inverted": result.to_dict(),
                    "table": expected.to_dict(),
                },
                counts=checked,
            )

    provenance = expected.provenance if checked else "table2"

    return VerifyReport(
        "{}.{}.{}.p={}".format(provenance, label, what, p),
        PASS if checked else PARTIAL,
        counts=checked,
        scope="bounds 1..{}".format(max_bound),
    )


def question15_search(matrix, p, k, enum, budget=None):
    """Search for a non-complete graph better than every complete one.

    For each side whose closed form is exact, the best value over all
    K_k embeddings inside the window is computed; an enumerated
    non-complete graph with chi >= k strictly below it is a hit.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        k (int): The chromatic bound, at least 2.
        enum (:class:`ordconflict.enumeration.EnumerationSpec`): The
            graphs to search; exhaustive windows compare against K_k in
            [lo, hi].
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for the exact searches.

    Returns:
        :class:`ordconflict.models.verify_report.VerifyReport`: A pass
            whose details say whether a graph was found; a found graph
            is the witness.

    Raises:
        :class:`ordconflict.exceptions.PreconditionError`: Neither
            closed form is exact.
    """
    spec = ConflictSpec(matrix, p)
    formulas = {
        A_SIDE: closed_form_A(matrix, p, k),
        W_SIDE: closed_form_W(matrix, p, k),
    }
    sides = [
        side for side in (A_SIDE, W_SIDE) if formulas[side].kind == EXACT
    ]

    try:
        assert sides
    except AssertionError:
        raise PreconditionError(
            "no exact closed form for {} at p = {}".format(matrix, p)
        )

    solvers = {A_SIDE: independence_number, W_SIDE: clique_number}
    claim_id = "question15.{}.p={}.k={}".format(matrix_label(matrix), p, k)
    best = {}

    for graph in complete_embeddings(k, enum.lo, enum.hi):
        conflicts = build_conflict_graph(graph, spec)

        for side in sides:
            value = solvers[side](conflicts, budget)
            best[side] = min(best.get(side, value), value)

    checked = 0

    for graph in enum:
        if graph.is_complete() or graph.edge_count < binomial2(k):
            continue

        if chromatic_number(graph, budget) < k:
            continue

        checked += 1
        conflicts = build_conflict_graph(graph, spec)

        for side in sides:
            if side not in best:
                continue

            value = solvers[side](conflicts, budget)

            if value < best[side]:
                logger.warning("Found a graph below every K_%d embedding", k)

                return VerifyReport(
                    claim_id,
                    PASS,
                    witness=_graph_witness(
                        graph, matrix, p, side=side, observed=value
                    ),
                    counts=checked,
                    scope=enum.describe(),
                    details={"found": True, "complete_best": best},
                )

    return VerifyReport(
        claim_id,
        PASS,
        counts=checked,
        scope=enum.describe(),
        details={"found": False, "complete_best": best},
    )


def _random_noninvariant_matrices(seed, count):
    rng = random.Random(seed)
    matrices = []

    while len(matrices) < count:
        rows = tuple(
            tuple(rng.randint(-3, 3) for _ in range(4))
            for _ in range(rng.randint(1, 2))
        )

        if all(sum(row) != 0 for row in rows):
            matrices.append(rows)

    return matrices


def _inclusive(bounds):
    return range(bounds[0], bounds[1] + 1)


def _suite_jobs(name, p_range, k_range, seed, count, budget):
    """The (function, args) jobs of a suite, in a fixed order."""
    p_values = _inclusive(p_range)
    k_values = _inclusive(k_range)

    if name == "table1":
        return [
            (verify_upper, (matrix, p, k, budget))
            for matrix in TABLE1_MATRICES
            for p in p_values
            for k in k_values
        ]

    if name == "nest":
        return [
            (verify_upper, (matrix, p, k, budget))
            for matrix in (NEST_MATRIX, SHIFT_MATRIX)
            for p in p_values
            for k in k_values
        ]

    if name == "table2":
        matrices = [
            (row,) for row in ROW_REPRESENTATIVES.values()
        ] + [SHIFT_MATRIX, NEST_MATRIX]

        return [
            (verify_inversion, (matrix, p, what))
            for matrix in matrices
            for p in p_values
            for what in ("Xind", "Xcli")
        ]

    if name == "lemmas":
        corpus = EnumerationSpec.random_corpus(
            count or LEMMA_CORPUS_COUNT, seed=seed
        )

        long_edges = EnumerationSpec.random_corpus(
            count or LONG_EDGE_CORPUS_COUNT, seed=seed
        )

        return [
            (
                verify_lemma_suite,
                (lemma_id, corpus, budget, LEMMA_P_RANGE, seed),
            )
            for lemma_id in LEMMA_IDS
            if lemma_id != "long-edges"
        ] + [
            (
                verify_lemma_suite,
                (
                    "long-edges",
                    long_edges,
                    budget,
                    LEMMA_P_RANGE,
                    seed,
                    LONG_EDGE_TARGET,
                ),
            )
        ]

    if name == "theorem1":
        corpus = EnumerationSpec.random_corpus(
            count or THEOREM1_CORPUS_COUNT, seed=seed
        )
        matrices = (
            _random_noninvariant_matrices(seed, THEOREM1_RANDOM_MATRICES)
            + list(INVARIANT_SIGN_ROWS)
        )

        return [
            (verify_theorem1, (matrix, p, corpus, budget))
            for matrix in matrices
            for p in p_values
        ]

    if name == "density":
        corpus = EnumerationSpec.random_corpus(
            count or DENSITY_CORPUS_COUNT, seed=seed
        )

        return [
            (verify_density, (p, corpus, budget)) for p in p_values if p <= 0
        ]

    if name == "lower":
        window = EnumerationSpec.exhaustive(5, 1, 7)

        return [
            (
                verify_lower,
                ((row,), p, k, window, budget, row in LOWER_EXACT_ROWS),
            )
            for row, p in LOWER_CELLS
            for k in LOWER_KS
        ] + [
            (verify_lower, (SHIFT_MATRIX, 1, k, window, budget))
            for k in LOWER_KS
        ]

    window = EnumerationSpec.exhaustive(5, 1, 6)

    return [
        (question15_search, ((ROW_REPRESENTATIVES[3],), 1, 3, window, budget)),
        (question15_search, (NEST_MATRIX, 1, 4, window, budget)),
    ]


def _run_job(job):
    """Run one claim and stamp its runtime."""
    function, args = job
    started = time.monotonic()
    report = function(*args)
    report.runtime_ms = int((time.monotonic() - started) * 1000)

    logger.info("%s", report)

    return report


def run_suite(
    name,
    p_range=DEFAULT_P_RANGE,
    k_range=DEFAULT_K_RANGE,
    seed=DEFAULT_SEED,
    count=None,
    budget=None,
    workers=1,
):
    """Run a verification suite.

    Args:
        name (str): One of :data:`ordconflict.constants.VERIFY_SUITES`.
        p_range (tuple, optional): Inclusive (low, high) thresholds.
        k_range (tuple, optional): Inclusive (low, high) values of k;
            the low end is raised to 2.
        seed (int, optional): The seed of every random corpus.
        count (int, optional): The random corpus size. Defaults to a
            per-suite size: 500 graphs for lemmas and density, 20 for
            theorem1 (each graph is re-embedded for every matrix and
            threshold) and 5000 for long-edges, which stops after 100
            graphs with chi >= 4. These stay well below 10^4 graphs per
            claim so a suite finishes in minutes; pass a larger count
            for a wider sweep.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for each exact search.
        workers (int, optional): The number of worker processes. One
            runs the claims in this process.

    Returns:
        list: The :class:`ordconflict.models.verify_report.VerifyReport`
            objects, sorted by claim id.

    Raises:
        :class:`ordconflict.exceptions.UnknownClaimError`: The suite is
            unknown.
    """
    if name not in VERIFY_SUITES:
        raise UnknownClaimError(
            "unknown suite {!r}; choose from {}".format(
                name, ", ".join(VERIFY_SUITES)
            )
        )

    k_range = (max(2, k_range[0]), k_range[1])
    jobs = _suite_jobs(name, p_range, k_range, seed, count, budget)

    logger.info("Running suite %s: %d claims", name, len(jobs))

    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(workers) as executor:
            reports = list(executor.map(_run_job, jobs))
    else:
        reports = [_run_job(job) for job in jobs]

    return sorted(reports, key=lambda report: report.claim_id)
