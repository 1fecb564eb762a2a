"""Explicit ordered-graph constructions.

Extremal embeddings of complete graphs, re-embeddings that empty or
fill a conflict graph, k-critical subgraphs, long edge sets, interval
witnesses of independent sets and the two directions between interval
layouts and p-almost colorings for M = (+,0,0,-).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import collections
import itertools
import logging
from ordconflict.closed_forms import ceil_div
from ordconflict.constants import (
    A_SIDE,
    ARCH_MATRIX,
    COMPLEMENT_EXCHANGE,
    CONTAINED_IN_ALL_SPANS,
    MEETS_ALL_SPANS,
    NEST_LIKE,
    SHORT_EDGE_EXCEPTION,
    TABLE_ROW,
    W_SIDE,
    ZERO,
)
from ordconflict.exceptions import (
    CaseMismatchError,
    EmptyEdgeSetError,
    NotIndependentError,
    OrdConflictError,
    PreconditionError,
    UnclassifiableSpecError,
)
from ordconflict.models.conflict_graph import evaluate_row, is_conflicting
from ordconflict.models.conflict_spec import ConflictSpec, normalize_matrix
from ordconflict.models.interval_witness import IntervalWitness
from ordconflict.models.ordered_graph import complete_graph, from_networkx
from ordconflict.models.p_almost_coloring import PAlmostColoring
from ordconflict.solvers import (
    BitsetGraph,
    chain_levels,
    chromatic_number,
    optimal_coloring,
)
from ordconflict.transforms import (
    NEST_ROW,
    SHIFT_ROW,
    classify_matrix,
    is_translation_invariant,
    theorem1_conditions,
)

logger = logging.getLogger(__name__)


class ExtremalPair(
    collections.namedtuple("ExtremalPair", ["a_side", "w_side"])
):
    """The complete graphs attaining A (a_side) and W (w_side)."""

    __slots__ = ()

    def side(self, name):
        """Return the embedding for side "A" or "W"."""
        if name == A_SIDE:
            return self.a_side

        if name == W_SIDE:
            return self.w_side

        raise ValueError("side must be A or W, not {!r}".format(name))


def _line(k, step=1):
    """K_k on {step, 2 step, ..., k step}."""
    return complete_graph([step * i for i in range(1, k + 1)])


def _powers(k, q):
    """K_k on {q, q^2, ..., q^k}."""
    return complete_graph([q ** i for i in range(1, k + 1)])


def _row_embeddings(row, p, k):
    """(A-side, W-side) complete graphs for a catalog representative."""
    if row == 2:
        return _line(k), _line(k)

    if row == 3:
        if p <= 0:
            return _line(k), _line(k)

        return _line(k, p), _line(k)

    if row in (4, 11):
        return _line(k, max(p, 1)), _line(k)

    if row == 5:
        return _line(k), _line(k, max(1, 1 - p))

    if row == 6:
        return _line(k, max(1, ceil_div(p, 2))), _line(k)

    if row == 7:
        # Complement of row 6 at 1 - p
        a_side, w_side = _row_embeddings(6, 1 - p, k)

        return w_side, a_side

    if row in (8, 9):
        if p <= 0:
            return _line(k), _line(k)

        # Distinct edges get linear forms differing by a multiple of q
        return _powers(k, max(2, p)), _line(k)

    if row in (10, SHIFT_ROW):
        if p >= 1:
            return _line(k, p), _line(k)

        # Scaling by 1 - p turns the threshold into 0 on [k]
        return _line(k), _line(k, 1 - p)

    if row == NEST_ROW:
        a_side, w_side = _row_embeddings(SHIFT_ROW, 1 - p, k)

        return w_side, a_side

    raise UnclassifiableSpecError("no embedding for row {}".format(row))


def extremal_complete_graph(matrix, p, k):
    """Return complete graphs whose conflict graphs attain A and W.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        k (int): The number of vertices, at least 2.

    Returns:
        :class:`ExtremalPair`: K_k embedded so that alpha(M_p(K_k)) is
            A(M, p, k) (``a_side``) and omega(M_p(K_k)) is W(M, p, k)
            (``w_side``).

    Raises:
        ValueError: k < 2.
        :class:`ordconflict.exceptions.UnclassifiableSpecError`: M is
            neither a catalog matrix nor a complement partner of one.
    """
    if k < 2:
        raise ValueError("k must be at least 2, got {}".format(k))

    matrix_class = classify_matrix(matrix, p)

    if matrix_class.tag == COMPLEMENT_EXCHANGE:
        partner = extremal_complete_graph(matrix_class.partner, 1 - p, k)

        return ExtremalPair(partner.w_side, partner.a_side)

    if matrix_class.tag not in (ZERO, TABLE_ROW, NEST_LIKE):
        raise UnclassifiableSpecError(
            "{} ({}) has no extremal embedding".format(
                matrix_class.matrix, matrix_class.tag
            )
        )

    a_side, w_side = _row_embeddings(matrix_class.row, p, k)

    # The representative's graphs serve M on the mirror image
    if matrix_class.mirrored:
        a_side, w_side = a_side.negated(), w_side.negated()

    logger.debug(
        "Extremal K_%d for %s: A-side %s, W-side %s",
        k,
        matrix_class,
        a_side.vertices,
        w_side.vertices,
    )

    return ExtremalPair(a_side, w_side)


def _ordered_quadruples(graph):
    """(u1, v1, u2, v2) for every ordered pair of distinct edges."""
    for e1, e2 in itertools.permutations(graph.edges, 2):
        yield e1 + e2


def _shift_witness(matrix, p, graph, side):
    """Shift G so that M_p(G) is empty (W) or complete (A)."""
    sums = [sum(row) for row in matrix]
    quadruples = list(_ordered_quadruples(graph))

    if not quadruples:
        return graph

    if side == W_SIDE:
        # One row below p for every ordered pair empties the graph
        index = next(i for i, total in enumerate(sums) if total != 0)
        c = sums[index]
        top = max(evaluate_row(matrix[index], q) for q in quadruples)

        if c > 0:
            t = (p - 1 - top) // c
        else:
            t = ceil_div(top - p + 1, -c)

        return graph.shifted(t)

    if not (all(c > 0 for c in sums) or all(c < 0 for c in sums)):
        raise CaseMismatchError(
            "row sums {} are not one-signed; no complete witness".format(sums)
        )

    # Every row at least p for every ordered pair fills the graph
    bottoms = [min(evaluate_row(row, q) for q in quadruples) for row in matrix]

    if sums[0] > 0:
        t = max(ceil_div(p - bottom, c) for bottom, c in zip(bottoms, sums))
    else:
        t = min((bottom - p) // -c for bottom, c in zip(bottoms, sums))

    return graph.shifted(t)


def _power_positions(graph, q):
    return [q ** i for i in range(1, len(graph.vertices) + 1)]


def theorem1_witness(matrix, p, graph, side):
    """Re-embed G so that M_p(G) is empty or complete.

    A W-side witness has an empty conflict graph and an A-side witness
    a complete one. Non-invariant matrices shift G; single invariant
    rows keep G or move it onto powers of a base q.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            The graph to re-embed.
        side (str): "A" or "W".

    Returns:
        :class:`ordconflict.models.ordered_graph.OrderedGraph`: The
            re-embedded graph.

    Raises:
        ValueError: The side is unknown.
        :class:`ordconflict.exceptions.EmptyEdgeSetError`: G has no
            edges.
        :class:`ordconflict.exceptions.CaseMismatchError`: M and p do
            not give a witness for this side.
    """
    if side not in (A_SIDE, W_SIDE):
        raise ValueError("side must be A or W, not {!r}".format(side))

    if not graph.edges:
        raise EmptyEdgeSetError("graph has no edges")

    matrix = normalize_matrix(matrix)

    if not is_translation_invariant(matrix):
        return _shift_witness(matrix, p, graph, side)

    rows = sorted(set(matrix))

    try:
        assert len(rows) == 1
    except AssertionError:
        raise CaseMismatchError(
            "invariant matrices with several rows have no witness"
        )

    m1, m2, m3, m4 = rows[0]
    conditions = theorem1_conditions(rows[0], p)

    if side == A_SIDE:
        if "i" in conditions:
            return graph

        if "iii" in conditions:
            q = max(2, p)

            while m2 + m4 == 0 and m1 % q == 0:
                q += 1

            logger.debug("Complete witness on powers of %d", q)

            return graph.remapped(_power_positions(graph, q))
    else:
        if "ii" in conditions:
            return graph

        if "iv" in conditions:
            q = max(2, -p, ceil_div(1 + m1, -m2), ceil_div(1 + m3, -m4))

            logger.debug("Empty witness on powers of %d", q)

            return graph.remapped(_power_positions(graph, q))

    raise CaseMismatchError(
        "{} at p = {} matches no case for side {}".format(rows[0], p, side)
    )


def _has_chromatic_number(graph, k, budget):
    return chromatic_number(graph, budget) >= k


def k_critical_subgraph(graph, k, budget=None):
    """Return a k-critical subgraph.

    Vertices are tried for deletion in increasing order, then edges in
    index order; a deletion is kept when the chromatic number stays at
    least k.

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            A graph with chromatic number at least k.
        k (int): The target chromatic number.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for each coloring search.

    Returns:
        :class:`ordconflict.models.ordered_graph.OrderedGraph`: A
            subgraph with chromatic number k, every proper subgraph of
            which has a smaller chromatic number.

    Raises:
        :class:`ordconflict.exceptions.PreconditionError`: chi(G) < k.
    """
    try:
        assert _has_chromatic_number(graph, k, budget)
    except AssertionError:
        raise PreconditionError(
            "the graph has chromatic number below {}".format(k)
        )

    current = graph

    for vertex in graph.vertices:
        candidate = current.subgraph(
            vertices=[v for v in current.vertices if v != vertex]
        )

        if _has_chromatic_number(candidate, k, budget):
            current = candidate

    for edge in graph.edges:
        if edge not in current.edges:
            continue

        candidate = current.subgraph(
            edges=[e for e in current.edges if e != edge]
        )

        if _has_chromatic_number(candidate, k, budget):
            current = candidate

    if k >= 2:
        touched = set(itertools.chain.from_iterable(current.edges))
        current = current.subgraph(
            vertices=[v for v in current.vertices if v in touched]
        )

    logger.debug(
        "%d-critical subgraph has %d vertices and %d edges",
        k,
        len(current.vertices),
        len(current.edges),
    )

    return current


def long_edge_set(graph, k, q, budget=None):
    """Find C(k - q + 1, 2) edges of length at least q.

    The i-th leftmost vertex of a k-critical subgraph, i <= k - q, is
    the left endpoint of at least k - i - q + 1 such edges.

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            A graph with chromatic number at least k.
        k (int): The chromatic bound.
        q (int): The length bound, 1 <= q < k.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for the coloring searches.

    Returns:
        tuple: (S, extra), where S is a tuple of edges of length at
            least q and extra is an edge outside S of length at least
            q - 1, or None when there is none. extra always exists for
            q >= 2 and k >= 3.

    Raises:
        :class:`ordconflict.exceptions.PreconditionError`: k <= q,
            q < 1 or chi(G) < k.
    """
    try:
        assert k > q >= 1
    except AssertionError:
        raise PreconditionError("need k > q >= 1, got k={}, q={}".format(k, q))

    critical = k_critical_subgraph(graph, k, budget)
    vertices = critical.vertices
    chosen = []

    for i in range(1, k - q + 1):
        vertex = vertices[i - 1]
        candidates = sorted(
            (e for e in critical.edges if e[0] == vertex and e[1] - e[0] >= q),
            key=lambda e: e[1],
        )
        needed = k - i - q + 1

        try:
            assert len(candidates) >= needed
        except AssertionError:
            raise OrdConflictError(
                "vertex {} has {} long edges, expected {}".format(
                    vertex, len(candidates), needed
                )
            )

        chosen.extend(candidates[:needed])

    taken = set(chosen)

    def is_extra(edge):
        return edge not in taken and edge[1] - edge[0] >= q - 1

    first = vertices[0]
    extra = next(
        itertools.chain(
            (e for e in critical.edges if e[0] == first and is_extra(e)),
            (e for e in critical.edges if is_extra(e)),
            (e for e in graph.edges if is_extra(e)),
        ),
        None,
    )

    return tuple(chosen), extra


def _check_edge_set(graph, edges):
    """Sorted distinct edges, all in G and at least one."""
    edges = sorted(set(tuple(edge) for edge in edges))
    known = set(graph.edges)

    try:
        assert edges
        assert all(edge in known for edge in edges)
    except AssertionError:
        raise PreconditionError("F must be a nonempty set of edges of G")

    return edges


def independent_set_witness(graph, p, edges):
    """Explain why F is independent in M_p(G) for M = (+,0,0,-).

    With x the rightmost left endpoint and y the leftmost right
    endpoint in F, the witness is [min(x, y), x] when p >= 1 and
    [x, y] when p <= 0 and x - y <= p - 1; otherwise (x, y) is itself
    a short edge of F and [y + p - 1, x - p + 1] lies inside every
    other span.

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            The ordered graph.
        p (int): The threshold.
        edges (iterable): The edge set F.

    Returns:
        :class:`ordconflict.models.interval_witness.IntervalWitness`:
            The witness.

    Raises:
        :class:`ordconflict.exceptions.PreconditionError`: F is empty
            or not a subset of E(G).
        :class:`ordconflict.exceptions.NotIndependentError`: Two edges
            of F conflict; the error carries the first such pair.
    """
    edges = _check_edge_set(graph, edges)
    spec = ConflictSpec(ARCH_MATRIX, p)

    for e1, e2 in itertools.combinations(edges, 2):
        if is_conflicting(e1, e2, spec):
            raise NotIndependentError(
                "edges {} and {} conflict".format(e1, e2), (e1, e2)
            )

    x = max(u for u, _ in edges)
    y = min(v for _, v in edges)

    if x - y <= p - 1:
        if p >= 1:
            return IntervalWitness(MEETS_ALL_SPANS, p, (min(x, y), x))

        return IntervalWitness(CONTAINED_IN_ALL_SPANS, p, (x, y))

    return IntervalWitness(
        SHORT_EDGE_EXCEPTION,
        p,
        (y + p - 1, x - p + 1),
        exceptional_edge=(x, y),
    )


def verify_interval_witness(graph, p, edges, witness):
    """Check a claimed witness against its defining inequalities.

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            The ordered graph.
        p (int): The threshold.
        edges (iterable): The edge set F.
        witness (:class:`ordconflict.models.interval_witness.IntervalWitness`):
            The claimed witness.

    Returns:
        bool: True iff the witness proves F independent in M_p(G).
    """
    edges = _check_edge_set(graph, edges)
    low, high = witness.interval

    if witness.p != p:
        return False

    if witness.kind == MEETS_ALL_SPANS:
        return (
            p >= 1
            and high - low <= p - 1
            and all(u <= high and v >= low for u, v in edges)
        )

    if witness.kind == CONTAINED_IN_ALL_SPANS:
        return (
            p <= 0
            and high - low >= -p + 1
            and all(u <= low and v >= high for u, v in edges)
        )

    x, y = witness.exceptional_edge

    return (
        p <= -1
        and (x, y) in edges
        and y - x <= -p
        and low <= y + p - 1
        and high >= x - p + 1
        and all(u <= low and v >= high for u, v in edges if (u, v) != (x, y))
    )


def layout_positions(graph, coloring, p):
    """Coordinates of the interval layout of a p-almost coloring.

    With t + 1 colors, the vertices of color i and then the i-th block
    of p removed vertices fill consecutive positions for i < t; the
    last color class comes last.

    Args:
        graph (:class:`networkx.Graph`): The unordered graph F.
        coloring (:class:`ordconflict.models.p_almost_coloring.PAlmostColoring`):
            A p-almost (t + 1)-coloring of F.
        p (int): The threshold, at least 0.

    Returns:
        dict: Maps every node of F to a position in 1, ..., n.

    Raises:
        :class:`ordconflict.exceptions.PreconditionError`: The coloring
            is not a valid p-almost coloring of F.
    """
    t = coloring.colors - 1

    try:
        assert p >= 0
        assert coloring.is_valid_for(graph)
        assert len(coloring.removed) <= p * t
    except AssertionError:
        raise PreconditionError(
            "not a {}-almost {}-coloring of the graph".format(
                p, coloring.colors
            )
        )

    order = {node: index for index, node in enumerate(graph.nodes())}
    classes = [
        sorted(
            (v for v, c in coloring.coloring.items() if c == color),
            key=order.get,
        )
        for color in range(coloring.colors)
    ]
    removed = sorted(coloring.removed, key=order.get)
    parts = [removed[i * p : (i + 1) * p] for i in range(t)]
    sequence = []

    for i in range(t):
        sequence.extend(classes[i])
        sequence.extend(parts[i])

    sequence.extend(classes[t])

    return {node: position + 1 for position, node in enumerate(sequence)}


def coloring_to_embedding(graph, coloring, p, manager=None):
    """Embed F so that M_p(G) has clique number at most t.

    Args:
        graph (:class:`networkx.Graph`): The unordered graph F.
        coloring (:class:`ordconflict.models.p_almost_coloring.PAlmostColoring`):
            A p-almost (t + 1)-coloring of F.
        p (int): The threshold, at least 0.
        manager (:class:`ordconflict.models.ordered_graph.OrderedGraphManager`, optional):
            The manager to attach to the result.

    Returns:
        :class:`ordconflict.models.ordered_graph.OrderedGraph`: F laid
            out on [n] by :func:`layout_positions`.
    """
    positions = layout_positions(graph, coloring, p)

    return from_networkx(
        graph, sorted(positions, key=positions.get), manager=manager
    )


def embedding_to_coloring(graph, p):
    """Read a p-almost (t + 1)-coloring off an embedding.

    t is the clique number of M_p(G) for M = (+,0,0,-). Each chain
    level of the conflict order is independent and so has an interval
    witness; vertices inside a witness interval are removed and every
    other vertex is colored by how many intervals lie to its left.

    Args:
        graph (:class:`ordconflict.models.ordered_graph.OrderedGraph`):
            The ordered graph G.
        p (int): The threshold, at least 0.

    Returns:
        :class:`ordconflict.models.p_almost_coloring.PAlmostColoring`:
            A coloring with t + 1 colors and at most p t removed
            vertices.

    Raises:
        :class:`ordconflict.exceptions.PreconditionError`: p < 0.
    """
    try:
        assert p >= 0
    except AssertionError:
        raise PreconditionError("embedding_to_coloring needs p >= 0")

    if not graph.edges:
        return PAlmostColoring(p, 1, (), {v: 0 for v in graph.vertices})

    levels = chain_levels(graph, p)
    t = max(levels.values())
    intervals = []

    # Doubled coordinates keep the p = 0 cuts between integers
    for level in range(1, t + 1):
        layer = [edge for edge in graph.edges if levels[edge] == level]
        low, high = independent_set_witness(graph, p, layer).interval

        if p >= 1:
            intervals.append((2 * low, 2 * high))
        else:
            intervals.append((2 * low + 1, 2 * low + 1))

    removed = [
        v
        for v in graph.vertices
        if any(a <= 2 * v <= b for a, b in intervals)
    ]
    raw = {
        v: sum(1 for _, b in intervals if b < 2 * v)
        for v in graph.vertices
        if v not in removed
    }
    compressed = {c: i for i, c in enumerate(sorted(set(raw.values())))}

    return PAlmostColoring(
        p, t + 1, removed, {v: compressed[c] for v, c in raw.items()}
    )


def is_p_almost_colorable(graph, p, t, budget=None):
    """Search for a p-almost t-coloring by brute force.

    Removal sets are tried by size, then in node order.

    Args:
        graph (:class:`networkx.Graph`): The unordered graph F.
        p (int): The removal rate, at least 0.
        t (int): The number of colors, at least 1.
        budget (:class:`ordconflict.solvers.SolveBudget`, optional):
            Limits for each coloring search.

    Returns:
        :class:`ordconflict.models.p_almost_coloring.PAlmostColoring`:
            The first coloring found, or None.
    """
    try:
        assert p >= 0 and t >= 1
    except AssertionError:
        raise PreconditionError("need p >= 0 and t >= 1")

    nodes = list(graph.nodes())
    limit = min(p * (t - 1), len(nodes))

    for size in range(limit + 1):
        for removed in itertools.combinations(nodes, size):
            dropped = set(removed)
            rest = [v for v in nodes if v not in dropped]
            colors = optimal_coloring(
                BitsetGraph.from_edges(
                    rest,
                    [
                        (a, b)
                        for a, b in graph.edges()
                        if a not in dropped and b not in dropped
                    ],
                ),
                budget,
            )

            if not colors or max(colors) < t:
                return PAlmostColoring(p, t, removed, dict(zip(rest, colors)))

    return None
