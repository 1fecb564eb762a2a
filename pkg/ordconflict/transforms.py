"""Algebraic reductions on conflict matrices.

The two reductions :func:`swap_edge_roles` and :func:`reverse_negate`
preserve the independence and clique numbers of conflict graphs, so
every single-row translation-invariant sign matrix reduces to one of
ten catalog representatives. :func:`complement_spec` turns a single row
into a two-row matrix whose conflict graph is the complement.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import collections
import logging
from ordconflict.constants import (
    COMPLEMENT_EXCHANGE,
    GENERAL_INVARIANT,
    NEST_LIKE,
    NEST_MATRIX,
    NON_INVARIANT_MIXED,
    NON_INVARIANT_NEGATIVE,
    NON_INVARIANT_POSITIVE,
    REVERSE_NEGATE,
    SHIFT_MATRIX,
    SWAP_EDGE_ROLES,
    TABLE_ROW,
    ZERO,
)
from ordconflict.exceptions import PreconditionError
from ordconflict.models.conflict_spec import ConflictSpec, normalize_matrix
from ordconflict.models.matrix_class import MatrixClass

logger = logging.getLogger(__name__)


# Starred representative of each catalog row of single-row matrices
ROW_REPRESENTATIVES = collections.OrderedDict(
    [
        (2, (0, 0, 0, 0)),
        (3, (1, 0, -1, 0)),
        (4, (-1, 1, 0, 0)),
        (5, (1, -1, 0, 0)),
        (6, (-1, 1, -1, 1)),
        (7, (1, -1, 1, -1)),
        (8, (1, -1, -1, 1)),
        (9, (1, 1, -1, -1)),
        (10, (1, 0, 0, -1)),
        (11, (-1, 0, 0, 1)),
    ]
)

SHIFT_ROW = 12
NEST_ROW = 13


# A nest spec at p and a shift spec at 1 - p have complementary
# conflict graphs
ComplementPair = collections.namedtuple("ComplementPair", ["shift", "nest"])


def _rowset(matrix):
    """The distinct rows of a matrix in sorted order."""
    return tuple(sorted(set(tuple(row) for row in matrix)))


def _catalog():
    """Map row sets of catalog matrices to (tag, row, representative)."""
    catalog = {}

    for row, representative in ROW_REPRESENTATIVES.items():
        tag = ZERO if row == 2 else TABLE_ROW
        catalog[(representative,)] = (tag, row, (representative,))

    catalog[_rowset(SHIFT_MATRIX)] = (NEST_LIKE, SHIFT_ROW, SHIFT_MATRIX)
    catalog[_rowset(NEST_MATRIX)] = (NEST_LIKE, NEST_ROW, NEST_MATRIX)

    return catalog


_CATALOG = _catalog()


def is_translation_invariant(matrix):
    """Whether every row of M sums to zero.

    Args:
        matrix (iterable): The rows of M.

    Returns:
        bool: True iff M1 = 0, i.e. conflicts depend only on relative
            positions.
    """
    return all(sum(row) == 0 for row in normalize_matrix(matrix))


def swap_edge_roles(matrix):
    """Permute the columns of M as (3, 4, 1, 2).

    The conflict relation is symmetric in the two edges, so the result
    defines exactly the same conflict graphs.

    Args:
        matrix (iterable): The rows of M.

    Returns:
        tuple: The permuted matrix.
    """
    return tuple(
        (row[2], row[3], row[0], row[1]) for row in normalize_matrix(matrix)
    )


def reverse_negate(matrix):
    """Reverse the columns of M, then negate every entry.

    M_p(G) is isomorphic to the result's conflict graph on -G under
    (u, v) -> (-v, -u).

    Args:
        matrix (iterable): The rows of M.

    Returns:
        tuple: The matrix -M with reversed columns.
    """
    return tuple(
        tuple(-entry for entry in reversed(row))
        for row in normalize_matrix(matrix)
    )


_TRANSFORMS = {
    SWAP_EDGE_ROLES: swap_edge_roles,
    REVERSE_NEGATE: reverse_negate,
}

# Candidate traces, smallest first: by length, then with a swap
# preferred over a reverse-negate
_TRACES = (
    (),
    (SWAP_EDGE_ROLES,),
    (REVERSE_NEGATE,),
    (SWAP_EDGE_ROLES, REVERSE_NEGATE),
    (REVERSE_NEGATE, SWAP_EDGE_ROLES),
)


def apply_trace(matrix, trace):
    """Apply transforms in order.

    Args:
        matrix (iterable): The rows of M.
        trace (iterable): Transform names.

    Returns:
        tuple: The transformed matrix.
    """
    matrix = normalize_matrix(matrix)

    for name in trace:
        matrix = _TRANSFORMS[name](matrix)

    return matrix


def complement_spec(matrix, p):
    """Return the two-row matrix whose conflict graph is the complement.

    Args:
        matrix (iterable): A single row (m1, m2, m3, m4).
        p (int): The threshold.

    Returns:
        tuple: (M', 1 - p) with M' = ((-m1, -m2, -m3, -m4),
            (-m3, -m4, -m1, -m2)).

    Raises:
        :class:`ordconflict.exceptions.PreconditionError`: M does not
            have exactly one row.
    """
    matrix = normalize_matrix(matrix)

    try:
        assert len(matrix) == 1
    except AssertionError:
        raise PreconditionError(
            "complement_spec needs a single row, got {}".format(len(matrix))
        )

    m1, m2, m3, m4 = matrix[0]

    return ((-m1, -m2, -m3, -m4), (-m3, -m4, -m1, -m2)), 1 - p


def nest_shift_pair(p):
    """Return the shift spec at 1 - p and the nest spec at p.

    Args:
        p (int): The nest threshold.

    Returns:
        :class:`ComplementPair`: The pair (shift, nest) of
            :class:`ordconflict.models.conflict_spec.ConflictSpec`.
    """
    return ComplementPair(
        shift=ConflictSpec(SHIFT_MATRIX, 1 - p),
        nest=ConflictSpec(NEST_MATRIX, p),
    )


def theorem1_conditions(row, p):
    """Which of the four general cases hold for a single invariant row.

    The cases, with s = m2 + m4:

    * "i": s >= max(p, 0), so A = 1 and W = C(k, 2).
    * "ii": m1 + m2 = m3 + m4 = 0, m2 <= 0, m4 <= 0 and p > s, so
      A = C(k, 2) and W = 1.
    * "iii": s > 0, or s = 0 with m1 and m2 nonzero, so A = 1.
    * "iv": m2 < 0 and m4 < 0, so W = 1.

    Args:
        row (tuple): (m1, m2, m3, m4) with zero sum.
        p (int): The threshold.

    Returns:
        tuple: The names of the cases that hold.
    """
    m1, m2, m3, m4 = row
    s = m2 + m4
    conditions = []

    if s >= max(p, 0):
        conditions.append("i")

    if m1 + m2 == 0 and m3 + m4 == 0 and m2 <= 0 and m4 <= 0 and p > s:
        conditions.append("ii")

    if s > 0 or (s == 0 and m1 != 0 and m2 != 0):
        conditions.append("iii")

    if m2 < 0 and m4 < 0:
        conditions.append("iv")

    return tuple(conditions)


def classify_matrix(matrix, p):
    """Place a matrix in the catalog of closed forms.

    Row order and repeated rows do not change the conflict relation, so
    classification works on the set of distinct rows.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.

    Returns:
        :class:`ordconflict.models.matrix_class.MatrixClass`: The
            classification.
    """
    matrix = normalize_matrix(matrix)

    # Non-invariant matrices are tagged by the signs of the row sums
    if not is_translation_invariant(matrix):
        sums = [sum(row) for row in matrix]

        if all(total > 0 for total in sums):
            tag = NON_INVARIANT_POSITIVE
        elif all(total < 0 for total in sums):
            tag = NON_INVARIANT_NEGATIVE
        else:
            tag = NON_INVARIANT_MIXED

        return MatrixClass(matrix, p, tag, representative=matrix)

    rows = _rowset(matrix)
    conditions = theorem1_conditions(rows[0], p) if len(rows) == 1 else ()

    # Catalog matrices, reached by the smallest trace
    for trace in _TRACES:
        candidate = _rowset(apply_trace(rows, trace))

        if candidate in _CATALOG:
            tag, row, representative = _CATALOG[candidate]

            logger.debug(
                "Classified %s as row %d via %s", matrix, row, list(trace)
            )

            return MatrixClass(
                matrix,
                p,
                tag,
                representative=representative,
                trace=trace,
                row=row,
                conditions=conditions,
            )

    # Two rows r and swap(r) form the complement of the single row -r
    if len(rows) == 2 and swap_edge_roles(rows[:1])[0] == rows[1]:
        partner = (tuple(-entry for entry in rows[0]),)

        return MatrixClass(
            matrix,
            p,
            COMPLEMENT_EXCHANGE,
            representative=rows,
            partner=partner,
        )

    return MatrixClass(
        matrix,
        p,
        GENERAL_INVARIANT,
        representative=matrix,
        conditions=conditions,
    )
