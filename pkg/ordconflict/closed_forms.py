"""Closed forms for A, W, X_ind and X_cli.

A(M, p, k) and W(M, p, k) are the smallest independence and clique
numbers of M_p(G) over ordered graphs G with chromatic number at least
k. X_ind and X_cli are their sup-inverses:

    X_ind(M, p, a) = sup {k : A(M, p, k) <= a}
    X_cli(M, p, w) = sup {k : W(M, p, k) <= w}

Every matrix is first placed in the catalog by
:func:`ordconflict.transforms.classify_matrix`; a :class:`Family` then
holds the piecewise formulas of A and W in k for one (M, p).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import logging
import math
from fractions import Fraction
from ordconflict.constants import (
    COMPLEMENT_EXCHANGE,
    GENERAL_INVARIANT,
    MAX_INVERSION_K,
    NEST_LIKE,
    NON_INVARIANT_MIXED,
    TABLE_ROW,
    ZERO,
)
from ordconflict.exceptions import OrdConflictError
from ordconflict.models.formula_result import FormulaResult
from ordconflict.transforms import NEST_ROW, SHIFT_ROW, classify_matrix

logger = logging.getLogger(__name__)


def binomial2(n):
    """C(n, 2), zero below 2."""
    return n * (n - 1) // 2 if n >= 2 else 0


def ceil_div(numerator, denominator):
    """Ceiling of an integer quotient with a positive denominator."""
    return -(-numerator // denominator)


def f_largest_k(x):
    """Return f(x), the largest k with C(k, 2) <= x.

    Args:
        x (int): At least 1.

    Returns:
        int: f(x) = floor((1 + sqrt(1 + 8x)) / 2).

    Raises:
        ValueError: x < 1.
    """
    if x < 1:
        raise ValueError("f(x) needs x >= 1, got {}".format(x))

    return (1 + math.isqrt(1 + 8 * x)) // 2


def _f0(x):
    """f extended by f(0) = 1."""
    return 1 if x == 0 else f_largest_k(x)


def _one(k):
    """The constant family A = 1 or W = 1."""
    return 1


class Family(object):
    """The formulas of A and W in k for one (M, p).

    ``a`` and ``w`` are callables from k to an int (exact value) or a
    (lower, upper) pair (bounds), or None when no closed form is known.
    The constant 1 is the module function ``_one``, which makes the
    matching X value infinite.

    Attributes:
        provenance (str): The catalog case, for example "table1.row3".
        a: The formula of A.
        w: The formula of W.
    """

    def __init__(self, provenance, a, w):
        self.provenance = provenance
        self.a = a
        self.w = w

    def exchanged(self, provenance):
        """The family of the complement matrix: A and W swap roles."""
        return Family(provenance, self.w, self.a)


def _binomial_k(k):
    return binomial2(k)


def _row3(p):
    if p <= 0:
        return _one, _binomial_k

    return (lambda k: k - 1), (lambda k: ceil_div(k - 1, p))


def _row4(p):
    if p <= 1:
        return _one, _binomial_k

    return _one, (lambda k: 1 if k <= p else 1 + binomial2(k - p + 1))


def _row5(p):
    if p >= 0:
        return _binomial_k, _one

    return (lambda k: 1 if k <= 1 - p else binomial2(k + p)), _one


def _row6(p):
    if p <= 2:
        return _one, _binomial_k

    half = ceil_div(p, 2)

    return _one, (
        lambda k: 1 if k <= half else p % 2 + binomial2(k - half + 1)
    )


def _row7(p):
    # Complement of row 6 at 1 - p
    a, w = _row6(1 - p)

    return w, a


def _row8(p):
    if p <= 0:
        return _one, _binomial_k

    return _one, (lambda k: ceil_div(k - 1, p))


def _row9(p):
    if p <= 0:
        return _one, _binomial_k

    return _one, (lambda k: ceil_div(2 * k - 3, p))


def _row10(p):
    if p >= 1:
        return (
            (lambda k: (k + 1) ** 2 // 4 - 1),
            (lambda k: ceil_div(k - 1, p + 1)),
        )

    return (lambda k: 1 if k <= 1 - p else (k + p) ** 2 // 4), (
        lambda k: k - 1
    )


def _row11(p):
    if p <= 1:
        return _one, _binomial_k

    return _one, (lambda k: 1 if k <= p else binomial2(k - p + 2))


def _shift(p):
    if p >= 1:
        return (lambda k: k - 1), (lambda k: ceil_div(k - 1, p))

    q = 1 - p

    return (
        lambda k: (Fraction(k, 4 * q), ceil_div(k - 1, 2 * q))
    ), (lambda k: 2 * k - 3)


def _nest(p):
    # Complement of the shift matrix at 1 - p
    a, w = _shift(1 - p)

    return w, a


_ROW_FORMULAS = {
    3: _row3,
    4: _row4,
    5: _row5,
    6: _row6,
    7: _row7,
    8: _row8,
    9: _row9,
    10: _row10,
    11: _row11,
    SHIFT_ROW: _shift,
    NEST_ROW: _nest,
}


def family(matrix, p):
    """Return the :class:`Family` of formulas for (M, p).

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.

    Returns:
        :class:`Family`: The formulas, possibly unknown.
    """
    matrix_class = classify_matrix(matrix, p)
    tag = matrix_class.tag

    if tag.startswith("non-invariant"):
        a = None if tag == NON_INVARIANT_MIXED else _one

        return Family("theorem1.noninvariant", a, _one)

    if tag == ZERO:
        if p <= 0:
            return Family("table1.row2", _one, _binomial_k)

        return Family("table1.row2", _binomial_k, _one)

    if tag in (TABLE_ROW, NEST_LIKE):
        a, w = _ROW_FORMULAS[matrix_class.row](p)

        return Family("table1.row{}".format(matrix_class.row), a, w)

    if tag == COMPLEMENT_EXCHANGE:
        partner = family(matrix_class.partner, 1 - p)

        return partner.exchanged(
            "complement-exchange." + partner.provenance
        )

    # General invariant matrices: only the coarse single-row cases
    conditions = matrix_class.conditions
    a = w = None

    if "i" in conditions or "iii" in conditions:
        a = _one
    elif "ii" in conditions:
        a = _binomial_k

    if "ii" in conditions or "iv" in conditions:
        w = _one
    elif "i" in conditions:
        w = _binomial_k

    cases = [case for case in ("i", "ii", "iii", "iv") if case in conditions]
    provenance = (
        "theorem1.({})".format(",".join(cases)) if cases else GENERAL_INVARIANT
    )

    return Family(provenance, a, w)


def _result(formula, k, provenance):
    """Wrap the value of a formula at k as a FormulaResult."""
    if formula is None:
        return FormulaResult.unknown(provenance)

    value = formula(k)

    if isinstance(value, tuple):
        return FormulaResult.bounds(value[0], value[1], provenance)

    # A and W lie between a single edge and all of K_k
    try:
        assert 1 <= value <= binomial2(k)
    except AssertionError:
        raise OrdConflictError(
            "{} gives {} at k = {}, outside [1, {}]".format(
                provenance, value, k, binomial2(k)
            )
        )

    return FormulaResult.exact(value, provenance)


def _check_k(k):
    if k < 2:
        raise ValueError("k must be at least 2, got {}".format(k))


def closed_form_A(matrix, p, k):
    """Return A(M, p, k).

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        k (int): The chromatic number, at least 2.

    Returns:
        :class:`ordconflict.models.formula_result.FormulaResult`: The
            value, bounds or unknown.

    Raises:
        ValueError: k < 2.
    """
    _check_k(k)
    formulas = family(matrix, p)

    return _result(formulas.a, k, formulas.provenance)


def closed_form_W(matrix, p, k):
    """Return W(M, p, k).

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        k (int): The chromatic number, at least 2.

    Returns:
        :class:`ordconflict.models.formula_result.FormulaResult`: The
            value, bounds or unknown.

    Raises:
        ValueError: k < 2.
    """
    _check_k(k)
    formulas = family(matrix, p)

    return _result(formulas.w, k, formulas.provenance)


def _sup_k(value, bound):
    """Largest k >= 2 with value(k) <= bound for nondecreasing value.

    Doubles k until the value exceeds the bound, then bisects.
    """
    low = 2

    if value(low) > bound:
        return 1

    high = 4

    while value(high) <= bound:
        low = high
        high *= 2

        if high > MAX_INVERSION_K:
            raise OrdConflictError(
                "formula stays below {} beyond k = 2^62".format(bound)
            )

    # value(low) <= bound < value(high)
    while high - low > 1:
        middle = (low + high) // 2

        if value(middle) <= bound:
            low = middle
        else:
            high = middle

    return low


def _invert(formula, bound, provenance):
    """The sup-inverse of an A or W formula at a bound."""
    if formula is None:
        return FormulaResult.unknown(provenance)

    if formula is _one:
        return FormulaResult.infinite(provenance)

    def smallest(k):
        value = formula(k)

        return value[0] if isinstance(value, tuple) else value

    def largest(k):
        value = formula(k)

        return value[1] if isinstance(value, tuple) else value

    # Small values give large X: the lower formula bounds X from above
    at_least = _sup_k(largest, bound)
    at_most = _sup_k(smallest, bound)

    if at_least == at_most:
        return FormulaResult.exact(at_least, provenance)

    return FormulaResult.bounds(at_least, at_most, provenance)


def _check_bound(bound, name):
    if bound < 1:
        raise ValueError("{} must be at least 1, got {}".format(name, bound))


def closed_form_X_ind(matrix, p, a):
    """Return X_ind(M, p, a) by inverting A.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        a (int): The independence bound, at least 1.

    Returns:
        :class:`ordconflict.models.formula_result.FormulaResult`: The
            value, bounds, infinite or unknown.

    Raises:
        ValueError: a < 1.
    """
    _check_bound(a, "a")
    formulas = family(matrix, p)

    return _invert(formulas.a, a, formulas.provenance)


def closed_form_X_cli(matrix, p, w):
    """Return X_cli(M, p, w) by inverting W.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        w (int): The clique bound, at least 1.

    Returns:
        :class:`ordconflict.models.formula_result.FormulaResult`: The
            value, bounds, infinite or unknown.

    Raises:
        ValueError: w < 1.
    """
    _check_bound(w, "w")
    formulas = family(matrix, p)

    return _invert(formulas.w, w, formulas.provenance)


def _table2_ind(row, p, a):
    """Direct X_ind expression per catalog row; None means infinite."""
    if row == 2:
        return None if p <= 0 else f_largest_k(a)

    if row == 3:
        return None if p <= 0 else a + 1

    if row == 5:
        return f_largest_k(a) if p >= 0 else f_largest_k(a) - p

    if row == 7:
        if p >= -1:
            return f_largest_k(a)

        return _f0(a - (1 - p) % 2) + ceil_div(-(p + 1), 2)

    if row == 10:
        if p >= 1:
            return math.isqrt(4 * a + 7) - 1

        return math.isqrt(4 * a + 3) - p

    if row == SHIFT_ROW:
        if p >= 1:
            return a + 1

        return (2 * (1 - p) * a + 1, 4 * (1 - p) * a)

    if row == NEST_ROW:
        if p <= 0:
            return (1 - p) * a + 1

        return (a + 3) // 2

    # Rows 4, 6, 8, 9 and 11 have A = 1
    return None


def _table2_cli(row, p, w):
    """Direct X_cli expression per catalog row; None means infinite."""
    if row == 2:
        return f_largest_k(w) if p <= 0 else None

    if row in (3, 8):
        return f_largest_k(w) if p <= 0 else p * w + 1

    if row == 4:
        return f_largest_k(w) if p <= 1 else _f0(w - 1) + p - 1

    if row == 6:
        if p <= 2:
            return f_largest_k(w)

        return _f0(w - p % 2) + ceil_div(p - 2, 2)

    if row == 9:
        return f_largest_k(w) if p <= 0 else (p * w + 3) // 2

    if row == 10:
        return (p + 1) * w + 1 if p >= 0 else w + 1

    if row == 11:
        return f_largest_k(w) if p <= 1 else f_largest_k(w) + p - 2

    if row == SHIFT_ROW:
        return (w + 3) // 2 if p <= 0 else p * w + 1

    if row == NEST_ROW:
        if p <= 0:
            return w + 1

        return (2 * p * w + 1, 4 * p * w)

    # Rows 5 and 7 have W = 1
    return None


def _table2(matrix, p, bound, expression):
    matrix_class = classify_matrix(matrix, p)

    if matrix_class.row is None:
        return None

    provenance = "table2.row{}".format(matrix_class.row)
    value = expression(matrix_class.row, p, bound)

    if value is None:
        return FormulaResult.infinite(provenance)

    if isinstance(value, tuple):
        return FormulaResult.bounds(value[0], value[1], provenance)

    return FormulaResult.exact(value, provenance)


def table2_X_ind(matrix, p, a):
    """The directly coded X_ind expression for a catalog matrix.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        a (int): The independence bound, at least 1.

    Returns:
        :class:`ordconflict.models.formula_result.FormulaResult`: The
            table value, or None for matrices outside the catalog.
    """
    _check_bound(a, "a")

    return _table2(matrix, p, a, _table2_ind)


def table2_X_cli(matrix, p, w):
    """The directly coded X_cli expression for a catalog matrix.

    Args:
        matrix (iterable): The rows of M.
        p (int): The threshold.
        w (int): The clique bound, at least 1.

    Returns:
        :class:`ordconflict.models.formula_result.FormulaResult`: The
            table value, or None for matrices outside the catalog.
    """
    _check_bound(w, "w")

    return _table2(matrix, p, w, _table2_cli)
