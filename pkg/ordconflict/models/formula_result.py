"""Classes for closed-form result model and manager."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from fractions import Fraction
from ordconflict.constants import (
    BOUNDS,
    EXACT,
    FORMULA_KINDS,
    INFINITE,
    UNKNOWN,
)
from ordconflict.exceptions import OrdConflictError
from .resource import Model, ModelManager


def _to_json_number(value):
    """Integers stay integers; other fractions become "p/q" strings."""
    if value is None:
        return None

    value = Fraction(value)

    if value.denominator == 1:
        return value.numerator

    return str(value)


class FormulaResult(Model):
    """The value of A, W, X_ind or X_cli for one query.

    Attributes:
        kind (str): One of exact, bounds, infinite or unknown.
        value (int): The exact value, or None.
        lower (:class:`fractions.Fraction`): The lower bound of a bounds
            result, or None.
        upper (:class:`fractions.Fraction`): The upper bound of a bounds
            result, or None.
        provenance (str): The closed-form case that produced the result,
            for example "table1.row3".
        manager (:class:`ordconflict.models.formula_result.FormulaResultManager`):
            The manager which spawned this result, if any.
    """

    def __init__(
        self,
        kind,
        provenance,
        value=None,
        lower=None,
        upper=None,
        manager=None,
    ):
        """Initialize and check a result.

        Args:
            kind (str): One of exact, bounds, infinite or unknown.
            provenance (str): The case that produced the result.
            value (int, optional): The exact value.
            lower (int or :class:`fractions.Fraction`, optional): The
                lower bound.
            upper (int or :class:`fractions.Fraction`, optional): The
                upper bound.
            manager (:class:`ordconflict.models.formula_result.FormulaResultManager`, optional):
                The manager which spawned this result.

        Raises:
            :class:`ordconflict.exceptions.OrdConflictError`: The fields
                do not fit the kind.
        """
        # Call the parent constructor
        super(FormulaResult, self).__init__(manager)

        try:
            assert kind in FORMULA_KINDS
            assert (value is not None) == (kind == EXACT)
            assert (lower is not None) == (upper is not None) == (
                kind == BOUNDS
            )
        except AssertionError:
            raise OrdConflictError(
                "malformed {} result from {}".format(kind, provenance)
            )

        if kind == BOUNDS:
            lower = Fraction(lower)
            upper = Fraction(upper)

            try:
                assert lower <= upper
            except AssertionError:
                raise OrdConflictError(
                    "bounds [{}, {}] from {} are inverted".format(
                        lower, upper, provenance
                    )
                )

        self.kind = kind
        self.provenance = provenance
        self.value = value
        self.lower = lower
        self.upper = upper

    @classmethod
    def exact(cls, value, provenance):
        """Build an exact result."""
        return cls(EXACT, provenance, value=int(value))

    @classmethod
    def bounds(cls, lower, upper, provenance):
        """Build a two-sided bound."""
        return cls(BOUNDS, provenance, lower=lower, upper=upper)

    @classmethod
    def infinite(cls, provenance):
        """Build an unbounded result."""
        return cls(INFINITE, provenance)

    @classmethod
    def unknown(cls, provenance):
        """Build a result for a case with no proven closed form."""
        return cls(UNKNOWN, provenance)

    def __str__(self):
        """String representation of the result."""
        if self.kind == EXACT:
            return "%d (%s)" % (self.value, self.provenance)

        if self.kind == BOUNDS:
            return "[%s, %s] (%s)" % (self.lower, self.upper, self.provenance)

        return "%s (%s)" % (self.kind, self.provenance)

    def __repr__(self):
        """Unambiguous representation of the result."""
        return "FormulaResult(%r)" % self.to_dict()

    def admits(self, observed):
        """Whether an observed value is consistent with this result.

        Args:
            observed (int): A value computed by a solver.

        Returns:
            bool: Equality for exact results, containment for bounds,
                and True for unknown results. An integer never matches
                an infinite result.
        """
        if self.kind == EXACT:
            return observed == self.value

        if self.kind == BOUNDS:
            return self.lower <= observed <= self.upper

        return self.kind != INFINITE

    def lowest(self):
        """Return the smallest value this result allows, or None.

        Returns:
            :class:`fractions.Fraction` or int: The exact value or the
                lower bound; None for infinite and unknown results.
        """
        if self.kind == EXACT:
            return self.value

        if self.kind == BOUNDS:
            return self.lower

        return None

    def to_dict(self):
        """Return the JSON document of the result.

        Returns:
            dict: The kind and provenance, plus the value for exact
                results and the bounds for bounds results. Non-integer
                bounds are written as "p/q" strings.
        """
        data = {"kind": self.kind, "provenance": self.provenance}

        if self.kind == EXACT:
            data["value"] = self.value
        elif self.kind == BOUNDS:
            data["lower"] = _to_json_number(self.lower)
            data["upper"] = _to_json_number(self.upper)

        return data


class FormulaResultManager(ModelManager):
    """Manager for closed-form results.

    Attributes:
        _client (:class:`ordconflict.client.Client`): The client whose
            configuration this manager uses.
        model (:class:`ordconflict.models.resource.Model`): The model of
            the formula result being used.
    """

    model = FormulaResult

    def evaluate(self, spec, what, bound):
        """Evaluate one closed form.

        Args:
            spec (:class:`ordconflict.models.conflict_spec.ConflictSpec`):
                The matrix and threshold.
            what (str): One of A, W, Xind or Xcli.
            bound (int): k for A and W, a for Xind and w for Xcli.

        Returns:
            :class:`ordconflict.models.formula_result.FormulaResult`:
                The result.

        Raises:
            ValueError: ``what`` is not a known quantity.
        """
        from ordconflict import closed_forms

        evaluators = {
            "A": closed_forms.closed_form_A,
            "W": closed_forms.closed_form_W,
            "Xind": closed_forms.closed_form_X_ind,
            "Xcli": closed_forms.closed_form_X_cli,
        }

        try:
            evaluator = evaluators[what]
        except KeyError:
            raise ValueError(
                "what must be one of A, W, Xind or Xcli, not {!r}".format(what)
            )

        result = evaluator(spec.matrix, spec.p, bound)
        result.manager = self

        return result

    def data_to_model_instance(self, data):
        """Convert a result document to a formula result.

        Args:
            data (dict): A document written by
                :meth:`ordconflict.models.formula_result.FormulaResult.to_dict`.

        Returns:
            :class:`ordconflict.models.formula_result.FormulaResult`:
                The result.
        """
        self.validate_document_keys(data, ("kind", "provenance"), "result")

        lower = data.get("lower")
        upper = data.get("upper")

        return self.model(
            data["kind"],
            data["provenance"],
            value=data.get("value"),
            lower=None if lower is None else Fraction(lower),
            upper=None if upper is None else Fraction(upper),
            manager=self,
        )
