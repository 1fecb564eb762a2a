"""Classes for verification report model and manager."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import json
import logging
from ordconflict.constants import FAIL, REPORT_STATUSES
from ordconflict.exceptions import OrdConflictError
from .resource import Model, ModelManager

logger = logging.getLogger(__name__)


class VerifyReport(Model):
    """The outcome of one verified claim.

    Attributes:
        claim_id (str): The claim, for example "table1.row6.W.p=4.k=5".
        status (str): One of pass, fail or partial.
        witness (dict): A JSON-compatible witness (a graph document, an
            edge set, ...) or None. Failed claims always carry one.
        counts (int): The number of instances checked.
        scope (str): What the check covered, for example
            "window [1,7], n <= 5", or None.
        details (dict): Extra JSON-compatible findings.
        runtime_ms (int): Wall-clock time of the check, or None. It is
            only serialized on request so reports are reproducible.
        manager (:class:`ordconflict.models.verify_report.VerifyReportManager`):
            The manager which spawned this report, if any.
    """

    def __init__(
        self,
        claim_id,
        status,
        witness=None,
        counts=0,
        scope=None,
        details=None,
        runtime_ms=None,
        manager=None,
    ):
        """Initialize and check a report.

        Args:
            claim_id (str): The claim.
            status (str): One of pass, fail or partial.
            witness (dict, optional): A JSON-compatible witness.
            counts (int, optional): The number of instances checked.
            scope (str, optional): What the check covered.
            details (dict, optional): Extra findings.
            runtime_ms (int, optional): Wall-clock time of the check.
            manager (:class:`ordconflict.models.verify_report.VerifyReportManager`, optional):
                The manager which spawned this report.

        Raises:
            :class:`ordconflict.exceptions.OrdConflictError`: The status
                is unknown, or the claim failed without a witness.
        """
        # Call the parent constructor
        super(VerifyReport, self).__init__(manager)

        try:
            assert status in REPORT_STATUSES
        except AssertionError:
            raise OrdConflictError("unknown status {!r}".format(status))

        try:
            assert status != FAIL or witness is not None
        except AssertionError:
            raise OrdConflictError(
                "failed claim {} has no witness".format(claim_id)
            )

        self.claim_id = claim_id
        self.status = status
        self.witness = witness
        self.counts = counts
        self.scope = scope
        self.details = details if details is not None else {}
        self.runtime_ms = runtime_ms

    def __str__(self):
        """String representation of the report."""
        return "%s: %s (%d checked)" % (
            self.claim_id,
            self.status,
            self.counts,
        )

    @property
    def failed(self):
        """bool: Whether the claim failed."""
        return self.status == FAIL

    def to_dict(self, include_runtime=False):
        """Return the JSON document of the report.

        Args:
            include_runtime (bool, optional): Whether to add runtime_ms.
                Defaults to False.

        Returns:
            dict: The report document.
        """
        data = {
            "claim_id": self.claim_id,
            "status": self.status,
            "witness": self.witness,
            "counts": self.counts,
            "scope": self.scope,
            "details": self.details,
        }

        if include_runtime:
            data["runtime_ms"] = self.runtime_ms

        return data


class VerifyReportManager(ModelManager):
    """Manager for verification reports.

    Attributes:
        _client (:class:`ordconflict.client.Client`): The client whose
            configuration this manager uses.
        model (:class:`ordconflict.models.resource.Model`): The model of
            the verification report being used.
    """

    model = VerifyReport

    def data_to_model_instance(self, data):
        """Convert a report document to a report.

        Args:
            data (dict): A document written by
                :meth:`ordconflict.models.verify_report.VerifyReport.to_dict`.

        Returns:
            :class:`ordconflict.models.verify_report.VerifyReport`:
                The report.
        """
        self.validate_document_keys(data, ("claim_id", "status"), "report")

        return self.model(
            claim_id=data["claim_id"],
            status=data["status"],
            witness=data.get("witness"),
            counts=data.get("counts", 0),
            scope=data.get("scope"),
            details=data.get("details"),
            runtime_ms=data.get("runtime_ms"),
            manager=self,
        )

    def write_lines(self, reports, stream, include_runtime=False):
        """Write reports as JSON lines, one report per line.

        Args:
            reports (list): The reports, already in claim-id order.
            stream (file): A writable text stream.
            include_runtime (bool, optional): Whether to add runtime_ms.
                Defaults to False.
        """
        for report in reports:
            stream.write(
                json.dumps(
                    report.to_dict(include_runtime=include_runtime),
                    sort_keys=True,
                )
            )
            stream.write("\n")

    def read_lines(self, path):
        """Read a JSON-lines report file.

        Args:
            path (str): The path of the file.

        Returns:
            list: The reports, in file order.
        """
        with open(path) as f:
            return [
                self.loads(line, source=path) for line in f if line.strip()
            ]
