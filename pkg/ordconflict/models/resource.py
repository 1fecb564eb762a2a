"""Contains base classes for models and related classes."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import json
import logging
from ordconflict.exceptions import OrdConflictError

logger = logging.getLogger(__name__)


class Model(object):
    """Base class for representing a model.

    Models are immutable values once constructed. Subclasses implement
    :meth:`to_dict` and compare equal when their dictionaries do.

    Attributes:
        manager (:class:`ordconflict.models.resource.ModelManager`):
            The manager which spawned this model instance, or None for
            models built directly by the algorithm modules.
    """

    def __init__(self, manager=None):
        """Initialize the model.

        Args:
            manager (:class:`ordconflict.models.resource.ModelManager`, optional):
                The manager which spawned this model instance.
        """
        self.manager = manager

    def to_dict(self):
        """Return the JSON-compatible document for this model.

        Returns:
            dict: The document.
        """
        raise NotImplementedError

    def __eq__(self, other):
        """Models are equal when their documents are."""
        if type(self) is not type(other):
            return NotImplemented

        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        """Negation of :meth:`__eq__`."""
        result = self.__eq__(other)

        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        """Hash the canonical JSON of the document."""
        return hash(json.dumps(self.to_dict(), sort_keys=True))


class ModelManager(object):
    """Base class for a model manager.

    Attributes:
        _client (:class:`ordconflict.client.Client`): The client whose
            budget and seed this manager uses.
        model (:class:`ordconflict.models.resource.Model`): The model
            being used.
        error_class (type): The exception raised when a document fails
            validation.
    """

    model = Model
    error_class = OrdConflictError

    def __init__(self, _client=None):
        """Save the client so we can use its configuration.

        Args:
            _client (:class:`ordconflict.client.Client`, optional): The
                client whose budget and seed this manager uses.
        """
        self._client = _client

    def data_to_model_instance(self, data):
        """Convert a document to a model.

        Args:
            data (dict): The document.

        Returns:
            :class:`ordconflict.models.resource.Model`:
                A :class:`ordconflict.models.resource.Model` subclass
                instance representing the document.
        """
        raise NotImplementedError

    def loads(self, text, source="<string>"):
        """Parse a JSON document into a model.

        Args:
            text (str): The JSON text.
            source (str, optional): Where the text came from, for error
                messages.

        Returns:
            :class:`ordconflict.models.resource.Model`:
                The parsed model instance.

        Raises:
            :attr:`error_class`: The text is not valid JSON.
        """
        try:
            data = json.loads(text)
        except ValueError as error:
            raise self.error_class(
                "{source} is not valid JSON: {error}".format(
                    source=source, error=error
                )
            )

        return self.data_to_model_instance(data)

    def load(self, path):
        """Read a JSON file into a model.

        Args:
            path (str): The path of the file.

        Returns:
            :class:`ordconflict.models.resource.Model`:
                The parsed model instance.
        """
        logger.debug("Loading %s from %s", self.model.__name__, path)

        with open(path) as f:
            return self.loads(f.read(), source=path)

    def dumps(self, instance):
        """Serialize a model as compact JSON.

        Args:
            instance (:class:`ordconflict.models.resource.Model`): The
                model to serialize.

        Returns:
            str: The JSON text.
        """
        return json.dumps(instance.to_dict(), sort_keys=True)

    def dump(self, instance, path):
        """Write a model to a JSON file.

        Args:
            instance (:class:`ordconflict.models.resource.Model`): The
                model to write.
            path (str): The path of the file.
        """
        with open(path, "w") as f:
            f.write(self.dumps(instance))
            f.write("\n")

    @classmethod
    def validate_document_keys(cls, data, required_keys, source):
        """Validates that a document has the keys a model needs.

        Args:
            data (dict): The document.
            required_keys (tuple): The keys that must be present.
            source (str): A description of the document for messages.

        Raises:
            :attr:`error_class`: The document is not a dictionary or
                lacks a key.
        """
        try:
            assert isinstance(data, dict)
        except AssertionError:
            raise cls.error_class(
                "{source} must be a JSON object".format(source=source)
            )

        missing = [key for key in required_keys if key not in data]

        try:
            assert not missing
        except AssertionError:
            raise cls.error_class(
                "{source} is missing {keys}".format(
                    source=source, keys=", ".join(missing)
                )
            )
