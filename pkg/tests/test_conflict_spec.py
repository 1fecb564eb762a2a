"""Tests for conflict specs and their manager."""

import pytest
from ordconflict.constants import NEST_MATRIX
from ordconflict.exceptions import InvalidSpecError
from ordconflict.models.conflict_spec import ConflictSpec


def test_spec_basics():
    spec = ConflictSpec([[1, 0, -1, 0]], 2)

    assert spec.matrix == ((1, 0, -1, 0),)
    assert spec.s == 1
    assert spec.is_sign_matrix
    assert str(spec) == "M=(1,0,-1,0), p=2"
    assert spec.with_p(-1).p == -1
    assert not ConflictSpec([[2, 0, -2, 0]], 0).is_sign_matrix


@pytest.mark.parametrize(
    "matrix, p",
    [
        ([], 1),
        ([[1, 0, -1]], 1),
        ([[1, 0, -1, 0.5]], 1),
        ([[1, 0, -1, 2 ** 32]], 1),
        (5, 1),
        ([[1, 0, -1, 0]], "1"),
        ([[1, 0, -1, 0]], True),
    ],
)
def test_rejects_malformed_specs(matrix, p):
    with pytest.raises(InvalidSpecError):
        ConflictSpec(matrix, p)


def test_named_matrices(client):
    assert client.specs.named("nest", 1).matrix == NEST_MATRIX

    with pytest.raises(InvalidSpecError):
        client.specs.named("spiral", 1)


def test_document_may_name_the_matrix(client):
    spec = client.specs.loads('{"matrix": "arch", "p": 1}')

    assert spec.matrix == ((1, 0, 0, -1),)
    assert spec.manager is client.specs

    with pytest.raises(InvalidSpecError):
        client.specs.loads('{"matrix": [[1, 0, 0, -1]]}')


def test_specs_compare_by_document():
    assert ConflictSpec([[1, 0, 0, -1]], 1) == ConflictSpec(
        ((1, 0, 0, -1),), 1
    )
    assert ConflictSpec([[1, 0, 0, -1]], 1) != ConflictSpec(
        [[1, 0, 0, -1]], 0
    )
