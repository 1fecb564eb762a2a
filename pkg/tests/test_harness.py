"""Tests for the verification harness."""

import pytest
from ordconflict.constants import (
    FAIL,
    LEMMA_IDS,
    NEST_MATRIX,
    PARTIAL,
    PASS,
    SHIFT_MATRIX,
)
from ordconflict.enumeration import EnumerationSpec
from ordconflict.exceptions import (
    PreconditionError,
    UnclassifiableSpecError,
    UnknownClaimError,
)
from ordconflict.harness import (
    LOWER_EXACT_ROWS,
    LOWER_KS,
    matrix_label,
    question15_search,
    run_suite,
    verify_density,
    verify_inversion,
    verify_lemma_suite,
    verify_lower,
    verify_theorem1,
    verify_upper,
)
from ordconflict.solvers import SolveBudget


def test_matrix_labels():
    assert matrix_label([(1, 0, -1, 0)]) == "+0-0"
    assert matrix_label(NEST_MATRIX) == "+0-0/0-0+"
    assert matrix_label([(2, 0, -2, 0)]) == "[2,0,-2,0]"


def test_upper_row9(budget):
    report = verify_upper([(1, 1, -1, -1)], 3, 6, budget)

    assert report.claim_id == "table1.row9.++--.p=3.k=6"
    assert report.status == PASS
    assert report.counts == 2
    assert report.details["W"]["observed"] == 3


def test_upper_row11(budget):
    assert verify_upper([(-1, 0, 0, 1)], 3, 5, budget).status == PASS


def test_upper_with_bounds_is_partial(budget):
    report = verify_upper(NEST_MATRIX, 2, 5, budget)

    assert report.status == PARTIAL
    assert report.details["A"]["observed"] == 7
    assert report.witness is None


def test_upper_needs_a_catalog_matrix(budget):
    with pytest.raises(UnclassifiableSpecError):
        verify_upper([(2, 0, -2, 0)], 1, 4, budget)


def test_lower_row3(budget):
    report = verify_lower(
        [(1, 0, -1, 0)], 1, 3, EnumerationSpec.exhaustive(4, 1, 6), budget
    )

    assert report.status == PASS
    assert report.counts > 0
    assert report.scope.startswith("verified within exhaustive")


def test_lower_row10_minimum_is_attained(budget):
    report = verify_lower(
        [(1, 0, 0, -1)], 0, 4, EnumerationSpec.exhaustive(5, 1, 6), budget
    )

    assert report.status == PASS
    assert report.details["A"]["minimum"] == 4
    assert report.details["A"]["minimum_matches"]


@pytest.mark.parametrize("row", LOWER_EXACT_ROWS)
@pytest.mark.parametrize("k", LOWER_KS)
def test_lower_minimum_equals_exact_form(budget, row, k):
    p = 1 if row == (1, 0, -1, 0) else 0
    report = verify_lower(
        [row],
        p,
        k,
        EnumerationSpec.exhaustive(5, 1, 7),
        budget,
        exact_minimum=True,
    )

    assert report.status == PASS

    for side in ("A", "W"):
        assert report.details[side]["minimum_matches"]


def test_lower_unattained_minimum_fails(budget):
    window = EnumerationSpec.exhaustive(4, 1, 4, min_edges=6)
    loose = verify_lower([(1, 0, -1, 0)], 1, 3, window, budget)
    strict = verify_lower(
        [(1, 0, -1, 0)], 1, 3, window, budget, exact_minimum=True
    )

    assert loose.status == PASS
    assert not loose.details["A"]["minimum_matches"]
    assert strict.status == FAIL
    assert strict.witness["observed"] == 3


def test_lower_without_candidates_is_partial(budget):
    report = verify_lower(
        [(1, 0, -1, 0)], 1, 5, EnumerationSpec.exhaustive(3, 1, 4), budget
    )

    assert report.status == PARTIAL
    assert report.counts == 0


def test_density(budget):
    report = verify_density(0, EnumerationSpec.random_corpus(30), budget)

    assert report.status == PASS
    assert report.counts == 30
    assert report.details["smallest_slack"] >= 0

    with pytest.raises(PreconditionError):
        verify_density(1, EnumerationSpec.random_corpus(3), budget)


@pytest.mark.parametrize("lemma_id", LEMMA_IDS)
def test_lemma_suites(lemma_id, budget):
    corpus = EnumerationSpec.random_corpus(20, seed=3)
    report = verify_lemma_suite(lemma_id, corpus, budget)

    assert report.claim_id == "lemma." + lemma_id
    assert report.status == PASS


def test_unknown_lemma():
    with pytest.raises(UnknownClaimError):
        verify_lemma_suite("bogus", EnumerationSpec.random_corpus(1))


def test_theorem1_both_sides(budget):
    corpus = EnumerationSpec.random_corpus(10, seed=1)
    report = verify_theorem1([(1, 1, 1, 1)], 0, corpus, budget)

    assert report.claim_id == "theorem1.++++.p=0"
    assert report.status == PASS
    assert report.details["sides"] == ["A", "W"]
    assert report.counts == 20


def test_theorem1_one_side(budget):
    corpus = EnumerationSpec.random_corpus(10, seed=1)
    report = verify_theorem1([(0, 0, 0, 0)], 0, corpus, budget)

    assert report.status == PASS
    assert report.details["sides"] == ["A"]


def test_theorem1_without_construction_is_partial(budget):
    corpus = EnumerationSpec.random_corpus(5, seed=1)
    report = verify_theorem1(NEST_MATRIX, 1, corpus, budget)

    assert report.status == PARTIAL
    assert report.counts == 0


def test_inversion():
    report = verify_inversion([(1, 0, -1, 0)], 2, "Xcli", max_bound=10)

    assert report.claim_id == "table2.row3.+0-0.Xcli.p=2"
    assert report.status == PASS
    assert report.counts == 10


def test_inversion_of_general_matrix_is_partial():
    report = verify_inversion([(2, 0, -2, 0)], 1, "Xind")

    assert report.status == PARTIAL
    assert report.counts == 0


def test_question15(budget):
    report = question15_search(
        [(1, 0, -1, 0)], 1, 3, EnumerationSpec.exhaustive(4, 1, 5), budget
    )

    assert report.status == PASS
    assert "found" in report.details
    assert set(report.details["complete_best"]) == {"A", "W"}


def test_question15_needs_an_exact_form(budget):
    with pytest.raises(PreconditionError):
        question15_search(
            [(2, 0, -2, 0)], 1, 3, EnumerationSpec.exhaustive(3, 1, 4), budget
        )


def test_unknown_suite():
    with pytest.raises(UnknownClaimError):
        run_suite("bogus")


def test_table2_suite():
    reports = run_suite("table2", p_range=(1, 1))
    claim_ids = [report.claim_id for report in reports]

    assert len(reports) == 24
    assert claim_ids == sorted(claim_ids)
    assert all(report.status != FAIL for report in reports)
    assert all(report.runtime_ms is not None for report in reports)


def test_table1_suite():
    reports = run_suite(
        "table1",
        p_range=(1, 1),
        k_range=(3, 3),
        budget=SolveBudget(node_limit=10 ** 6),
    )

    assert len(reports) == 21
    assert not [report for report in reports if report.failed]


def test_nest_suite_is_partial_on_bounds():
    reports = run_suite("nest", p_range=(2, 2), k_range=(5, 5))
    by_matrix = {report.claim_id.split(".")[2]: report for report in reports}

    assert by_matrix[matrix_label(NEST_MATRIX)].status == PARTIAL
    assert by_matrix[matrix_label(SHIFT_MATRIX)].status == PASS


def test_long_edges_counts_dense_graphs(budget):
    corpus = EnumerationSpec.random_corpus(2000, seed=3)
    report = verify_lemma_suite(
        "long-edges", corpus, budget, chromatic_target=10
    )

    assert report.status == PASS
    assert report.details["chi_at_least_4"] == 10

    short = verify_lemma_suite(
        "long-edges",
        EnumerationSpec.random_corpus(5, seed=3),
        budget,
        chromatic_target=10,
    )

    assert short.status == PARTIAL
    assert short.details["chi_at_least_4"] < 10
