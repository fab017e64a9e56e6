"""
Tests for the verification harness, including fault injection.
"""

import pytest

from restricted_range.algorithms.counting import order, stirling2
from restricted_range.algorithms.relations import lstar_related, rstar_related
from restricted_range.algorithms.structure import is_regular_element
from restricted_range.schemas import AbundanceVerdict, ErrorCode, Params, SemigroupError, make_universe
from restricted_range.verification import (
    run_suite,
    universes,
    verify_abundance,
    verify_counts,
    verify_regularity,
    verify_relations,
    verify_stirling,
    verify_witnesses,
)


def _cell(report, universe, check):
    for cell in report.cells:
        if cell.universe == universe and cell.check == check:
            return cell
    raise KeyError((universe, check))


class TestUniverses:

    def test_order(self):
        assert [u.as_tuple() for u in universes(2)] == [(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2)]

    def test_count(self):
        assert len(list(universes(4))) == 20


class TestCountsSuite:

    def test_small(self):
        report = verify_counts(3)
        assert report.overall
        cell = _cell(report, make_universe(3, 2, 1), "order")
        assert (cell.expected, cell.actual, cell.passed) == (3, 3, True)

    def test_trivial_universe(self):
        report = verify_counts(1)
        assert {c.universe for c in report.cells} == {make_universe(1, 1, 1)}
        assert _cell(report, make_universe(1, 1, 1), "order").actual == 1

    def test_golden_idempotent_cell(self):
        report = verify_counts(4)
        cell = _cell(report, make_universe(4, 3, 2), "idempotent_count")
        assert (cell.expected, cell.actual) == (10, 10)
        assert report.overall

    @pytest.mark.slow
    def test_default_bound(self):
        assert verify_counts().overall

    def test_bound_exceeded(self):
        with pytest.raises(SemigroupError) as info:
            verify_counts(6)
        assert info.value.code == ErrorCode.VERIFICATION_BOUND

    def test_mutated_formula_fails(self):
        report = verify_counts(3, order_fn=lambda u: order(u) + (u.n == 3))
        assert not report.overall
        assert all(c.check == "order" and c.universe.n == 3 for c in report.failures)

    def test_deterministic_ordering(self):
        report = verify_counts(3)
        keys = [c.sort_key() for c in report.cells]
        assert keys == sorted(keys)


class TestStirlingSuite:

    def test_default(self):
        report = verify_stirling()
        assert report.overall
        assert len(report.cells) == 210 + 231

    def test_mutated_stirling_fails(self):
        report = verify_stirling(8, stirling=lambda n, r: stirling2(n, r) + (n == 5 and r == 2))
        assert not report.overall


class TestRelationsSuite:

    def test_small(self):
        assert verify_relations(3).overall

    def test_pair_count(self):
        report = verify_relations(4)
        cell = _cell(report, make_universe(4, 3, 2), "lstar_pairs")
        assert cell.expected == 32 ** 2
        assert report.overall

    def test_mutated_lstar_fails(self):
        def always_related(u, a, b):
            return True

        report = verify_relations(3, lstar=always_related)
        assert not report.overall
        assert {c.check for c in report.failures} == {"lstar_pairs"}

    def test_mutated_rstar_fails(self):
        def image_instead_of_kernel(u, a, b):
            if u.case_tag.value == "PROPER":
                return set(a.images) == set(b.images)
            return rstar_related(u, a, b)

        assert not verify_relations(3, rstar=image_instead_of_kernel).overall


class TestRegularitySuite:

    def test_small(self):
        assert verify_regularity(3).overall

    def test_mutated_predicate_fails(self):
        def everything_regular(u, a):
            return True

        report = verify_regularity(3, is_regular=everything_regular)
        assert not report.overall
        failing = _cell(report, make_universe(3, 2, 1), "regular_predicate_vs_search")
        assert failing.actual == 2 and failing.expected == 3

    def test_mutated_classification_fails(self):
        report = verify_regularity(3, regular_semigroup=lambda u: True)
        assert not report.overall


class TestAbundanceSuite:

    def test_small(self):
        report = verify_abundance(3)
        assert report.overall
        cell = _cell(report, make_universe(3, 2, 1), "abundance")
        assert cell.expected == cell.actual == "(false, true)"
        assert _cell(report, make_universe(3, 3, 3), "abundance").actual == "(true, true)"

    @pytest.mark.slow
    def test_default_bound(self):
        report = verify_abundance()
        assert report.overall
        assert _cell(report, make_universe(4, 4, 2), "abundance").expected == "(true, false)"

    def test_mutated_table_fails(self):
        report = verify_abundance(3, verdict=lambda u: AbundanceVerdict(left=True, right=True))
        assert not report.overall


class TestWitnessesSuite:

    def test_small(self):
        report = verify_witnesses(3)
        assert report.overall
        assert _cell(report, make_universe(3, 2, 1), "nonregular_witness").actual is False

    def test_mutated_regularity_fails(self):
        report = verify_witnesses(3, is_regular=lambda u, a: True)
        assert not report.overall

    def test_mutated_lstar_fails(self):
        report = verify_witnesses(3, lstar=lambda u, a, b: True)
        assert not report.overall


class TestRunSuite:

    def test_unknown_suite(self):
        with pytest.raises(SemigroupError) as info:
            run_suite("nothing")
        assert info.value.code == ErrorCode.USAGE_ERROR

    def test_all_concatenates(self):
        report = run_suite("all", 2)
        assert report.suite == "all"
        checks = {c.check for c in report.cells}
        assert {"order", "lstar_pairs", "regular_semigroup", "abundance"} <= checks
        assert any(c.check.startswith("stirling_recurrence") for c in report.cells)
        assert report.overall

    def test_json_is_stable(self):
        first = run_suite("counts", 3).model_dump_json()
        second = run_suite("counts", 3, Params(workers=4)).model_dump_json()
        assert first == second
        assert '"overall":true' in first
        assert "elapsed" not in first

    @pytest.mark.slow
    @pytest.mark.integration
    def test_all_at_default_bound(self):
        assert run_suite("all", 4).overall

    def test_predicates_are_default_overrides(self):
        # the unmutated predicates are the defaults
        assert verify_relations(2, lstar=lstar_related, rstar=rstar_related).overall
        assert verify_regularity(2, is_regular=is_regular_element).overall
