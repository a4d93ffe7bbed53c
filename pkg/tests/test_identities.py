"""Tests for the identity suite and the inversion-formula resolution."""

import pytest

from paracyclic.core.errors import MissingExtraDegeneracy
from paracyclic.linalg import CoefficientRing
from paracyclic.modules import (
    IDENTITIES,
    CheckStatus,
    IdentityCheck,
    IdentityReport,
    check_identity_suite,
    checks,
    inversion_formula_resolution,
)
from tests.conftest import build

ALL_BUILTINS = [
    "ground-ring",
    "simplex-1",
    "simplex-2",
    "dual-numbers",
    "dual-numbers-twisted",
    "scalar-twisted-u",
]


def failing(report: IdentityReport) -> list[tuple[str, int, str]]:
    return [(e.identity, e.degree, e.detail) for e in report.failures()]


class TestSuite:
    @pytest.mark.parametrize("name", ALL_BUILTINS)
    @pytest.mark.parametrize("ring", ["Q", "Z/7"])
    def test_builtins_over_fields(self, name: str, ring: str):
        report = check_identity_suite(build(name, CoefficientRing.parse(ring), 3))
        assert report.passed, failing(report)

    @pytest.mark.parametrize("name", ["ground-ring", "simplex-1", "dual-numbers"])
    def test_cyclic_builtins_over_integers(self, ZZ, name: str):
        report = check_identity_suite(build(name, ZZ, 3))
        assert report.passed, failing(report)

    def test_reconstruction(self, non_paracyclic):
        report = check_identity_suite(non_paracyclic)
        assert report.passed, failing(report)

    @pytest.mark.parametrize("name", ["ground-ring", "simplex-1", "dual-numbers"])
    def test_negated_face_breaks_karoubi_identities(self, QQ, name: str):
        M = build(name, QQ, 3)
        face = [list(fs) for fs in M.face]
        face[1][0] = -face[1][0]
        report = check_identity_suite(M.with_maps(face=face))
        assert not report.passed
        for identity in ("karoubi_differential_form", "karoubi_factorization"):
            entry = report.get(identity, 0)
            assert entry.status is CheckStatus.FAIL
            assert entry.witness is not None
            assert not entry.witness.is_zero()

    def test_every_identity_is_reported(self, dual_twisted):
        report = check_identity_suite(dual_twisted)
        assert set(report.names()) == {identity.name for identity in IDENTITIES}

    def test_top_degree_is_skipped_for_truncation(self, dual):
        entry = check_identity_suite(dual).get("karoubi_factorization", dual.n_max)
        assert entry.status is CheckStatus.SKIPPED
        assert entry.detail == "truncation"

    def test_simplicial_module_runs_simplicial_part(self, simplicial1):
        report = check_identity_suite(simplicial1)
        assert report.passed
        assert "dold_puppe_idempotent" in report.names()
        assert "karoubi_factorization" not in report.names()

    def test_gs_entries_are_flagged(self, ground):
        report = check_identity_suite(ground)
        assert report.get("gs_homotopy", 0).flag
        assert not report.get("connes_homotopy", 0).flag

    def test_printed_inversion_entries_are_advisory(self, twisted2):
        report = check_identity_suite(twisted2)
        assert report.get("pi_inverse_printed", 0).advisory
        assert not report.get("pi_inverse_corrected", 0).advisory

    def test_workers_do_not_change_report(self, dual_twisted):
        assert check_identity_suite(dual_twisted, workers=4) == check_identity_suite(dual_twisted)

    def test_each_entry_evaluated_once(self, mocker, ground):
        spy = mocker.spy(checks, "evaluate")
        report = check_identity_suite(ground)
        assert spy.call_count == len(report)


class TestReport:
    def test_advisory_failure_does_not_fail_report(self):
        report = IdentityReport.of(
            [
                IdentityCheck("a", 0, CheckStatus.PASS),
                IdentityCheck("b", 0, CheckStatus.FAIL, advisory=True),
            ]
        )
        assert report.passed
        assert report.failures() == []
        assert len(report.failures(include_advisory=True)) == 1
        assert report.status_counts() == {"pass": 1, "fail": 0, "skipped": 0, "advisory": 1}

    def test_counts_and_order(self):
        report = IdentityReport.of(
            [
                IdentityCheck("b", 1, CheckStatus.SKIPPED),
                IdentityCheck("b", 0, CheckStatus.FAIL),
                IdentityCheck("a", 2, CheckStatus.PASS),
            ]
        )
        assert [(e.identity, e.degree) for e in report.entries] == [("a", 2), ("b", 0), ("b", 1)]
        assert report.status_counts() == {"pass": 1, "fail": 1, "skipped": 1, "advisory": 0}
        assert not report.passed

    def test_merged(self):
        left = IdentityReport.of([IdentityCheck("b", 0, CheckStatus.PASS)])
        right = IdentityReport.of([IdentityCheck("a", 0, CheckStatus.PASS)])
        assert left.merged(right).names() == ["a", "b"]

    def test_get_missing(self):
        with pytest.raises(KeyError):
            IdentityReport.of([]).get("a", 0)


class TestInversionFormulas:
    def test_corrected_variants_hold(self, twisted2):
        rows = inversion_formula_resolution(twisted2)
        assert [row.degree for row in rows] == list(range(twisted2.n_max))
        for row in rows:
            assert row.pi_corrected is True
            assert row.kappa_corrected is True
            assert isinstance(row.pi_printed, bool)
            assert isinstance(row.kappa_printed, bool)

    def test_up_to(self, twisted2):
        assert len(inversion_formula_resolution(twisted2, up_to=1)) == 2

    def test_not_invertible_rows_are_undecided(self, ZZ):
        rows = inversion_formula_resolution(build("scalar-twisted-u", ZZ, 3, "2"))
        assert rows[0].pi_corrected is None
        assert rows[0].kappa_printed is None

    def test_requires_extra_degeneracy(self, simplicial1):
        with pytest.raises(MissingExtraDegeneracy):
            inversion_formula_resolution(simplicial1)
