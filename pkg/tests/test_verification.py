"""Tests for the built-in property suites and the verification report."""

import pytest

from eulervoigt.core.verification import (
    SUITES,
    ConservationSuite,
    ConvergenceSuite,
    SpectralIdentitySuite,
    SteadyShearSuite,
    SuiteResult,
    VerificationReport,
    build_suites,
    run_suites,
)


def test_shear_suite_passes():
    result = SteadyShearSuite().run()
    assert result.passed, result.reasoning
    assert result.score == 1.0
    assert result.metrics["M_alpha_0.0"] == 0.0
    assert result.metrics["change_alpha_0.1"] <= 1e-12


def test_small_spectral_suite_passes():
    result = SpectralIdentitySuite(sizes=(8, 16), fields_per_size=5).run()
    assert result.passed, result.reasoning
    assert result.metrics["identity_residual"] <= 1e-12
    assert result.metrics["sizes"] == [8, 16]


def test_short_conservation_suite_passes():
    suite = ConservationSuite(
        n=16, t_final=0.05, euler_t_final=0.05, tail_threshold=1e-4
    )
    result = suite.run()
    assert result.passed, result.reasoning
    assert result.metrics["euler_resolved"]


def test_under_resolved_euler_run_is_reported_not_failed():
    suite = ConservationSuite(n=16, t_final=0.05, euler_t_final=0.25)
    result = suite.run()
    assert result.passed, result.reasoning
    assert not result.metrics["euler_resolved"]
    assert result.metrics["euler_tail_fraction"] >= 1e-6
    assert result.metrics["euler_energy_drift"] <= 1e-8


def test_failed_check_is_reported():
    suite = ConservationSuite(n=16, dt=0.05, t_final=0.5, euler_t_final=0.2, tol=1e-14)
    result = suite.run()
    assert not result.passed
    assert 0.0 <= result.score < 1.0
    assert "voigt_drift" in result.reasoning


@pytest.mark.slow
def test_full_conservation_suite():
    result = ConservationSuite().run()
    assert result.passed, result.reasoning


@pytest.mark.slow
def test_full_convergence_suite():
    result = ConvergenceSuite().run()
    assert result.passed, result.reasoning
    assert len(result.metrics["ratios"]) == 2
    assert result.metrics["order"] >= 0.9


def test_short_convergence_suite_checks_order_and_finest_ratio():
    result = ConvergenceSuite(n=16, dt=1e-3, t_final=0.05, min_order=0.8).run()
    assert result.passed, result.reasoning
    first, finest = result.metrics["ratios"]
    assert first < finest
    assert finest >= 1.7


class TestSuiteSelection:
    def test_registry(self):
        assert set(SUITES) == {"spectral", "conservation", "shear", "convergence"}

    def test_all(self):
        assert [s.name for s in build_suites("all")] == list(SUITES)

    def test_single(self):
        suites = build_suites("shear")
        assert len(suites) == 1
        assert isinstance(suites[0], SteadyShearSuite)

    def test_unknown(self):
        with pytest.raises(KeyError):
            build_suites("turbulence")

    def test_run_suites(self):
        report = run_suites("shear")
        assert report.passed
        assert report.pass_rate() == 1.0


class TestVerificationReport:
    @pytest.fixture
    def report(self):
        return VerificationReport(
            results=[
                SuiteResult(
                    suite="shear",
                    passed=True,
                    score=1.0,
                    reasoning="All 5 checks passed",
                    metrics={"M": 0.4442882938158366, "n": 16},
                ),
                SuiteResult(
                    suite="conservation",
                    passed=False,
                    score=0.5,
                    reasoning="Failed checks: voigt_drift",
                    metrics={"errors": [1e-3, 5e-4]},
                ),
            ]
        )

    def test_aggregates(self, report):
        assert not report.passed
        assert report.pass_rate() == 0.5
        assert [r.suite for r in report.get_failures()] == ["conservation"]

    def test_format_summary(self, report):
        text = report.format_summary()
        assert "VERIFICATION REPORT" in text
        assert "PASS" in text and "FAIL" in text
        assert "4.442883e-01" in text
        assert "1.000000e-03, 5.000000e-04" in text
        assert "Pass Rate: 50.0% (2 suites)" in text
        assert "FAILURES (1):" in text
        assert "  [conservation] Failed checks: voigt_drift" in text

    def test_to_dict(self, report):
        payload = report.to_dict()
        assert payload["passed"] is False
        assert payload["results"][1]["reasoning"] == "Failed checks: voigt_drift"

    def test_empty_report(self):
        report = VerificationReport(results=[])
        assert report.passed
        assert report.pass_rate() == 0.0
