import math
import pytest
import numpy as np
from Models.errors import HypothesisViolatedAtOrigin, InvalidParams, UnsupportedSpec
from Models.families import ClassSpec, SeriesFn, extremal, identity_fn, koebe
from Models.grid import GridSpec
from Models.radius import RadiusQuery, Theorem
from Models.series import PowerSeries
from Models.verify import (CSV_COLUMNS, TOL_ACCEPT, Lemma, LemmaKind, RadiusReport, default_lemma_audits,
                           estimate_convexity_radius, estimate_radius, estimate_radius_details, extremal_pair,
                           lemma_audit, lemma_sides, min_real_convexity, proof_chain_audit, sampled_pair,
                           verify_theorem)

GRID = GridSpec()
KOEBE_RADIUS = 2 - math.sqrt(3)


def janowski_pair(A, B):
    return extremal(ClassSpec.janowski_starlike(A, B)), extremal(ClassSpec.janowski_convex(A, B))


class TestMinRealConvexity:

    def test_identity_pair(self):
        """ f = g = z gives q_T = 2 everywhere. """
        value, _ = min_real_convexity((identity_fn(), identity_fn()), 0.5, GRID)
        assert value == pytest.approx(2)

    def test_koebe_against_identity(self):
        """ The minimum of 1 + (1+z)/(1-z) on |z| = r sits at z = -r. """
        r = KOEBE_RADIUS
        value, angle = min_real_convexity((koebe(), identity_fn()), r, GRID)
        assert value == pytest.approx(1 + (1 - r) / (1 + r), abs=1e-9)
        assert angle == pytest.approx(math.pi, abs=1e-3)

    def test_janowski_equality_case(self):
        """ A=2, B=-1: q_T = 2(1+2z)/(1-z) vanishes at z = -1/2. """
        value, angle = min_real_convexity(janowski_pair(2, -1), 0.5, GRID)
        assert value == pytest.approx(0, abs=1e-8)
        assert angle == pytest.approx(math.pi, abs=1e-3)


class TestEstimateRadius:

    def test_koebe_convexity_radius(self):
        """ The Koebe function is convex exactly up to 2 - sqrt(3). """
        assert estimate_convexity_radius(koebe(), 0.0, GRID) == pytest.approx(KOEBE_RADIUS, abs=1e-4)

    def test_never_non_convex(self):
        assert estimate_radius((identity_fn(), identity_fn()), 0.0, GRID) == GRID.r_cap
        details = estimate_radius_details((identity_fn(), identity_fn()), 0.0, GRID)
        assert details.capped and details.failed_at is None

    def test_koebe_with_identity_is_convex_throughout(self):
        """ q_T = 1 + (1+z)/(1-z) has real part above 1. """
        assert estimate_radius((koebe(), identity_fn()), 0.0, GRID) == GRID.r_cap

    def test_janowski_extremals(self):
        """ Both Janowski corollaries give 1/2; the estimate sits just below it. """
        for B in (1, -1):
            estimate = estimate_radius(janowski_pair(2, B), 0.0, GRID)
            assert estimate >= 0.5 - TOL_ACCEPT, f"Estimate {estimate} should not fall below 1/2 (B={B})"
            assert estimate <= 0.5 + 1e-6

    def test_koebe_pair(self):
        """ (Koebe, Koebe) is convex past 2 - sqrt(3), up to (3 - sqrt(5))/2. """
        estimate = estimate_radius((koebe(), koebe()), 0.0, GRID)
        assert estimate >= KOEBE_RADIUS - TOL_ACCEPT
        assert estimate == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-4)

    def test_nonincreasing_in_alpha(self):
        pair = (koebe(), koebe())
        radii = [estimate_radius(pair, alpha, GRID) for alpha in (0, 0.3, 0.6)]
        assert radii[0] >= radii[1] - 1e-6 and radii[1] >= radii[2] - 1e-6, \
            f"Radii should not grow with alpha: {radii}"

    def test_hypothesis_violated_at_origin(self):
        with pytest.raises(HypothesisViolatedAtOrigin):
            estimate_radius((identity_fn(), identity_fn()), 2.5, GRID)
        with pytest.raises(HypothesisViolatedAtOrigin):
            estimate_convexity_radius(koebe(), 1.0, GRID)

    def test_evaluation_failure_is_reported(self):
        """ A short Koebe series becomes unreliable near 0.7; the estimate stops there and says so. """
        series = PowerSeries(np.arange(65), order=64)
        details = estimate_radius_details((SeriesFn(series), identity_fn()), 0.0, GRID)
        assert details.failed_at is not None
        assert 0.6 < details.r < details.failed_at < 0.8
        assert not details.capped


class TestLemmaAudit:

    @pytest.mark.parametrize("lemma, spec", [
        (Lemma(LemmaKind.L31, 1.0), ClassSpec.universal_lif(1.0)),
        (Lemma(LemmaKind.L31, 2.0), ClassSpec.universal_lif(2.0)),
        (Lemma(LemmaKind.L31, 2.0), ClassSpec.univalent()),
        (Lemma(LemmaKind.L32, 1.0), ClassSpec.convex(0.0)),
        (Lemma(LemmaKind.L33), ClassSpec.univalent()),
        (Lemma(LemmaKind.L34, 0.5), ClassSpec.g_beta(0.5)),
        (Lemma(LemmaKind.L34, 1.0), ClassSpec.g_beta(1.0)),
        (Lemma(LemmaKind.RobertsonVk, 2.0), ClassSpec.boundary_rotation(2.0)),
        (Lemma(LemmaKind.RobertsonVk, 4.0), ClassSpec.boundary_rotation(4.0)),
    ])
    def test_bounds_hold_for_members(self, lemma, spec):
        audit = lemma_audit(extremal(spec), lemma, GRID)
        assert audit.max_violation <= 1e-8, f"{lemma} fails for {spec}: {audit.max_violation}"

    def test_identity_is_strictly_inside(self):
        """ f = z: LHS = 2r^2/(1-r^2) < 4r/(1-r^2). """
        assert lemma_audit(identity_fn(), Lemma(LemmaKind.L33), GRID).max_violation < 0

    def test_koebe_equality_point(self):
        """ z f''/f' = 2z(2+z)/(1-z^2) on the real axis gives equality 8/3 at z = 1/2. """
        lhs, rhs = lemma_sides(koebe(), Lemma(LemmaKind.L33), np.array([0.5]))
        assert lhs[0] == pytest.approx(8 / 3, abs=1e-9)
        assert rhs[0] == pytest.approx(8 / 3, abs=1e-9)

    def test_gbeta_equality_point(self):
        """ f' = (1-z)^beta: |f''/f'| = beta/(1-r) at z = r. """
        lhs, rhs = lemma_sides(extremal(ClassSpec.g_beta(1.0)), Lemma(LemmaKind.L34, 1.0), np.array([0.6]))
        assert lhs[0] == pytest.approx(2.5, abs=1e-12)
        assert rhs[0] == pytest.approx(2.5, abs=1e-12)

    @pytest.mark.parametrize("lemma, fn", [
        (Lemma(LemmaKind.L33), koebe()),
        (Lemma(LemmaKind.L34, 1.0), extremal(ClassSpec.g_beta(1.0))),
    ])
    def test_sharpness_on_real_axis(self, lemma, fn):
        audit = lemma_audit(fn, lemma, GRID)
        assert audit.max_violation >= -1e-6, f"{lemma} should be attained on the grid"
        assert abs(audit.worst_point.imag) < 1e-9, "Equality should sit on the real axis"

    def test_default_audits(self):
        audits = default_lemma_audits(GRID)
        assert [str(audit.lemma) for audit in audits] == ["L31(2)", "L32(1)", "L33", "L34(1)", "RobertsonVk(4)"]
        assert all(audit.max_violation <= 1e-8 for audit in audits)

    def test_lemma_needs_parameter(self):
        with pytest.raises(InvalidParams):
            Lemma(LemmaKind.L31)
        with pytest.raises(ValueError):
            Lemma("L35", 1.0)


class TestVerifyTheorem:

    def test_t41_extremal(self):
        report, = verify_theorem(RadiusQuery(Theorem.T41, A=2, B=-1), grid=GRID)
        assert report.r_formula == 0.5
        assert report.r_estimate >= 0.5 - TOL_ACCEPT
        assert report.passed

    def test_t42_identity_case_reaches_cap(self):
        """ gamma = 1: f = Koebe and g = z/(1-z), convex in the whole tested disc. """
        report, = verify_theorem(RadiusQuery(Theorem.T42, gamma=1), grid=GRID)
        assert report.r_estimate == GRID.r_cap
        assert report.margin == pytest.approx(0)

    def test_t44_extremal(self):
        report, = verify_theorem(RadiusQuery(Theorem.T44), grid=GRID)
        assert report.r_formula == pytest.approx(KOEBE_RADIUS, abs=1e-12)
        assert report.passed

    @pytest.mark.parametrize("alpha", [0, 0.5])
    @pytest.mark.parametrize("beta", [0.5, 1])
    def test_t45_extremal(self, alpha, beta):
        report, = verify_theorem(RadiusQuery(Theorem.T45, alpha, beta=beta), grid=GRID)
        assert report.margin >= -TOL_ACCEPT, str(report.to_row())

    @pytest.mark.parametrize("alpha", [0, 0.5])
    @pytest.mark.parametrize("k", [2, 4, 8])
    def test_t46_extremal(self, alpha, k):
        report, = verify_theorem(RadiusQuery(Theorem.T46, alpha, k=k), grid=GRID)
        assert report.margin >= -TOL_ACCEPT, str(report.to_row())
        if alpha == 0 and k == 4:
            assert report.r_formula == pytest.approx(KOEBE_RADIUS, abs=1e-12)

    @pytest.mark.parametrize("query", [
        RadiusQuery(Theorem.T41, A=2, B=-1),
        RadiusQuery(Theorem.T42, gamma=1),
        RadiusQuery(Theorem.T45, beta=1),
    ])
    def test_sampled_soundness(self, query):
        reports = verify_theorem(query, mode="sampled", n=3, seed=7, grid=GRID)
        assert len(reports) == 3
        assert [report.seed for report in reports] == [7, 9, 11]
        for report in reports:
            assert report.grid.r_cap == 0.9
            assert report.passed, f"Sampled pair {report.pair_label} has margin {report.margin}"

    @pytest.mark.parametrize("query", [
        RadiusQuery(Theorem.T41, A=2, B=-1),
        RadiusQuery(Theorem.T41, A=2, B=1),
        RadiusQuery(Theorem.T42, gamma=1),
        RadiusQuery(Theorem.T45, beta=1),
    ])
    def test_twenty_sampled_pairs(self, query):
        """ Every one of 20 seeded sampled pairs stays above the formula radius. """
        reports = verify_theorem(query, mode="sampled", n=20, seed=42, grid=GRID)
        assert len(reports) == 20
        failed = [(report.seed, report.margin) for report in reports if not report.passed]
        assert not failed, f"{query}: pairs below the formula radius {failed}"

    def test_unknown_mode(self):
        with pytest.raises(UnsupportedSpec):
            verify_theorem(RadiusQuery(Theorem.T44), mode="exhaustive")

    def test_extremal_pairs(self):
        f, g = extremal_pair(RadiusQuery(Theorem.T42, gamma=1))
        assert f.starlike_functional(0.5) == pytest.approx(3)
        assert g.evaluate(0.5).value == pytest.approx(1), "UL_1 extremal is z/(1-z)"


class TestRadiusReport:

    def test_round_trip_and_row(self):
        report, = verify_theorem(RadiusQuery(Theorem.T41, A=2, B=-1), grid=GRID)
        restored = RadiusReport.from_dict(report.to_dict())
        assert restored == report
        row = report.to_row()
        assert list(row) == CSV_COLUMNS
        assert row["A_re"] == 2 and row["B_re"] == -1 and row["gamma"] is None

    def test_incomplete_dictionary(self):
        with pytest.raises(InvalidParams):
            RadiusReport.from_dict({"r_formula": 0.5})

    def test_negative_margin_is_recorded(self):
        report = RadiusReport(RadiusQuery(Theorem.T44), 0.27, 0.2, -0.07, 0.0, "f | g", GRID)
        assert not report.passed
        assert report.margin == -0.07


class TestProofChain:

    @pytest.mark.parametrize("query", [
        RadiusQuery(Theorem.T41, A=2, B=-1),
        RadiusQuery(Theorem.T41, 0.25, A=2, B=1),
        RadiusQuery(Theorem.T41, 0.5, A=1.5 + 1j, B=0.5j),
        RadiusQuery(Theorem.T42, gamma=2),
        RadiusQuery(Theorem.T43),
        RadiusQuery(Theorem.T44, 0.3),
        RadiusQuery(Theorem.T45, beta=0.5),
        RadiusQuery(Theorem.T46, k=8),
    ])
    def test_extremal_pairs_respect_bounds(self, query):
        audit = proof_chain_audit(query)
        assert audit.points == 50
        assert audit.passed, f"{query}: f slack {audit.f_slack}, g slack {audit.g_slack}"

    def test_sampled_pair_respects_bounds(self):
        query = RadiusQuery(Theorem.T41, A=2, B=-1)
        audit = proof_chain_audit(query, pair=sampled_pair(query, 1, 2))
        assert audit.passed
