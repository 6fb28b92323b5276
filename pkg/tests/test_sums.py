"""Sum-of-Gamma statistics: densities, distribution functions, oracles."""

import math

import numpy as np
import pytest
import scipy.integrate as si
import scipy.special as sp

from conftest import (
    ERLANG2_CDF_AT_2,
    EXP_CDF_AT_1,
    GAMMA_PDF_1P5_2_1,
    HYPO3_PDF_Y2,
    TWO_EXP_PDF_Y1,
    erlang_cdf,
    gamma_pdf_closed,
    hypoexp_cdf,
    hypoexp_pdf,
    random_branch_sets,
    two_exp_pdf,
)
from gammasum import (
    BranchParams,
    DomainError,
    OracleDiverged,
    cdf,
    cdf_eval,
    cdf_single,
    pdf,
    pdf_eval,
    pdf_integer,
    pdf_lauricella_oracle,
)


class TestBranchParams:
    def test_validation(self):
        with pytest.raises(DomainError):
            BranchParams.from_lists([1.0, -1.0], [1.0, 1.0])
        with pytest.raises(DomainError):
            BranchParams.from_lists([1.0], [0.0])
        with pytest.raises(DomainError):
            BranchParams.from_lists([1.0, 2.0], [1.0])
        with pytest.raises(DomainError):
            BranchParams(())

    def test_derived_quantities(self):
        p = BranchParams.from_lists([2.0, 3.0], [1.0, 2.0])
        assert p.kappa == 5.0
        assert p.all_integer
        assert p.rates == (2.0, 1.5)
        assert p.mean_variance() == (3.0, 0.5 + 4.0 / 3.0)
        assert not BranchParams.from_lists([2.0, 3.3], [1.0, 2.0]).all_integer


class TestPdf:
    def test_exponential(self):
        p = BranchParams.from_lists([1.0], [1.0])
        assert pdf(p, 1.0) == pytest.approx(math.exp(-1.0), abs=1e-11)

    def test_two_exponentials(self):
        p = BranchParams.from_lists([1.0, 1.0], [1.0, 2.0])
        assert pdf(p, 1.0) == pytest.approx(TWO_EXP_PDF_Y1, abs=1e-10)

    def test_three_exponentials_hypoexponential(self):
        p = BranchParams.from_lists([1.0] * 3, [1.0, 2.0, 3.0])
        assert pdf(p, 2.0) == pytest.approx(HYPO3_PDF_Y2, abs=1e-10)
        assert pdf(p, 2.0) == pytest.approx(hypoexp_pdf([1.0, 2.0, 3.0], 2.0), abs=1e-10)

    def test_single_branch_noninteger(self):
        p = BranchParams.from_lists([1.5], [2.0])
        assert pdf(p, 1.0) == pytest.approx(GAMMA_PDF_1P5_2_1, rel=1e-10)
        # severe-fading shapes below 1 still evaluate for y > 0
        p = BranchParams.from_lists([0.6], [1.0])
        assert pdf(p, 0.8) == pytest.approx(gamma_pdf_closed(0.6, 1.0, 0.8), rel=1e-9)

    def test_domain_error(self):
        p = BranchParams.from_lists([1.0], [1.0])
        with pytest.raises(DomainError):
            pdf(p, 0.0)
        with pytest.raises(DomainError):
            pdf(p, -1.0)

    def test_integer_dispatch_equivalence(self):
        p = BranchParams.from_lists([2.0, 3.0], [1.0, 2.0])
        for y in (0.3, 1.0, 3.0, 8.0):
            a = pdf_integer(p, y)
            b = pdf(p, y, force_general=True)
            assert a == pytest.approx(b, rel=1e-8)
            assert pdf(p, y) == pytest.approx(a, rel=1e-10)
        # beyond the series window the dispatch lands on the integer block
        assert pdf(p, 3.0) == pdf_integer(p, 3.0)

    def test_pdf_integer_requires_integers(self):
        with pytest.raises(DomainError):
            pdf_integer(BranchParams.from_lists([1.5], [1.0]), 1.0)

    def test_pdf_integer_single_branch(self):
        p = BranchParams.from_lists([2.0], [2.0])
        assert pdf_integer(p, 1.0) == pytest.approx(math.exp(-1.0), abs=1e-11)

    def test_equal_means_no_singularity(self):
        # the closed two-exponential form degenerates at equal means, the
        # contour path does not
        p = BranchParams.from_lists([1.0, 1.0], [1.0, 1.0])
        for y in (0.5, 2.0):
            assert pdf(p, y, force_general=True) == pytest.approx(y * math.exp(-y), rel=1e-9)

    def test_scaling_law(self):
        base = BranchParams.from_lists([0.8, 2.5], [1.0, 2.0])
        c = 3.7
        scaled = BranchParams.from_lists([0.8, 2.5], [c, 2.0 * c])
        for y in (0.4, 1.7, 5.0):
            assert pdf(scaled, c * y) == pytest.approx(pdf(base, y) / c, rel=1e-8)

    def test_branch_permutation_invariance(self):
        a = BranchParams.from_lists([0.9, 2.2, 3.1], [1.0, 0.7, 2.5])
        b = BranchParams.from_lists([3.1, 0.9, 2.2], [2.5, 1.0, 0.7])
        for y in (0.8, 3.0):
            va, vb = pdf(a, y), pdf(b, y)
            assert abs(va - vb) <= 1e-12 * max(1.0, abs(va))

    def test_eval_diagnostics(self):
        res = pdf_eval(BranchParams.from_lists([1.3], [1.1]), 2.0)
        assert res.est_abs_error < 1e-8
        assert res.n_evals > 0


class TestCdf:
    def test_exponential(self):
        p = BranchParams.from_lists([1.0], [1.0])
        assert cdf(p, 1.0) == pytest.approx(EXP_CDF_AT_1, abs=1e-10)

    def test_zero_is_exact(self):
        p = BranchParams.from_lists([0.7, 2.0], [1.0, 3.0])
        assert cdf(p, 0.0) == 0.0
        res = cdf_eval(p, 0.0)
        assert res.value == 0.0 and res.n_evals == 0

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            cdf(BranchParams.from_lists([1.0], [1.0]), -0.1)

    def test_erlang_two_equal_means(self):
        p = BranchParams.from_lists([1.0, 1.0], [1.0, 1.0])
        assert cdf(p, 2.0) == pytest.approx(ERLANG2_CDF_AT_2, abs=1e-10)
        assert cdf(p, 2.0, force_general=True) == pytest.approx(ERLANG2_CDF_AT_2, abs=1e-9)

    def test_hypoexponential_closed_form(self):
        omegas = [1.0, 2.0, 3.5]
        p = BranchParams.from_lists([1.0] * 3, omegas)
        for y in (0.5, 2.0, 7.0):
            assert cdf(p, y) == pytest.approx(hypoexp_cdf(omegas, y), abs=1e-9)

    def test_integer_path_equivalence(self):
        p = BranchParams.from_lists([2.0, 3.0], [1.0, 2.0])
        for y in (0.5, 2.0, 6.0):
            assert cdf(p, y) == pytest.approx(cdf(p, y, force_general=True), rel=1e-8)

    def test_noninteger_against_single_gamma(self):
        m, om = 1.7, 2.3
        p = BranchParams.from_lists([m], [om])
        for y in (0.3, 1.5, 6.0):
            assert cdf(p, y) == pytest.approx(float(sp.gammainc(m, m * y / om)), rel=1e-9)


class TestCdfSingle:
    def test_values(self):
        assert cdf_single(1.0, 1.0, 1.0) == pytest.approx(EXP_CDF_AT_1, rel=1e-12)
        assert cdf_single(2.0, 2.0, 2.0) == pytest.approx(ERLANG2_CDF_AT_2, rel=1e-12)
        assert cdf_single(1.0, 1.0, 0.0) == 0.0

    def test_routes_agree(self):
        for m, om, g in [(1.0, 1.0, 1.0), (2.0, 2.0, 2.0), (3.0, 0.7, 1.9), (4.0, 5.0, 11.0)]:
            direct = cdf_single(m, om, g)
            meijerg = cdf_single(m, om, g, method="meijerg")
            assert abs(direct - meijerg) <= 1e-10

    def test_validation(self):
        with pytest.raises(DomainError):
            cdf_single(1.0, 1.0, -1.0)
        with pytest.raises(DomainError):
            cdf_single(1.0, 1.0, 1.0, method="nope")


class TestLauricellaOracle:
    def test_single_branch_reduces_to_gamma_density(self):
        p = BranchParams.from_lists([1.5], [2.0])
        val, bound = pdf_lauricella_oracle(p, 1.0)
        assert val == pytest.approx(GAMMA_PDF_1P5_2_1, rel=1e-12)
        assert bound < 1e-15

    def test_two_branches_match_contour_path(self):
        p = BranchParams.from_lists([0.6, 1.1], [1.0, 1.0])
        val, bound = pdf_lauricella_oracle(p, 2.0, max_terms=90)
        assert val == pytest.approx(pdf(p, 2.0), abs=max(1e-6, 10 * bound))

    def test_three_branches_match_contour_path(self):
        p = BranchParams.from_lists([0.8, 1.4, 2.1], [1.5, 0.9, 2.2])
        val, bound = pdf_lauricella_oracle(p, 1.2, max_terms=90)
        assert val == pytest.approx(pdf(p, 1.2), abs=max(1e-6, 10 * bound))

    def test_vanishes_at_origin_for_kappa_above_one(self):
        p = BranchParams.from_lists([1.2, 1.3], [1.0, 1.0])
        val, _ = pdf_lauricella_oracle(p, 1e-8)
        assert 0.0 <= val < 1e-8

    def test_diverges_with_tiny_budget(self):
        p = BranchParams.from_lists([1.0, 2.0], [1.0, 1.0])
        with pytest.raises(OracleDiverged):
            pdf_lauricella_oracle(p, 40.0, max_terms=8)

    def test_limited_to_three_branches(self):
        p = BranchParams.from_lists([1.0] * 4, [1.0, 2.0, 3.0, 4.0])
        with pytest.raises(DomainError):
            pdf_lauricella_oracle(p, 1.0)


class TestDistributionProperties:
    @pytest.mark.parametrize("idx", range(3))
    def test_normalization_moment_and_cdf_consistency(self, idx):
        params = random_branch_sets(seed=100 + idx, count=1)[0]
        mean, var = params.mean_variance()
        y_max = mean + 12.0 * math.sqrt(var)
        total, _ = si.quad(lambda y: pdf(params, y), 0.0, y_max, limit=300)
        assert total == pytest.approx(1.0, abs=1e-5)
        first, _ = si.quad(lambda y: y * pdf(params, y), 0.0, y_max, limit=300)
        assert first == pytest.approx(mean, rel=1e-4)
        assert cdf(params, y_max) >= 1.0 - 1e-4

    def test_nonnegative_and_monotone(self):
        params = random_branch_sets(seed=7, count=1)[0]
        mean, var = params.mean_variance()
        grid = np.linspace(1e-3, mean + 8 * math.sqrt(var), 60)
        pdf_vals = np.array([pdf(params, y) for y in grid])
        cdf_vals = np.array([cdf(params, y) for y in grid])
        assert (pdf_vals >= -1e-10).all()
        assert (np.diff(cdf_vals) >= -1e-10).all()

    def test_cdf_derivative_matches_pdf(self):
        params = random_branch_sets(seed=12, count=1)[0]
        mean, var = params.mean_variance()
        for y in np.linspace(0.3, mean + 3 * math.sqrt(var), 7):
            h = min(0.05, y / 10.0)
            deriv = (
                cdf(params, y - 2 * h)
                - 8 * cdf(params, y - h)
                + 8 * cdf(params, y + h)
                - cdf(params, y + 2 * h)
            ) / (12 * h)
            value = pdf(params, y)
            assert abs(deriv - value) <= max(1e-4, 1e-3 * abs(value))
