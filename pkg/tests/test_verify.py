"""Verifier checks: anchors for each identity plus report plumbing."""

from fractions import Fraction as F

import pytest

from hilbseries import verify
from hilbseries.series import Series
from hilbseries.verify import (
    CheckReport,
    ModuliNumerics,
    binom,
    check_2pt,
    check_2pt_grid,
    check_abelian,
    check_asymptotics,
    check_blowup,
    check_blowup_excess,
    check_chern_rank2,
    check_enriques,
    check_fgh_derivation,
    check_lagrange_burmann,
    check_spherical_chern,
    check_theta_constant,
    check_thm3,
    check_verlinde_segre_prediction,
    check_verlinde_trivial,
    residue_coeff,
    run_suite,
    suite_names,
)


class TestModuliNumerics:
    def test_spherical_has_d_zero(self):
        for s, chi in [(1, 3), (2, 7), (3, -1), (-2, 4)]:
            nums = ModuliNumerics.spherical(s, chi)
            assert nums.d == 0
            assert nums.r == s + 1

    def test_isotropic_has_d_one(self):
        for s, chi in [(1, 3), (2, 7), (4, 0)]:
            assert ModuliNumerics.isotropic(s, chi).d == 1

    def test_rejects_non_integral_d(self):
        # s = 0 with odd c1sq makes d a half-integer
        with pytest.raises(ValueError):
            ModuliNumerics(0, 2, 1, 0)

    def test_rejects_inconsistent_numerics(self):
        with pytest.raises(ValueError):
            ModuliNumerics(1, 0, 0, 0)

    def test_dimension_relation(self):
        nums = ModuliNumerics.spherical(2, 5)
        assert 2 * nums.d - 2 == nums.c1sq - 2 * nums.s * (nums.chi - nums.s)


class TestResidueCoeff:
    def test_printed_example(self):
        assert residue_coeff(0, 5, 2, 1) == 6

    def test_constant_term(self):
        assert residue_coeff(3, -2, 4, 0) == 1

    def test_rigid_closed_form_spot(self):
        for r in (2, 3):
            for n in (1, 2, 3):
                for chi in (-1, 4, 11):
                    assert residue_coeff(0, chi, r, n) == r ** n * binom(chi - r * n, n)

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            residue_coeff(0, 1, 2, -1)


class TestBinom:
    def test_matches_comb_on_naturals(self):
        from math import comb
        for a in range(8):
            for n in range(8):
                assert binom(a, n) == comb(a, n)

    def test_negative_upper_index(self):
        assert binom(-2, 3) == -4
        assert binom(F(1, 2), 2) == F(-1, 8)
        assert binom(5, -1) == 0


class TestChecks:
    def test_thm3(self):
        report = check_thm3(2, n_max=5)
        assert report.passed and report.checks > 100

    def test_2pt_point_and_grid(self):
        assert check_2pt(1, 2, 3).passed
        report = check_2pt_grid(range(-2, 3), range(-1, 2), range(-1, 2))
        assert report.passed
        assert "deg 4" in report.ranges

    def test_asymptotics(self):
        for r in (2, 4):
            assert check_asymptotics(r, order=6).passed

    def test_chern_rank2(self):
        assert check_chern_rank2(order=6).passed

    def test_spherical_chern(self):
        assert check_spherical_chern(2, n_max=4).passed
        assert check_spherical_chern(4, n_max=4).passed

    def test_abelian(self):
        assert check_abelian(2, n_max=4).passed
        assert check_abelian(3, n_max=4).passed

    def test_enriques(self):
        report = check_enriques(2, n_max=4, form_order=12)
        assert report.passed

    def test_blowup_anchors(self):
        assert check_blowup_excess(1) == -3
        assert check_blowup_excess(2) == 5
        assert check_blowup_excess(0) == 1
        assert check_blowup(n_max=12).passed

    def test_theta_dichotomy(self):
        for n in range(13):
            report = check_theta_constant(n)
            assert report.passed, (n, report.counterexample)
            want = "1" if n % 3 == 0 else "0"
            assert report.detail == "constant term %s" % want

    def test_fgh(self):
        assert check_fgh_derivation(order=12).passed

    def test_lagrange_burmann_anchor(self):
        order = 8
        w = Series.gen(order + 1, "w")
        one = Series.one(order + 1, "w")
        assert check_lagrange_burmann(1 + w, one, order).passed
        assert check_lagrange_burmann(one, one, order).passed

    def test_lagrange_burmann_rejects_bad_f(self):
        order = 6
        w = Series.gen(order + 1, "w")
        with pytest.raises(ValueError):
            check_lagrange_burmann(w, 1 + w, order)
        with pytest.raises(ValueError):
            check_lagrange_burmann(1 + w.truncate(3), 1 + w.truncate(3), order)

    def test_verlinde_trivial(self):
        assert check_verlinde_trivial(order=6).passed

    def test_verlinde_segre(self):
        report = check_verlinde_segre_prediction(order=6)
        assert report.passed
        assert "not a proof" in report.detail


class TestReportPlumbing:
    def test_failure_carries_counterexample(self):
        tally = verify._Tally()
        tally.eq(F(1), F(1), "fine")
        tally.eq(F(2), F(3), "broken", 7)
        report = tally.report("demo")
        assert not report.passed
        assert report.counterexample == ("broken", 7, F(2), F(3))
        assert report.checks == 2

    def test_to_dict_stringifies(self):
        report = CheckReport("demo", False, 3, "r=2", (F(1, 2), "ctx"), "note")
        data = report.to_dict()
        assert data["counterexample"] == ["1/2", "ctx"]
        assert data["passed"] is False

    def test_run_suite_all_pass(self):
        reports = run_suite(order=6)
        assert [r.name for r in reports] == sorted(suite_names())
        assert all(r.passed for r in reports), [
            (r.name, r.counterexample) for r in reports if not r.passed]

    def test_run_suite_subset_and_unknown(self):
        reports = run_suite(["theta", "blowup"], order=6)
        assert [r.name for r in reports] == ["blowup", "theta"]
        with pytest.raises(KeyError):
            run_suite(["nonsense"])
