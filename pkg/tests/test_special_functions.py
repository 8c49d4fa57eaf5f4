import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaline import (CONSTANTS, EULER_MASCHERONI, AccuracyError, ConfigError,
                      DomainError, EvalConfig, PoleError, gamma_weierstrass,
                      hardy_z, log_abs_xi, log_gamma, riemann_siegel_theta,
                      xi, zeta_dirichlet, zeta_euler_maclaurin,
                      zeta_times_s_minus_one)
from zetaline.special_functions import _hardy_z_many, dirichlet_truncation_bound

from oracles import FIRST_ZEROS, mp_log_gamma, zeta_alternating

ZETA_HALF = -1.460354508809587  # frozen from the alternating-series oracle
PI2_OVER_6 = math.pi ** 2 / 6.0
PI4_OVER_90 = math.pi ** 4 / 90.0


class TestConstants:
    def test_euler_mascheroni_matches_six_decimals(self):
        assert abs(EULER_MASCHERONI - 0.577216) < 5e-7

    def test_fields(self):
        assert CONSTANTS.pi == math.pi
        assert CONSTANTS.log_pi == math.log(math.pi)
        assert CONSTANTS.euler_mascheroni == EULER_MASCHERONI


class TestEvalConfig:
    def test_rejects_nonpositive_tolerance(self):
        with pytest.raises(ConfigError):
            EvalConfig(abs_tol=0.0)

    def test_rejects_bad_term_counts(self):
        with pytest.raises(ConfigError):
            EvalConfig(em_cutoff=0)
        with pytest.raises(ConfigError):
            EvalConfig(dirichlet_terms=-3)

    def test_height_check(self):
        cfg = EvalConfig(em_cutoff=20)
        cfg.check_height(15.0)
        with pytest.raises(ConfigError):
            cfg.check_height(100.0)

    def test_sized_for_raises_cutoff(self):
        cfg = EvalConfig(em_cutoff=20)
        assert cfg.sized_for(1000.0).em_cutoff >= 510
        assert cfg.sized_for(1.0) is cfg


class TestZetaDirichlet:
    def test_basel_value_within_documented_bound(self):
        cfg = EvalConfig()
        val = zeta_dirichlet(2.0 + 0j, cfg)
        bound = dirichlet_truncation_bound(2.0 + 0j, cfg)
        assert abs(val - PI2_OVER_6) <= bound
        # the bound is sharp: the tail really is about 1/N
        assert abs(val - PI2_OVER_6) > 0.5 * bound

    def test_fourth_power_value(self):
        val = zeta_dirichlet(4.0 + 0j)
        assert abs(val - PI4_OVER_90) < 1e-12

    def test_agrees_with_euler_maclaurin(self, cfg):
        s = complex(3.0, 5.0)
        a = zeta_dirichlet(s, cfg)
        b = zeta_euler_maclaurin(s, cfg)
        assert abs(a - b) <= cfg.abs_tol

    def test_requires_sigma_above_one(self):
        with pytest.raises(DomainError):
            zeta_dirichlet(complex(1.0, 3.0))


class TestZetaEulerMaclaurin:
    def test_basel(self):
        assert abs(zeta_euler_maclaurin(2.0 + 0j) - PI2_OVER_6) < 1e-13

    def test_alternating_series_oracle_on_critical_line(self):
        assert abs(zeta_euler_maclaurin(0.5 + 0j) - ZETA_HALF) < 1e-12
        s = complex(0.5, 30.0)
        assert abs(zeta_euler_maclaurin(s, EvalConfig(em_cutoff=32))
                   - zeta_alternating(s, n=140)) < 1e-10

    def test_vanishes_at_first_zero(self):
        s = complex(0.5, FIRST_ZEROS[0])
        assert abs(zeta_euler_maclaurin(s, EvalConfig(em_cutoff=32))) < 1e-5

    def test_pole(self):
        with pytest.raises(PoleError):
            zeta_euler_maclaurin(1.0 + 0j)

    def test_cutoff_too_small(self):
        with pytest.raises(ConfigError):
            zeta_euler_maclaurin(complex(0.5, 400.0), EvalConfig(em_cutoff=32))

    def test_left_of_strip_rejected(self):
        with pytest.raises(DomainError):
            zeta_euler_maclaurin(complex(-2.0, 5.0))

    def test_functional_identity_through_xi(self):
        cfg = EvalConfig(em_cutoff=32)
        a = xi(complex(0.25, 30.0), cfg)
        b = xi(complex(0.75, 30.0), cfg)
        # xi(0.75+30i) = xi(1 - (0.75+30i)) = xi(0.25-30i) = conj(xi(0.25+30i))
        assert abs(b - a.conjugate()) <= cfg.abs_tol


class TestZetaTimesSMinusOne:
    def test_regular_at_pole(self):
        assert abs(zeta_times_s_minus_one(1.0 + 0j) - 1.0) < 1e-12

    def test_matches_product_away_from_pole(self, cfg):
        s = complex(0.3, 12.0)
        a = zeta_times_s_minus_one(s, cfg)
        b = (s - 1.0) * zeta_euler_maclaurin(s, cfg)
        assert abs(a - b) < 1e-12 * max(1.0, abs(a))


class TestLogGamma:
    def test_factorial_value(self):
        assert abs(log_gamma(5.0 + 0j) - math.log(24.0)) < 1e-13

    def test_half_value(self):
        assert abs(log_gamma(0.5 + 0j) - 0.5 * math.log(math.pi)) < 1e-13

    def test_weierstrass_oracle_high_on_line(self):
        z = complex(0.25, 50.0)
        via_product = gamma_weierstrass(z, EvalConfig(weierstrass_terms=10 ** 6))
        assert abs(cmath.exp(log_gamma(z)) - via_product) < 1e-4

    def test_poles(self):
        for z in (0.0, -1.0, -2.0):
            with pytest.raises(PoleError):
                log_gamma(complex(z, 0.0))

    def test_reflection_identity(self):
        # independent identity: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        rng = np.random.default_rng(11)
        for _ in range(20):
            z = complex(rng.uniform(-2.0, 3.0), rng.uniform(0.1, 4.0))
            lhs = cmath.exp(log_gamma(z) + log_gamma(1.0 - z))
            rhs = math.pi / cmath.sin(math.pi * z)
            assert abs(lhs - rhs) <= 1e-9 * abs(rhs)

    def test_against_reference_loggamma(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            z = complex(rng.uniform(0.05, 6.0), rng.uniform(-2400.0, 2400.0))
            assert abs(log_gamma(z) - mp_log_gamma(z)) < 1e-10


class TestGammaWeierstrass:
    def test_at_one(self):
        assert abs(gamma_weierstrass(1.0 + 0j) - 1.0) < 1e-5

    def test_at_half(self):
        assert abs(gamma_weierstrass(0.5 + 0j) - math.sqrt(math.pi)) < 1e-5

    def test_cross_evaluator(self):
        z = complex(2.0, 3.0)
        assert abs(gamma_weierstrass(z) - cmath.exp(log_gamma(z))) < 1e-4

    def test_error_shrinks_with_more_terms(self):
        z = complex(2.0, 3.0)
        ref = cmath.exp(log_gamma(z))
        errs = [abs(gamma_weierstrass(z, EvalConfig(weierstrass_terms=k)) - ref)
                for k in (10 ** 3, 10 ** 5, 10 ** 6)]
        assert errs[0] > errs[1] > errs[2]

    def test_pole(self):
        with pytest.raises(PoleError):
            gamma_weierstrass(-3.0 + 0j)


class TestXi:
    def test_functional_identity_sample(self):
        cfg = EvalConfig()
        rng = np.random.default_rng(101)
        for _ in range(50):
            s = complex(rng.uniform(0.01, 0.99), rng.uniform(-200.0, 200.0))
            scfg = cfg.sized_for(s.imag)
            a, b = xi(s, scfg), xi(1.0 - s, scfg)
            assert abs(a - b) <= 1e-9 * max(1.0, abs(a))

    def test_conjugate_symmetry(self):
        cfg = EvalConfig(em_cutoff=64)
        rng = np.random.default_rng(13)
        for _ in range(50):
            s = complex(rng.uniform(0.01, 0.99), rng.uniform(-100.0, 100.0))
            a = xi(s, cfg)
            assert abs(xi(s.conjugate(), cfg) - a.conjugate()) \
                <= 1e-12 * max(1.0, abs(a))

    def test_removable_points(self):
        assert xi(0.0 + 0j) == 0.5 + 0j
        assert xi(1.0 + 0j) == 0.5 + 0j

    def test_vanishes_at_first_zero(self):
        assert abs(xi(complex(0.5, FIRST_ZEROS[0]), EvalConfig(em_cutoff=32))) \
            < 1e-5

    def test_underflow_raises_instead_of_returning_zero(self):
        with pytest.raises(AccuracyError):
            xi(complex(0.5, 2000.0), EvalConfig(em_cutoff=1100))

    def test_log_abs_xi_matches_direct_at_moderate_height(self, cfg):
        s = complex(0.3, 40.0)
        scfg = cfg.sized_for(40.0)
        assert abs(log_abs_xi(s, scfg) - math.log(abs(xi(s, scfg)))) < 1e-10


class TestTheta:
    def test_zero_at_origin(self):
        assert riemann_siegel_theta(0.0) == 0.0

    def test_odd_at_sample(self):
        assert abs(riemann_siegel_theta(-17.5) + riemann_siegel_theta(17.5)) \
            < 1e-12

    @settings(max_examples=60, deadline=None)
    @given(st.floats(min_value=0.01, max_value=1500.0))
    def test_oddness_property(self, t):
        assert abs(riemann_siegel_theta(-t) + riemann_siegel_theta(t)) \
            <= 1e-10 * max(1.0, abs(riemann_siegel_theta(t)))

    def test_definition_re_evaluation(self):
        direct = log_gamma(complex(0.25, 50.0)).imag - 50.0 * math.log(math.pi)
        assert abs(riemann_siegel_theta(100.0) - direct) < 1e-8


class TestHardyZ:
    def test_value_at_origin_is_zeta_half(self):
        assert abs(hardy_z(0.0) - ZETA_HALF) < 1e-12

    def test_evenness(self):
        cfg = EvalConfig(em_cutoff=32)
        assert abs(hardy_z(-17.8, cfg) - hardy_z(17.8, cfg)) < 1e-12

    def test_small_at_first_zero(self):
        assert abs(hardy_z(FIRST_ZEROS[0], EvalConfig(em_cutoff=32))) < 1e-5

    def test_imaginary_residue_accumulation(self, cfg):
        ts = np.linspace(0.0, 500.0, 1600)
        scfg = cfg.sized_for(500.0)
        svec = 0.5 + 1j * ts
        from zetaline.special_functions import _zeta_em_many
        vals, _ = _zeta_em_many(svec, scfg.em_cutoff, scfg.em_bernoulli_terms)
        thetas = np.array([riemann_siegel_theta(float(t)) for t in ts])
        rotated = np.exp(1j * thetas) * vals
        assert float(np.sum(np.abs(rotated.imag))) < 10.0 * cfg.abs_tol * len(ts)
        assert float(np.max(np.abs(rotated.imag))) < 10.0 * cfg.abs_tol

    def test_vectorized_matches_scalar(self, cfg):
        scfg = cfg.sized_for(60.0)
        ts = np.array([14.2, 37.5, 59.9])
        vals, _ = _hardy_z_many(ts, scfg)
        for t, v in zip(ts, vals):
            assert abs(hardy_z(float(t), scfg) - v) < 1e-13


class TestEvaluatorAgreement:
    def test_dirichlet_vs_euler_maclaurin_panel(self, cfg):
        # Truncation of the partial sum dominates near sigma = 2, so the
        # comparison allows the documented bound on top of 10*abs_tol.
        rng = np.random.default_rng(77)
        tight = 0
        for _ in range(50):
            s = complex(rng.uniform(2.0, 5.0), rng.uniform(-100.0, 100.0))
            scfg = cfg.sized_for(s.imag)
            diff = abs(zeta_dirichlet(s, scfg) - zeta_euler_maclaurin(s, scfg))
            assert diff <= 10.0 * cfg.abs_tol + dirichlet_truncation_bound(s, cfg)
            if s.real >= 3.0:
                assert diff <= 10.0 * cfg.abs_tol
                tight += 1
        assert tight > 10
